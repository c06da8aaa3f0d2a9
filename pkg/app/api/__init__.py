# Command-Line Layer Package
