# Use Cases Layer Package
