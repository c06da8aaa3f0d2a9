# Infrastructure Layer Package
