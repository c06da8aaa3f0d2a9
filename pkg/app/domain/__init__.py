# Domain Layer Package
