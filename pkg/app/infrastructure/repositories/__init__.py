# Repositories Package
