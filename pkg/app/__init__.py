# Tree Inverse Optimization Package
