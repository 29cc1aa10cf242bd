# Use double quotes pls.
version = "0.1.0"
