# Test Handlers Package
