# Validation package
