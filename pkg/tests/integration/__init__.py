# Integration tests

