"""starbench unit tests."""
