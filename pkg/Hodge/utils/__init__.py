"""
Shared utilities: logging wrappers and the error hierarchy.

"""
