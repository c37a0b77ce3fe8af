"""
Test package for reqlint
"""
