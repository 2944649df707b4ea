"""
Tests for the etatrace package.
"""
