"""
Test Suite for the Density State Geometry Toolkit
"""
