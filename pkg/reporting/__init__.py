"""
Reporting

JSON and CSV output for states, chamber tables, surfaces and contours.
"""
