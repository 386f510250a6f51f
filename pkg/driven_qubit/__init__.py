"""
Init module for driven_qubit.
"""

__version__ = '0.1.0'
