"""Symbolic-numeric toolkit for the noncommutative gravitational quantum well."""

__version__ = "0.1.0"
