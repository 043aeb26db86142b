"""Cohomology rings of regular nilpotent Hessenberg varieties, computed exactly."""

__version__ = "0.1.0"
