"""Exact arithmetic for the inaccessible group J and certificates for its
loxodromic elements with large finite centralizer subgroups."""

__version__ = "0.1.0"
