"""Metric and edge metric dimension toolkit for the coronoid/starphene composite FCS(a, b, c)."""

__version__ = "0.1.0"
