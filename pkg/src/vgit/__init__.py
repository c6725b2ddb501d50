"""Exact VGIT stability computations for plane cubics with marked points."""

__version__ = "0.1.0"
