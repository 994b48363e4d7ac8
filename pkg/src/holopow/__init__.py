"""Exact ODEs for powers of holonomic functions and densities of i.i.d. sums."""

__version__ = "0.1.0"
