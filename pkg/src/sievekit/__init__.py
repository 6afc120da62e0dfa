"""Exact combinatorics engine for polygon dissections, cyclic sieving and friezes."""

__version__ = "0.1.0"
