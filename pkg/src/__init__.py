"""Constructive hamiltonicity toolkit for tough (P3 u 3P1)-free graphs."""

__version__ = "0.1.0"
