"""Filtered Hilbert sequences of deformed power algebras of graphs."""

__version__ = "0.1.0"
