"""
Linear Hypergraph Toolkit Package

This package builds, checks and searches 3-uniform linear hypergraphs that
avoid Berge and linear cycles.
"""

__version__ = "0.1.0"
