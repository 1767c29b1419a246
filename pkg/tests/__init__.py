"""
Test suite for the linear hypergraph toolkit.
"""
