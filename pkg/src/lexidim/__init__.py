"""k-metric and k-adjacency dimensions of graphs and lexicographic products."""

__version__ = "0.1.0"
