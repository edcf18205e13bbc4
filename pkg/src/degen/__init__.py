"""Large induced degenerate subgraphs of degenerate graphs."""

__version__ = "0.1.0"
