"""fieldforge: exact tools for specializing three-point covers ramified only at 2 and 3."""

__version__ = "0.1.0"
