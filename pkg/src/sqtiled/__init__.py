"""Minimal one-cylinder square-tiled surfaces in every stratum component."""

__version__ = "0.1.0"
