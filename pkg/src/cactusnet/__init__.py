"""Exact-arithmetic electrical invariants of planar cactus networks."""

__version__ = "0.1.0"
