"""Finite-dimensional simple modules of a triangular Hopf algebra H and its Drinfeld double."""

__version__ = "0.1.0"
