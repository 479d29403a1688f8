"""Symmetric quandles, their homology, and cocycle invariants of unoriented links."""

__version__ = "0.1.0"
