"""Shipped data files (reconstructed G2 numerator)."""
