"""Zeroth-order general Randic index: invariants, extremal families, bounds and exhaustive checks."""
