"""Exact verification of twisted K-theory cochain identities, Cech
cohomology with Smith normal form, and spectral-sequence computation of
twisted K-groups for low-dimensional models."""

__version__ = "0.1.0"
