"""Exact computations for parabolic BGG data: root systems, Hasse diagrams,
Kostant homology, Casimir eigenvalues and splitting-operator products."""

__version__ = "0.1.0"
