"""Exact computations for checking constructions of surfaces of general type:
integer lattices, cover invariants, weighted linear systems and finitely
presented groups."""
from . import covers, lattice, linalg
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = ["covers", "lattice", "linalg", "VerificationReport", "__version__"]
