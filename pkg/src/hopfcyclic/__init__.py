"""Exact cyclic-homology computations for finite-dimensional Hopf algebra
quotients: Galois pairs, SAYD coefficients, the six (co)cyclic
constructions, the transform isomorphisms between them, the Tor spectral
sequence, and the finite-group combinatorial picture."""

__version__ = "0.1.0"

from .linalg import QQ, PrimeField, SparseMatrix, SubquotientSpace
from .hopf import HopfAlgebra, GaloisSetup, group_algebra, function_algebra, sweedler_algebra
from .presets import builtin_hopf, builtin_setup

__all__ = [
    "QQ",
    "PrimeField",
    "SparseMatrix",
    "SubquotientSpace",
    "HopfAlgebra",
    "GaloisSetup",
    "group_algebra",
    "function_algebra",
    "sweedler_algebra",
    "builtin_hopf",
    "builtin_setup",
]
