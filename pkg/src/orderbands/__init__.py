"""Exact workbench for bands, order closed and supremum closed ideals.

The package decides and cross-checks three closedness notions for ideals in
finitely representable ordered vector spaces: being a band (equal to the
double disjoint complement), being order closed, and being supremum closed.
Two backends are provided: polyhedral-cone spaces over exact rationals
(`polyspace`) and a symbolic piecewise-affine function-space backend
(`funcspace`) hosting the classical counterexample spaces.  All verdicts are
exact; no floating point enters any decision.
"""

from orderbands.verdict import PredicateResult

__all__ = ["PredicateResult"]
__version__ = "0.1.0"
