"""Symbolic function-space backend hosting the counterexample spaces."""

from orderbands.funcspace.elements import PAQuadElem, Region

__all__ = ["PAQuadElem", "Region"]
