"""Exact linear algebra over the rationals: RREF, kernels, solving, subspaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from orderbands.rational import RMat, RVec, ZERO, dot, is_zero_vec, vec, zero_vec


def rref(rows: Iterable[RVec]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r]], pivots


def rank(rows: Iterable[RVec]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Iterable[RVec], n: Optional[int] = None) -> list[RVec]:
    """Basis of {x : Ax = 0} for the row list A (ambient dimension n)."""
    rows = [tuple(r) for r in rows]
    if n is None:
        if not rows:
            raise ValueError("ambient dimension required for empty row list")
        n = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis: list[RVec] = []
    for f in free:
        v = [ZERO] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(tuple(v))
    return basis


def solve(rows: Iterable[RVec], rhs: RVec) -> Optional[RVec]:
    """A particular solution of Ax = b, or None if inconsistent."""
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs, strict=True)]
    if not aug:
        return None
    n = len(aug[0]) - 1
    red, pivots = rref(aug)
    if n in pivots:  # pivot in the constant column
        return None
    x = [ZERO] * n
    for i, p in enumerate(pivots):
        x[p] = red[i][n]
    return tuple(x)


@dataclass(frozen=True)
class SubspaceBasis:
    """A linear subspace in canonical reduced-echelon basis form.

    The canonical form makes equality of subspaces a tuple comparison.
    """

    ambient: int
    basis: RMat  # RREF rows, linearly independent

    @staticmethod
    def from_vectors(vectors: Iterable, ambient: int) -> "SubspaceBasis":
        red, _ = rref([vec(v) for v in vectors])
        return SubspaceBasis(ambient, tuple(tuple(r) for r in red))

    @staticmethod
    def zero(ambient: int) -> "SubspaceBasis":
        return SubspaceBasis(ambient, ())

    @staticmethod
    def full(ambient: int) -> "SubspaceBasis":
        from orderbands.rational import unit_vec

        return SubspaceBasis(ambient, tuple(unit_vec(ambient, j) for j in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, x: RVec) -> bool:
        red, pivots = rref(list(self.basis) + [x])
        return len(red) == self.dim

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        return all(self.contains(b) for b in other.basis)

    def constraint_rows(self) -> list[RVec]:
        """Functionals whose common kernel is exactly this subspace."""
        if self.dim == 0:
            from orderbands.rational import unit_vec

            return [unit_vec(self.ambient, j) for j in range(self.ambient)]
        return nullspace(self.basis, self.ambient)

    def intersect(self, other: "SubspaceBasis") -> "SubspaceBasis":
        cons = self.constraint_rows() + other.constraint_rows()
        return SubspaceBasis.from_vectors(nullspace(cons, self.ambient), self.ambient)

    def sum(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return SubspaceBasis.from_vectors(list(self.basis) + list(other.basis), self.ambient)

    def coordinates(self, x: RVec) -> Optional[RVec]:
        """Coefficients of x in this basis, or None if x is outside."""
        cols = [tuple(b[i] for b in self.basis) for i in range(self.ambient)]
        return solve(cols, x) if self.basis else (None if not is_zero_vec(x) else ())


def kernel_of(functionals: Iterable[RVec], ambient: int) -> SubspaceBasis:
    rows = [f for f in functionals if not is_zero_vec(f)]
    if not rows:
        return SubspaceBasis.full(ambient)
    return SubspaceBasis.from_vectors(nullspace(rows, ambient), ambient)
