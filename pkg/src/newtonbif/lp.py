"""Exact two-phase simplex over the rationals (Bland's rule).

Only feasibility is needed by the geometry code; phase II minimizes the
L1 norm of the solution so witnesses come out small and canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

_SENSES = ("==", ">=", "<=")


@dataclass(frozen=True)
class LinearConstraint:
    coeffs: tuple
    sense: str
    rhs: Fraction = Fraction(0)

    def __post_init__(self):
        if self.sense not in _SENSES:
            raise ValueError(f"unknown sense {self.sense!r}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def value(self, q: Sequence) -> Fraction:
        return sum((a * Fraction(x) for a, x in zip(self.coeffs, q)), Fraction(0))

    def holds(self, q: Sequence) -> bool:
        v = self.value(q)
        if self.sense == "==":
            return v == self.rhs
        if self.sense == ">=":
            return v >= self.rhs
        return v <= self.rhs


def eq(coeffs: Sequence, rhs=0) -> LinearConstraint:
    return LinearConstraint(tuple(coeffs), "==", rhs)


def positive(coeffs: Sequence) -> LinearConstraint:
    """``a.q > 0`` normalized to ``a.q >= 1`` (valid for cones by positive scaling)."""
    return LinearConstraint(tuple(coeffs), ">=", 1)


def negative(coeffs: Sequence) -> LinearConstraint:
    """``a.q < 0`` normalized to ``a.q <= -1``."""
    return LinearConstraint(tuple(coeffs), "<=", -1)


@dataclass(frozen=True)
class LPResult:
    feasible: bool
    witness: tuple | None = None
    farkas: tuple | None = None  # dual multipliers proving infeasibility of the standard form

    def __bool__(self) -> bool:
        return self.feasible


def _standard_form(constraints: Sequence[LinearConstraint], dim: int):
    """Rows over columns ``[q+ (dim), q- (dim), slacks]`` with ``A x = b, x >= 0``."""
    n_slack = sum(1 for c in constraints if c.sense != "==")
    A, b = [], []
    s = 0
    for c in constraints:
        if len(c.coeffs) != dim:
            raise ValueError(f"constraint has {len(c.coeffs)} coefficients, expected {dim}")
        row = list(c.coeffs) + [-a for a in c.coeffs] + [Fraction(0)] * n_slack
        if c.sense == ">=":
            row[2 * dim + s] = Fraction(-1)
            s += 1
        elif c.sense == "<=":
            row[2 * dim + s] = Fraction(1)
            s += 1
        A.append(row)
        b.append(c.rhs)
    return A, b


def verify_farkas(constraints: Sequence[LinearConstraint], dim: int, y: Sequence) -> bool:
    """Check ``y^T A <= 0`` and ``y^T b > 0`` for the standard form, which proves infeasibility."""
    A, b = _standard_form(constraints, dim)
    if len(y) != len(A):
        return False
    ncols = len(A[0]) if A else 0
    for j in range(ncols):
        if sum(y[i] * A[i][j] for i in range(len(A))) > 0:
            return False
    return sum(y[i] * b[i] for i in range(len(b))) > 0


def _pivot(T: list, obj: list, r: int, c: int) -> None:
    row = T[r]
    inv = 1 / row[c]
    if inv != 1:
        T[r] = row = [v * inv if v else v for v in row]
    nz = [j for j, v in enumerate(row) if v]  # tableaux are sparse; skip zero entries of the pivot row
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                for j in nz:
                    other[j] -= f * row[j]
    f = obj[c]
    if f:
        for j in nz:
            obj[j] -= f * row[j]


def _run(T: list, obj: list, basis: list, allowed: int) -> None:
    """Minimize with Bland's rule; ``obj`` holds reduced costs, last entry is ``-value``."""
    m = len(T)
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise RuntimeError("unbounded LP")  # cannot happen: both phases are bounded below
        _pivot(T, obj, best[1], enter)
        basis[best[1]] = enter


def lp_feasible(constraints: Sequence[LinearConstraint], dim: int, minimize_l1: bool = True) -> LPResult:
    """Decide feasibility of ``constraints`` over ``q in Q^dim`` exactly.

    Returns a rational witness when feasible and a Farkas vector (for the
    standard form built by :func:`_standard_form`) when not.
    """
    constraints = list(constraints)
    if not constraints:
        return LPResult(True, tuple(Fraction(0) for _ in range(dim)))
    A, b = _standard_form(constraints, dim)
    m = len(A)
    nx = len(A[0])
    sign = []
    T = []
    for i in range(m):
        s = -1 if b[i] < 0 else 1
        sign.append(s)
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append([s * a for a in A[i]] + art + [s * b[i]])
    basis = [nx + i for i in range(m)]
    # phase I: minimize sum of artificials
    obj = [Fraction(0)] * (nx + m + 1)
    for j in range(nx):
        obj[j] = -sum(T[i][j] for i in range(m))
    obj[-1] = -sum(T[i][-1] for i in range(m))
    _run(T, obj, basis, nx + m)
    if obj[-1] != 0:
        y = tuple(sign[i] * (1 - obj[nx + i]) for i in range(m))
        return LPResult(False, None, y)
    # drive zero-level artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= nx:
            col = next((j for j in range(nx) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, obj, i, col)
                basis[i] = col
    if minimize_l1:
        cost = [Fraction(1)] * (2 * dim) + [Fraction(0)] * (nx - 2 * dim)
        obj = cost + [Fraction(0)] * m + [Fraction(0)]
        for i in range(m):
            cb = cost[basis[i]] if basis[i] < nx else Fraction(0)
            if cb:
                obj = [a - cb * t for a, t in zip(obj, T[i])]
        _run(T, obj, basis, nx)
    x = [Fraction(0)] * nx
    for i in range(m):
        if basis[i] < nx:
            x[basis[i]] = T[i][-1]
    q = tuple(x[k] - x[dim + k] for k in range(dim))
    return LPResult(True, q)
