"""Newton polyhedra at infinity, faces, and realizable face tuples.

Faces are found by branching over support points: for each polynomial we pick
the first support point on the face (the anchor), then decide for every later
point whether it lies on the face (``<q, b - a> = 0``) or strictly above it
(``<q, b - a> >= 1``).  Every partial decision is checked with the exact LP, so
only realizable branches survive.  Strict inequalities become ``>= 1`` because
the constraint systems are cones.

Covectors ``q`` are stored with one entry per ring variable; entries outside the
axis set ``I`` are zero and never constrained.  Axis indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import SizeLimitError, ZeroRestrictionError
from .lp import eq, lp_feasible, negative, positive
from .poly import Polynomial

MAX_SUPPORT = 64
MAX_VARS = 8

MODES = ("d0_negative", "d0_zero", "no_f")


@dataclass(frozen=True)
class FaceDescriptor:
    members: tuple  # sorted exponent tuples
    witness_q: tuple  # Fractions, one per ring variable
    value_d: Fraction

    def __contains__(self, exp) -> bool:
        return tuple(exp) in self.members


@dataclass(frozen=True)
class NewtonPolyhedron:
    axes: tuple
    points: tuple
    vertices: tuple
    faces: tuple = field(repr=False)

    @property
    def dimension_bound(self) -> int:
        return len(self.axes)


@dataclass(frozen=True)
class FaceTuple:
    axes: tuple
    J: tuple
    delta0: FaceDescriptor | None
    deltas: tuple  # ((j, FaceDescriptor), ...) sorted by j
    witness_q: tuple
    d0: Fraction | None

    def face_of(self, j: int) -> FaceDescriptor:
        for k, face in self.deltas:
            if k == j:
                return face
        raise KeyError(j)

    def sort_key(self) -> tuple:
        head = self.delta0.members if self.delta0 is not None else ()
        return (self.axes, self.J, head, tuple(face.members for _, face in self.deltas))


def dot(q: Sequence, exp: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(q, exp) if b), Fraction(0))


def _check_size(p: Polynomial) -> None:
    if p.nvars > MAX_VARS:
        raise SizeLimitError(f"{p.nvars} variables exceed the limit of {MAX_VARS}")
    if len(p.terms) > MAX_SUPPORT:
        raise SizeLimitError(f"support of size {len(p.terms)} exceeds the limit of {MAX_SUPPORT}")


def restricted_points(p: Polynomial, axes: Iterable[int]) -> tuple:
    axes = tuple(sorted(set(axes)))
    r = p.restrict(axes)
    if r.is_zero():
        raise ZeroRestrictionError(f"{p} vanishes identically on the coordinate subspace {axes}")
    _check_size(r)
    return tuple(sorted(r.terms))


def _project(exp: tuple, axes: tuple) -> tuple:
    return tuple(exp[i] for i in axes)


def _lift_q(qI: Sequence, axes: tuple, n: int) -> tuple:
    full = [Fraction(0)] * n
    for k, i in enumerate(axes):
        full[i] = Fraction(qI[k])
    return tuple(full)


class _Realizer:
    """Feasibility oracle over covectors on ``axes`` with an optional ``min q_i < 0`` disjunction."""

    def __init__(self, axes: tuple, require_negative: bool):
        self.axes = axes
        self.dim = len(axes)
        self.require_negative = require_negative

    def solve(self, constraints: list, canonical: bool = True) -> tuple | None:
        """A witness (L1-minimal when ``canonical``) or None."""
        if not self.require_negative:
            res = lp_feasible(constraints, self.dim, canonical)
            return res.witness if res.feasible else None
        for k in range(self.dim):
            unit = tuple(1 if m == k else 0 for m in range(self.dim))
            res = lp_feasible(constraints + [negative(unit)], self.dim, canonical)
            if res.feasible:
                return res.witness
        return None

    def feasible(self, constraints: list) -> bool:
        return self.solve(constraints, canonical=False) is not None


def _branch(point_lists: list, anchor_rules: list, realizer: _Realizer, base: list):
    """Yield ``(member sets, witness)`` for every realizable combination of faces."""

    def diff(b, a):
        return tuple(x - y for x, y in zip(b, a))

    def rec(k: int, constraints: list, chosen: list):
        if k == len(point_lists):
            witness = realizer.solve(constraints)
            if witness is not None:
                yield list(chosen), witness
            return
        pts = point_lists[k]
        for ai, a in enumerate(pts):
            cons = constraints + [positive(diff(b, a)) for b in pts[:ai]]
            rule = anchor_rules[k]
            if rule is not None:
                cons.append(rule(a))
            if not realizer.feasible(cons):
                continue
            yield from decide(k, a, ai + 1, cons, chosen + [[a]])

    def decide(k: int, a, idx: int, cons: list, chosen: list):
        pts = point_lists[k]
        if idx == len(pts):
            yield from rec(k + 1, cons, chosen)
            return
        b = pts[idx]
        for c, on_face in ((eq(diff(b, a)), True), (positive(diff(b, a)), False)):
            nc = cons + [c]
            if not realizer.feasible(nc):
                continue
            nchosen = chosen
            if on_face:
                nchosen = chosen[:-1] + [chosen[-1] + [b]]
            yield from decide(k, a, idx + 1, nc, nchosen)

    yield from rec(0, list(base), [])


def newton_polyhedron(p: Polynomial, axes: Iterable[int] | None = None) -> NewtonPolyhedron:
    """Hull of the support of ``p`` restricted to the coordinate subspace ``axes`` (origin not adjoined)."""
    n = p.nvars
    axes = tuple(range(n)) if axes is None else tuple(sorted(set(axes)))
    pts = restricted_points(p, axes)
    proj = [_project(e, axes) for e in pts]
    dim = len(axes)
    vertices = []
    for i, a in enumerate(proj):
        others = [b for j, b in enumerate(proj) if j != i and b != a]
        cons = [positive(tuple(x - y for x, y in zip(b, a))) for b in others]
        if lp_feasible(cons, dim, minimize_l1=False).feasible:
            vertices.append(pts[i])
    realizer = _Realizer(axes, require_negative=False)
    faces = []
    for members, qI in _branch([proj], [None], realizer, []):
        q = _lift_q(qI, axes, n)
        full_members = tuple(sorted(pts[proj.index(m)] for m in members[0]))
        faces.append(FaceDescriptor(full_members, q, dot(q, full_members[0])))
    faces.sort(key=lambda f: (len(f.members), f.members))
    return NewtonPolyhedron(axes, pts, tuple(vertices), tuple(faces))


def min_degree_and_face(p: Polynomial, axes: Iterable[int] | None, q: Sequence) -> tuple:
    """``d(q, Gamma)`` and the face ``Delta(q, Gamma)`` of ``p`` restricted to ``axes``."""
    n = p.nvars
    axes = tuple(range(n)) if axes is None else tuple(sorted(set(axes)))
    pts = restricted_points(p, axes)
    q = tuple(Fraction(x) for x in q)
    if len(q) == len(axes) and len(axes) != n:
        q = _lift_q(q, axes, n)
    if len(q) != n:
        raise ValueError(f"covector of length {len(q)} does not match ring dimension {n}")
    values = {e: dot(q, e) for e in pts}
    d = min(values.values())
    members = tuple(sorted(e for e, v in values.items() if v == d))
    return d, FaceDescriptor(members, q, d)


def face_part(p: Polynomial, face: FaceDescriptor | Iterable) -> Polynomial:
    """Sum of the terms of ``p`` whose exponents lie on ``face``; zero if none do."""
    members = face.members if isinstance(face, FaceDescriptor) else tuple(face)
    return p.select_terms(members)


def is_convenient(p: Polynomial) -> bool:
    """Every variable has a pure power ``x_i^k`` (k >= 1) in the support.

    Exponents are non-negative, so the hull meets the ``i``-th axis away from the
    origin exactly when a support point does.
    """
    for i in range(p.nvars):
        if not any(e[i] > 0 and all(v == 0 for j, v in enumerate(e) if j != i) for e in p.terms):
            return False
    return True


def enumerate_face_tuples(
    f: Polynomial | None,
    gs: Sequence[Polynomial],
    axes: Iterable[int],
    J: Iterable[int],
    mode: str,
) -> list[FaceTuple]:
    """All face tuples realized by a covector with ``min_{i in I} q_i < 0``.

    ``mode`` is ``'d0_negative'`` (``d(q, Gamma(f|I)) < 0``), ``'d0_zero'``
    (``d = 0``) or ``'no_f'`` (only the ``g_j`` faces, ``f`` ignored).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    axes = tuple(sorted(set(axes)))
    if not axes:
        raise ValueError("axis set must be nonempty")
    J = tuple(sorted(set(J)))
    ring_poly = f if f is not None else (gs[0] if gs else None)
    if ring_poly is None:
        raise ValueError("no polynomials given")
    n = ring_poly.nvars

    supports = []
    rules = []
    if mode != "no_f":
        if f is None:
            raise ValueError(f"mode {mode!r} needs f")
        supports.append(restricted_points(f, axes))
        if mode == "d0_zero":
            rules.append(lambda a: eq(a))
        else:
            rules.append(lambda a: negative(a))
    for j in J:
        supports.append(restricted_points(gs[j], axes))
        rules.append(None)
    if not supports:
        return []
    proj = [[_project(e, axes) for e in pts] for pts in supports]
    realizer = _Realizer(axes, require_negative=True)

    out = []
    for members, qI in _branch(proj, rules, realizer, []):
        q = _lift_q(qI, axes, n)
        faces = []
        for pts, pr, mem in zip(supports, proj, members):
            full = tuple(sorted(pts[pr.index(m)] for m in mem))
            faces.append(FaceDescriptor(full, q, dot(q, full[0])))
        if mode != "no_f":
            delta0, rest = faces[0], faces[1:]
            d0 = delta0.value_d
        else:
            delta0, rest, d0 = None, faces, None
        out.append(FaceTuple(axes, J, delta0, tuple(zip(J, rest)), q, d0))
    out.sort(key=FaceTuple.sort_key)
    return out


def verify_tuple(t: FaceTuple, f: Polynomial | None, gs: Sequence[Polynomial], mode: str) -> bool:
    """Replay a tuple's witness: faces are the argmin sets and the mode conditions hold."""
    q = t.witness_q
    if min(q[i] for i in t.axes) >= 0:
        return False
    if any(q[i] != 0 for i in range(len(q)) if i not in t.axes):
        return False
    checks = []
    if t.delta0 is not None:
        checks.append((f, t.delta0))
    checks.extend((gs[j], face) for j, face in t.deltas)
    for p, face in checks:
        d, actual = min_degree_and_face(p, t.axes, q)
        if actual.members != face.members or d != face.value_d:
            return False
    if mode == "d0_zero" and t.d0 != 0:
        return False
    if mode == "d0_negative" and not t.d0 < 0:
        return False
    return True


def nonempty_subsets(indices: Sequence[int]):
    indices = list(indices)
    for k in range(1, len(indices) + 1):
        yield from combinations(indices, k)


def all_subsets(indices: Sequence[int]):
    yield ()
    yield from nonempty_subsets(indices)
