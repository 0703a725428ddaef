"""Sparse multivariate polynomials over Q(i).

A :class:`Polynomial` lives in a ring given by an ordered tuple of variable
names and stores a map from dense exponent tuples to nonzero :class:`QQi`
coefficients.  Variable indices in this module are 0-based.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalars import ONE, ZERO, QQi, format_scalar

Exponent = tuple  # tuple[int, ...]


def _glex_key(exp: Exponent):
    return (sum(exp), exp)


class Polynomial:
    """Immutable polynomial with exact Gaussian-rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Sequence[str], terms: Mapping[Exponent, object] | None = None):
        ring = tuple(ring)
        n = len(ring)
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} does not match ring of dimension {n}")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                c = QQi.coerce(c)
                if c:
                    clean[exp] = clean.get(exp, ZERO) + c if exp in clean else c
            clean = {e: c for e, c in clean.items() if c}
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, ring: tuple, terms: dict) -> "Polynomial":
        # trusted constructor: ring is a tuple, terms has no zero coefficients
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.ring, dict(self.terms)))

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, ring: Sequence[str]) -> "Polynomial":
        return cls._raw(tuple(ring), {})

    @classmethod
    def constant(cls, ring: Sequence[str], c) -> "Polynomial":
        ring = tuple(ring)
        c = QQi.coerce(c)
        return cls._raw(ring, {(0,) * len(ring): c} if c else {})

    @classmethod
    def variable(cls, ring: Sequence[str], var) -> "Polynomial":
        ring = tuple(ring)
        i = ring.index(var) if isinstance(var, str) else var
        exp = tuple(1 if k == i else 0 for k in range(len(ring)))
        return cls._raw(ring, {exp: ONE})

    @classmethod
    def monomial(cls, ring: Sequence[str], exp: Exponent, c=1) -> "Polynomial":
        return cls(ring, {tuple(exp): c})

    # -- basic queries ------------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.ring)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def coefficient(self, exp: Exponent) -> QQi:
        return self.terms.get(tuple(exp), ZERO)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> QQi:
        return self.terms.get((0,) * self.nvars, ZERO)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def variables_used(self) -> frozenset:
        used = set()
        for exp in self.terms:
            used.update(i for i, e in enumerate(exp) if e)
        return frozenset(used)

    def sorted_terms(self) -> list:
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _glex_key(t[0]), reverse=True)

    # -- equality -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, QQi)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, frozenset(self.terms.items()))))
        return self._hash

    # -- arithmetic ---------------------------------------------------------
    def _lift(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction, QQi)):
            return Polynomial.constant(self.ring, other)
        return None

    def __add__(self, other) -> "Polynomial":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Polynomial":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c) -> "Polynomial":
        c = QQi.coerce(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, QQi)):
            return self.scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = terms.get(e)
                terms[e] = c if s is None else s + c
        return Polynomial._raw(self.ring, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: c.conjugate() for e, c in self.terms.items()})

    # -- calculus and substitutions -----------------------------------------
    def diff(self, i: int) -> "Polynomial":
        """Formal (holomorphic) partial derivative with respect to variable ``i``."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for ring {self.ring}")
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                terms[ne] = c * k
        return Polynomial._raw(self.ring, terms)

    def restrict(self, axes: Iterable[int]) -> "Polynomial":
        """Set every variable outside ``axes`` to zero."""
        axes = frozenset(axes)
        if not axes:
            raise ValueError("axis set must be nonempty")
        off = [i for i in range(self.nvars) if i not in axes]
        terms = {e: c for e, c in self.terms.items() if all(e[i] == 0 for i in off)}
        return Polynomial._raw(self.ring, terms)

    def select_terms(self, exps: Iterable[Exponent]) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: self.terms[e] for e in exps if e in self.terms})

    def embed(self, new_ring: Sequence[str], mapping: Mapping[int, int] | None = None) -> "Polynomial":
        """Move into ``new_ring``.

        ``mapping`` sends old variable indices to new ones; by default variables
        are matched by name.  Variables of degree zero everywhere may be dropped.
        """
        new_ring = tuple(new_ring)
        if mapping is None:
            mapping = {i: new_ring.index(v) for i, v in enumerate(self.ring) if v in new_ring}
        m = len(new_ring)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * m
            for i, k in enumerate(e):
                if k:
                    if i not in mapping:
                        raise ValueError(f"variable {self.ring[i]!r} has no image in {new_ring}")
                    ne[mapping[i]] += k
            ne = tuple(ne)
            terms[ne] = terms[ne] + c if ne in terms else c
        return Polynomial._raw(new_ring, {e: c for e, c in terms.items() if c})

    def substitute(self, i: int, value) -> "Polynomial":
        """Substitute an exact scalar for variable ``i`` (the variable stays in the ring)."""
        value = QQi.coerce(value)
        terms: dict = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            v = c * value ** e[i] if e[i] else c
            terms[ne] = terms[ne] + v if ne in terms else v
        return Polynomial._raw(self.ring, {e: c for e, c in terms.items() if c})

    def evaluate_exact(self, point: Sequence) -> QQi:
        point = [QQi.coerce(v) for v in point]
        if len(point) != self.nvars:
            raise ValueError("dimension mismatch")
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for z, k in zip(point, e):
                if k:
                    v = v * z ** k
            total = total + v
        return total

    def evaluate(self, point: Sequence[complex]) -> complex:
        """Numeric evaluation in double precision (nested Horner in the variables)."""
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {self.nvars}")
        items = [(e, complex(c)) for e, c in self.terms.items()]
        return _horner(items, [complex(z) for z in point], 0)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Polynomial({to_text(self)!r}, ring={self.ring})"


def _horner(items: list, point: list, k: int) -> complex:
    if not items:
        return 0j
    if k == len(point):
        return sum((c for _, c in items), 0j)
    groups: dict = {}
    for e, c in items:
        groups.setdefault(e[k], []).append((e, c))
    z = point[k]
    acc = 0j
    prev = None
    for deg in sorted(groups, reverse=True):
        if prev is not None:
            acc *= z ** (prev - deg)
        acc += _horner(groups[deg], point, k + 1)
        prev = deg
    return acc * z ** prev if prev else acc


def _monomial_text(ring: tuple, exp: Exponent) -> str:
    parts = []
    for name, k in zip(ring, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _split_sign(c: QQi) -> tuple[bool, QQi]:
    if not c.im and c.re < 0:
        return True, -c
    if not c.re and c.im < 0:
        return True, -c
    return False, c


def to_text(p: Polynomial) -> str:
    """Canonical text: graded-lex descending terms, explicit ``*`` and ``^``."""
    if p.is_zero():
        return "0"
    out = []
    for idx, (exp, c) in enumerate(p.sorted_terms()):
        neg, mag = _split_sign(c)
        mono = _monomial_text(p.ring, exp)
        if not mono:
            body = format_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_scalar(mag)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    return p.diff(i)


def restrict_to_axes(p: Polynomial, axes: Iterable[int]) -> Polynomial:
    return p.restrict(axes)


def evaluate(p: Polynomial, point: Sequence[complex]) -> complex:
    return p.evaluate(point)


def jacobian_minors(polys: Sequence[Polynomial], variables: Sequence[int], k: int | None = None) -> list:
    """All ``k x k`` minors of the Jacobian of ``polys`` with respect to ``variables``.

    ``k`` defaults to ``len(polys)``.  Returns an empty list when ``k`` exceeds
    the number of variables.
    """
    from itertools import combinations

    polys = list(polys)
    if not polys:
        return []
    k = len(polys) if k is None else k
    variables = list(variables)
    if k > len(variables) or k > len(polys):
        return []
    jac = [[g.diff(i) for i in variables] for g in polys]
    ring = polys[0].ring
    minors = []
    for rows in combinations(range(len(polys)), k):
        for cols in combinations(range(len(variables)), k):
            m = _det([[jac[r][c] for c in cols] for r in rows], ring)
            if not m.is_zero():
                minors.append(m)
    return minors


def _det(mat: list, ring: tuple) -> Polynomial:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    total = Polynomial.zero(ring)
    for j in range(n):
        if mat[0][j].is_zero():
            continue
        sub = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _det(sub, ring)
        total = total + term if j % 2 == 0 else total - term
    return total
