"""Dense univariate polynomials: exact gcd/squarefree parts, numeric roots, Sturm counts."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Sequence

from .errors import NonConvergenceError
from .poly import Polynomial
from .scalars import ONE, ZERO, QQi


class UnivariatePolynomial:
    """Coefficients stored low degree first; trailing zeros are stripped."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence, var: str = "c"):
        cs = [QQi.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("UnivariatePolynomial is immutable")

    def __reduce__(self):
        return (UnivariatePolynomial, (self.coeffs, self.var))

    @classmethod
    def from_polynomial(cls, p: Polynomial, var_index: int | None = None) -> "UnivariatePolynomial":
        used = p.variables_used()
        if var_index is None:
            if len(used) > 1:
                raise ValueError(f"{p} is not univariate")
            var_index = next(iter(used)) if used else 0
        elif used - {var_index}:
            raise ValueError(f"{p} involves variables other than {p.ring[var_index]}")
        deg = max((e[var_index] for e in p.terms), default=-1)
        coeffs = [ZERO] * (deg + 1)
        for e, c in p.terms.items():
            coeffs[e[var_index]] = c
        return cls(coeffs, p.ring[var_index] if p.ring else "c")

    def to_polynomial(self, ring: Sequence[str] | None = None) -> Polynomial:
        ring = tuple(ring) if ring is not None else (self.var,)
        i = ring.index(self.var)
        n = len(ring)
        return Polynomial(ring, {tuple(k if j == i else 0 for j in range(n)): c for k, c in enumerate(self.coeffs)})

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> QQi:
        return self.coeffs[-1]

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UnivariatePolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def monic(self) -> "UnivariatePolynomial":
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return UnivariatePolynomial([c * inv for c in self.coeffs], self.var)

    def derivative(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial([c * k for k, c in enumerate(self.coeffs)][1:], self.var)

    def __neg__(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [ZERO] * (n - len(self.coeffs))
        b = list(other.coeffs) + [ZERO] * (n - len(other.coeffs))
        return UnivariatePolynomial([x - y for x, y in zip(a, b)], self.var)

    def __mul__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        if self.is_zero() or other.is_zero():
            return UnivariatePolynomial([], self.var)
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UnivariatePolynomial(out, self.var)

    def divmod(self, other: "UnivariatePolynomial") -> tuple["UnivariatePolynomial", "UnivariatePolynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = other.leading().inverse()
        quot = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            factor = c * inv
            quot[k - dq] = factor
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - factor * b
        return UnivariatePolynomial(quot, self.var), UnivariatePolynomial(rem[:dq], self.var)

    def __mod__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        return self.divmod(other)[0]

    def evaluate_exact(self, x) -> QQi:
        x = QQi.coerce(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + complex(c)
        return acc

    def real_coefficients(self) -> list[Fraction]:
        if not self.is_real():
            raise ValueError("polynomial has non-real coefficients")
        return [c.re for c in self.coeffs]

    def __str__(self) -> str:
        return str(self.to_polynomial())

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({str(self)!r})"


def gcd(a: UnivariatePolynomial, b: UnivariatePolynomial) -> UnivariatePolynomial:
    """Monic gcd by the Euclidean algorithm (exact)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(u: UnivariatePolynomial) -> UnivariatePolynomial:
    """``u / gcd(u, u')`` made monic."""
    if u.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if u.degree <= 0:
        return UnivariatePolynomial([ONE], u.var)
    g = gcd(u, u.derivative())
    return (u // g).monic()


def real_part_polynomial(u: UnivariatePolynomial) -> UnivariatePolynomial:
    """Polynomial with real rational coefficients whose real roots are exactly the real roots of ``u``.

    After normalizing to monic form, a real root must annihilate both the real and
    imaginary coefficient polynomials, so it is a root of their gcd.
    """
    m = u.monic()
    if m.is_real():
        return m
    re = UnivariatePolynomial([c.re for c in m.coeffs], u.var)
    im = UnivariatePolynomial([c.im for c in m.coeffs], u.var)
    return gcd(re, im)


# -- numeric roots -------------------------------------------------------------

def _cauchy_radius(coeffs: list[complex]) -> float:
    lead = abs(coeffs[-1])
    return 1.0 + max((abs(c) / lead for c in coeffs[:-1]), default=0.0)


def durand_kerner(
    coeffs: Sequence[complex],
    tol: float = 1e-14,
    max_iter: int = 5000,
) -> list[complex]:
    """Simultaneous Weierstrass iteration for all roots of a polynomial (low-degree-first coeffs)."""
    coeffs = [complex(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    n = len(coeffs) - 1
    if n < 1:
        return []
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    if n == 1:
        return [-monic[0]]
    radius = _cauchy_radius(monic)
    # offset angle avoids symmetric starts for real polynomials
    z = [radius * 0.5 * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]

    def peval(x: complex) -> complex:
        acc = 0j
        for c in reversed(monic):
            acc = acc * x + c
        return acc

    for _ in range(max_iter):
        delta = 0.0
        new = []
        for i, zi in enumerate(z):
            denom = 1 + 0j
            for j, zj in enumerate(z):
                if i != j:
                    diff = zi - zj
                    denom *= diff if diff != 0 else 1e-300
            step = peval(zi) / denom
            new.append(zi - step)
            delta = max(delta, abs(step) / max(1.0, abs(zi)))
        z = new
        if delta < tol:
            break
    else:
        residual = max(abs(peval(x)) for x in z)
        raise NonConvergenceError(f"Durand-Kerner did not converge in {max_iter} iterations", residual)
    return z


def _newton_polish(u: UnivariatePolynomial, z: complex, steps: int = 3) -> complex:
    du = u.derivative()
    for _ in range(steps):
        d = du.evaluate(z)
        if d == 0:
            break
        step = u.evaluate(z) / d
        if not math.isfinite(abs(step)):
            break
        z = z - step
    return z


def _clean(z: complex, tol: float) -> complex:
    re, im = z.real, z.imag
    scale = max(1.0, abs(z))
    if abs(im) <= tol * scale:
        im = 0.0
    if abs(re) <= tol * scale:
        re = 0.0
    return complex(re + 0.0, im + 0.0)


def snap_rational(u: UnivariatePolynomial, z: complex, max_den: int = 10**6) -> QQi | None:
    """Return an exact Gaussian-rational root of ``u`` near ``z`` if one exists with small denominators."""
    cand = QQi(Fraction(z.real).limit_denominator(max_den), Fraction(z.imag).limit_denominator(max_den))
    if not u.evaluate_exact(cand):
        return cand
    return None


def univariate_roots(u: UnivariatePolynomial, tol: float = 1e-12, max_iter: int = 5000) -> list[complex]:
    """Distinct complex roots of ``u`` (squarefree part first), sorted by real then imaginary part."""
    if u.is_zero():
        raise ValueError("roots of the zero polynomial")
    sf = squarefree_part(u)
    if sf.degree < 1:
        return []
    raw = durand_kerner([complex(c) for c in sf.coeffs], tol=min(tol, 1e-14), max_iter=max_iter)
    roots = []
    for z in raw:
        z = _newton_polish(sf, z)
        exact = snap_rational(sf, z)
        if exact is not None:
            z = complex(exact)
        roots.append(_clean(z, tol))
    residual = max(abs(sf.evaluate(z)) / max(1.0, abs(z)) ** sf.degree for z in roots)
    coeff_scale = max(abs(complex(c)) for c in sf.coeffs)
    if residual > max(tol, 1e-10) * coeff_scale * 1e3:
        raise NonConvergenceError("root residual above tolerance", residual)
    return sorted(roots, key=lambda w: (w.real, w.imag))


# -- Sturm sequences ------------------------------------------------------------

def _frac_eval(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1] / lead
        shift = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def sturm_sequence(coeffs: Sequence[Fraction]) -> list[list[Fraction]]:
    p0 = [Fraction(c) for c in coeffs]
    while p0 and p0[-1] == 0:
        p0.pop()
    if not p0:
        raise ValueError("Sturm sequence of the zero polynomial")
    p1 = [c * k for k, c in enumerate(p0)][1:]
    seq = [p0]
    if p1:
        seq.append(p1)
    while len(seq) > 1 and len(seq[-1]) > 1:
        r = _frac_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _sign_changes(seq: list[list[Fraction]], x: Fraction) -> int:
    signs = [s for s in (_frac_eval(p, x) for p in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def sturm_count(u: UnivariatePolynomial | Sequence, a, b) -> int:
    """Number of distinct real roots of ``u`` in the closed interval ``[a, b]``.

    Sign-variation difference counts roots in ``(a, b]``; ``u(a) = 0`` is tested directly.
    """
    if not isinstance(u, UnivariatePolynomial):
        u = UnivariatePolynomial([Fraction(c) for c in u], "t")
    if not u.is_real():
        raise ValueError("Sturm counting needs real coefficients")
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise ValueError("empty interval")
    seq = sturm_sequence(squarefree_part(u).real_coefficients())
    count = _sign_changes(seq, a) - _sign_changes(seq, b)
    if _frac_eval(seq[0], a) == 0:
        count += 1
    return count


def isolate_root(u: UnivariatePolynomial, a, b, width=Fraction(1, 1024)) -> tuple[Fraction, Fraction]:
    """Shrink ``[a, b]`` (which must contain a real root of ``u``) to a closed interval of at most ``width``."""
    a, b = Fraction(a), Fraction(b)
    if sturm_count(u, a, b) == 0:
        raise ValueError("interval contains no root")
    while b - a > width:
        m = (a + b) / 2
        if sturm_count(u, a, m) > 0:
            b = m
        else:
            a = m
    return a, b
