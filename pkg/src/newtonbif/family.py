"""Stability of global monodromy for one-parameter families ``f_t``, ``t in [0, 1]``.

The coefficients of ``f_t`` are real rational polynomials in ``t``.  "For every
t in [0, 1]" is discharged by eliminating everything except ``t`` from each
bad-locus ideal and isolating the real roots of the eliminant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .atypical import (
    CERTIFIED,
    FAILED,
    SAMPLED_ONLY,
    ValueSet,
    Verdict,
    _describe,
    _torus_product,
    check_nondegenerate_at_infinity,
    check_tuple_smooth_on_torus,
    critical_values_k0,
    degenerate_tuples,
    sigma_infinity,
)
from .config import DEFAULT_CONFIG, Config, ordered_map
from .errors import BudgetExceededError, NonconstantFamilyError
from .groebner import eliminate_with_saturation, groebner, normal_form
from .newton import newton_polyhedron
from .parser import parse_polynomial
from .poly import Polynomial, jacobian_minors
from .univariate import UnivariatePolynomial, gcd, isolate_root, real_part_polynomial, sturm_count

FALLBACK_SAMPLES = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


class FamilyPolynomial:
    """Polynomial in ``ring`` whose coefficients are real polynomials in ``param``."""

    def __init__(self, ring: Sequence[str], param: str, terms: dict):
        ring = tuple(ring)
        if param in ring:
            raise ValueError(f"parameter {param!r} clashes with a variable")
        clean = {}
        for exp, u in terms.items():
            if not isinstance(u, UnivariatePolynomial):
                u = UnivariatePolynomial(u, param)
            if not u.is_real():
                raise ValueError("family coefficients must be real polynomials in the parameter")
            if not u.is_zero():
                clean[tuple(exp)] = UnivariatePolynomial(u.coeffs, param)
        self.ring = ring
        self.param = param
        self.terms = clean

    @classmethod
    def parse(cls, text: str, ring: Sequence[str], param: str = "t") -> "FamilyPolynomial":
        ring = tuple(ring)
        return cls.from_polynomial(parse_polynomial(text, ring + (param,)), len(ring))

    @classmethod
    def from_polynomial(cls, p: Polynomial, param_index: int) -> "FamilyPolynomial":
        ring = p.ring[:param_index] + p.ring[param_index + 1:]
        grouped: dict = {}
        for e, c in p.terms.items():
            x = e[:param_index] + e[param_index + 1:]
            grouped.setdefault(x, {})[e[param_index]] = c
        terms = {}
        for x, by_deg in grouped.items():
            coeffs = [0] * (max(by_deg) + 1)
            for k, c in by_deg.items():
                coeffs[k] = c
            terms[x] = UnivariatePolynomial(coeffs, p.ring[param_index])
        return cls(ring, p.ring[param_index], terms)

    def support(self) -> list:
        return sorted(self.terms)

    def generic(self) -> Polynomial:
        """A polynomial with the family's generic support (all coefficients 1)."""
        return Polynomial(self.ring, {e: 1 for e in self.terms})

    def at(self, t) -> Polynomial:
        t = Fraction(t)
        return Polynomial(self.ring, {e: u.evaluate_exact(t) for e, u in self.terms.items()})

    def as_polynomial(self, ring: Sequence[str] | None = None, mapping: dict | None = None) -> Polynomial:
        """Lift into a ring containing the parameter; ``mapping`` sends x-indices to new indices."""
        full = self.ring + (self.param,)
        terms = {}
        for e, u in self.terms.items():
            for k, c in enumerate(u.coeffs):
                if c:
                    terms[e + (k,)] = c
        p = Polynomial(full, terms)
        if ring is None:
            return p
        if mapping is not None:
            mapping = dict(mapping)
            mapping[len(self.ring)] = tuple(ring).index(self.param)
        return p.embed(ring, mapping)

    def face_part(self, members) -> "FamilyPolynomial":
        return FamilyPolynomial(self.ring, self.param, {e: self.terms[e] for e in members if e in self.terms})

    def is_constant_family(self) -> bool:
        return all(u.degree <= 0 for u in self.terms.values())

    def __str__(self) -> str:
        return str(self.as_polynomial())


@dataclass(frozen=True)
class PolyhedronFailure:
    vertex: tuple
    coefficient: UnivariatePolynomial
    interval: tuple  # (Fraction, Fraction) isolating a root in [0, 1]


@dataclass(frozen=True)
class TupleFailure:
    condition: str
    tuple: object
    reason: str
    interval: tuple | None = None
    sample: Fraction | None = None


def constant_polyhedron_check(F: FamilyPolynomial) -> Verdict:
    """Is the Newton polyhedron of ``f_t`` the same for all ``t in [0, 1]``?

    Only vertex coefficients matter: a non-vertex point may disappear without
    changing the hull, while a vanishing vertex coefficient changes it.
    """
    if not F.terms:
        raise ValueError("the zero family has no Newton polyhedron")
    poly = newton_polyhedron(F.generic())
    failures = []
    for v in poly.vertices:
        u = F.terms[v]
        if sturm_count(u, 0, 1) > 0:
            lo, hi = _first_root_interval(u)
            failures.append(PolyhedronFailure(v, u, (lo, hi)))
    if failures:
        return Verdict(FAILED, tuple(failures))
    return Verdict(CERTIFIED, certificates=(f"{len(poly.vertices)} vertex coefficients root-free on [0, 1]",))


def _first_root_interval(u: UnivariatePolynomial, lo=Fraction(0), hi=Fraction(1)) -> tuple:
    return isolate_root(u, lo, hi, Fraction(1, 1024))


def _bad_t_ideal(F: FamilyPolynomial, gs: Sequence[Polynomial], t_members, axes: tuple):
    """Generators (ring ``x_I, t``) whose zero set projects onto the bad parameter values."""
    cond, tup, _ = t_members
    small = tuple(F.ring[i] for i in axes) + (F.param,)
    mapping = {i: k for k, i in enumerate(axes)}
    polys = []
    if tup.delta0 is not None:
        polys.append(F.face_part(tup.delta0.members).as_polynomial(small, mapping))
    for j, face in tup.deltas:
        polys.append(gs[j].select_terms(face.members).embed(small, mapping))
    k = len(polys)
    gens = list(polys)
    if k <= len(axes):
        gens += jacobian_minors(polys, range(len(axes)))
    return gens, small


def family_nondegeneracy_check(
    F: FamilyPolynomial,
    gs: Sequence[Polynomial] = (),
    config: Config = DEFAULT_CONFIG,
    samples: Sequence = FALLBACK_SAMPLES,
) -> Verdict:
    """Certify non-degeneracy at infinity of ``f_t`` on ``S`` for every ``t`` in ``[0, 1]``."""
    gs = list(gs)
    generic = F.generic()
    checks = list(degenerate_tuples(generic, gs, config))

    def run(item):
        cond, tup, _ = item
        gens, small = _bad_t_ideal(F, gs, item, tup.axes)
        label = f"condition ({cond}) {_describe(tup, F.ring)}"
        h = _torus_product(small, len(tup.axes))
        try:
            elim = eliminate_with_saturation(gens, [len(small) - 1], h, config.max_pairs)
        except BudgetExceededError as exc:
            raise exc.with_context(label) from exc
        if elim and any(p.is_constant() for p in elim):
            return CERTIFIED, None
        if elim:
            u = UnivariatePolynomial.from_polynomial(elim[0], len(small) - 1)
            for p in elim[1:]:
                u = gcd(u, UnivariatePolynomial.from_polynomial(p, len(small) - 1))
            real = real_part_polynomial(u)
            if real.degree < 1 or sturm_count(real, 0, 1) == 0:
                return CERTIFIED, None
            interval = _first_root_interval(real)
            return FAILED, TupleFailure(cond, tup, "bad parameter value in [0, 1]", interval=interval)
        # zero eliminant: every t is suspicious, fall back to samples
        for s in samples:
            polys = [p for p in _sample_polys(F, gs, tup, s)]
            if any(p.is_zero() for p in polys):
                return FAILED, TupleFailure(cond, tup, "face polynomial vanishes", sample=Fraction(s))
            v = check_tuple_smooth_on_torus(polys, tup.axes, config)
            if v.status == FAILED:
                return FAILED, TupleFailure(cond, tup, v.witnesses[0].reason, sample=Fraction(s))
        return SAMPLED_ONLY, TupleFailure(cond, tup, "eliminant is zero; checked at samples only")

    results = ordered_map(run, checks, config.jobs)
    failed = tuple(w for status, w in results if status == FAILED)
    if failed:
        return Verdict(FAILED, failed)
    sampled = tuple(w for status, w in results if status == SAMPLED_ONLY)
    if sampled:
        return Verdict(SAMPLED_ONLY, sampled)
    return Verdict(CERTIFIED, certificates=(f"{len(checks)} face systems free of bad t in [0, 1]",))


def _sample_polys(F: FamilyPolynomial, gs, tup, s) -> list:
    polys = []
    if tup.delta0 is not None:
        polys.append(F.face_part(tup.delta0.members).at(s))
    for j, face in tup.deltas:
        polys.append(gs[j].select_terms(face.members))
    return polys


@dataclass(frozen=True)
class SampleDiagnostics:
    t: Fraction
    nondegeneracy: Verdict
    k0: ValueSet
    sigma: ValueSet | None

    @property
    def k0_radius(self) -> float:
        return max((abs(c) for c in self.k0.values), default=0.0)

    @property
    def sigma_radius(self) -> float:
        if self.sigma is None:
            return 0.0
        return max((abs(c) for c in self.sigma.values), default=0.0)


STABLE = "monodromies isomorphic"
NOT_CERTIFIED = "not certified"


@dataclass(frozen=True)
class StabilityReport:
    polyhedron: Verdict
    nondegeneracy: Verdict | None
    verdict: str
    samples: tuple

    @property
    def stable(self) -> bool:
        return self.verdict == STABLE

    @property
    def failed_hypotheses(self) -> tuple:
        """``"i"`` (constant polyhedron) and/or ``"ii"`` (non-degeneracy for all t); ``ii`` is skipped when ``i`` fails."""
        out = []
        if self.polyhedron.status != CERTIFIED:
            out.append("i")
        if self.nondegeneracy is not None and self.nondegeneracy.status != CERTIFIED:
            out.append("ii")
        return tuple(out)

    @property
    def radius(self) -> float:
        return max((max(s.k0_radius, s.sigma_radius) for s in self.samples), default=0.0)

    @property
    def k0_radius(self) -> float:
        return max((s.k0_radius for s in self.samples), default=0.0)

    @property
    def sigma_radius(self) -> float:
        return max((s.sigma_radius for s in self.samples), default=0.0)


def check_nonconstant_on_s(f: Polynomial, gs: Sequence[Polynomial], config: Config = DEFAULT_CONFIG) -> None:
    """Raise unless ``f`` is nonconstant modulo the ideal of the constraints (dominance proxy)."""
    gs = [g for g in gs if not g.is_zero()]
    if not gs:
        if f.is_constant():
            raise NonconstantFamilyError(f"{f} is constant")
        return
    gb = groebner(gs, max_pairs=config.max_pairs)
    if gb.is_unit():
        raise NonconstantFamilyError("S is empty")
    if normal_form(f, gb).is_constant():
        raise NonconstantFamilyError(f"{f} is constant on S")


def stability_report(
    F: FamilyPolynomial,
    gs: Sequence[Polynomial] = (),
    samples: Sequence = (Fraction(0), Fraction(1, 2), Fraction(1)),
    config: Config = DEFAULT_CONFIG,
) -> StabilityReport:
    gs = list(gs)
    poly = constant_polyhedron_check(F)
    nondeg = family_nondegeneracy_check(F, gs, config) if poly.status == CERTIFIED else None
    certified = poly.status == CERTIFIED and nondeg is not None and nondeg.status == CERTIFIED
    diags = []
    for s in sorted(Fraction(x) for x in samples):
        if not 0 <= s <= 1:
            raise ValueError(f"sample {s} outside [0, 1]")
        ft = F.at(s)
        check_nonconstant_on_s(ft, gs, config)
        nd = check_nondegenerate_at_infinity(ft, gs, config)
        k0 = critical_values_k0(ft, gs, config)
        sigma = sigma_infinity(ft, gs, config) if nd.ok else None
        diags.append(SampleDiagnostics(s, nd, k0, sigma))
    return StabilityReport(poly, nondeg, STABLE if certified else NOT_CERTIFIED, tuple(diags))
