"""Non-degeneracy certificates, the value sets K0 and Sigma_infinity, and the bifurcation superset.

All systems use holomorphic partial derivatives.  The conjugation in the
gradient only changes the Lagrange multipliers by conjugation, so the value
sets are unaffected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .config import DEFAULT_CONFIG, Config, ordered_map
from .errors import BudgetExceededError, NonFiniteValueSetError
from .groebner import contains_one, eliminate_with_saturation, saturation_contains_one
from .newton import (
    FaceTuple,
    all_subsets,
    enumerate_face_tuples,
    face_part,
    is_convenient,
    nonempty_subsets,
)
from .poly import Polynomial, jacobian_minors
from .scalars import QQi
from .univariate import UnivariatePolynomial, gcd, snap_rational, squarefree_part, univariate_roots

CERTIFIED = "certified"
FAILED = "failed"
VACUOUS = "vacuous"
SAMPLED_ONLY = "sampled-only"


@dataclass(frozen=True)
class Failure:
    condition: str  # "S", "i" or "ii"
    tuple: FaceTuple | None
    reason: str


@dataclass(frozen=True)
class Verdict:
    status: str
    witnesses: tuple = ()
    certificates: tuple = ()

    @property
    def ok(self) -> bool:
        return self.status in (CERTIFIED, VACUOUS)


def _torus_product(ring: tuple, n: int) -> Polynomial:
    """Product of the first ``n`` variables of ``ring``."""
    return Polynomial.monomial(ring, (1,) * n + (0,) * (len(ring) - n))


def _restrict_ring(polys: Sequence[Polynomial], axes: tuple) -> list[Polynomial]:
    ring = polys[0].ring
    small = tuple(ring[i] for i in axes)
    mapping = {i: k for k, i in enumerate(axes)}
    return [p.embed(small, mapping) for p in polys]


def verify_s_smooth(gs: Sequence[Polynomial], config: Config = DEFAULT_CONFIG) -> Verdict:
    """Certify that the gradients of the ``g_j`` are independent at every point of ``S``.

    ``S`` empty (unit ideal) is reported as vacuous.
    """
    gs = list(gs)
    if not gs:
        return Verdict(VACUOUS, certificates=("p = 0: S is the whole space",))
    if any(g.is_zero() for g in gs):
        return Verdict(FAILED, (Failure("S", None, "a constraint is the zero polynomial"),))
    if contains_one(gs, max_pairs=config.max_pairs):
        return Verdict(VACUOUS, certificates=("S is empty",))
    n = gs[0].nvars
    minors = jacobian_minors(gs, range(n))
    if minors and contains_one(gs + minors, max_pairs=config.max_pairs):
        return Verdict(CERTIFIED, certificates=("1 in (g, Jacobian minors)",))
    return Verdict(FAILED, (Failure("S", None, "the constraint gradients are dependent somewhere on S"),))


def check_tuple_smooth_on_torus(
    polys: Sequence[Polynomial], axes: Sequence[int], config: Config = DEFAULT_CONFIG
) -> Verdict:
    """Is ``{polys = 0}`` in the torus over ``axes`` empty or a smooth complete intersection?"""
    axes = tuple(sorted(set(axes)))
    polys = [p for p in polys]
    if not polys:
        return Verdict(VACUOUS)
    for p in polys:
        if p.variables_used() - set(axes):
            raise ValueError(f"{p} involves variables outside {axes}")
    small = _restrict_ring(polys, axes)
    ring = small[0].ring
    h = _torus_product(ring, len(axes))
    if saturation_contains_one(small, h, config.max_pairs):
        return Verdict(VACUOUS, certificates=("no zeros in the torus",))
    k = len(small)
    if k > len(axes):
        return Verdict(FAILED, (Failure("", None, f"{k} equations in {len(axes)} torus variables have common zeros"),))
    minors = jacobian_minors(small, range(len(axes)))
    if minors and saturation_contains_one(small + minors, h, config.max_pairs):
        return Verdict(CERTIFIED, certificates=("Jacobian has full rank on the torus zero set",))
    return Verdict(FAILED, (Failure("", None, "Jacobian drops rank at a torus zero"),))


def _axis_sets(f: Polynomial):
    n = f.nvars
    for axes in nonempty_subsets(range(n)):
        if not f.restrict(axes).is_zero():
            yield axes


def _admissible_J(gs: Sequence[Polynomial], axes: tuple) -> list[int]:
    return [j for j, g in enumerate(gs) if not g.restrict(axes).is_zero()]


def _describe(t: FaceTuple, ring: tuple) -> str:
    axes = ",".join(ring[i] for i in t.axes)
    q = ",".join(str(t.witness_q[i]) for i in t.axes)
    return f"I={{{axes}}} J={list(t.J)} q=({q})"


def degenerate_tuples(f: Polynomial, gs: Sequence[Polynomial], config: Config = DEFAULT_CONFIG):
    """All ``(condition, tuple, face polynomials)`` checks of the non-degeneracy loop."""
    for axes in _axis_sets(f):
        for J in all_subsets(_admissible_J(gs, axes)):
            if J:
                for t in enumerate_face_tuples(f, gs, axes, J, "no_f"):
                    yield "i", t, [face_part(gs[j], face) for j, face in t.deltas]
            for t in enumerate_face_tuples(f, gs, axes, J, "d0_negative"):
                polys = [face_part(f, t.delta0)] + [face_part(gs[j], face) for j, face in t.deltas]
                yield "ii", t, polys


def check_nondegenerate_at_infinity(
    f: Polynomial, gs: Sequence[Polynomial] = (), config: Config = DEFAULT_CONFIG
) -> Verdict:
    """Run every face-system smoothness check of the non-degeneracy condition."""
    gs = list(gs)
    checks = list(degenerate_tuples(f, gs, config))
    cache: dict = {}

    def run(item):
        cond, t, polys = item
        key = (t.axes, tuple(polys))
        if key in cache:
            return cache[key]
        try:
            verdict = check_tuple_smooth_on_torus(polys, t.axes, config)
        except BudgetExceededError as exc:
            raise exc.with_context(f"condition ({cond}) {_describe(t, f.ring)}") from exc
        cache[key] = verdict
        return verdict

    verdicts = ordered_map(run, checks, config.jobs)
    failures = []
    for (cond, t, _), v in zip(checks, verdicts):
        if v.status == FAILED:
            failures.append(Failure(cond, t, v.witnesses[0].reason))
    if failures:
        return Verdict(FAILED, tuple(failures))
    return Verdict(CERTIFIED, certificates=(f"{len(checks)} face systems checked",))


# -- value sets --------------------------------------------------------------------


@dataclass(frozen=True)
class ValueSource:
    label: str
    tuple: FaceTuple | None
    eliminant: UnivariatePolynomial  # squarefree, monic
    roots: tuple
    exact_roots: tuple  # QQi or None, aligned with roots

    @property
    def exact(self) -> bool:
        return all(r is not None for r in self.exact_roots)


@dataclass(frozen=True)
class ValueSet:
    sources: tuple = ()
    values: tuple = ()

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def contains(self, z: complex, tol: float = 1e-9) -> bool:
        return any(abs(z - v) <= tol * max(1.0, abs(z)) for v in self.values)

    def exact_value(self, z: complex) -> QQi | None:
        for src in self.sources:
            for r, e in zip(src.roots, src.exact_roots):
                if e is not None and r == z:
                    return e
        return None


def merge_values(sources: Sequence[ValueSource], tol: float = 1e-10) -> ValueSet:
    everything = sorted((r for s in sources for r in s.roots), key=lambda z: (z.real, z.imag))
    values: list = []
    for z in everything:
        if not any(abs(z - v) <= tol * max(1.0, abs(z)) for v in values):
            values.append(z)
    values.sort(key=lambda z: (z.real, z.imag))
    return ValueSet(tuple(sources), tuple(values))


def _fresh(ring: Sequence[str], base: str) -> str:
    name, k = base, 0
    while name in ring:
        k += 1
        name = f"{base}{k}"
    return name


def _value_source(label: str, t: FaceTuple | None, eliminant_polys: list, config: Config) -> ValueSource | None:
    """Turn generators of an ideal in ``c`` alone into a value source (None for the unit ideal)."""
    if not eliminant_polys:
        raise NonFiniteValueSetError(f"elimination to the value line gave the zero ideal ({label})")
    ci = next(iter(set().union(*(p.variables_used() for p in eliminant_polys))), None)
    if ci is None:
        return None  # nonzero constant: unit ideal
    u = UnivariatePolynomial([])
    for p in eliminant_polys:
        v = UnivariatePolynomial.from_polynomial(p, ci)
        u = v if u.is_zero() else gcd(u, v)
    u = UnivariatePolynomial(u.coeffs, "c")
    if u.degree < 1:
        return None
    sf = squarefree_part(u)
    roots = univariate_roots(sf, config.root_tol, config.max_root_iter)
    exact = tuple(snap_rational(sf, z) for z in roots)
    return ValueSource(label, t, sf, tuple(roots), exact)


def _lagrange_system(fpart: Polynomial, gparts: Sequence[Polynomial], axes: tuple):
    """Generators ``{g}, {df/dx_i + sum lam_j dg_j/dx_i}, {c - f}`` in a ring ``x_I, lam_J, c``."""
    ring = fpart.ring
    xs = [ring[i] for i in axes]
    lams = []
    for j in range(len(gparts)):
        lams.append(_fresh(list(ring) + lams, f"lambda{j + 1}"))
    cname = _fresh(list(ring) + lams, "c")
    new_ring = tuple(xs + lams + [cname])
    mapping = {i: k for k, i in enumerate(axes)}
    F = fpart.embed(new_ring, mapping)
    G = [g.embed(new_ring, mapping) for g in gparts]
    L = [Polynomial.variable(new_ring, len(xs) + j) for j in range(len(gparts))]
    gens = list(G)
    for k in range(len(xs)):
        eqn = F.diff(k)
        for lam, g in zip(L, G):
            eqn = eqn + lam * g.diff(k)
        gens.append(eqn)
    gens.append(Polynomial.variable(new_ring, cname) - F)
    return gens, new_ring, len(new_ring) - 1


def sigma_infinity(f: Polynomial, gs: Sequence[Polynomial] = (), config: Config = DEFAULT_CONFIG) -> ValueSet:
    """Critical values of face functions ``f_{Delta0}`` with ``d = 0`` on the torus face systems."""
    gs = list(gs)
    jobs = []
    for axes in _axis_sets(f):
        for J in all_subsets(_admissible_J(gs, axes)):
            for t in enumerate_face_tuples(f, gs, axes, J, "d0_zero"):
                jobs.append(t)

    def run(t: FaceTuple):
        fpart = face_part(f, t.delta0)
        gparts = [face_part(gs[j], face) for j, face in t.deltas]
        gens, ring, ci = _lagrange_system(fpart, gparts, t.axes)
        h = _torus_product(ring, len(t.axes))
        label = f"Sigma {_describe(t, f.ring)}"
        try:
            elim = eliminate_with_saturation(gens, [ci], h, config.max_pairs)
        except BudgetExceededError as exc:
            raise exc.with_context(label) from exc
        if not elim:
            raise NonFiniteValueSetError(f"non-finite Sigma_infinity contribution from {label}")
        return _value_source(label, t, elim, config)

    sources = [s for s in ordered_map(run, jobs, config.jobs) if s is not None]
    return merge_values(sources, config.dedup_tol)


def critical_values_k0(f: Polynomial, gs: Sequence[Polynomial] = (), config: Config = DEFAULT_CONFIG) -> ValueSet:
    """Critical values of ``f`` on ``S`` by Lagrange multipliers."""
    gs = list(gs)
    axes = tuple(range(f.nvars))
    gens, ring, ci = _lagrange_system(f, gs, axes)
    try:
        elim = eliminate_with_saturation(gens, [ci], None, config.max_pairs)
    except BudgetExceededError as exc:
        raise exc.with_context("K0") from exc
    if not elim:
        raise NonFiniteValueSetError("non-finite K0 projection")
    src = _value_source("K0", None, elim, config)
    return merge_values([src] if src is not None else [], config.dedup_tol)


def zero_source() -> ValueSource:
    return ValueSource("zero", None, UnivariatePolynomial([0, 1], "c"), (0j,), (QQi(0),))


CLAIM_EXACT = "B = K0"
CLAIM_SUPERSET = "B subset of K0 | Sigma_inf | {0}"
CLAIM_NONE = "superset not certified"


@dataclass(frozen=True)
class BifurcationReport:
    smoothness: Verdict
    convenient: bool
    nondegeneracy: Verdict | None
    k0: ValueSet | None
    sigma: ValueSet | None
    superset: ValueSet | None
    claim: str

    @property
    def certified(self) -> bool:
        return self.claim in (CLAIM_EXACT, CLAIM_SUPERSET)

    @property
    def statement(self) -> str:
        """The claim with the values spelled out, e.g. ``B = K0 = {0}``."""
        if self.superset is None:
            return self.claim
        vals = ", ".join(_show(z) for z in self.superset.values)
        if self.claim == CLAIM_EXACT:
            return f"B = K0 = {{{vals}}}"
        return f"B subset of {{{vals}}}"


def _show(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real + 0.0:.12g}"
    return f"{z.real + 0.0:.12g}{z.imag:+.12g}*I"


def bifurcation_superset(f: Polynomial, gs: Sequence[Polynomial] = (), config: Config = DEFAULT_CONFIG) -> BifurcationReport:
    """Certified finite superset of the bifurcation values of ``f`` on ``S``."""
    gs = list(gs)
    smooth = verify_s_smooth(gs, config)
    conv = is_convenient(f)
    if smooth.status == FAILED:
        return BifurcationReport(smooth, conv, None, None, None, None, CLAIM_NONE)
    k0 = critical_values_k0(f, gs, config)
    nondeg = check_nondegenerate_at_infinity(f, gs, config)
    if nondeg.status == FAILED:
        return BifurcationReport(smooth, conv, nondeg, k0, None, None, CLAIM_NONE)
    if conv:
        return BifurcationReport(smooth, conv, nondeg, k0, None, k0, CLAIM_EXACT)
    sigma = sigma_infinity(f, gs, config)
    superset = merge_values(list(k0.sources) + list(sigma.sources) + [zero_source()], config.dedup_tol)
    return BifurcationReport(smooth, conv, nondeg, k0, sigma, superset, CLAIM_SUPERSET)
