"""Hypothesis-driven invariants across modules."""


from hypothesis import HealthCheck, assume, given, settings, strategies as st

from newtonbif.groebner import GREVLEX, LEX, contains_one, groebner, is_groebner, normal_form
from newtonbif.lp import LinearConstraint, lp_feasible, verify_farkas
from newtonbif.newton import enumerate_face_tuples, min_degree_and_face, verify_tuple
from newtonbif.parser import parse_polynomial
from newtonbif.poly import Polynomial
from newtonbif.scalars import QQi
from newtonbif.univariate import UnivariatePolynomial, sturm_count

from oracles import euler_residual

R2 = ("x", "y")
SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
scalars = st.builds(QQi, rationals, rationals)


@st.composite
def polys(draw, ring=R2, max_terms=5, max_deg=3, complex_coeffs=True):
    n = len(ring)
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        exp = tuple(draw(st.integers(0, max_deg)) for _ in range(n))
        terms[exp] = draw(scalars) if complex_coeffs else QQi(draw(rationals))
    return Polynomial(ring, terms)


@SETTINGS
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p - p).is_zero()
    assert p * Polynomial.constant(R2, 1) == p


@SETTINGS
@given(polys())
def test_print_parse_roundtrip(p):
    assert parse_polynomial(str(p), R2) == p


@SETTINGS
@given(polys(), st.sets(st.integers(0, 1), min_size=1))
def test_restrict_idempotent(p, axes):
    once = p.restrict(axes)
    assert once.restrict(axes) == once


@SETTINGS
@given(polys(max_terms=6, max_deg=4), st.lists(st.integers(-4, 4), min_size=2, max_size=2))
def test_euler_for_any_covector(p, q):
    assume(not p.is_zero())
    d, face = min_degree_and_face(p, None, q)
    assert euler_residual(p, face.members, q, d).is_zero()


@SETTINGS
@given(polys(max_terms=6, max_deg=4, complex_coeffs=False), st.sampled_from(["d0_negative", "d0_zero"]))
def test_enumerated_tuples_replay(p, mode):
    assume(not p.is_zero())
    for t in enumerate_face_tuples(p, [], (0, 1), (), mode):
        assert verify_tuple(t, p, [], mode)


@settings(max_examples=30, deadline=None)
@given(st.lists(polys(max_terms=3, max_deg=2, complex_coeffs=False), min_size=1, max_size=3))
def test_groebner_certificate_and_membership(gens):
    assume(any(not g.is_zero() for g in gens))
    gb = groebner(gens)
    assert is_groebner(gb)
    for g in gens:
        assert normal_form(g, gb).is_zero()
    assert contains_one(gens, GREVLEX) == contains_one(gens, LEX)


@SETTINGS
@given(
    st.lists(
        st.tuples(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.sampled_from(["==", ">=", "<="]), st.integers(-2, 2)),
        min_size=1,
        max_size=5,
    )
)
def test_lp_witness_or_certificate(rows):
    cons = [LinearConstraint(tuple(a), s, b) for a, s, b in rows]
    res = lp_feasible(cons, 3)
    if res.feasible:
        assert all(c.holds(res.witness) for c in cons)
    else:
        assert verify_farkas(cons, 3, res.farkas)


@SETTINGS
@given(st.lists(rationals, min_size=1, max_size=5), rationals, rationals)
def test_sturm_additive_on_split_intervals(roots, a, m):
    u = UnivariatePolynomial([1])
    for r in roots:
        u = u * UnivariatePolynomial([-r, 1])
    lo, hi = min(a, m), max(a, m)
    b = hi + 1
    # [lo, b] = [lo, hi] + (hi, b]
    at_hi = 1 if u.evaluate_exact(hi) == 0 else 0
    assert sturm_count(u, lo, b) == sturm_count(u, lo, hi) + sturm_count(u, hi, b) - at_hi
    assert sturm_count(u, lo, b) == len({r for r in roots if lo <= r <= b})
