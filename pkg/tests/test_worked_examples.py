"""Small worked examples, each checked against a value derived by hand."""

from fractions import Fraction

import pytest

from newtonbif.atypical import (
    CERTIFIED,
    FAILED,
    VACUOUS,
    bifurcation_superset,
    check_nondegenerate_at_infinity,
    check_tuple_smooth_on_torus,
    critical_values_k0,
    sigma_infinity,
    verify_s_smooth,
)
from newtonbif.family import FamilyPolynomial, family_nondegeneracy_check, constant_polyhedron_check, stability_report
from newtonbif.groebner import LEX, contains_one, eliminate, groebner, normal_form, saturate
from newtonbif.lp import eq, lp_feasible, negative, positive
from newtonbif.newton import enumerate_face_tuples, newton_polyhedron, verify_tuple
from newtonbif.parser import parse_polynomial
from newtonbif.probe import asymptotic_profile
from newtonbif.univariate import UnivariatePolynomial as U, univariate_roots

R2 = ("x", "y")


def P(s, ring=R2):
    return parse_polynomial(s, ring)


def fam(s):
    return FamilyPolynomial.parse(s, R2, "t")


# -- geometry ---------------------------------------------------------------------

@pytest.mark.parametrize(
    "text, axes, vertices",
    [
        ("x + x^2*y", (0, 1), ((1, 0), (2, 1))),
        ("x^2 + y^2", (0, 1), ((0, 2), (2, 0))),
        ("x + x^2*y", (0,), ((1, 0),)),
    ],
)
def test_vertices(text, axes, vertices):
    assert newton_polyhedron(P(text), axes).vertices == vertices


def test_lp_cases():
    # on supp{(1,0),(2,1)}: q1 = 0 with 2 q1 + q2 >= 1 and some q_i < 0 is impossible
    base = [eq((1, 0)), positive((2, 1))]
    assert not any(lp_feasible(base + [negative(u)], 2).feasible for u in ((1, 0), (0, 1)))
    res = lp_feasible([eq((2, 1)), positive((-1, -1)), negative((0, 1))], 2)
    assert res.feasible and res.witness == (1, -2)
    assert lp_feasible([negative((1, 0, 0))], 3).witness == (-1, 0, 0)


def test_face_tuple_counts():
    f = P("x + x^2*y")
    zero = enumerate_face_tuples(f, [], (0, 1), (), "d0_zero")
    assert [(t.delta0.members, t.witness_q) for t in zero] == [(((2, 1),), (1, -2))]
    neg = enumerate_face_tuples(f, [], (0, 1), (), "d0_negative")
    assert sorted(t.delta0.members for t in neg) == [((1, 0),), ((1, 0), (2, 1)), ((2, 1),)]
    for t in neg:
        assert verify_tuple(t, f, [], "d0_negative")
    g = P("x^2*y^2 - x*y")
    (t,) = enumerate_face_tuples(g, [], (0, 1), (), "d0_zero")
    assert t.delta0.members == ((1, 1), (2, 2))
    assert t.witness_q[0] + t.witness_q[1] == 0 and min(t.witness_q) < 0


# -- ideals -------------------------------------------------------------------------

def test_ideal_cases():
    assert set(groebner([P("x - 1"), P("y - x")], LEX).generators) == {P("x - 1"), P("y - 1")}
    assert groebner([P("x"), P("x - 1")]).is_unit()
    gb = groebner([P("x^2 - y"), P("y^2 - 1")], LEX)
    assert normal_form(P("x^4 - 1"), gb).is_zero()
    assert normal_form(P("x - 1"), groebner([P("x - 1")])).is_zero()
    assert normal_form(P("1"), groebner([P("x")])) == P("1")
    assert normal_form(P("x^2*y"), groebner([P("x*y - 1")])) == P("x")
    assert contains_one([P("x*y - 1"), P("x"), P("y")])
    assert not contains_one([P("x + y")])
    assert not contains_one([], ring=R2)


def test_saturation_and_elimination_cases():
    assert saturate([P("x*y")], P("x")) == [P("y")]
    assert saturate([P("x^2")], P("x")) == [P("1")]
    R3 = ("x", "y", "z")
    assert saturate([P("x + y", R3)], P("z", R3)) == [P("x + y", R3)]
    Rc = ("x", "c")
    assert eliminate([P("c - x^2", Rc), P("x - 2", Rc)], [1]) == [P("c - 4", Rc)]
    assert eliminate([P("x*y - 1")], [0]) == []
    Rxyc = ("x", "y", "c")
    gens = [P(s, Rxyc) for s in ("c - (x^2*y^2 - x*y)", "y*(2*x*y - 1)", "x*(2*x*y - 1)")]
    (e,) = eliminate(gens, [2])
    assert U.from_polynomial(e, 2).monic() == U([0, Fraction(1, 4), 1])


def test_root_cases():
    assert univariate_roots(U([0, 1, 4])) == [-0.25, 0]
    assert univariate_roots(U([1, 0, 1])) == [-1j, 1j]
    assert univariate_roots(U([0, 0, 1])) == [0]


# -- smoothness and non-degeneracy ---------------------------------------------------

def test_smoothness_cases():
    assert verify_s_smooth([P("x*y - 1")]).status == CERTIFIED
    assert verify_s_smooth([P("x^2")]).status == FAILED
    assert verify_s_smooth([]).ok
    assert check_tuple_smooth_on_torus([P("x^2*y")], (0, 1)).status == VACUOUS
    assert check_tuple_smooth_on_torus([P("(x + y)^2")], (0, 1)).status == FAILED
    assert check_tuple_smooth_on_torus([P("x + x^2*y")], (0, 1)).status == CERTIFIED


def test_nondegeneracy_cases():
    assert check_nondegenerate_at_infinity(P("x + x^2*y")).status == CERTIFIED
    assert check_nondegenerate_at_infinity(P("x^2 + y^2")).status == CERTIFIED
    v = check_nondegenerate_at_infinity(P("(x + y)^2"))
    t = v.witnesses[0].tuple
    assert v.status == FAILED
    assert t.axes == (0, 1) and t.witness_q == (-1, -1)
    assert t.delta0.members == ((0, 2), (1, 1), (2, 0))


def test_value_set_cases():
    assert [z.real for z in sigma_infinity(P("x^2*y^2 - x*y")).values] == [-0.25]
    assert sigma_infinity(P("x + x^2*y")).values == ()
    assert sigma_infinity(P("x"), [P("x*y - 1")]).values == ()
    assert [z.real for z in critical_values_k0(P("x^2*y^2 - x*y")).values] == [-0.25, 0]
    assert critical_values_k0(P("x"), [P("x*y - 1")]).values == ()
    assert critical_values_k0(P("y"), [P("y - x^2")]).values == (0j,)


def test_superset_cases():
    assert bifurcation_superset(P("x + x^2*y")).superset.values == (0j,)
    assert bifurcation_superset(P("x"), [P("x*y - 1")]).superset.values == (0j,)
    r = bifurcation_superset(P("x^2 + y^2"))
    assert r.convenient and r.statement == "B = K0 = {0}"


# -- families -------------------------------------------------------------------------

def test_family_cases():
    assert constant_polyhedron_check(fam("x + (1 + t)*x^2*y")).status == CERTIFIED
    v = constant_polyhedron_check(fam("x + (1 - 2*t)*x^2*y"))
    assert v.status == FAILED and v.witnesses[0].vertex == (2, 1)
    lo, hi = v.witnesses[0].interval
    assert lo <= Fraction(1, 2) <= hi
    assert constant_polyhedron_check(fam("x")).status == CERTIFIED
    assert family_nondegeneracy_check(fam("x + (1 + t)*x^2*y")).status == CERTIFIED
    bad = family_nondegeneracy_check(fam("(x + y)^2 + t*0"))
    assert bad.status == FAILED and bad.witnesses[0].sample == 0
    assert family_nondegeneracy_check(fam("x^2*y^2 - x*y")).status == CERTIFIED


def test_stability_cases():
    r = stability_report(fam("x + (1 + t)*x^2*y"))
    assert r.stable and r.radius == 0
    assert all(s.k0.values == () and s.sigma.values == () for s in r.samples)
    assert not stability_report(fam("x + (1 - 2*t)*x^2*y")).stable
    r = stability_report(fam("x^2*y^2 - x*y"))
    assert r.stable and r.radius == pytest.approx(0.25)


# -- probe ----------------------------------------------------------------------------

def test_probe_cases():
    prof = asymptotic_profile(P("x + x^2*y"), [], [(-1 / (2 * y), y) for y in (10.0, 100.0, 1000.0)])
    assert [s.product for s in prof] == pytest.approx([2.5e-2, 2.5e-3, 2.5e-4], rel=0.01)
    prof = asymptotic_profile(P("x"), [P("x*y - 1")], [(1 / y, y) for y in (10.0, 100.0)])
    assert abs(prof[1].f_value) < abs(prof[0].f_value)
    assert asymptotic_profile(P("x"), [], []) == []
