"""Acceptance criteria, one test each.

Each check records a PASS/FAIL line; the lines are printed in the pytest
terminal summary and by running this file directly.
"""

import io
import json
import random
import sys
import time
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from newtonbif.atypical import CERTIFIED, bifurcation_superset, check_nondegenerate_at_infinity, verify_s_smooth
from newtonbif.cli import EXIT_FAILED, Instance, main, run
from newtonbif.config import Config
from newtonbif.errors import ZeroRestrictionError
from newtonbif.family import STABLE, FamilyPolynomial, PolyhedronFailure, stability_report
from newtonbif.groebner import eliminate, groebner, normal_form
from newtonbif.newton import enumerate_face_tuples, nonempty_subsets
from newtonbif.parser import parse_polynomial
from newtonbif.poly import Polynomial
from newtonbif.probe import asymptotic_profile, rabier_nu
from newtonbif.univariate import UnivariatePolynomial, sturm_count, univariate_roots

from conftest import random_poly
from oracles import (
    brute_force_member,
    distinct_roots,
    euler_residual,
    nu_normal_equations,
    regular_generators,
    resultant_poly,
    sampling_oracle,
)

RESULTS = {}
R2 = ("x", "y")
CORPUS = Path(__file__).resolve().parents[1] / "corpus"


def record(number, title, ok, detail=""):
    RESULTS[number] = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}" + (f"  ({detail})" if detail else "")
    print(RESULTS[number])
    assert ok, RESULTS[number]


def P(s, ring=R2):
    return parse_polynomial(s, ring)


def real_values(vs):
    return sorted(complex(z).real for z in vs.values)


def test_criterion_01_broughton():
    start = time.perf_counter()
    r = bifurcation_superset(P("x + x^2*y"))
    elapsed = time.perf_counter() - start
    ok = (
        r.nondegeneracy.status == CERTIFIED
        and len(r.k0) == 0
        and len(r.sigma) == 0
        and r.superset.values == (0j,)
        and elapsed < 10
    )
    record(1, "Broughton x + x^2*y: non-degenerate, K0 = Sigma = {}, superset {0}", ok, f"{elapsed:.2f}s")


def test_criterion_02_hyperbola():
    start = time.perf_counter()
    g = P("x*y - 1")
    smooth = verify_s_smooth([g])
    r = bifurcation_superset(P("x"), [g])
    elapsed = time.perf_counter() - start
    ok = (
        smooth.status == CERTIFIED
        and bool(smooth.certificates)
        and len(r.k0) == 0
        and len(r.sigma) == 0
        and real_values(r.superset) == [0.0]
        and elapsed < 10
    )
    record(2, "hyperbola f = x on xy = 1: S smooth, K0 = Sigma = {}, superset {0}", ok, f"{elapsed:.2f}s")


def test_criterion_03_sigma_and_k0():
    r = bifurcation_superset(P("x^2*y^2 - x*y"))
    sig, k0 = real_values(r.sigma), real_values(r.k0)
    sig_elim = r.sigma.sources[0].eliminant.monic()
    k0_elim = r.k0.sources[0].eliminant.monic()
    ok = (
        len(sig) == 1 and abs(sig[0] + 0.25) <= 1e-9
        and sig_elim == UnivariatePolynomial([Fraction(1, 4), 1])  # 4c + 1, made monic
        and len(k0) == 2 and abs(k0[0] + 0.25) <= 1e-9 and abs(k0[1]) <= 1e-9
        and k0_elim == UnivariatePolynomial([0, Fraction(1, 4), 1])  # c(4c + 1), made monic
        and len(r.superset) == 2
        and all(r.superset.contains(v) for v in (0, -0.25))
    )
    record(3, "x^2*y^2 - x*y: Sigma = {-1/4}, K0 = {0, -1/4}, eliminants 4c+1 and c(4c+1)", ok, f"Sigma={sig} K0={k0}")


def test_criterion_04_degenerate(tmp_path):
    v = check_nondegenerate_at_infinity(P("(x + y)^2"))
    w = v.witnesses[0].tuple if v.witnesses else None
    inst = tmp_path / "sq.json"
    inst.write_text(json.dumps({"variables": ["x", "y"], "f": "(x + y)^2"}))
    with redirect_stdout(io.StringIO()):
        code = main(["nondeg", "--instance", str(inst)])
    ok = (
        v.status == "failed"
        and w is not None
        and w.axes == (0, 1)
        and w.delta0.members == ((0, 2), (1, 1), (2, 0))
        and code == EXIT_FAILED
    )
    record(4, "(x + y)^2: degenerate, witness I = {1,2} on the full edge, exit code 2", ok, f"exit={code}")


def test_criterion_05_convenient():
    r = bifurcation_superset(P("x^2 + y^2"))
    ok = r.convenient and r.statement == "B = K0 = {0}"
    record(5, "x^2 + y^2: convenient, exact claim emitted", ok, r.statement)


def _euler_triples(rng, count):
    out = []
    while len(out) < count:
        ring = ("x", "y") if rng.random() < 0.6 else ("x", "y", "z")
        f = random_poly(rng, ring, nterms=rng.randint(2, 6), max_deg=4, complex_coeffs=rng.random() < 0.3)
        axes = rng.choice(list(nonempty_subsets(range(len(ring)))))
        mode = rng.choice(["d0_negative", "d0_zero"])
        try:
            tuples = enumerate_face_tuples(f, [], axes, (), mode)
        except ZeroRestrictionError:
            continue
        if tuples:
            out.append((f, rng.choice(tuples)))
    return out


def test_criterion_06_euler():
    rng = random.Random(606)
    triples = _euler_triples(rng, 200)
    failures = sum(
        1 for f, t in triples if not euler_residual(f, t.delta0.members, t.witness_q, t.d0).is_zero()
    )
    record(6, "Euler relation on 200 random realized (f, I, q)", failures == 0, f"{failures} failures")


def test_criterion_07_engine_oracles():
    rng = random.Random(707)
    member_bad = 0
    for trial in range(50):
        ring = R2 if trial % 2 == 0 else ("x", "y", "z")
        gens = regular_generators(rng, ring)
        p = sum((random_poly(rng, ring, nterms=2, max_deg=1) * g for g in gens), Polynomial.zero(ring))
        if trial % 3 == 0:
            p = p + random_poly(rng, ring, nterms=1, max_deg=1)
        member_bad += normal_form(p, groebner(gens)).is_zero() != brute_force_member(p, gens)

    res_bad, done = 0, 0
    while done < 20:
        p = P(f"x^2 + ({rng.randint(-3, 3)})*x*y + ({rng.randint(-3, 3)})*y^2 + ({rng.randint(-3, 3)})*y + ({rng.randint(-3, 3)})")
        q = P(f"x^2 + ({rng.randint(-3, 3)})*x + ({rng.randint(-3, 3)})*y^2 + ({rng.randint(-3, 3)})*y + ({rng.randint(1, 3)})")
        res = resultant_poly(p, q)
        if len(res) < 2:
            continue
        elim = eliminate([p, q], [1])
        ours = univariate_roots(UnivariatePolynomial.from_polynomial(elim[0], 1)) if len(elim) == 1 else []
        ref = distinct_roots(res)
        agree = len(ours) == len(ref) and all(min(abs(z - w) for w in ours) <= 1e-9 * max(1, abs(z)) for z in ref)
        res_bad += not agree
        done += 1

    sturm_bad = 0
    for _ in range(100):
        distinct = sorted({Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(rng.randint(1, 5))})
        u = UnivariatePolynomial([1])
        for r in distinct:
            for _ in range(rng.randint(1, 3)):
                u = u * UnivariatePolynomial([-r, 1])
        if rng.random() < 0.5:
            u = u * UnivariatePolynomial([rng.randint(1, 5), 0, 1])
        a = Fraction(rng.randint(-16, 0), rng.randint(1, 4))
        b = a + Fraction(rng.randint(0, 24), rng.randint(1, 4))
        sturm_bad += sturm_count(u, a, b) != sampling_oracle(distinct, a, b)

    ok = member_bad == 0 and res_bad == 0 and sturm_bad == 0
    record(7, "membership 50/50, resultant roots 20/20 at 1e-9, Sturm 100/100", ok,
           f"mismatches: membership={member_bad} resultant={res_bad} sturm={sturm_bad}")


def test_criterion_08_family():
    stable = stability_report(FamilyPolynomial.parse("x + (1 + t)*x^2*y", R2, "t"))
    bad = stability_report(FamilyPolynomial.parse("x + (1 - 2*t)*x^2*y", R2, "t"))
    w = bad.polyhedron.witnesses[0] if bad.polyhedron.witnesses else None
    ok = (
        stable.verdict == STABLE
        and not bad.stable
        and bad.failed_hypotheses == ("i",)
        and isinstance(w, PolyhedronFailure)
        and w.interval[0] <= Fraction(1, 2) <= w.interval[1]
        and [s.t for s in stable.samples] == [0, Fraction(1, 2), 1]
        and [s.t for s in bad.samples] == [0, Fraction(1, 2), 1]
    )
    detail = f"interval={[str(x) for x in w.interval] if w else None} radius={stable.radius}"
    record(8, "family stability: 1+t certified, 1-2t rejected at (i) around 1/2", ok, detail)


def test_criterion_09_probe():
    rng = random.Random(909)
    worst = 0.0
    for _ in range(100):
        n = rng.choice([2, 3])
        ring = ("x", "y", "z")[:n]
        f = random_poly(rng, ring, nterms=4, max_deg=3, complex_coeffs=True)
        gs = [random_poly(rng, ring, nterms=3, max_deg=2, complex_coeffs=True) for _ in range(rng.randint(0, n - 1))]
        z = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(n)]
        ref = nu_normal_equations(f, gs, z)
        worst = max(worst, abs(rabier_nu(f, gs, z) - ref) / max(1.0, ref))
    f = P("x + x^2*y")
    ys = [10.0, 100.0, 1000.0]
    prof = asymptotic_profile(f, [], [(-1 / (2 * y), y) for y in ys])
    last = prof[-1]
    fvals = [abs(s.f_value) for s in prof]
    ok = (
        worst <= 1e-10
        and abs(last.product - 1 / (4 * 1000.0)) <= 0.01 / (4 * 1000.0)
        and fvals[0] > fvals[1] > fvals[2]
    )
    record(9, "Rabier nu vs normal equations (100), ||x|| nu ~ 1/(4y) at y = 1000", ok,
           f"worst={worst:.1e} product={last.product:.6e}")


def _corpus_reports(jobs):
    plan = json.loads((CORPUS / "plan.json").read_text())
    out = []
    for name, subs in plan.items():
        inst = Instance.load(CORPUS / f"{name}.json")
        for sub in subs:
            doc, code = run(sub, inst, Config(jobs=jobs))
            out.append(json.dumps(doc, indent=2) + f"\nexit={code}\n")
    return out


def test_criterion_10_determinism():
    runs = [_corpus_reports(1), _corpus_reports(4), _corpus_reports(1), _corpus_reports(4)]
    ok = all(r == runs[0] for r in runs)
    record(10, "corpus reports byte-identical across repeated 1- and 4-thread runs", ok, f"{len(runs[0])} reports")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
