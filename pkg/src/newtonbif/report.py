"""Conversion of pipeline results into plain key/value trees (JSON-ready, stable key order)."""

from __future__ import annotations

from fractions import Fraction

from .atypical import BifurcationReport, Failure, ValueSet, ValueSource, Verdict
from .family import PolyhedronFailure, StabilityReport, TupleFailure
from .newton import FaceDescriptor, FaceTuple, NewtonPolyhedron
from .poly import Polynomial
from .probe import ProbeSample

FORMAT_VERSION = 1
DIGITS = 12


def num(x: float) -> str:
    s = f"{x:.{DIGITS}g}"
    return "0" if s in ("-0", "0") else s


def cnum(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return num(z.real)
    im = num(abs(z.imag))
    sign = "-" if z.imag < 0 else "+"
    if z.real == 0:
        return f"{'-' if sign == '-' else ''}{im}*I"
    return f"{num(z.real)}{sign}{im}*I"


def frac(x: Fraction) -> str:
    return str(Fraction(x))


def face(f: FaceDescriptor, p: Polynomial | None = None) -> dict:
    out = {"members": [list(m) for m in f.members], "d": frac(f.value_d)}
    if p is not None:
        # FamilyPolynomial faces keep their t-dependent coefficients
        part = p.face_part(f.members) if hasattr(p, "face_part") else p.select_terms(f.members)
        out["face_polynomial"] = str(part)
    return out


def face_tuple(t: FaceTuple, f: Polynomial | None, gs) -> dict:
    ring = (f if f is not None else gs[0]).ring
    out = {
        "I": [i + 1 for i in t.axes],
        "I_names": [ring[i] for i in t.axes],
        "J": [j + 1 for j in t.J],
        "q": [frac(t.witness_q[i]) for i in t.axes],
    }
    if t.delta0 is not None:
        out["d0"] = frac(t.d0)
        out["delta0"] = face(t.delta0, f)
    out["deltas"] = [dict({"j": j + 1}, **face(fc, gs[j])) for j, fc in t.deltas]
    return out


def verdict(v: Verdict | None, f: Polynomial | None = None, gs=()) -> dict | None:
    if v is None:
        return None
    out = {"status": v.status}
    if v.certificates:
        out["certificates"] = list(v.certificates)
    if v.witnesses:
        out["witnesses"] = [witness(w, f, gs) for w in v.witnesses]
    return out


def witness(w, f, gs) -> dict:
    if isinstance(w, Failure):
        out = {"condition": w.condition, "reason": w.reason}
        if w.tuple is not None:
            out["tuple"] = face_tuple(w.tuple, f, gs)
        return out
    if isinstance(w, PolyhedronFailure):
        return {
            "vertex": list(w.vertex),
            "coefficient": str(w.coefficient),
            "root_interval": [frac(w.interval[0]), frac(w.interval[1])],
        }
    if isinstance(w, TupleFailure):
        out = {"condition": w.condition, "reason": w.reason, "tuple": face_tuple(w.tuple, f, gs)}
        if w.interval is not None:
            out["root_interval"] = [frac(w.interval[0]), frac(w.interval[1])]
        if w.sample is not None:
            out["sample_t"] = frac(w.sample)
        return out
    raise TypeError(f"unknown witness {w!r}")


def source(s: ValueSource, f, gs) -> dict:
    out = {"label": s.label, "eliminant": str(s.eliminant), "roots": [cnum(z) for z in s.roots]}
    exact = [None if e is None else str(e) for e in s.exact_roots]
    if any(e is not None for e in exact):
        out["exact_roots"] = exact
    if s.tuple is not None:
        out["tuple"] = face_tuple(s.tuple, f, gs)
    return out


def value_set(vs: ValueSet | None, f=None, gs=()) -> dict | None:
    if vs is None:
        return None
    return {"values": [cnum(z) for z in vs.values], "sources": [source(s, f, gs) for s in vs.sources]}


def polyhedron(p: NewtonPolyhedron, poly: Polynomial) -> dict:
    return {
        "axes": [i + 1 for i in p.axes],
        "points": [list(x) for x in p.points],
        "vertices": [list(v) for v in p.vertices],
        "faces": [dict(face(fc, poly), q=[frac(x) for x in fc.witness_q]) for fc in p.faces],
    }


def bifurcation(r: BifurcationReport, f: Polynomial, gs) -> dict:
    return {
        "smoothness": verdict(r.smoothness, f, gs),
        "convenient": r.convenient,
        "nondegeneracy": verdict(r.nondegeneracy, f, gs),
        "K0": value_set(r.k0, f, gs),
        "Sigma_inf": value_set(r.sigma, f, gs),
        "claim": r.claim,
        "statement": r.statement,
        "superset": None if r.superset is None else [cnum(z) for z in r.superset.values],
        "superset_sources": None if r.superset is None else [source(s, f, gs) for s in r.superset.sources],
    }


def stability(r: StabilityReport, family, gs) -> dict:
    return {
        "polyhedron_constant": verdict(r.polyhedron, family, gs),
        "family_nondegeneracy": verdict(r.nondegeneracy, family, gs),
        "verdict": r.verdict,
        "failed_hypotheses": list(r.failed_hypotheses),
        "samples": [
            {
                "t": frac(s.t),
                "nondegeneracy": s.nondegeneracy.status,
                "K0": [cnum(z) for z in s.k0.values],
                "Sigma_inf": None if s.sigma is None else [cnum(z) for z in s.sigma.values],
                "K0_radius": num(s.k0_radius),
                "Sigma_inf_radius": num(s.sigma_radius),
            }
            for s in r.samples
        ],
        "radius": num(r.radius),
    }


def probe(samples: list[ProbeSample]) -> list:
    return [
        {
            "point": [cnum(z) for z in s.point],
            "f_value": cnum(s.f_value),
            "nu": num(s.nu),
            "product": num(s.product),
        }
        for s in samples
    ]
