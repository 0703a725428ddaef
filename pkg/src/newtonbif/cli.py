"""Command-line front end.

Usage::

    newtonbif bifurcation --instance inst.json [--budget-pairs N] [--tolerance T] [--jobs N]
    newtonbif stability --instance fam.json --samples 0,1/2,1
    newtonbif probe --instance inst.json --curve curve.json

Instance files are JSON objects with ``variables``, ``f``, optional
``constraints``, ``family_parameter``, ``curve`` and ``options``.  Reports are
JSON documents starting with ``"format": 1``.

Exit codes: 0 complete/certified, 1 input error, 2 failed verdict, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__, report
from .atypical import FAILED, bifurcation_superset, check_nondegenerate_at_infinity, verify_s_smooth
from .config import Config
from .errors import (
    BudgetExceededError,
    NonConvergenceError,
    NonFiniteValueSetError,
    ParseError,
)
from .family import FamilyPolynomial, stability_report
from .groebner import DEFAULT_MAX_PAIRS
from .newton import is_convenient, newton_polyhedron
from .parser import parse_polynomial
from .probe import asymptotic_profile

SUBCOMMANDS = ("polyhedron", "nondeg", "bifurcation", "stability", "probe")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAILED = 2
EXIT_BUDGET = 3


class InstanceError(ValueError):
    pass


@dataclass
class Instance:
    variables: list
    f: str
    constraints: list = field(default_factory=list)
    family_parameter: str | None = None
    curve: list | None = None
    options: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict) -> "Instance":
        if not isinstance(data, dict):
            raise InstanceError("instance must be a JSON object")
        missing = [k for k in ("variables", "f") if k not in data]
        if missing:
            raise InstanceError(f"instance is missing {', '.join(missing)}")
        unknown = set(data) - {"variables", "f", "constraints", "family_parameter", "curve", "options"}
        if unknown:
            raise InstanceError(f"unknown instance fields: {', '.join(sorted(unknown))}")
        inst = cls(
            variables=list(data["variables"]),
            f=str(data["f"]),
            constraints=[str(c) for c in data.get("constraints", [])],
            family_parameter=data.get("family_parameter"),
            curve=data.get("curve"),
            options=dict(data.get("options", {})),
        )
        if len(set(inst.variables)) != len(inst.variables):
            raise InstanceError("variable names must be distinct")
        if inst.family_parameter is not None and inst.family_parameter in inst.variables:
            raise InstanceError("family parameter must differ from the variables")
        return inst

    @classmethod
    def load(cls, path: str | Path) -> "Instance":
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise InstanceError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from exc
        return cls.from_dict(data)

    def echo(self) -> dict:
        out = {"variables": self.variables, "f": self.f, "constraints": self.constraints}
        if self.family_parameter is not None:
            out["family_parameter"] = self.family_parameter
        return out


def _parse_field(text: str, ring: Sequence[str], what: str):
    try:
        return parse_polynomial(text, ring)
    except ParseError as exc:
        raise InstanceError(f"{what}: {exc.message} at byte {exc.offset} in {text!r}") from exc


def _parse_complex(v) -> complex:
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, str):
        return complex(v.replace(" ", "").replace("I", "j").replace("i", "j"))
    raise InstanceError(f"cannot read coordinate {v!r}")


def parse_samples(text: str) -> list[Fraction]:
    try:
        return [Fraction(s.strip()) for s in text.split(",") if s.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceError(f"bad --samples value {text!r}") from exc


def run(subcommand: str, inst: Instance, config: Config, samples=None, curve=None) -> tuple[dict, int]:
    """Execute one subcommand; returns ``(report tree, exit code)``."""
    if subcommand not in SUBCOMMANDS:
        raise InstanceError(f"unknown subcommand {subcommand!r}")
    ring = tuple(inst.variables)
    gs = [_parse_field(c, ring, f"constraint {k + 1}") for k, c in enumerate(inst.constraints)]
    doc: dict = {
        "format": report.FORMAT_VERSION,
        "version": __version__,
        "subcommand": subcommand,
        "instance": inst.echo(),
        "config": {"budget_pairs": config.max_pairs, "tolerance": report.num(config.root_tol)},
    }
    code = EXIT_OK
    try:
        if subcommand == "stability":
            if not inst.family_parameter:
                raise InstanceError("stability needs family_parameter")
            try:
                family = FamilyPolynomial.parse(inst.f, ring, inst.family_parameter)
            except ParseError as exc:
                raise InstanceError(f"f: {exc.message} at byte {exc.offset} in {inst.f!r}") from exc
            samples = samples if samples is not None else [Fraction(0), Fraction(1, 2), Fraction(1)]
            r = stability_report(family, gs, samples, config)
            doc["stability"] = report.stability(r, family, gs)
            if not r.stable:
                code = EXIT_FAILED
            return doc, code

        if inst.family_parameter:
            raise InstanceError(f"family instance (parameter {inst.family_parameter!r}) needs the stability subcommand")
        f = _parse_field(inst.f, ring, "f")
        if subcommand == "polyhedron":
            doc["convenient"] = is_convenient(f)
            doc["polyhedron"] = report.polyhedron(newton_polyhedron(f), f)
            doc["constraint_polyhedra"] = [report.polyhedron(newton_polyhedron(g), g) for g in gs]
        elif subcommand == "nondeg":
            smooth = verify_s_smooth(gs, config)
            nd = check_nondegenerate_at_infinity(f, gs, config)
            doc["smoothness"] = report.verdict(smooth, f, gs)
            doc["convenient"] = is_convenient(f)
            doc["nondegeneracy"] = report.verdict(nd, f, gs)
            if smooth.status == FAILED or nd.status == FAILED:
                code = EXIT_FAILED
        elif subcommand == "bifurcation":
            r = bifurcation_superset(f, gs, config)
            doc["bifurcation"] = report.bifurcation(r, f, gs)
            if not r.certified:
                code = EXIT_FAILED
        elif subcommand == "probe":
            points = curve if curve is not None else inst.curve
            if points is None:
                raise InstanceError("probe needs curve points (--curve or instance 'curve')")
            pts = [[_parse_complex(v) for v in p] for p in points]
            for p in pts:
                if len(p) != len(ring):
                    raise InstanceError(f"curve point {p} has wrong dimension")
            doc["probe"] = report.probe(asymptotic_profile(f, gs, pts))
    except BudgetExceededError as exc:
        doc["error"] = {"kind": "budget", "message": exc.message, "context": exc.context}
        code = EXIT_BUDGET
    except NonFiniteValueSetError as exc:
        doc["error"] = {"kind": "non-finite", "message": str(exc)}
        code = EXIT_FAILED
    except NonConvergenceError as exc:
        doc["error"] = {"kind": "non-convergence", "message": exc.message, "residual": report.num(exc.residual)}
        code = EXIT_FAILED
    return doc, code


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="newtonbif", description=__doc__.split("\n\n")[0])
    ap.add_argument("subcommand", choices=SUBCOMMANDS)
    ap.add_argument("--instance", required=True, help="path to the JSON instance file")
    ap.add_argument("--budget-pairs", type=int, default=None, help="Groebner pair budget")
    ap.add_argument("--tolerance", type=float, default=None, help="numeric root tolerance")
    ap.add_argument("--samples", default=None, help="comma-separated t values, e.g. 0,1/2,1")
    ap.add_argument("--curve", default=None, help="JSON file with a list of probe points")
    ap.add_argument("--jobs", type=int, default=1, help="worker threads (output is identical for any value)")
    ap.add_argument("--output", default=None, help="write the report here instead of stdout")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inst = Instance.load(args.instance)
        opts = inst.options
        config = Config(
            max_pairs=args.budget_pairs or int(opts.get("budget_pairs", DEFAULT_MAX_PAIRS)),
            root_tol=args.tolerance or float(opts.get("tolerance", 1e-12)),
            jobs=max(1, args.jobs),
        )
        samples = parse_samples(args.samples) if args.samples else None
        curve = json.loads(Path(args.curve).read_text()) if args.curve else None
        doc, code = run(args.subcommand, inst, config, samples, curve)
    except (ValueError, OSError) as exc:
        # InstanceError and the package's input errors (parse, size, constraint, family) are ValueErrors
        print(f"newtonbif: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = dumps(doc)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
