"""Floating-point Rabier function and asymptotic profiles.

These are diagnostics only: a profile along one curve can suggest, never
prove, that a value is an asymptotic critical value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConstraintViolationError
from .poly import Polynomial

CONSTRAINT_TOL = 1e-8


@dataclass(frozen=True)
class ProbeSample:
    point: tuple
    f_value: complex
    nu: float
    product: float


def _gradient(p: Polynomial, z: Sequence[complex]) -> np.ndarray:
    return np.array([p.diff(i).evaluate(z) for i in range(p.nvars)], dtype=complex)


def rabier_nu(f: Polynomial, gs: Sequence[Polynomial], z: Sequence[complex]) -> float:
    """``min_lambda || grad f(z) + sum_j lambda_j grad g_j(z) ||`` over complex ``lambda``.

    Gradients are conjugated; the minimum is the distance from ``grad f`` to the
    span of the ``grad g_j``, computed from an orthonormal basis of that span
    (SVD, so rank-deficient constraint gradients are fine).
    """
    z = [complex(v) for v in z]
    if len(z) != f.nvars:
        raise ValueError(f"point has {len(z)} coordinates, ring has {f.nvars}")
    v = np.conj(_gradient(f, z))
    if not gs:
        return float(np.linalg.norm(v))
    G = np.column_stack([np.conj(_gradient(g, z)) for g in gs])
    U, s, _ = np.linalg.svd(G, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return float(np.linalg.norm(v))
    rank = int(np.sum(s > s[0] * max(G.shape) * np.finfo(float).eps))
    Q = U[:, :rank]
    residual = v - Q @ (Q.conj().T @ v)
    return float(np.linalg.norm(residual))


def asymptotic_profile(
    f: Polynomial, gs: Sequence[Polynomial], curve: Sequence[Sequence[complex]], tol: float = CONSTRAINT_TOL
) -> list[ProbeSample]:
    """``f``, ``nu`` and ``||x|| nu`` at each point of ``curve``; points must satisfy ``|g_j| <= tol``."""
    out = []
    for k, point in enumerate(curve):
        z = tuple(complex(v) for v in point)
        for j, g in enumerate(gs):
            r = abs(g.evaluate(z))
            if r > tol:
                raise ConstraintViolationError(f"curve point {k} violates constraint {j + 1}: |g| = {r:.3e}")
        nu = rabier_nu(f, gs, z)
        norm = float(np.linalg.norm(np.array(z)))
        out.append(ProbeSample(z, f.evaluate(z), nu, norm * nu))
    return out
