"""Buchberger's algorithm over Q(i) with elimination and saturation helpers."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceededError
from .poly import Polynomial
from .scalars import ONE, QQi

DEFAULT_MAX_PAIRS = 200_000


def _grevlex(exp: tuple) -> tuple:
    return (sum(exp), tuple(-e for e in reversed(exp)))


@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is ``'lex'``, ``'grevlex'`` or ``'block'``.

    A block order compares the first ``split`` variables by grevlex and breaks
    ties with grevlex on the rest; it eliminates the first block.
    """

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exp: tuple) -> tuple:
        if self.kind == "lex":
            return exp
        if self.kind == "grevlex":
            return _grevlex(exp)
        s = self.split
        return (_grevlex(exp[:s]), _grevlex(exp[s:]))


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(split: int) -> MonomialOrder:
    return MonomialOrder("block", split)


# -- dict-level helpers --------------------------------------------------------

def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _lead(p: dict, key) -> tuple:
    return max(p, key=key)


def _monic(p: dict, key) -> dict:
    lm = _lead(p, key)
    inv = p[lm].inverse()
    if inv == ONE:
        return p
    return {e: c * inv for e, c in p.items()}


def _sub_scaled(f: dict, c: QQi, shift: tuple, g: dict) -> None:
    """In place: f -= c * x^shift * g."""
    for e, v in g.items():
        ne = tuple(a + b for a, b in zip(e, shift))
        w = f.get(ne)
        if w is None:
            f[ne] = -(c * v)
        else:
            w = w - c * v
            if w:
                f[ne] = w
            else:
                del f[ne]


def _reduce(f: dict, basis: list, key, full: bool = True) -> dict:
    """Remainder of ``f`` modulo monic ``basis`` entries ``(lm, poly)``."""
    f = dict(f)
    rem: dict = {}
    while f:
        lm = _lead(f, key)
        c = f[lm]
        for glm, g in basis:
            if _divides(glm, lm):
                shift = tuple(a - b for a, b in zip(lm, glm))
                _sub_scaled(f, c, shift, g)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[lm] = c
            del f[lm]
    return rem


def _spoly(f: dict, flm: tuple, g: dict, glm: tuple) -> dict:
    lcm = _lcm(flm, glm)
    sf = tuple(a - b for a, b in zip(lcm, flm))
    sg = tuple(a - b for a, b in zip(lcm, glm))
    out: dict = {}
    for e, v in f.items():
        out[tuple(a + b for a, b in zip(e, sf))] = v
    _sub_scaled(out, ONE, sg, g)
    return out


# -- public API ----------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: MonomialOrder
    ring: tuple
    reduced: bool = True

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def leading_monomials(self) -> list:
        return [_lead(g.terms, self.order.key) for g in self.generators]

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def groebner(
    gens: Iterable[Polynomial],
    order: MonomialOrder = GREVLEX,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    ring: Sequence[str] | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are processed by the normal strategy (smallest lcm first, ties by
    index); the product and chain criteria discard useless pairs.  Raises
    :class:`BudgetExceededError` once more than ``max_pairs`` pairs are created.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("ring must be given for an empty generator list")
        ring = gens[0].ring
    ring = tuple(ring)
    for g in gens:
        if g.ring != ring:
            raise ValueError(f"generator ring {g.ring} differs from {ring}")
    key = order.key
    zero_exp = (0,) * len(ring)
    unit = GroebnerBasis((Polynomial.constant(ring, 1),), order, ring)

    basis: list = []  # (lm, monic dict)
    pending: set = set()
    heap: list = []
    created = 0

    def add(h: dict) -> bool:
        nonlocal created
        h = _monic(h, key)
        lm = _lead(h, key)
        if lm == zero_exp:
            return True
        idx = len(basis)
        basis.append((lm, h))
        for i in range(idx):
            created += 1
            if created > max_pairs:
                raise BudgetExceededError(f"Groebner pair budget of {max_pairs} exceeded")
            lcm = _lcm(basis[i][0], lm)
            pending.add((i, idx))
            heapq.heappush(heap, (key(lcm), i, idx))
        return False

    for g in gens:
        if g.is_zero():
            continue
        h = _reduce(g.terms, basis, key)
        if h and add(h):
            return unit

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        ilm, f = basis[i]
        jlm, g = basis[j]
        lcm = _lcm(ilm, jlm)
        if all(not (a and b) for a, b in zip(ilm, jlm)):
            continue  # coprime leading monomials
        chain = False
        for k, (klm, _) in enumerate(basis):
            if k in (i, j) or not _divides(klm, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            continue
        h = _reduce(_spoly(f, ilm, g, jlm), basis, key)
        if h and add(h):
            return unit

    # minimal basis: drop elements whose leading monomial is divisible by another's
    keep = []
    for idx, (lm, h) in enumerate(basis):
        if any(_divides(olm, lm) and (olm != lm or o < idx) for o, (olm, _) in enumerate(basis) if o != idx):
            continue
        keep.append((lm, h))
    reduced = []
    for idx, (lm, h) in enumerate(keep):
        others = [b for o, b in enumerate(keep) if o != idx]
        tail = {e: c for e, c in h.items() if e != lm}
        r = _reduce(tail, others, key)
        r[lm] = h[lm]
        reduced.append((lm, r))
    reduced.sort(key=lambda t: key(t[0]), reverse=True)
    return GroebnerBasis(tuple(Polynomial._raw(ring, h) for _, h in reduced), order, ring)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``p`` modulo the reduced basis ``gb``."""
    if p.ring != gb.ring:
        raise ValueError("ring mismatch")
    key = gb.order.key
    basis = [(_lead(g.terms, key), g.terms) for g in gb.generators]
    return Polynomial._raw(gb.ring, _reduce(p.terms, basis, key))


def is_groebner(gb: GroebnerBasis) -> bool:
    """Replay certificate: every S-polynomial of the basis reduces to zero."""
    key = gb.order.key
    basis = [(_lead(g.terms, key), g.terms) for g in gb.generators]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = _spoly(basis[i][1], basis[i][0], basis[j][1], basis[j][0])
            if s and _reduce(s, basis, key):
                return False
    return True


def contains_one(
    gens: Iterable[Polynomial],
    order: MonomialOrder = GREVLEX,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    ring: Sequence[str] | None = None,
) -> bool:
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    if any(g.is_constant() for g in gens):
        return True
    return groebner(gens, order, max_pairs, ring).is_unit()


def _fresh_name(ring: Sequence[str], base: str) -> str:
    name = base
    k = 0
    while name in ring:
        k += 1
        name = f"{base}{k}"
    return name


def eliminate_with_saturation(
    gens: Sequence[Polynomial],
    keep: Sequence[int],
    h: Polynomial | None = None,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> list[Polynomial]:
    """Generators of ``(gens : h^inf)`` intersected with the subring in the ``keep`` variables.

    One Groebner computation: the auxiliary inverse ``u`` of ``h`` and all
    non-kept variables form the eliminated block.  Results live in the
    original ring.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    keep = sorted(set(keep))
    drop = [i for i in range(len(ring)) if i not in keep]
    new_names = []
    if h is not None:
        if h.is_zero():
            raise ValueError("saturation by the zero polynomial")
        new_names.append(_fresh_name(ring, "_u"))
    new_ring = tuple(new_names + [ring[i] for i in drop] + [ring[i] for i in keep])
    offset = len(new_names)
    mapping = {old: offset + pos for pos, old in enumerate(drop + keep)}
    moved = [g.embed(new_ring, mapping) for g in gens]
    if h is not None:
        u = Polynomial.variable(new_ring, 0)
        moved.append(Polynomial.constant(new_ring, 1) - u * h.embed(new_ring, mapping))
    split = offset + len(drop)
    gb = groebner(moved, block_order(split), max_pairs)
    back = {new: old for old, new in mapping.items()}
    out = []
    for g in gb.generators:
        if all(not any(e[:split]) for e in g.terms):
            out.append(g.embed(ring, back))
    return out


def eliminate(gens: Sequence[Polynomial], keep: Sequence[int], max_pairs: int = DEFAULT_MAX_PAIRS) -> list[Polynomial]:
    """Generators of the elimination ideal in the variables indexed by ``keep``."""
    return eliminate_with_saturation(gens, keep, None, max_pairs)


def saturate(gens: Sequence[Polynomial], h: Polynomial, max_pairs: int = DEFAULT_MAX_PAIRS) -> list[Polynomial]:
    """Generators of ``(gens : h^inf)`` by the Rabinowitsch construction."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    return eliminate_with_saturation(gens, range(gens[0].nvars), h, max_pairs)


def saturation_contains_one(
    gens: Sequence[Polynomial], h: Polynomial, max_pairs: int = DEFAULT_MAX_PAIRS
) -> bool:
    """True iff ``V(gens) \\ V(h)`` is empty."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    if any(g.is_constant() for g in gens):
        return True
    ring = gens[0].ring
    name = _fresh_name(ring, "_u")
    new_ring = (name,) + ring
    mapping = {i: i + 1 for i in range(len(ring))}
    moved = [g.embed(new_ring, mapping) for g in gens]
    u = Polynomial.variable(new_ring, 0)
    moved.append(Polynomial.constant(new_ring, 1) - u * h.embed(new_ring, mapping))
    return contains_one(moved, GREVLEX, max_pairs)
