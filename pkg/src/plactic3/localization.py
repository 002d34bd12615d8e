"""Central localizations M(z), N1(z), N2(z) and the splitting M(z) -> M' x Z.

An element of the localization is ``v z^m`` with ``v`` z-free and ``m`` any
integer; cancellation by z makes the pair ``(v, m)`` unique.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .presentations import Monoid, catalog
from .reports import Report, timed
from .words import EMPTY, Word, WordError, format_word, occ, parse_word

A = 0


class LocalizationError(ValueError):
    pass


@lru_cache(maxsize=1 << 18)
def _z_valuation(base: Monoid, w: Word) -> tuple:
    return base.z_valuation(w)


@dataclass(frozen=True)
class LocalizedElement:
    base: Monoid
    reduced: Word
    exp: int

    def __str__(self) -> str:
        return f"{format_word(self.reduced)}·z^{self.exp}"

    def __mul__(self, other: "LocalizedElement") -> "LocalizedElement":
        return loc_mul(self, other)


def localize(base: Monoid, w: Sequence[int], exp: int = 0) -> LocalizedElement:
    """The element ``w z^exp``; any z factors of ``w`` move into the exponent."""
    if base.strategy == "strip-z-over-base":
        raise LocalizationError(f"{base.name}: z is already trivial there")
    reduced, k = _z_valuation(base, tuple(w))
    return LocalizedElement(base, reduced, exp + k)


def z_element(base: Monoid, power: int = 1) -> LocalizedElement:
    return LocalizedElement(base, EMPTY, power)


def _same_base(x: LocalizedElement, y: LocalizedElement) -> None:
    if x.base is not y.base:
        raise LocalizationError(f"bases differ: {x.base.name} vs {y.base.name}")


def loc_mul(x: LocalizedElement, y: LocalizedElement) -> LocalizedElement:
    _same_base(x, y)
    u, k = _z_valuation(x.base, x.reduced + y.reduced)
    return LocalizedElement(x.base, u, x.exp + y.exp + k)


def localized_equal(x: LocalizedElement, y: LocalizedElement) -> bool:
    _same_base(x, y)
    return x.exp == y.exp and x.base.equal(x.reduced, y.reduced)


_ELEMENT = re.compile(r"^\s*([a-z]*|1)\s*(?:[·*.]\s*z\s*\^\s*(-?\d+))?\s*$")


def parse_localized(s: str, base: Monoid) -> LocalizedElement:
    """Parse ``"ba·z^-2"`` (``*`` or ``.`` also accepted; ``"ab"`` means ``ab·z^0``)."""
    m = _ELEMENT.match(s)
    if m is None:
        raise WordError(f"cannot parse localized element {s!r}; expected like 'ba·z^-2'")
    return localize(base, parse_word(m.group(1)), int(m.group(2) or 0))


# -- M(z) = M' x Z -----------------------------------------------------------


@dataclass(frozen=True)
class SplitPair:
    bar_v: Word
    t: int

    def __str__(self) -> str:
        return f"({format_word(self.bar_v)}, {self.t})"


def _m() -> Monoid:
    return catalog()["M"]


def delta(x: LocalizedElement) -> SplitPair:
    """``v z^m -> (v-bar, m + occ(a, v))``."""
    if x.base is not _m():
        raise LocalizationError(f"delta is defined on M(z), not {x.base.name}(z)")
    return SplitPair(x.reduced, x.exp + occ(A, x.reduced))


def delta_inverse(p: SplitPair) -> LocalizedElement:
    m = _m()
    v = tuple(p.bar_v)
    reduced, k = _z_valuation(m, v)
    if k or reduced != v:
        raise LocalizationError(
            f"{format_word(v)} is not a z-free canonical word of M"
        )
    return LocalizedElement(m, v, p.t - occ(A, v))


def split_mul(p: SplitPair, q: SplitPair) -> SplitPair:
    """Product in ``M' x Z``."""
    mp = catalog()["M'"]
    return SplitPair(mp.canonical(p.bar_v + q.bar_v), p.t + q.t)


def z_free_elements(base: Monoid, max_len: int) -> list:
    return [w for w in base.elements_up_to(max_len) if not base.divisible_by_z(w)]


def grid(base: Monoid, max_reduced_len: int, exp_range: Iterable[int]) -> list:
    exps = list(exp_range)
    return [LocalizedElement(base, v, m) for v in z_free_elements(base, max_reduced_len)
            for m in exps]


def _exp_range(exp_range) -> range:
    if isinstance(exp_range, range):
        return exp_range
    if isinstance(exp_range, int):
        return range(-exp_range, exp_range + 1)
    lo, hi = exp_range
    return range(lo, hi + 1)


def verify_delta_homomorphism(max_reduced_len: int, exp_range=(-2, 2),
                              sample_size: int | None = None, seed: int = 0) -> Report:
    """``delta(x y) = delta(x) delta(y)`` over the grid (all pairs, or a sample)."""
    exps = _exp_range(exp_range)
    rep = Report("delta-homomorphism", {"max_reduced_len": max_reduced_len,
                                        "exp_range": [exps.start, exps.stop - 1],
                                        "sample_size": sample_size})
    with timed(rep):
        g = grid(_m(), max_reduced_len, exps)
        if sample_size is None:
            pairs = itertools.product(g, repeat=2)
        else:
            rng = random.Random(seed)
            pairs = ((rng.choice(g), rng.choice(g)) for _ in range(sample_size)) if g else ()
        for x, y in pairs:
            lhs = delta(loc_mul(x, y))
            rhs = split_mul(delta(x), delta(y))
            rep.checked += 1
            if lhs != rhs:
                rep.violation({"x": str(x), "y": str(y), "delta(xy)": str(lhs),
                               "delta(x)delta(y)": str(rhs)})
        for name, elem, want in (("z", z_element(_m()), SplitPair(EMPTY, 1)),
                                 ("1", z_element(_m(), 0), SplitPair(EMPTY, 0))):
            if delta(elem) != want:
                rep.violation({"element": name, "delta": str(delta(elem))})
    return rep


def verify_delta_bijection(max_reduced_len: int, exp_range=(-2, 2)) -> Report:
    """``delta`` is injective on the grid and ``delta_inverse`` undoes it."""
    exps = _exp_range(exp_range)
    rep = Report("delta-bijection", {"max_reduced_len": max_reduced_len,
                                     "exp_range": [exps.start, exps.stop - 1]})
    with timed(rep):
        seen = {}
        for x in grid(_m(), max_reduced_len, exps):
            d = delta(x)
            rep.checked += 1
            if d in seen:
                rep.violation({"kind": "not injective", "x": str(seen[d]), "y": str(x)})
            seen[d] = x
            back = delta_inverse(d)
            if not localized_equal(back, x):
                rep.violation({"kind": "round trip", "x": str(x), "back": str(back)})
    return rep


def localization_laws_check(base: Monoid, max_reduced_len: int, exp_range=(-2, 2)) -> Report:
    """Associativity, centrality of z and its inverse, and the embedding of the base."""
    exps = _exp_range(exp_range)
    rep = Report(f"localization-laws[{base.name}]",
                 {"max_reduced_len": max_reduced_len, "exp_range": [exps.start, exps.stop - 1]})
    with timed(rep):
        g = grid(base, max_reduced_len, exps)
        z, zinv, one = z_element(base), z_element(base, -1), z_element(base, 0)
        if not localized_equal(loc_mul(z, zinv), one):
            rep.violation({"kind": "z z^-1 != 1"})
        for x in g:
            if not localized_equal(loc_mul(z, x), loc_mul(x, z)):
                rep.violation({"kind": "z not central", "x": str(x)})
            for y in g:
                for w in g:
                    rep.checked += 1
                    if not localized_equal(loc_mul(loc_mul(x, y), w), loc_mul(x, loc_mul(y, w))):
                        rep.violation({"kind": "not associative",
                                       "x": str(x), "y": str(y), "w": str(w)})
        free = z_free_elements(base, max_reduced_len)
        for u in free:
            for v in free:
                if localized_equal(LocalizedElement(base, u, 0), LocalizedElement(base, v, 0)) \
                        != base.equal(u, v):
                    rep.violation({"kind": "embedding", "u": format_word(u), "v": format_word(v)})
    return rep
