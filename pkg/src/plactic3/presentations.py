"""Finitely presented monoids: the catalog, class enumeration and handles.

Length-preserving presentations have finite congruence classes, so the word
problem is decided by closing a word under the relations.  Three equality
strategies sit behind ``Monoid``:

``schensted``
    M itself, via tableaux.
``class-bfs``
    canonical word = lexicographically least class member.  Quotients of M
    by extra length-preserving pairs (N1, N2) are decided through
    ``QuotientCongruence``; other presentations by direct class closure.
``strip-z-over-base``
    ``base / (cba = 1)``: two words are equal iff their z-free parts are
    equal in the base.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _accel
from .limits import CapExceeded, StrategyError, max_class_size, max_word_len
from .quotient import QuotientCongruence
from .tableau import (
    RANK,
    Z_WORD,
    all_word_counts,
    normal_form,
    pack_counts,
    reading_word,
    strip_z,
)
from .words import (
    EMPTY,
    Word,
    WordError,
    format_word,
    index_word,
    parse_word,
    word_index,
)

STRATEGIES = ("schensted", "class-bfs", "strip-z-over-base")


def _pairs(*specs: str) -> tuple:
    out = []
    for s in specs:
        lhs, rhs = s.split("=")
        out.append((parse_word(lhs), parse_word(rhs)))
    return tuple(out)


PLACTIC_RELATIONS = _pairs(
    "aba=baa", "bab=bba", "aca=caa", "cac=cca",
    "cbb=bcb", "cbc=ccb", "bac=bca", "acb=cab",
)
N1_EXTRA = _pairs("ac=ca")
N2_EXTRA = _pairs("bacb=cbab")
Z_EXTRA = ((Z_WORD, EMPTY),)


@dataclass(frozen=True)
class Presentation:
    name: str
    alphabet: int
    relations: tuple

    def __post_init__(self):
        rels = tuple((tuple(l), tuple(r)) for l, r in self.relations)
        for l, r in rels:
            for x in l + r:
                if not 0 <= x < self.alphabet:
                    raise WordError(f"relation letter {x} outside alphabet {self.alphabet}")
        object.__setattr__(self, "relations", rels)

    @property
    def length_preserving(self) -> bool:
        return all(len(l) == len(r) for l, r in self.relations)

    @property
    def balanced(self) -> bool:
        return all(sorted(l) == sorted(r) for l, r in self.relations)

    def extended(self, name: str, extra: Iterable) -> "Presentation":
        return Presentation(name, self.alphabet, self.relations + tuple(extra))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "alphabet": self.alphabet,
            "relations": [
                ["" if not l else format_word(l), "" if not r else format_word(r)]
                for l, r in self.relations
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        k = int(data["alphabet"])
        rels = tuple((parse_word(l, k), parse_word(r, k)) for l, r in data["relations"])
        return cls(str(data["name"]), k, rels)


@dataclass(frozen=True)
class CongruenceClass:
    members: frozenset
    canon: Word

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.members


def _neighbours(w: Word, relations: Sequence) -> Iterable[Word]:
    for lhs, rhs in relations:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            m = len(a)
            for i in range(len(w) - m + 1):
                if w[i:i + m] == a:
                    yield w[:i] + b + w[i + m:]


def congruence_class(p: Presentation, w: Sequence[int]) -> CongruenceClass:
    """All words congruent to ``w``, by closing under the relations both ways."""
    if not p.length_preserving:
        raise StrategyError(f"{p.name}: class enumeration needs length-preserving relations")
    w = tuple(w)
    if len(w) > max_word_len():
        raise CapExceeded(f"word length {len(w)} exceeds the class cap {max_word_len()}")
    cap = max_class_size()
    seen = {w}
    queue = deque([w])
    while queue:
        for nb in _neighbours(queue.popleft(), p.relations):
            if nb not in seen:
                seen.add(nb)
                if len(seen) > cap:
                    raise CapExceeded(f"class of {format_word(w)} exceeds {cap} words")
                queue.append(nb)
    return CongruenceClass(frozenset(seen), min(seen))


@lru_cache(maxsize=64)
def word_partition(p: Presentation, n: int) -> np.ndarray:
    """Class label of every word of length ``n`` (index order = lex order).

    The label is the index of the least member, i.e. the lex-least word.
    """
    if not p.length_preserving:
        raise StrategyError(f"{p.name}: class enumeration needs length-preserving relations")
    if n > max_word_len():
        raise CapExceeded(f"length {n} exceeds the class cap {max_word_len()}")
    k = p.alphabet
    size = k ** n
    idx = np.arange(size, dtype=np.int64)
    src, dst = [np.zeros(0, dtype=np.int64)], [np.zeros(0, dtype=np.int64)]
    for lhs, rhs in p.relations:
        m = len(lhs)
        if m > n or lhs == rhs:
            continue
        lcode, rcode = word_index(lhs, k), word_index(rhs, k)
        for pos in range(n - m + 1):
            scale = k ** (n - pos - m)
            hit = idx[(idx // scale) % (k ** m) == lcode]
            src.append(hit)
            dst.append(hit + (rcode - lcode) * scale)
    labels = _accel.components(size, np.concatenate(src), np.concatenate(dst))
    labels.setflags(write=False)
    return labels


def _is_plactic_extension(p: Presentation) -> tuple | None:
    """Extra relations if ``p`` is rank-3 plactic plus length-preserving pairs."""
    if p.alphabet != RANK or not p.length_preserving:
        return None
    own = {frozenset((l, r)) for l, r in p.relations}
    if not all(frozenset(pair) in own for pair in PLACTIC_RELATIONS):
        return None
    base = {frozenset(pair) for pair in PLACTIC_RELATIONS}
    return tuple((l, r) for l, r in p.relations if frozenset((l, r)) not in base)


@dataclass(eq=False)
class Monoid:
    """A presentation together with a way to decide equality in it."""

    presentation: Presentation
    strategy: str
    base: "Monoid | None" = None
    _engine: QuotientCongruence | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise StrategyError(f"unknown strategy {self.strategy!r}")
        if self.strategy == "strip-z-over-base":
            if self.base is None or self.base.strategy == "strip-z-over-base":
                raise StrategyError("strip-z-over-base needs a z-divisible base monoid")
        if self.strategy == "class-bfs" and self._engine is None:
            extra = _is_plactic_extension(self.presentation)
            if extra is not None:
                self._engine = QuotientCongruence(extra)
        self._keys: dict = {}

    @property
    def name(self) -> str:
        return self.presentation.name

    @property
    def rank(self) -> int:
        return self.presentation.alphabet

    def __repr__(self) -> str:
        return f"Monoid({self.name!r}, strategy={self.strategy!r})"

    # -- element keys -------------------------------------------------------

    def key(self, w: Sequence[int]):
        """A hashable value that is equal for two words iff they are equal here."""
        w = tuple(w)
        cached = self._keys.get(w)
        if cached is None:
            cached = self._key(w)
            if len(self._keys) > 1 << 20:
                self._keys.clear()
            self._keys[w] = cached
        return cached

    def _key(self, w: Word):
        if self.strategy == "schensted":
            return normal_form(w, self.rank)
        if self.strategy == "class-bfs":
            if self._engine is not None:
                return self._engine.key(w)
            return self._class_canonical(w)
        if self.base.strategy == "schensted":
            return strip_z(normal_form(w, self.rank)).reduced
        if self.base._engine is not None:
            return self.base._engine.reduced_key(w)
        return self.base.key(self.base.z_valuation(w)[0])

    def _class_canonical(self, w: Word) -> Word:
        n = len(w)
        if n <= max_word_len():
            labels = word_partition(self.presentation, n)
            return index_word(int(labels[word_index(w, self.rank)]), n, self.rank)
        return congruence_class(self.presentation, w).canon

    def equal(self, u: Sequence[int], v: Sequence[int]) -> bool:
        u, v = tuple(u), tuple(v)
        if self.strategy != "strip-z-over-base" and len(u) != len(v):
            if self.presentation.length_preserving:
                return False
        return self.key(u) == self.key(v)

    def canonical(self, w: Sequence[int]) -> Word:
        w = tuple(w)
        if self.strategy == "schensted":
            return reading_word(normal_form(w, self.rank))
        if self.strategy == "class-bfs":
            if self._engine is not None:
                return self._engine.canonical(w)
            return self._class_canonical(w)
        return self.base.canonical(self.base.z_valuation(w)[0])

    def mul(self, u: Sequence[int], v: Sequence[int]) -> Word:
        return self.canonical(tuple(u) + tuple(v))

    # -- z ------------------------------------------------------------------

    def _require_z_base(self):
        if self.strategy == "strip-z-over-base" or self.rank != RANK:
            raise StrategyError(f"{self.name}: z-divisibility needs M, N1, N2 or a rank-3 base")

    def divisible_by_z(self, w: Sequence[int]) -> bool:
        self._require_z_base()
        w = tuple(w)
        if len(w) < len(Z_WORD):
            return False
        if self.strategy == "schensted":
            return strip_z(normal_form(w)).power > 0
        if self._engine is not None:
            n, label = self._engine.key(w)
            return self._engine.z_cofactors(n, label).size > 0
        cls = congruence_class(self.presentation, w)
        return any(m[:3] == Z_WORD for m in cls.members)

    def z_valuation(self, w: Sequence[int]) -> tuple:
        """``(reduced, k)`` with ``w = z**k reduced`` and ``reduced`` z-free."""
        self._require_z_base()
        w = tuple(w)
        if self.strategy == "schensted":
            d = strip_z(normal_form(w))
            return reading_word(d.reduced), d.power
        if self._engine is not None:
            return self._engine.z_valuation(w)
        return class_z_valuation(self.presentation, w)

    # -- exhaustive tables --------------------------------------------------

    def word_labels(self, n: int) -> np.ndarray:
        """Element label for each of the ``k**n`` words of length ``n``."""
        if self.strategy == "schensted":
            return pack_counts(all_word_counts(n, self.rank), n)
        if self.strategy == "class-bfs":
            return word_partition(self.presentation, n)
        raise StrategyError(f"{self.name}: no word table for strategy {self.strategy}")

    def elements_up_to(self, length: int) -> list:
        """Canonical words of all elements with a representative of length <= ``length``,
        in length-then-lex order."""
        return _elements_up_to(self, length)


def class_z_valuation(p: Presentation, w: Word) -> tuple:
    """z-valuation by scanning classes for lex-least members with prefix ``cba``."""
    k = 0
    while len(w) >= len(Z_WORD):
        hits = [m for m in congruence_class(p, w).members if m[:3] == Z_WORD]
        if not hits:
            break
        w = min(hits)[3:]
        k += 1
    return congruence_class(p, w).canon if w else EMPTY, k


@lru_cache(maxsize=None)
def _elements_cache(m: Monoid, length: int) -> tuple:
    seen = {}
    for n in range(length + 1):
        for i in range(m.rank ** n):
            w = index_word(i, n, m.rank)
            c = m.canonical(w)
            seen.setdefault(m.key(c), c)
    return tuple(sorted(seen.values(), key=lambda c: (len(c), c)))


def _elements_up_to(m: Monoid, length: int) -> list:
    return list(_elements_cache(m, length))


# -- catalog ----------------------------------------------------------------

M_PRESENTATION = Presentation("M", RANK, PLACTIC_RELATIONS)


@lru_cache(maxsize=None)
def catalog() -> dict:
    """The six built-in monoids, keyed by name."""
    m = Monoid(M_PRESENTATION, "schensted")
    n1 = Monoid(M_PRESENTATION.extended("N1", N1_EXTRA), "class-bfs")
    n2 = Monoid(M_PRESENTATION.extended("N2", N2_EXTRA), "class-bfs")
    out = {"M": m, "N1": n1, "N2": n2}
    for base in (m, n1, n2):
        name = base.name + "'"
        out[name] = Monoid(base.presentation.extended(name, Z_EXTRA), "strip-z-over-base", base)
    return out


_ALIASES = {"Mp": "M'", "N1p": "N1'", "N2p": "N2'", "M′": "M'", "N1′": "N1'", "N2′": "N2'"}


def get_monoid(name: str, extra: dict | None = None) -> Monoid:
    name = _ALIASES.get(name, name)
    pool = dict(catalog())
    if extra:
        pool.update(extra)
    try:
        return pool[name]
    except KeyError:
        raise StrategyError(f"unknown monoid {name!r}; known: {', '.join(pool)}") from None


def monoid_from_presentation(p: Presentation) -> Monoid:
    """Pick a strategy for a loaded presentation."""
    if p.length_preserving:
        if p.alphabet == RANK and _is_plactic_extension(p) == ():
            return Monoid(p, "schensted")
        return Monoid(p, "class-bfs")
    pairs = {frozenset(pair) for pair in p.relations}
    if frozenset(Z_EXTRA[0]) in pairs and p.alphabet == RANK:
        rest = tuple(pair for pair in p.relations if frozenset(pair) != frozenset(Z_EXTRA[0]))
        base = monoid_from_presentation(Presentation(p.name + "/base", p.alphabet, rest))
        if base.strategy != "strip-z-over-base":
            return Monoid(p, "strip-z-over-base", base)
    raise StrategyError(
        f"{p.name}: only length-preserving relations, optionally plus cba=1, are supported"
    )


def load_presentations(path: str | Path) -> dict:
    """Read one presentation object or a list of them from a JSON file."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(data, dict):
        data = [data]
    out = {}
    for item in data:
        p = Presentation.from_json(item)
        out[p.name] = monoid_from_presentation(p)
    return out


# -- operations on handles --------------------------------------------------


def canonical(h: Monoid, w: Sequence[int]) -> Word:
    return h.canonical(w)


def equal(h: Monoid, u: Sequence[int], v: Sequence[int]) -> bool:
    return h.equal(u, v)


def divisible_by_z(h: Monoid, w: Sequence[int]) -> bool:
    return h.divisible_by_z(w)


def z_valuation(h: Monoid, w: Sequence[int]) -> tuple:
    return h.z_valuation(w)


def equal_quotient_z1(base: Monoid, u: Sequence[int], v: Sequence[int]) -> bool:
    """Equality in ``base / (cba = 1)``: compare z-free parts in the base."""
    return base.equal(base.z_valuation(u)[0], base.z_valuation(v)[0])


def central_witness(h: Monoid, w: Sequence[int]):
    """First generator not commuting with ``w``, or ``None``."""
    w = tuple(w)
    for g in range(h.rank):
        if not h.equal(w + (g,), (g,) + w):
            return g
    return None


def is_central(h: Monoid, w: Sequence[int], bound: int = 0) -> bool:
    # commuting with the generators is enough; ``bound`` only labels reports
    return central_witness(h, w) is None


def central_elements_up_to(h: Monoid, length: int) -> list:
    return [c for c in h.elements_up_to(length) if central_witness(h, c) is None]
