"""Semistandard tableaux and the plactic monoid via Schensted row insertion.

A tableau over letters ``0 .. k-1`` has at most ``k`` rows and row ``r``
only holds letters ``>= r``, so it is determined by its count matrix
``counts[r][x]`` (``r <= x``).  ``Tableau`` stores that matrix flattened,
which makes insertion a handful of integer updates and gives a hashable
normal form for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _accel
from .words import Word, WordError, format_word, parse_word

RANK = 3
Z_WORD: Word = (2, 1, 0)  # cba


def _offsets(k: int) -> tuple:
    offs, off = [], 0
    for r in range(k):
        offs.append(off)
        off += k - r
    return tuple(offs)


def cell_count(k: int) -> int:
    """Length of the flattened count matrix for rank ``k``."""
    return k * (k + 1) // 2


@dataclass(frozen=True)
class Tableau:
    counts: tuple
    rank: int = RANK

    @classmethod
    def empty(cls, rank: int = RANK) -> "Tableau":
        return cls((0,) * cell_count(rank), rank)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], rank: int = RANK) -> "Tableau":
        if len(rows) > rank:
            raise WordError(f"{len(rows)} rows exceed rank {rank}")
        offs = _offsets(rank)
        counts = [0] * cell_count(rank)
        for r, row in enumerate(rows):
            for x in row:
                if not r <= x < rank:
                    raise WordError(f"letter {x} cannot sit in row {r}")
                counts[offs[r] + x - r] += 1
        t = cls(tuple(counts), rank)
        if t.row_lists() != [list(row) for row in rows if len(row)]:
            raise WordError(f"rows {rows!r} are not weakly increasing")
        if not t.is_valid():
            raise WordError(f"rows {rows!r} do not form a semistandard tableau")
        return t

    @classmethod
    def from_json(cls, rows: Sequence[str], rank: int = RANK) -> "Tableau":
        return cls.from_rows([parse_word(s, rank) for s in rows], rank)

    def row_lists(self) -> list:
        offs = _offsets(self.rank)
        rows = []
        for r in range(self.rank):
            row = []
            for x in range(r, self.rank):
                row.extend([x] * self.counts[offs[r] + x - r])
            if row:
                rows.append(row)
        return rows

    @property
    def rows(self) -> tuple:
        return tuple(tuple(row) for row in self.row_lists())

    @property
    def shape(self) -> tuple:
        return tuple(len(row) for row in self.row_lists())

    def __len__(self) -> int:
        return sum(self.counts)

    def is_valid(self) -> bool:
        rows = self.row_lists()
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                return False
            if any(lo <= up for up, lo in zip(upper, lower)):
                return False
        return True

    def insert(self, x: int) -> "Tableau":
        return schensted_insert(self, x)

    def reading_word(self) -> Word:
        return reading_word(self)

    def to_json(self) -> list:
        return [format_word(row) for row in self.row_lists()]

    def grid(self) -> str:
        rows = self.row_lists()
        if not rows:
            return "(empty)"
        return "\n".join(" ".join(format_word([x]) for x in row) for row in rows)

    def __str__(self) -> str:
        return "[" + ",".join(self.to_json()) + "]"


def schensted_insert(t: Tableau, x: int) -> Tableau:
    """Row-insert the letter ``x``: it bumps the leftmost strictly larger entry."""
    k = t.rank
    if not 0 <= x < k:
        raise WordError(f"letter {x} outside rank {k}")
    counts = list(t.counts)
    r, off = 0, 0
    while True:
        bumped = -1
        for y in range(x + 1, k):
            if counts[off + y - r]:
                bumped = y
                break
        counts[off + x - r] += 1
        if bumped < 0:
            return Tableau(tuple(counts), k)
        counts[off + bumped - r] -= 1
        x = bumped
        off += k - r
        r += 1


@lru_cache(maxsize=1 << 16)
def _normal_form(w: Word, rank: int) -> Tableau:
    if not w:
        return Tableau.empty(rank)
    return schensted_insert(_normal_form(w[:-1], rank), w[-1])


def normal_form(w: Iterable[int], rank: int = RANK) -> Tableau:
    """The tableau of ``w``: the fold of ``schensted_insert`` over its letters."""
    w = tuple(w)
    if len(w) > 64:
        t = Tableau.empty(rank)
        for x in w:
            t = schensted_insert(t, x)
        return t
    return _normal_form(w, rank)


def reading_word(t: Tableau) -> Word:
    """Rows concatenated from the bottom row up."""
    out: list = []
    for row in reversed(t.row_lists()):
        out.extend(row)
    return tuple(out)


def equal_M(u: Iterable[int], v: Iterable[int], rank: int = RANK) -> bool:
    return normal_form(u, rank) == normal_form(v, rank)


def multiply(s: Tableau, t: Tableau) -> Tableau:
    for x in reading_word(t):
        s = schensted_insert(s, x)
    return s


@dataclass(frozen=True)
class ZDecomposition:
    reduced: Tableau
    power: int


def strip_z(t: Tableau) -> ZDecomposition:
    """Split off the full-height columns: ``t = reduced * z**power`` in M."""
    k = t.rank
    offs = _offsets(k)
    power = t.counts[offs[k - 1]]
    counts = list(t.counts)
    for r in range(k):
        counts[offs[r]] -= power
    return ZDecomposition(Tableau(tuple(counts), k), power)


def content_of(t: Tableau) -> tuple:
    offs = _offsets(t.rank)
    out = [0] * t.rank
    for r in range(t.rank):
        for x in range(r, t.rank):
            out[x] += t.counts[offs[r] + x - r]
    return tuple(out)


# -- batch forms ------------------------------------------------------------


@lru_cache(maxsize=None)
def _all_word_counts(n: int, k: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, cell_count(k)), dtype=np.int32)
    prev = _all_word_counts(n - 1, k)
    parents = np.repeat(prev, k, axis=0)
    letters = np.tile(np.arange(k), prev.shape[0])
    out = _accel.insert_batch(parents, letters, k)
    out.setflags(write=False)
    return out


def all_word_counts(n: int, k: int = RANK) -> np.ndarray:
    """Count matrices of the tableaux of all ``k**n`` words of length ``n``.

    Row ``i`` belongs to the ``i``-th word in lexicographic order.
    """
    return _all_word_counts(n, k)


def pack_counts(counts: np.ndarray, n: int) -> np.ndarray:
    """Injective int64 key per tableau of ``n`` cells."""
    base = n + 1
    keys = np.zeros(counts.shape[0], dtype=np.int64)
    for j in range(counts.shape[1]):
        keys = keys * base + counts[:, j]
    return keys
