"""Congruences on the plactic monoid, computed one length at a time.

Every relation in sight (the Knuth relations and the extra pairs defining
N1 and N2) preserves length, so the congruence generated on M by extra
pairs ``(p, q)`` splits into equivalences ``E_n`` on the finitely many
tableaux with ``n`` cells.  An elementary step ``X p Y -> X q Y`` with ``X``
or ``Y`` nonempty is a one-letter translate of a step one level down, so

    E_n = equivalence generated by  g.E_{n-1},  E_{n-1}.g  and the base pairs
          of length n,

for generators ``g``.  Both translates are read off multiplication tables
between consecutive levels, and the number of tableaux per level grows
only polynomially in ``n``, which is what makes long words tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _accel
from .limits import DEFAULT_MAX_LEVEL, CapExceeded
from .tableau import RANK, Tableau, cell_count, normal_form, pack_counts
from .words import Word


@dataclass(frozen=True)
class Level:
    counts: np.ndarray        # (N_n, T) count matrices, sorted by key
    keys: np.ndarray          # (N_n,) packed keys, ascending
    right: np.ndarray         # (N_{n-1}, k): t -> t.g  at level n
    left: np.ndarray          # (N_{n-1}, k): t -> g.t  at level n
    parent: np.ndarray        # (N_n,): some t' with t'.h = t
    parent_letter: np.ndarray  # (N_n,): that h


class PlacticLevels:
    """All elements of M of each length, with one-letter multiplication maps."""

    def __init__(self, rank: int = RANK, max_level: int = DEFAULT_MAX_LEVEL):
        self.rank = rank
        self.max_level = max_level
        k = rank
        empty = np.zeros((1, cell_count(k)), dtype=np.int32)
        self._levels = [
            Level(
                counts=empty,
                keys=np.zeros(1, dtype=np.int64),
                right=np.zeros((0, k), dtype=np.int64),
                left=np.zeros((0, k), dtype=np.int64),
                parent=np.full(1, -1, dtype=np.int64),
                parent_letter=np.full(1, -1, dtype=np.int64),
            )
        ]

    def level(self, n: int) -> Level:
        if n > self.max_level:
            raise CapExceeded(f"length {n} exceeds the level cap {self.max_level}")
        while len(self._levels) <= n:
            self._levels.append(self._grow())
        return self._levels[n]

    def size(self, n: int) -> int:
        return self.level(n).counts.shape[0]

    def _grow(self) -> Level:
        k = self.rank
        n = len(self._levels)
        prev = self._levels[-1]
        cand = _accel.insert_batch(
            np.repeat(prev.counts, k, axis=0),
            np.tile(np.arange(k), prev.counts.shape[0]),
            k,
        )
        keys, first, inverse = np.unique(
            pack_counts(cand, n), return_index=True, return_inverse=True
        )
        right = inverse.reshape(-1, k).astype(np.int64)
        if n == 1:
            left = right.copy()
        else:
            # g.t = (g.t'').h  where t = t''.h
            gens = np.arange(k)
            left = right[
                prev.left[prev.parent[:, None], gens[None, :]],
                prev.parent_letter[:, None],
            ]
        return Level(
            counts=cand[first],
            keys=keys,
            right=right,
            left=left,
            parent=(first // k).astype(np.int64),
            parent_letter=(first % k).astype(np.int64),
        )

    def index(self, t: Tableau) -> tuple:
        """``(length, index)`` of the tableau ``t``."""
        n = len(t)
        lev = self.level(n)
        key = pack_counts(np.asarray([t.counts], dtype=np.int64), n)[0]
        i = int(np.searchsorted(lev.keys, key))
        if i >= lev.keys.shape[0] or lev.keys[i] != key:
            raise ValueError(f"{t} is not a tableau of rank {self.rank}")
        return n, i

    def index_of_word(self, w: Sequence[int]) -> tuple:
        return self.index(normal_form(w, self.rank))

    def tableau(self, n: int, i: int) -> Tableau:
        return Tableau(tuple(int(c) for c in self.level(n).counts[i]), self.rank)

    def z_map(self, n: int) -> np.ndarray:
        """Level ``n-3`` -> level ``n``: ``t -> cba.t`` (rank 3 column)."""
        out = np.arange(self.size(n - self.rank))
        for j, g in enumerate(range(self.rank)):
            out = self.level(n - self.rank + j + 1).left[out, g]
        return out


@lru_cache(maxsize=None)
def plactic_levels(rank: int = RANK) -> PlacticLevels:
    return PlacticLevels(rank)


class QuotientCongruence:
    """The congruence on M generated by extra length-preserving pairs."""

    def __init__(self, extra: Sequence[tuple], levels: PlacticLevels | None = None):
        self.levels = levels or plactic_levels()
        for lhs, rhs in extra:
            if len(lhs) != len(rhs):
                raise ValueError("extra relations must preserve length")
        self.extra = tuple((tuple(l), tuple(r)) for l, r in extra)
        self._labels = [np.zeros(1, dtype=np.int64)]
        self._left_images: dict = {}

    def labels(self, n: int) -> np.ndarray:
        """Class label (least member index) of every tableau of length ``n``."""
        while len(self._labels) <= n:
            self._labels.append(self._grow(len(self._labels)))
        return self._labels[n]

    def _grow(self, n: int) -> np.ndarray:
        lev = self.levels.level(n)
        prev = self._labels[n - 1]
        src, dst = [], []
        for g in range(self.levels.rank):
            moved = prev != np.arange(prev.shape[0])
            for table in (lev.left, lev.right):
                src.append(table[moved, g])
                dst.append(table[prev[moved], g])
        for lhs, rhs in self.extra:
            if len(lhs) == n and lhs != rhs:
                src.append(np.array([self.levels.index_of_word(lhs)[1]]))
                dst.append(np.array([self.levels.index_of_word(rhs)[1]]))
        out = _accel.components(lev.counts.shape[0], np.concatenate(src), np.concatenate(dst))
        out.setflags(write=False)
        return out

    def key(self, w: Sequence[int]) -> tuple:
        n, i = self.levels.index_of_word(w)
        return n, int(self.labels(n)[i])

    def _left_image(self, n: int, g: int) -> np.ndarray:
        """Labels at level ``n`` of ``g.t`` for every tableau ``t`` of length ``n-1``."""
        cached = self._left_images.get((n, g))
        if cached is None:
            cached = self.labels(n)[self.levels.level(n).left[:, g]]
            self._left_images[(n, g)] = cached
        return cached

    def least_word(self, n: int, labels: np.ndarray | Sequence[int]) -> Word:
        """Lexicographically least word of length ``n`` in the union of the classes."""
        current = np.unique(np.asarray(labels, dtype=np.int64))
        word = []
        for i in range(n, 0, -1):
            member = np.zeros(self.levels.size(i), dtype=bool)
            member[current] = True
            for g in range(self.levels.rank):
                hit = member[self._left_image(i, g)]
                if hit.any():
                    word.append(g)
                    current = np.unique(self.labels(i - 1)[hit])
                    break
            else:  # pragma: no cover - every nonempty class has a first letter
                raise AssertionError("class with no first letter")
        return tuple(word)

    def canonical(self, w: Sequence[int]) -> Word:
        n, label = self.key(w)
        return self.least_word(n, [label])

    def z_cofactors(self, n: int, label: int) -> np.ndarray:
        """Labels ``u`` at level ``n-3`` with ``cba.u`` in class ``label``."""
        if n < self.levels.rank:
            return np.zeros(0, dtype=np.int64)
        hit = self.labels(n)[self.levels.z_map(n)] == label
        return np.unique(self.labels(n - self.levels.rank)[hit])

    def z_valuation(self, w: Sequence[int]) -> tuple:
        """Strip ``cba`` prefixes through lexicographically least members."""
        n, label = self.key(w)
        k = 0
        while True:
            cof = self.z_cofactors(n, label)
            if cof.size == 0:
                return self.least_word(n, [label]), k
            rest = self.least_word(n - self.levels.rank, cof)
            n, label = self.key(rest)
            k += 1

    def reduced_key(self, w: Sequence[int]) -> tuple:
        """Key of the z-free part of ``w``; used for the ``z = 1`` quotient."""
        reduced, _ = self.z_valuation(w)
        return self.key(reduced)
