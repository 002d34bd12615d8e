"""Words over ordered alphabets, identities over variables, and substitution.

Letters are small integers ``0 .. n-1`` (rendered ``a, b, c, ...``) and a
word is a plain ``tuple`` of letters.  The empty tuple is the identity 1.
Variables live in their own namespace: ``0 -> x``, ``1 -> y``,
``2 -> z1``, ``3 -> z2``, ...  so that a variable can never be confused
with the central element ``z = cba``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import chain
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

if TYPE_CHECKING:
    from .presentations import Monoid

Word = tuple  # tuple[int, ...]

EMPTY: Word = ()


class WordError(ValueError):
    """Raised for malformed words, identities, or substitutions."""


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise WordError(f"alphabet size must be positive, got {self.size}")

    @property
    def letters(self) -> range:
        return range(self.size)

    def render(self, x: int) -> str:
        if self.size > 26:
            return f"<{x}>"
        return chr(ord("a") + x)

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.size


def parse_word(s: str, alphabet: Alphabet | int = 3) -> Word:
    """Parse ``"bacb"`` into ``(1, 0, 2, 1)``.  ``"1"`` and ``""`` give the empty word."""
    size = alphabet.size if isinstance(alphabet, Alphabet) else alphabet
    s = s.strip()
    if s in ("", "1"):
        return EMPTY
    out = []
    for ch in s:
        x = ord(ch) - ord("a")
        if not 0 <= x < size:
            raise WordError(f"letter {ch!r} not in alphabet of size {size}")
        out.append(x)
    return tuple(out)


def format_word(w: Sequence[int]) -> str:
    if len(w) == 0:
        return "1"
    return "".join(chr(ord("a") + x) for x in w)


def occ(x: int, w: Sequence[int]) -> int:
    """Number of positions of ``w`` holding the letter ``x``."""
    return sum(1 for y in w if y == x)


def alf(w: Iterable[int]) -> frozenset:
    return frozenset(w)


def content(w: Sequence[int], size: int) -> tuple:
    """Occurrence counts of letters ``0 .. size-1`` in ``w``."""
    counts = [0] * size
    for x in w:
        counts[x] += 1
    return tuple(counts)


def word_index(w: Sequence[int], k: int) -> int:
    """Position of ``w`` among words of length ``len(w)`` in lexicographic order."""
    idx = 0
    for x in w:
        idx = idx * k + x
    return idx


def index_word(idx: int, n: int, k: int) -> Word:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        idx, out[i] = divmod(idx, k)
    return tuple(out)


# -- variables and identities -------------------------------------------------

_VAR_TOKEN = re.compile(r"x|y|z(\d+)")


def variable_name(i: int) -> str:
    if i == 0:
        return "x"
    if i == 1:
        return "y"
    return f"z{i - 1}"


def format_vars(w: Sequence[int]) -> str:
    if len(w) == 0:
        return "1"
    return "".join(variable_name(v) for v in w)


def parse_vars(s: str) -> Word:
    s = s.strip()
    if s in ("", "1"):
        return EMPTY
    out = []
    pos = 0
    while pos < len(s):
        m = _VAR_TOKEN.match(s, pos)
        if m is None:
            raise WordError(
                f"cannot parse variable at {s[pos:]!r}; use x, y, z1, z2, ..."
            )
        if m.group(1) is None:
            out.append(0 if m.group(0) == "x" else 1)
        else:
            i = int(m.group(1))
            if i < 1:
                raise WordError("variables z1, z2, ... are numbered from 1")
            out.append(i + 1)
        pos = m.end()
    return tuple(out)


@dataclass(frozen=True)
class Identity:
    lhs: Word
    rhs: Word

    @classmethod
    def parse(cls, s: str) -> "Identity":
        if s.count("=") != 1:
            raise WordError(f"identity must contain exactly one '=': {s!r}")
        left, right = s.split("=")
        return cls(parse_vars(left), parse_vars(right))

    def __str__(self) -> str:
        return f"{format_vars(self.lhs)}={format_vars(self.rhs)}"

    @property
    def variables(self) -> tuple:
        """Variables occurring on either side, sorted."""
        return tuple(sorted(set(self.lhs) | set(self.rhs)))

    @property
    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    @property
    def is_balanced(self) -> bool:
        return is_balanced(self)

    def swapped(self) -> "Identity":
        return Identity(self.rhs, self.lhs)


def is_balanced(ident: Identity) -> bool:
    return Counter(ident.lhs) == Counter(ident.rhs)


def substitute(side: Sequence[int], subst: Mapping[int, Word], monoid: "Monoid") -> Word:
    """Value of ``side`` under ``subst`` as a canonical word of ``monoid``."""
    return monoid.canonical(substituted_word(side, subst))


def substituted_word(side: Sequence[int], subst: Mapping[int, Word]) -> Word:
    """The plain concatenation ``subst[v1] subst[v2] ...`` (not normalized)."""
    try:
        return tuple(chain.from_iterable(map(subst.__getitem__, side)))
    except KeyError as exc:
        raise WordError(
            f"substitution does not cover variable {variable_name(exc.args[0])}"
        ) from None


def format_substitution(subst: Mapping[int, Word]) -> dict:
    return {variable_name(v): format_word(w) for v, w in sorted(subst.items())}
