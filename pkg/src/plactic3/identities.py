"""Bounded identity checking and the comparison harnesses built on it.

A bounded search can only refute an identity.  ``holds_at_bound`` therefore
returns either a concrete witness or "holds up to bound", never "holds".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .limits import DEFAULT_MAX_SUBSTITUTIONS, CapExceeded
from .localization import LocalizedElement, _exp_range, localize, localized_equal, loc_mul, z_element
from .presentations import Monoid
from .reports import Report, timed
from .words import (
    Identity,
    Word,
    WordError,
    format_substitution,
    is_balanced,
    substituted_word,
)

HOLDS = "holds-up-to-bound"
FAILS = "fails"
CAP = "cap-exceeded"


@dataclass(frozen=True)
class Verdict:
    monoid: str
    identity: Identity
    status: str
    bound: int
    witness: dict | None = None

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    def to_json(self) -> dict:
        return {
            "monoid": self.monoid,
            "identity": str(self.identity),
            "status": self.status,
            "bound": self.bound,
            "witness": None if self.witness is None else format_substitution(self.witness),
        }


def side_values(h: Monoid, ident: Identity, subst: dict) -> tuple:
    return (substituted_word(ident.lhs, subst), substituted_word(ident.rhs, subst))


def is_witness(h: Monoid, ident: Identity, subst: dict) -> bool:
    """Replay a substitution: True iff the two sides differ in ``h``."""
    lhs, rhs = side_values(h, ident, subst)
    return not h.equal(lhs, rhs)


def holds_at_bound(h: Monoid, ident: Identity, bound: int,
                   max_substitutions: int = DEFAULT_MAX_SUBSTITUTIONS) -> Verdict:
    """Search all substitutions by elements with representatives of length <= ``bound``.

    Variables are assigned in index order (``x`` slowest) and values run over
    canonical words in length-then-lex order, so the witness returned is the
    first one in that order.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    variables = ident.variables
    elements = h.elements_up_to(bound)
    total = len(elements) ** len(variables)
    if total > max_substitutions:
        raise CapExceeded(
            f"{total} substitutions for {ident} in {h.name} at bound {bound} "
            f"exceed the cap {max_substitutions}"
        )
    for values in itertools.product(elements, repeat=len(variables)):
        subst = dict(zip(variables, values))
        if is_witness(h, ident, subst):
            return Verdict(h.name, ident, FAILS, bound, subst)
    return Verdict(h.name, ident, HOLDS, bound)


def unbalanced_counterexample(h: Monoid, ident: Identity) -> dict:
    """A substitution into the cyclic submonoid generated by ``a`` that separates the sides.

    If the sides have different lengths, every variable goes to ``a``.  Otherwise
    (e.g. ``xyy = xxy``) one variable with unequal counts goes to ``a`` and the
    rest to 1.  Either way the two values are different powers of ``a``, and
    ``a`` has infinite order in every catalog monoid because content is
    preserved by all defining relations except ``cba = 1``.
    """
    if is_balanced(ident):
        raise WordError(f"{ident} is balanced; no substitution into <a> separates it")
    if len(ident.lhs) != len(ident.rhs):
        return {v: (0,) for v in ident.variables}
    pivot = next(v for v in ident.variables if ident.lhs.count(v) != ident.rhs.count(v))
    return {v: ((0,) if v == pivot else ()) for v in ident.variables}


# -- identity streams ---------------------------------------------------------


def _rename(u: Word, v: Word) -> tuple:
    names: dict = {}
    out = []
    for side in (u, v):
        out.append(tuple(names.setdefault(x, len(names)) for x in side))
    return tuple(out)


def canonical_identity(ident: Identity) -> Identity:
    """Representative up to renaming variables and swapping the sides."""
    a = _rename(ident.lhs, ident.rhs)
    b = _rename(ident.rhs, ident.lhs)
    return Identity(*min(a, b))


@lru_cache(maxsize=64)
def _identity_level(num_vars: int, m: int, balanced_only: bool) -> tuple:
    """Canonical identities whose longer side has length exactly ``m``, sorted."""
    letters = range(num_vars)
    level: set = set()
    longest = list(itertools.product(letters, repeat=m))
    if balanced_only:
        groups: dict = {}
        for w in longest:
            groups.setdefault(tuple(sorted(w)), []).append(w)
        pairs = (p for g in groups.values() for p in itertools.combinations(g, 2))
    else:
        shorter = [w for n in range(m) for w in itertools.product(letters, repeat=n)]
        pairs = itertools.chain(
            itertools.combinations(longest, 2),
            ((u, v) for u in longest for v in shorter),
        )
    for u, v in pairs:
        # canonical representatives start with variable 0 on the lhs or rhs
        if u != v and (u[:1] == (0,) or v[:1] == (0,) or not u or not v):
            level.add(canonical_identity(Identity(u, v)))
    return tuple(sorted(level, key=lambda i: (len(i.lhs), len(i.rhs), i.lhs, i.rhs)))


def enumerate_identities(num_vars: int, max_len: int,
                         balanced_only: bool = False) -> Iterator[Identity]:
    """Non-trivial identities with sides of length <= ``max_len``, up to renaming and swap.

    Streamed by longest side, so long runs can stop early.
    """
    if num_vars < 1 or max_len < 1:
        raise ValueError("num_vars and max_len must be positive")
    for m in range(max_len + 1):
        yield from _identity_level(num_vars, m, balanced_only)


# -- harnesses ----------------------------------------------------------------


@dataclass
class ComparisonRow:
    identity: Identity
    verdicts: dict = field(default_factory=dict)

    @property
    def agreement(self) -> bool:
        return len({v.status for v in self.verdicts.values()}) <= 1

    def to_json(self) -> dict:
        return {
            "identity": str(self.identity),
            "verdicts": {k: v.to_json() for k, v in self.verdicts.items()},
            "agreement": self.agreement,
        }


def _safe_verdict(h: Monoid, ident: Identity, bound: int) -> Verdict:
    try:
        return holds_at_bound(h, ident, bound)
    except CapExceeded:
        return Verdict(h.name, ident, CAP, bound)


def compare_monoids(handles: Sequence[Monoid], ids: Iterable[Identity], bound: int) -> list:
    rows = []
    for ident in ids:
        row = ComparisonRow(ident)
        for h in handles:
            row.verdicts[h.name] = _safe_verdict(h, ident, bound)
        rows.append(row)
    return rows


def format_table(rows: Sequence[ComparisonRow]) -> str:
    """Aligned text table: one line per identity, one column per monoid."""
    if not rows:
        return "(no identities)"
    names = list(rows[0].verdicts)
    short = {HOLDS: "holds", FAILS: "fails", CAP: "cap"}
    head = ["identity"] + names + ["agree"]
    body = [[str(r.identity)] + [short[r.verdicts[n].status] for n in names]
            + ["yes" if r.agreement else "NO"] for r in rows]
    widths = [max(len(line[i]) for line in [head] + body) for i in range(len(head))]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    return "\n".join(fmt.format(*line).rstrip() for line in [head] + body)


def quotient_direction_check(base: Monoid, quot: Monoid, ids: Iterable[Identity],
                             bound: int) -> Report:
    """Every witness against an identity in ``quot`` must also be one in ``base``."""
    rep = Report(f"quotient-direction[{base.name}->{quot.name}]", bound)
    with timed(rep):
        for ident in ids:
            rep.checked += 1
            try:
                v = holds_at_bound(quot, ident, bound)
            except CapExceeded as exc:
                rep.errors.append(str(exc))
                continue
            if v.fails and not is_witness(base, ident, v.witness):
                rep.violation({"identity": str(ident),
                               "witness": format_substitution(v.witness)})
    return rep


def equivalence_escalation_check(a: Monoid, b: Monoid, ids: Iterable[Identity],
                                 bound: int, escalate: int) -> Report:
    """For identities failing in ``a`` at ``bound``, look for a failure in ``b``.

    ``b`` is searched at bounds ``bound .. bound + escalate``.  A miss is a
    finding, not a violation: the witness may simply be longer.  A violation
    is recorded only if a reported witness does not replay.
    """
    rep = Report(f"equivalence-escalation[{a.name}->{b.name}]",
                 {"bound": bound, "escalate": escalate})
    with timed(rep):
        for ident in ids:
            try:
                va = holds_at_bound(a, ident, bound)
            except CapExceeded as exc:
                rep.errors.append(str(exc))
                continue
            if not va.fails:
                continue
            rep.checked += 1
            found = None
            for extra in range(escalate + 1):
                try:
                    vb = holds_at_bound(b, ident, bound + extra)
                except CapExceeded:
                    break
                if vb.fails:
                    found = vb
                    break
            if found is None:
                rep.findings.append({"identity": str(ident),
                                     "searched_up_to": bound + escalate})
            elif not is_witness(b, ident, found.witness):
                rep.violation({"identity": str(ident),
                               "witness": format_substitution(found.witness)})
    return rep


def localized_holds(base: Monoid, ident: Identity, word_len: int, exp_range) -> dict | None:
    """Search substitutions ``v z^m`` into the localization; return a witness or None.

    Each side is multiplied out in the localization once per choice of the
    ``v`` parts; since z is central, changing the exponents of the values only
    shifts each side's exponent by ``sum(m_x * occurrences of x)``.
    """
    exps = list(_exp_range(exp_range))
    reduced = [localize(base, v) for v in base.elements_up_to(word_len)]
    one = z_element(base, 0)
    variables = ident.variables
    counts = [(ident.lhs.count(x), ident.rhs.count(x)) for x in variables]

    def evaluate(side, subst):
        acc = one
        for var in side:
            acc = loc_mul(acc, subst[var])
        return acc

    for vs in itertools.product(reduced, repeat=len(variables)):
        plain = dict(zip(variables, vs))
        lhs, rhs = evaluate(ident.lhs, plain), evaluate(ident.rhs, plain)
        for ms in itertools.product(exps, repeat=len(variables)):
            shift_l = sum(m * cl for m, (cl, _) in zip(ms, counts))
            shift_r = sum(m * cr for m, (_, cr) in zip(ms, counts))
            left = LocalizedElement(base, lhs.reduced, lhs.exp + shift_l)
            right = LocalizedElement(base, rhs.reduced, rhs.exp + shift_r)
            if not localized_equal(left, right):
                return {x: LocalizedElement(base, v.reduced, v.exp + m)
                        for x, v, m in zip(variables, vs, ms)}
    return None


def localization_lemma_check(base: Monoid, ident: Identity, word_len: int,
                             exp_range=(-2, 2)) -> Report:
    """A balanced identity that survives in the base at ``word_len`` must survive in
    the localization over ``(v, m)``, ``|v| <= word_len``, ``m`` in ``exp_range``."""
    if not is_balanced(ident):
        raise WordError(f"{ident} is not balanced")
    exps = _exp_range(exp_range)
    rep = Report(f"localization-lemma[{base.name}]",
                 {"identity": str(ident), "word_len": word_len,
                  "exp_range": [exps.start, exps.stop - 1]})
    with timed(rep):
        v = holds_at_bound(base, ident, word_len)
        rep.checked = 1
        if v.fails:
            rep.notes.append(f"fails already in {base.name}: "
                             f"{format_substitution(v.witness)}; nothing to transfer")
            return rep
        witness = localized_holds(base, ident, word_len, exps)
        if witness is not None:
            rep.violation({"identity": str(ident),
                           "witness": {k: str(x) for k, x in witness.items()}})
    return rep


def survivors(h: Monoid, ids: Iterable[Identity], bound: int, count: int) -> list:
    """The first ``count`` identities of ``ids`` with no witness in ``h`` at ``bound``.

    Witnesses that killed earlier identities are replayed first (most recent
    first); the full search only runs when none of them works, so the result
    is the same as calling ``holds_at_bound`` on every identity.
    """
    out = []
    recent: list = []
    for ident in ids:
        variables = set(ident.variables)
        hit = next((w for w in recent if variables <= w.keys() and is_witness(h, ident, w)),
                   None)
        if hit is None:
            verdict = holds_at_bound(h, ident, bound)
            if not verdict.fails:
                out.append(ident)
                if len(out) >= count:
                    break
                continue
            hit = verdict.witness
        if hit in recent:
            recent.remove(hit)
        recent.insert(0, hit)
        del recent[32:]
    return out


def describe_witness(subst: dict) -> str:
    return ", ".join(f"{k}->{v}" for k, v in format_substitution(subst).items())




def unbalanced_check(handles: Sequence[Monoid], num_vars: int, max_len: int) -> Report:
    """Every unbalanced identity fails in every monoid under ``unbalanced_counterexample``."""
    rep = Report("unbalanced-fail", {"num_vars": num_vars, "max_len": max_len,
                                     "monoids": [h.name for h in handles]})
    with timed(rep):
        for ident in enumerate_identities(num_vars, max_len):
            if is_balanced(ident):
                continue
            for h in handles:
                rep.checked += 1
                if not is_witness(h, ident, unbalanced_counterexample(h, ident)):
                    rep.violation({"identity": str(ident), "monoid": h.name})
    return rep
