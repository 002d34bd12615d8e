"""Named verification suites: each bundles checks that instantiate one claim."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from . import checks, identities, localization
from .presentations import catalog
from .reports import SuiteReport


@dataclass(frozen=True)
class SuiteConfig:
    length: int = 6          # word length for exhaustive scans
    exp: int = 2             # exponent range [-exp, exp]
    bound: int = 3           # substitution length for identity searches
    sides: int = 5           # longest identity side
    escalate: int = 3        # extra substitution length tried in escalation
    count: int = 20          # identities per monoid in the localization suite

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value < 0 or (name in ("sides", "count") and value < 1):
                raise ValueError(f"{name} must be positive, got {value}")


def _lemma_z(cfg: SuiteConfig) -> list:
    cat = catalog()
    out = [checks.z_commutes_check(cat[n], cfg.length) for n in ("M", "N1", "N2")]
    out.append(checks.center_check(cat["M"], cfg.length))
    cancel = max(cfg.length - 1, 0)
    out += [checks.z_cancellation_check(cat[n], cancel) for n in ("M", "N1", "N2")]
    return out


def _center(cfg: SuiteConfig) -> list:
    return [checks.center_check(catalog()["M"], cfg.length)]


def _subdirect(cfg: SuiteConfig) -> list:
    return [checks.subdirect_check(cfg.length)]


def _oracle(cfg: SuiteConfig) -> list:
    cat = catalog()
    return [checks.oracle_equivalence_check(cfg.length),
            checks.engine_agreement_check(cat["N1"], cfg.length),
            checks.engine_agreement_check(cat["N2"], cfg.length)]


def _delta(cfg: SuiteConfig) -> list:
    exps = (-cfg.exp, cfg.exp)
    return [localization.verify_delta_homomorphism(cfg.length, exps),
            localization.verify_delta_bijection(cfg.length, exps),
            localization.localization_laws_check(catalog()["M"], min(cfg.length, 2), exps)]


def _m_prime(cfg: SuiteConfig) -> list:
    return [checks.m_prime_check(cfg.length, base) for base in ("M", "N1", "N2")]


def _balanced_ids(cfg: SuiteConfig) -> list:
    return list(identities.enumerate_identities(2, cfg.sides, balanced_only=True))


def _balanced(cfg: SuiteConfig) -> list:
    handles = list(catalog().values())
    return [identities.unbalanced_check(handles, 2, min(cfg.sides, 4))]


def _quotient_direction(cfg: SuiteConfig) -> list:
    cat = catalog()
    ids = _balanced_ids(cfg)
    pairs = (("M", "N1"), ("M", "N2"), ("M", "M'"), ("N1", "N1'"), ("N2", "N2'"))
    return [identities.quotient_direction_check(cat[a], cat[b], ids, cfg.bound)
            for a, b in pairs]


def _equivalence(cfg: SuiteConfig) -> list:
    cat = catalog()
    ids = _balanced_ids(cfg)
    pairs = (("M", "N1"), ("M", "N2"), ("N1", "N2"), ("N2", "N1"), ("M", "M'"))
    return [identities.equivalence_escalation_check(cat[a], cat[b], ids, cfg.bound, cfg.escalate)
            for a, b in pairs]


def localization_candidates(name: str, bound: int, count: int, max_sides: int = 12) -> list:
    """First ``count`` balanced two-variable identities surviving ``bound`` in ``name``."""
    h = catalog()[name]
    stream = identities.enumerate_identities(2, max_sides, balanced_only=True)
    return identities.survivors(h, stream, bound, count)


def _localization_lemma(cfg: SuiteConfig) -> list:
    cat = catalog()
    out = []
    for name in ("N1", "N2"):
        for ident in localization_candidates(name, cfg.bound, cfg.count):
            out.append(identities.localization_lemma_check(
                cat[name], ident, cfg.bound, (-cfg.exp, cfg.exp)))
    return out


SUITES = {
    "lemma-z": _lemma_z,
    "center": _center,
    "subdirect": _subdirect,
    "oracle": _oracle,
    "delta": _delta,
    "m-prime": _m_prime,
    "balanced": _balanced,
    "quotient-direction": _quotient_direction,
    "equivalence": _equivalence,
    "localization-lemma": _localization_lemma,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> SuiteReport:
    cfg = cfg or SuiteConfig()
    names = list(SUITES) if name == "all" else [name]
    for n in names:
        if n not in SUITES:
            raise KeyError(f"unknown suite {n!r}; known: all, {', '.join(SUITES)}")
    start = time.perf_counter()
    rep = SuiteReport(name, asdict(cfg))
    for n in names:
        rep.checks.extend(SUITES[n](cfg))
    rep.elapsed_ms = round((time.perf_counter() - start) * 1000.0, 3)
    return rep
