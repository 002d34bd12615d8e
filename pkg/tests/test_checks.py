import json

import numpy as np
import pytest

from plactic3 import checks
from plactic3.identities import holds_at_bound
from plactic3.presentations import (
    M_PRESENTATION,
    Presentation,
    catalog,
    monoid_from_presentation,
)
from plactic3.reports import MAX_LISTED, Report, SuiteReport, dumps
from plactic3.suites import SUITES, SuiteConfig, localization_candidates, run_suite
from plactic3.words import parse_word

W = parse_word


class TestChecks:
    def test_oracle(self):
        rep = checks.oracle_equivalence_check(6)
        assert rep.passed and rep.checked == sum(3 ** n for n in range(7))

    @pytest.mark.parametrize("name", ["M", "N1", "N2"])
    def test_z_commutes(self, name):
        assert checks.z_commutes_check(catalog()[name], 4).passed

    def test_z_does_not_commute_in_a_foreign_presentation(self):
        # drop the Knuth relation bac=bca: z is no longer central
        rels = tuple(r for r in M_PRESENTATION.relations if r != (W("bac"), W("bca")))
        h = monoid_from_presentation(Presentation("Mminus", 3, rels))
        rep = checks.z_commutes_check(h, 2)
        assert not rep.passed

    def test_center(self):
        rep = checks.center_check(catalog()["M"], 4)
        assert rep.passed
        assert rep.notes == ["central: 1, cba"]

    @pytest.mark.parametrize("name", ["M", "N1", "N2"])
    def test_z_cancellation(self, name):
        rep = checks.z_cancellation_check(catalog()[name], 3)
        assert rep.passed
        assert bool(rep.notes) == (name != "M")

    def test_subdirect(self):
        assert checks.subdirect_check(4).passed

    def test_subdirect_fails_against_a_single_quotient(self):
        # equality in N2 alone does not imply equality in M
        cat = catalog()
        n2 = cat["N2"].word_labels(4)
        m = cat["M"].word_labels(4)
        assert checks._partition_mismatch(n2, m)

    @pytest.mark.parametrize("name", ["N1", "N2"])
    def test_engine_agreement(self, name):
        assert checks.engine_agreement_check(catalog()[name], 6).passed

    def test_engine_agreement_without_engine(self):
        rep = checks.engine_agreement_check(catalog()["M"], 2)
        assert rep.passed and rep.notes

    @pytest.mark.parametrize("base", ["M", "N1", "N2"])
    def test_m_prime(self, base):
        rep = checks.m_prime_check(4, base)
        assert rep.passed, rep.violations

    def test_partition_mismatch(self):
        a = np.array([0, 0, 2, 2])
        b = np.array([5, 6, 7, 7])
        assert checks._partition_mismatch(a, b) == [(0, 1)]
        assert checks._partition_mismatch(b, a) == []


class TestReports:
    def test_violation_list_is_capped(self):
        rep = Report("x", 1)
        for i in range(MAX_LISTED + 7):
            rep.violation({"i": i})
        assert rep.violation_count == MAX_LISTED + 7
        assert len(rep.violations) == MAX_LISTED
        assert not rep.passed

    def test_errors_fail(self):
        rep = Report("x", 1, errors=["cap"])
        assert not rep.passed

    def test_exit_codes(self):
        ok = Report("ok", 1)
        finding = Report("f", 1, findings=[{"identity": "xy=yx"}])
        bad = Report("bad", 1, violation_count=1)
        assert SuiteReport("s", {}, [ok, finding]).exit_code() == 0
        assert SuiteReport("s", {}, [ok, finding]).exit_code(strict=True) == 1
        assert SuiteReport("s", {}, [ok, bad]).exit_code() == 1

    def test_round_trip_byte_identical(self):
        rep = run_suite("center", SuiteConfig(length=4))
        text = dumps(rep)
        again = dumps(SuiteReport.from_json(json.loads(text)))
        assert again == text
        data = json.loads(text)
        assert set(data) == {"schema_version", "suite", "parameters", "pass", "fail",
                             "findings", "checks", "elapsed_ms"}


def _strip_time(obj):
    if isinstance(obj, dict):
        return {k: _strip_time(v) for k, v in obj.items() if k != "elapsed_ms"}
    if isinstance(obj, list):
        return [_strip_time(v) for v in obj]
    return obj


class TestSuites:
    SMALL = SuiteConfig(length=3, exp=1, bound=1, sides=3, escalate=1, count=2)

    @pytest.mark.parametrize("name", list(SUITES))
    def test_each_suite_passes_small(self, name):
        rep = run_suite(name, self.SMALL)
        assert rep.fail_count == 0, [c.to_json() for c in rep.checks if not c.passed]
        assert rep.pass_count == len(rep.checks) > 0

    def test_all(self):
        rep = run_suite("all", self.SMALL)
        assert rep.suite == "all" and rep.fail_count == 0

    def test_deterministic(self):
        a = run_suite("equivalence", self.SMALL).to_json()
        b = run_suite("equivalence", self.SMALL).to_json()
        assert _strip_time(a) == _strip_time(b)

    def test_unknown(self):
        with pytest.raises(KeyError):
            run_suite("nope")

    @pytest.mark.parametrize("field", ["length", "sides", "count", "exp"])
    def test_config_validation(self, field):
        with pytest.raises(ValueError):
            SuiteConfig(**{field: -1})
        with pytest.raises(ValueError):
            SuiteConfig(sides=0)

    def test_localization_candidates_survive(self):
        h = catalog()["N2"]
        ids = localization_candidates("N2", 1, 3)
        assert len(ids) == 3
        assert all(not holds_at_bound(h, i, 1).fails for i in ids)
