import json
import random

import numpy as np
import pytest
from hypothesis import given

from plactic3.limits import CapExceeded, StrategyError
from plactic3.presentations import (
    M_PRESENTATION,
    Monoid,
    Presentation,
    canonical,
    catalog,
    central_elements_up_to,
    central_witness,
    class_z_valuation,
    congruence_class,
    divisible_by_z,
    equal,
    equal_quotient_z1,
    get_monoid,
    is_central,
    load_presentations,
    monoid_from_presentation,
    word_partition,
    z_valuation,
)
from plactic3.tableau import normal_form, reading_word
from plactic3.words import index_word, parse_word

from conftest import words

W = parse_word


@pytest.fixture(scope="module")
def cat():
    return catalog()


class TestCatalog:
    def test_plactic_relations(self, cat):
        rels = {(l, r) for l, r in cat["M"].presentation.relations}
        assert len(rels) == 8
        assert (W("aba"), W("baa")) in rels
        assert (W("acb"), W("cab")) in rels

    def test_quotients(self, cat):
        m = cat["M"].presentation.relations
        assert cat["N2"].presentation.relations == m + ((W("bacb"), W("cbab")),)
        assert cat["N1"].presentation.relations == m + ((W("ac"), W("ca")),)
        assert cat["M'"].presentation.relations == m + ((W("cba"), ()),)
        assert cat["N1'"].base is cat["N1"]

    def test_strategies(self, cat):
        assert cat["M"].strategy == "schensted"
        assert cat["N1"].strategy == cat["N2"].strategy == "class-bfs"
        assert {cat[n].strategy for n in ("M'", "N1'", "N2'")} == {"strip-z-over-base"}

    def test_flags(self, cat):
        assert cat["M"].presentation.length_preserving
        assert cat["N2"].presentation.balanced
        assert not cat["M'"].presentation.length_preserving

    def test_aliases(self, cat):
        assert get_monoid("M′") is cat["M'"] is get_monoid("Mp")
        with pytest.raises(StrategyError):
            get_monoid("N3")


class TestCongruenceClass:
    def test_examples(self, cat):
        assert congruence_class(M_PRESENTATION, W("bac")).members == {W("bac"), W("bca")}
        assert congruence_class(M_PRESENTATION, W("cba")).members == {W("cba")}
        n1 = cat["N1"].presentation
        assert congruence_class(n1, W("ac")).members == {W("ac"), W("ca")}

    @given(words(7))
    def test_closed_and_content_preserving(self, w):
        cls = congruence_class(catalog()["N2"].presentation, w)
        for m in cls.members:
            assert sorted(m) == sorted(w)
            for lhs, rhs in catalog()["N2"].presentation.relations:
                for i in range(len(m) - len(lhs) + 1):
                    if m[i:i + len(lhs)] == lhs:
                        assert m[:i] + rhs + m[i + len(lhs):] in cls
        assert cls.canon == min(cls.members)

    def test_caps(self, monkeypatch):
        monkeypatch.setenv("PLACTIC_MAX_CLASS", "5")
        with pytest.raises(CapExceeded):
            congruence_class(M_PRESENTATION, W("bcabca"))
        monkeypatch.setenv("PLACTIC_MAX_WORD_LEN", "4")
        with pytest.raises(CapExceeded):
            congruence_class(M_PRESENTATION, W("abcab"))

    def test_rejects_length_changing(self, cat):
        with pytest.raises(StrategyError):
            congruence_class(cat["M'"].presentation, W("cba"))


class TestCanonicalAndEqual:
    def test_canonical_examples(self, cat):
        assert canonical(cat["M"], W("baa")) == reading_word(normal_form(W("aba")))
        assert canonical(cat["N1"], W("ca")) == W("ac")
        assert canonical(cat["M'"], W("cba")) == ()

    def test_equal_examples(self, cat):
        assert equal(cat["N2"], W("bacb"), W("cbab"))
        assert not equal(cat["M"], W("bacb"), W("cbab"))
        assert equal(cat["M'"], W("abcba"), W("ab"))
        assert not equal(cat["M"], W("cbab"), W("bcab"))

    def test_different_lengths(self, cat):
        assert not equal(cat["N1"], W("ab"), W("abc"))
        assert equal(cat["N2'"], W("cbaa"), W("a"))

    @pytest.mark.parametrize("name", ["M", "N1", "N2"])
    def test_canonical_is_lex_least_for_quotients(self, name, cat):
        h = cat[name]
        rng = random.Random(7)
        for _ in range(40):
            w = tuple(rng.randrange(3) for _ in range(rng.randrange(8)))
            c = h.canonical(w)
            assert h.equal(c, w)
            if name != "M":
                assert c == congruence_class(h.presentation, w).canon

    def test_transitivity_sampled(self, cat):
        rng = random.Random(3)
        for name in ("M", "N1", "N2", "M'"):
            h = cat[name]
            for _ in range(200):
                n = rng.randrange(8)
                u, v, w = (tuple(rng.randrange(3) for _ in range(n)) for _ in range(3))
                if h.equal(u, v) and h.equal(v, w):
                    assert h.equal(u, w)

    @pytest.mark.parametrize("n", range(7))
    def test_quotient_monotonicity(self, n, cat):
        m = cat["M"].word_labels(n)
        for name in ("N1", "N2"):
            q = cat[name].word_labels(n)
            # every M-class lies inside one quotient class
            pairs = np.unique(np.stack([m, q], axis=1), axis=0)
            assert len(np.unique(pairs[:, 0])) == len(pairs)

    def test_quotient_monotonicity_for_z1(self, cat):
        for name in ("N1", "N2"):
            h, hp = cat[name], cat[name + "'"]
            for n in range(6):
                for i in range(0, 3 ** n, 5):
                    u = index_word(i, n, 3)
                    v = h.canonical(u)
                    assert hp.equal(u, v)


class TestZ:
    def test_divisible_examples(self, cat):
        assert divisible_by_z(cat["M"], W("cba"))
        assert not divisible_by_z(cat["M"], W("bac"))

    def test_bca_in_n1_is_not_z_divisible(self, cat):
        # The class of bca in N1 is {bac, bca}: no member starts with cba.
        cls = congruence_class(cat["N1"].presentation, W("bca"))
        assert cls.members == {W("bac"), W("bca")}
        assert not divisible_by_z(cat["N1"], W("bca"))

    def test_valuation_examples(self, cat):
        assert z_valuation(cat["M"], W("cbacba")) == ((), 2)
        assert z_valuation(cat["M"], W("ab")) == (W("ab"), 0)
        assert z_valuation(cat["N2"], W("cba")) == ((), 1)

    @pytest.mark.parametrize("name", ["N1", "N2"])
    def test_engine_valuation_matches_class_scan(self, name, cat):
        h = cat[name]
        rng = random.Random(11)
        for _ in range(60):
            w = tuple(rng.randrange(3) for _ in range(rng.randrange(3, 9)))
            assert h.z_valuation(w) == class_z_valuation(h.presentation, w)

    @given(words(7))
    def test_valuation_is_class_invariant(self, w):
        for name in ("M", "N1", "N2"):
            h = catalog()[name]
            k = h.z_valuation(w)[1]
            for m in list(congruence_class(h.presentation, w).members)[:20]:
                assert h.z_valuation(m)[1] == k

    @given(words(9))
    def test_valuation_recomposes(self, w):
        for name in ("M", "N1", "N2"):
            h = catalog()[name]
            reduced, k = h.z_valuation(w)
            assert h.equal(W("cba") * k + reduced, w)
            assert not h.divisible_by_z(reduced)

    def test_equal_quotient_z1_examples(self, cat):
        m = cat["M"]
        assert equal_quotient_z1(m, W("cba"), ())
        assert not equal_quotient_z1(m, W("ab"), W("ba"))
        assert equal_quotient_z1(m, W("abcba"), W("cbaab"))

    def test_z_requires_rank_three_base(self, cat):
        with pytest.raises(StrategyError):
            cat["M'"].divisible_by_z(W("cba"))


class TestCentral:
    def test_examples(self, cat):
        m = cat["M"]
        assert is_central(m, W("cba"), 6)
        assert not is_central(m, W("a"), 6)
        assert central_witness(m, W("a")) == 1
        assert is_central(m, (), 0)

    def test_central_elements(self, cat):
        m = cat["M"]
        assert central_elements_up_to(m, 6) == [(), W("cba"), m.canonical(W("cbacba"))]
        assert central_elements_up_to(m, 2) == [()]
        assert central_elements_up_to(m, 0) == [()]


class TestWordPartition:
    def test_labels_are_lex_least(self):
        labels = word_partition(M_PRESENTATION, 3)
        assert index_word(int(labels[9 * 1 + 3 * 2 + 0]), 3, 3) == W("bac")  # bca -> bac

    def test_read_only(self):
        with pytest.raises(ValueError):
            word_partition(M_PRESENTATION, 2)[0] = 5


class TestLoadedPresentations:
    def test_round_trip(self, cat):
        for h in cat.values():
            p = h.presentation
            assert Presentation.from_json(json.loads(json.dumps(p.to_json()))) == p

    def test_strategy_selection(self, tmp_path):
        m = M_PRESENTATION.to_json()
        data = [
            dict(m, name="Mcopy"),
            dict(m, name="N3", relations=m["relations"] + [["ab", "ba"]]),
            dict(m, name="Mz", relations=m["relations"] + [["cba", ""]]),
            {"name": "free-comm", "alphabet": 2, "relations": [["ab", "ba"]]},
        ]
        path = tmp_path / "p.json"
        path.write_text(json.dumps(data))
        loaded = load_presentations(path)
        assert loaded["Mcopy"].strategy == "schensted"
        assert loaded["N3"].strategy == "class-bfs" and loaded["N3"]._engine is not None
        assert loaded["Mz"].strategy == "strip-z-over-base"
        assert loaded["free-comm"]._engine is None
        assert loaded["free-comm"].equal(W("aab"), W("aba"))
        assert loaded["N3"].equal(W("abc"), W("bac"))
        assert loaded["Mz"].equal(W("acba"), W("a"))

    def test_unsupported(self):
        with pytest.raises(StrategyError):
            monoid_from_presentation(Presentation("bad", 2, ((W("ab"), W("a")),)))
        with pytest.raises(StrategyError):
            Monoid(M_PRESENTATION, "rewrite")
