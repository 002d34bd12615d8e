import pytest
from hypothesis import given

from plactic3.presentations import M_PRESENTATION, congruence_class
from plactic3.tableau import (
    Tableau,
    content_of,
    equal_M,
    multiply,
    normal_form,
    reading_word,
    schensted_insert,
    strip_z,
)
from plactic3.words import WordError, content, parse_word

from conftest import words

W = parse_word
A, B, C = 0, 1, 2


class TestInsert:
    def test_column_from_decreasing_letters(self):
        t = Tableau.empty()
        for x in (C, B, A):
            t = schensted_insert(t, x)
        assert t.rows == ((A,), (B,), (C,))

    def test_first_cell(self):
        assert schensted_insert(Tableau.empty(), A).rows == ((A,),)

    def test_no_bump_for_larger_letter(self):
        assert schensted_insert(Tableau.from_rows([[A]]), B).rows == ((A, B),)

    def test_bumps_leftmost_strictly_larger(self):
        t = Tableau.from_rows([[A, B, B]])
        assert schensted_insert(t, A).rows == ((A, A, B), (B,))

    def test_letter_out_of_range(self):
        with pytest.raises(WordError):
            schensted_insert(Tableau.empty(), 3)

    def test_rank_generic(self):
        t = normal_form(W("dcba", 4), rank=4)
        assert t.shape == (1, 1, 1, 1)
        assert reading_word(t) == W("dcba", 4)


class TestNormalForm:
    def test_knuth_pair(self):
        assert normal_form(W("aba")) == normal_form(W("baa"))

    def test_proper_pair(self):
        assert normal_form(W("cbab")) != normal_form(W("bcab"))

    def test_z_is_a_column(self):
        assert normal_form(W("cba")).to_json() == ["a", "b", "c"]

    @pytest.mark.parametrize("u, v, expected", [
        ("bab", "bba", True),
        ("bacb", "cbab", False),
        ("ab", "ba", False),
    ])
    def test_equal_M(self, u, v, expected):
        assert equal_M(W(u), W(v)) is expected

    def test_matches_class_oracle_on_a_class(self):
        cls = congruence_class(M_PRESENTATION, W("cbabca"))
        assert len({normal_form(w) for w in cls.members}) == 1

    def test_long_words_skip_the_cache(self):
        w = W("cba") * 30
        assert strip_z(normal_form(w)).power == 30


class TestReadingWord:
    def test_examples(self):
        assert reading_word(Tableau.from_rows([[A], [B], [C]])) == W("cba")
        assert reading_word(Tableau.from_rows([[A, B]])) == W("ab")
        assert reading_word(Tableau.empty()) == ()

    @given(words(10))
    def test_idempotent(self, w):
        t = normal_form(w)
        assert normal_form(reading_word(t)) == t


class TestStripZ:
    def test_examples(self):
        d = strip_z(normal_form(W("cba")))
        assert d.reduced == Tableau.empty() and d.power == 1
        d = strip_z(normal_form(W("ab")))
        assert d.reduced == normal_form(W("ab")) and d.power == 0
        d = strip_z(normal_form(W("cbacba")))
        assert d.reduced == Tableau.empty() and d.power == 2

    @given(words(12))
    def test_recomposition(self, w):
        t = normal_form(w)
        d = strip_z(t)
        assert d.reduced.is_valid()
        assert len(d.reduced.shape) < 3
        assert equal_M(reading_word(d.reduced) + W("cba") * d.power, reading_word(t))


class TestContent:
    def test_examples(self):
        assert content_of(normal_form(W("cba"))) == (1, 1, 1)
        assert content_of(Tableau.empty()) == (0, 0, 0)
        assert content_of(normal_form(W("aba"))) == (2, 1, 0)

    @given(words(12))
    def test_preserved(self, w):
        assert content_of(normal_form(w)) == content(w, 3)


class TestProduct:
    @given(words(6), words(6))
    def test_induced_product(self, u, v):
        assert normal_form(u + v) == normal_form(reading_word(normal_form(u)) + v)
        assert multiply(normal_form(u), normal_form(v)) == normal_form(u + v)

    @given(words(5), words(5), words(5))
    def test_associative(self, u, v, w):
        s, t, r = normal_form(u), normal_form(v), normal_form(w)
        assert multiply(multiply(s, t), r) == multiply(s, multiply(t, r))


class TestSerialization:
    def test_json_rows_top_first(self):
        t = normal_form(W("cab"))
        assert t.to_json() == ["ab", "c"]
        assert Tableau.from_json(["ab", "c"]) == t
        assert str(t) == "[ab,c]"
        assert t.grid() == "a b\nc"

    @pytest.mark.parametrize("rows", [[[B], [A]], [[B], [C], [C]], [[B, A]], [[A], [B, C]]])
    def test_invalid_rows(self, rows):
        with pytest.raises(WordError):
            Tableau.from_rows(rows)
