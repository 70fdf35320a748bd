"""Tests for the .hg text format and rational string helpers."""

from fractions import Fraction

import pytest

from fsts import dumps_hg, loads_hg
from fsts.errors import HgParseError, InputError
from fsts.serialize import format_fraction, parse_fraction


class TestHgFormat:
    def test_round_trip(self, k7):
        assert loads_hg(dumps_hg(k7)) == k7

    def test_comment_and_blank_lines(self):
        text = "# generated\n\n3 5 2   # header\n0 1 2\n\n# mid comment\n2 3 4\n"
        h = loads_hg(text)
        assert h.edges == ((0, 1, 2), (2, 3, 4))

    def test_header_errors_carry_line_numbers(self):
        with pytest.raises(HgParseError, match="line 2"):
            loads_hg("# c\n3 5\n0 1 2\n")

    def test_edge_arity_error(self):
        with pytest.raises(HgParseError, match="line 2: expected 3 vertex ids"):
            loads_hg("3 5 1\n0 1\n")

    def test_non_integer_vertex(self):
        with pytest.raises(HgParseError, match="non-integer vertex"):
            loads_hg("3 5 1\n0 x 2\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(HgParseError, match="announces 3 edges"):
            loads_hg("3 5 3\n0 1 2\n1 2 3\n")

    def test_empty_file(self):
        with pytest.raises(HgParseError, match="missing"):
            loads_hg("# nothing here\n")

    def test_semantic_errors_surface(self):
        with pytest.raises(HgParseError, match="line 3: duplicate edge"):
            loads_hg("3 5 2\n0 1 2\n2 1 0\n")

    def test_vertex_range_checked_with_line(self):
        with pytest.raises(HgParseError, match="line 2: vertex id outside 0..4"):
            loads_hg("3 5 1\n0 1 9\n")

    def test_dump_contains_comment(self, k5):
        text = dumps_hg(k5, comment="complete")
        assert text.startswith("# complete\n3 5 10\n")


class TestFractionStrings:
    def test_round_trip(self):
        for value in (Fraction(1, 3), Fraction(-1, 6), Fraction(0), Fraction(7)):
            assert parse_fraction(format_fraction(value)) == value

    def test_always_slash_form(self):
        assert format_fraction(Fraction(2)) == "2/1"
        assert format_fraction(Fraction(0)) == "0/1"

    def test_integer_string_accepted(self):
        assert parse_fraction("5") == 5

    def test_malformed(self):
        with pytest.raises(InputError, match="malformed rational"):
            parse_fraction("a/b")
        with pytest.raises(InputError, match="malformed rational"):
            parse_fraction("1/0")
