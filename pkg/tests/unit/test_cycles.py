import pytest

from seqpat._core import exceptions
from seqpat._core.cycles import format_cycles, format_witness, parse_cycles
from seqpat._core.sequence import Permutation, all_permutations, identity


class TestParseCycles:
    @pytest.mark.parametrize(
        "text, level, images",
        (
            ("(123)", 3, (2, 3, 1)),
            ("(13)", 3, (3, 2, 1)),
            ("(1)", 3, (1, 2, 3)),
            ("(1)(23)", 3, (1, 3, 2)),
            ("(12)(34)", 4, (2, 1, 4, 3)),
            ("(1 10)", 10, (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)),
            (" (1,3) ", 3, (3, 2, 1)),
        ),
    )
    def test_parse(self, text, level, images):
        assert parse_cycles(text, level).images == images

    @pytest.mark.parametrize("text", ("", "123", "(12", "(1a)", "(12)x", "(12)(2)", "(14)"))
    def test_invalid(self, text):
        with pytest.raises(exceptions.InvalidPermutation):
            parse_cycles(text, 3)


class TestFormatCycles:
    def test_identity(self):
        assert format_cycles(identity(4)) == "(1)"

    def test_examples(self):
        assert format_cycles(Permutation((2, 3, 1))) == "(123)"
        assert format_cycles(Permutation((2, 1, 4, 3))) == "(12)(34)"

    def test_large_order_uses_spaces(self):
        phi = parse_cycles("(1 10)", 10)
        assert format_cycles(phi) == "(1 10)"

    @pytest.mark.parametrize("level", (1, 2, 3, 4))
    def test_parse_inverts_format(self, level):
        for phi in all_permutations(level):
            assert parse_cycles(format_cycles(phi), level) == phi

    def test_witness(self):
        witness = (identity(3), Permutation((3, 2, 1)), identity(3))
        assert format_witness(witness) == "[(1),(13),(1)]"
