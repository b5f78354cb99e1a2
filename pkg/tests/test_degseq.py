from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from treeirr import (
    DegreeSequence,
    NotTreeGraphical,
    Tree,
    build_special,
    caterpillar,
    path,
    prufer_decode,
    prufer_encode,
    star,
    validate_tree_sequence,
)
from treeirr.degseq import degree_sequence_of, parse_degree_sequence


class TestValidation:
    @pytest.mark.parametrize("values", [(3, 1, 1, 1), (2, 2, 1, 1), (0,), (1, 1)])
    def test_accepts(self, values):
        seq = validate_tree_sequence(values)
        assert seq.tree_graphical

    def test_sorts_input(self):
        assert validate_tree_sequence([1, 3, 1, 1]).values == (3, 1, 1, 1)

    def test_rejects_bad_sum(self):
        with pytest.raises(NotTreeGraphical, match="sum"):
            validate_tree_sequence((2, 2, 2))

    def test_rejects_nonpositive(self):
        with pytest.raises(NotTreeGraphical, match="zero or negative"):
            validate_tree_sequence((2, 1, 1, 0))

    def test_rejects_empty(self):
        with pytest.raises(NotTreeGraphical, match="empty"):
            validate_tree_sequence(())

    def test_rejects_lone_nonzero(self):
        with pytest.raises(NotTreeGraphical):
            validate_tree_sequence((1,))

    def test_multiset_notation(self):
        assert validate_tree_sequence((3, 2, 2, 1, 1, 1)).multiset() == {3: 1, 2: 2, 1: 3}

    def test_unsorted_rejected_by_type(self):
        with pytest.raises(ValueError, match="non-increasing"):
            DegreeSequence((1, 2))

    def test_parse_line(self):
        assert parse_degree_sequence(" 1 3 1 1 ").values == (3, 1, 1, 1)
        with pytest.raises(NotTreeGraphical, match="non-integer"):
            parse_degree_sequence("1 x 1")


class TestPrufer:
    def test_encode_path(self):
        assert prufer_encode(path(4)) == (1, 2)

    def test_decode_star(self):
        assert prufer_decode((0, 0), 4) == star(3)

    def test_two_vertex_roundtrip(self):
        assert prufer_encode(path(2)) == ()
        assert prufer_decode((), 2) == path(2)

    def test_code_multiplicity_matches_degree(self):
        t = caterpillar((3, 5))
        code = prufer_encode(t)
        for v in range(t.n):
            assert code.count(v) == t.degree(v) - 1

    def test_decode_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            prufer_decode((4,), 3)

    def test_decode_rejects_wrong_length(self):
        with pytest.raises(ValueError, match="length"):
            prufer_decode((0,), 4)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_roundtrip_and_cayley_count(self, n):
        seen = set()
        for code in product(range(n), repeat=n - 2):
            t = prufer_decode(code, n)
            assert prufer_encode(t) == code
            seen.add(t.edges)
        assert len(seen) == n ** (n - 2)

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_roundtrip_random(self, data):
        n = data.draw(st.integers(2, 9))
        code = tuple(
            data.draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
        )
        assert prufer_encode(prufer_decode(code, n)) == code


class TestBuilders:
    def test_star_degrees(self):
        assert degree_sequence_of(star(4)).values == (4, 1, 1, 1, 1)

    def test_path_order_one(self):
        assert path(1) == Tree(1, [])

    def test_caterpillar_two_spine(self):
        t = caterpillar((3, 5))
        assert t.n == 8
        assert sum(t.degree(v) for v in range(t.n)) == 14
        assert t.degree(0) == 3 and t.degree(1) == 5

    def test_caterpillar_odd_spine_family(self):
        # Spine degrees 3, 5, ..., 2m+1 give order m^2 + m + 2.
        for m in range(1, 8):
            spine = [2 * k + 1 for k in range(1, m + 1)]
            t = caterpillar(spine)
            assert t.n == m * m + m + 2
            assert sum(spine) == m * (m + 2)

    def test_caterpillar_prescribes_spine_degrees(self):
        spine = (4, 2, 3, 5)
        t = caterpillar(spine)
        for i, s in enumerate(spine):
            assert t.degree(i) == s

    def test_caterpillar_rejects_internal_low_degree(self):
        with pytest.raises(ValueError, match="infeasible"):
            caterpillar((3, 1, 3))

    def test_caterpillar_single_slot(self):
        assert caterpillar((3,)) == star(3)

    def test_builder_outputs_validate(self):
        for t in (star(5), path(6), caterpillar((2, 3, 4))):
            seq = degree_sequence_of(t)
            assert validate_tree_sequence(seq.values) == seq

    def test_dispatch(self):
        assert build_special("star", {"leaves": 4}) == star(4)
        assert build_special("path", {"order": 5}) == path(5)
        assert build_special("caterpillar", {"spine": (3, 5)}) == caterpillar((3, 5))
        with pytest.raises(ValueError, match="unknown kind"):
            build_special("wheel", {})
