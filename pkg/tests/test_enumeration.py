from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from treeirr import (
    EnumerationGuard,
    Tree,
    all_trees,
    all_trees_by_realization,
    canonical_code,
    degrees,
    path,
    prufer_decode,
    relocate_leaf,
    star,
    tree_degree_sequences,
    trees_with_degree_sequence,
    validate_tree_sequence,
)
from treeirr.enumeration import realization_count

from _brute import brute_canonical, spanning_trees, unlabeled_tree_count


class TestAllTrees:
    def test_tiny_orders(self):
        assert len(list(all_trees(1))) == 1
        assert len(list(all_trees(4))) == 2
        assert len(list(all_trees(7))) == 11

    @pytest.mark.parametrize("n", range(1, 13))
    def test_counts_match_recurrence(self, n):
        assert len(list(all_trees(n))) == unlabeled_tree_count(n)

    def test_no_duplicates_and_sorted_emission(self):
        for n in range(1, 11):
            codes = [canonical_code(t) for t in all_trees(n)]
            assert codes == sorted(codes)
            assert len(codes) == len(set(codes))

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_against_edge_subset_enumeration(self, n):
        # Third, fully independent route: all labeled trees from edge
        # subsets, collapsed by brute-force relabeling.
        classes = {brute_canonical(n, t) for t in spanning_trees(n)}
        assert len(list(all_trees(n))) == len(classes)

    def test_guard(self):
        with pytest.raises(EnumerationGuard):
            list(all_trees(0))
        with pytest.raises(EnumerationGuard):
            list(all_trees(17))
        # raising the cap is an explicit opt-in
        assert len(list(all_trees(13, max_order=13))) == unlabeled_tree_count(13)

    def test_cross_validation_enumerators(self):
        for n in range(1, 11):
            a = [canonical_code(t) for t in all_trees(n)]
            b = [canonical_code(t) for t in all_trees_by_realization(n)]
            assert a == b


class TestDegreeSequences:
    def test_order_four(self):
        values = [seq.values for seq in tree_degree_sequences(4)]
        assert values == [(3, 1, 1, 1), (2, 2, 1, 1)]

    def test_all_tree_graphical(self):
        for n in range(1, 10):
            for seq in tree_degree_sequences(n):
                assert seq.tree_graphical

    def test_covers_every_tree(self):
        for n in range(2, 9):
            wanted = {tuple(sorted(degrees(t), reverse=True)) for t in all_trees(n)}
            produced = {seq.values for seq in tree_degree_sequences(n)}
            assert wanted == produced


class TestRealization:
    def test_star_sequence_unique(self):
        found = list(trees_with_degree_sequence(validate_tree_sequence((3, 1, 1, 1))))
        assert len(found) == 1
        assert canonical_code(found[0]) == canonical_code(star(3))

    def test_path_sequence_unique(self):
        found = list(trees_with_degree_sequence((2, 2, 1, 1)))
        assert len(found) == 1
        assert canonical_code(found[0]) == canonical_code(path(4))

    def test_broom_spider_sequence(self):
        found = list(trees_with_degree_sequence((3, 2, 2, 1, 1, 1)))
        assert len(found) == 2
        want = {
            brute_canonical(6, t)
            for t in spanning_trees(6)
            if sorted(Counter(v for e in t for v in e).values(), reverse=True)
            == [3, 2, 2, 1, 1, 1]
        }
        assert len(want) == 2

    def test_emitted_trees_have_requested_degrees(self):
        for n in range(2, 9):
            for seq in tree_degree_sequences(n):
                for t in trees_with_degree_sequence(seq):
                    assert tuple(sorted(degrees(t), reverse=True)) == seq.values

    def test_filter_equivalence_with_all_trees(self):
        for n in range(2, 9):
            by_seq = {}
            for seq in tree_degree_sequences(n):
                by_seq[seq.values] = {
                    canonical_code(t) for t in trees_with_degree_sequence(seq)
                }
            from_all = {}
            for t in all_trees(n):
                key = tuple(sorted(degrees(t), reverse=True))
                from_all.setdefault(key, set()).add(canonical_code(t))
            assert by_seq == from_all

    def test_realization_count_is_multinomial(self):
        assert realization_count(validate_tree_sequence((2, 2, 1, 1))) == 2
        assert realization_count(validate_tree_sequence((3, 1, 1, 1))) == 1

    def test_code_cap_guard(self):
        seq = validate_tree_sequence((2,) * 10 + (1, 1))
        with pytest.raises(EnumerationGuard, match="cap"):
            list(trees_with_degree_sequence(seq, code_cap=10))

    def test_single_vertex_and_edge(self):
        assert list(trees_with_degree_sequence((0,))) == [Tree(1, [])]
        assert list(trees_with_degree_sequence((1, 1))) == [path(2)]


class TestRelocation:
    def test_star_to_path(self):
        from treeirr import compute_indices

        t = star(3)
        moved, step = relocate_leaf(t, 0, 1, 2)
        assert canonical_code(moved) == canonical_code(path(4))
        assert compute_indices(t).irr == 6
        assert compute_indices(moved).irr == 2
        assert step.degrees_before == (3, 1, 1)
        assert step.degrees_after == (2, 1, 2)

    def test_fixture_drop(self):
        from treeirr import compute_indices
        from treeirr.claims import load_fig2_tree

        t = load_fig2_tree()
        moved, _ = relocate_leaf(t, 4, 7, 8)
        assert compute_indices(moved).irr == 16

    def test_low_degree_rejected(self):
        with pytest.raises(ValueError, match="lambda below 3"):
            relocate_leaf(path(3), 1, 0, 2)

    def test_donor_must_be_pendant_neighbor(self):
        t = caterpillar_fixture()
        with pytest.raises(ValueError, match="not a leaf"):
            relocate_leaf(t, 1, 0, 2)

    def test_recipient_must_differ(self):
        t = star(3)
        with pytest.raises(ValueError, match="another neighbor"):
            relocate_leaf(t, 0, 1, 1)

    def test_sweep_preserves_order_and_leaf_count(self):
        # Donor stays a leaf; the recipient may stop being one, so the leaf
        # count never grows and drops by at most one.
        for n in range(4, 8):
            for t in all_trees(n):
                deg = degrees(t)
                for y in range(n):
                    if deg[y] < 3:
                        continue
                    donors = [w for w in t.adjacency[y] if deg[w] == 1]
                    for donor in donors:
                        for recipient in t.adjacency[y]:
                            if recipient == donor:
                                continue
                            moved, step = relocate_leaf(t, y, donor, recipient)
                            assert moved.n == t.n
                            drop = len(t.leaves()) - len(moved.leaves())
                            assert drop in (0, 1)
                            assert step.degrees_after[0] == deg[y] - 1

    @settings(max_examples=150, deadline=None)
    @given(st.data())
    def test_degree_deltas_random(self, data):
        n = data.draw(st.integers(4, 9))
        code = data.draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
        t = prufer_decode(code, n)
        deg = degrees(t)
        options = [
            (y, d, r)
            for y in range(n)
            if deg[y] >= 3
            for d in t.adjacency[y]
            if deg[d] == 1
            for r in t.adjacency[y]
            if r != d
        ]
        if not options:
            return
        y, donor, recipient = data.draw(st.sampled_from(options))
        moved, _ = relocate_leaf(t, y, donor, recipient)
        after = degrees(moved)
        for v in range(n):
            expected = deg[v] + (v == recipient) - (v == y)
            assert after[v] == expected


def caterpillar_fixture():
    from treeirr import caterpillar

    return caterpillar((2, 3, 2))
