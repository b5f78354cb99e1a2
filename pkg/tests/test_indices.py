import pytest

from treeirr import (
    Tree,
    all_trees,
    compute_indices,
    path,
    path_imbalance,
    star,
    total_irregularity_by_sequence,
)
from treeirr.claims import load_fig2_tree

from _brute import brute_indices


class TestComputeIndices:
    def test_path4(self):
        b = compute_indices(path(4))
        assert (b.irr, b.irr_t, b.sigma, b.m1, b.m2) == (2, 4, 2, 10, 8)

    def test_star4(self):
        b = compute_indices(star(4))
        assert (b.irr, b.irr_t, b.sigma, b.m1, b.m2) == (12, 12, 36, 20, 16)

    def test_star_law(self):
        for k in (3, 7, 20):
            assert compute_indices(star(k)).irr == k * (k - 1)

    def test_fixture_tree(self):
        b = compute_indices(load_fig2_tree())
        assert b.irr == 20
        assert b.sigma == 54

    def test_single_vertex_zero(self):
        b = compute_indices(Tree(1, []))
        assert (b.irr, b.irr_t, b.sigma, b.m1, b.m2) == (0, 0, 0, 0, 0)

    def test_single_edge_regular(self):
        b = compute_indices(path(2))
        assert (b.irr, b.irr_t, b.sigma) == (0, 0, 0)

    def test_against_definition_oracle(self):
        for n in range(1, 9):
            for t in all_trees(n):
                got = compute_indices(t)
                want = brute_indices(t.n, t.edges)
                assert (got.irr, got.irr_t, got.sigma, got.m1, got.m2) == (
                    want["irr"],
                    want["irr_T"],
                    want["sigma"],
                    want["m1"],
                    want["m2"],
                )

    def test_sandwich_inequalities(self):
        for n in range(1, 9):
            for t in all_trees(n):
                b = compute_indices(t)
                assert b.sigma <= b.irr ** 2 <= (n - 1) * b.sigma or n == 1

    def test_total_at_least_edge_version(self):
        for n in range(1, 9):
            for t in all_trees(n):
                b = compute_indices(t)
                assert b.irr_t >= b.irr


class TestTotalIrregularityBySequence:
    def test_star3(self):
        assert total_irregularity_by_sequence(star(3)) == 6

    def test_path3(self):
        assert total_irregularity_by_sequence(path(3)) == 2

    def test_single_edge(self):
        assert total_irregularity_by_sequence(path(2)) == 0

    def test_matches_pairwise_definition(self):
        for n in range(1, 8):
            for t in all_trees(n):
                assert total_irregularity_by_sequence(t) == compute_indices(t).irr_t


class TestPathImbalance:
    def test_path4_endpoints(self):
        assert path_imbalance(path(4), 0, 3) == 2

    def test_star_center_to_leaf(self):
        assert path_imbalance(star(4), 0, 1) == 3

    def test_fixture_leaf_to_leaf(self):
        # Leaf 1 up to the hub, across, and down to a pendant below vertex 4.
        assert path_imbalance(load_fig2_tree(), 1, 7) == 6

    def test_same_vertex(self):
        assert path_imbalance(path(5), 2, 2) == 0

    def test_symmetry(self):
        t = load_fig2_tree()
        for u in range(t.n):
            for v in range(t.n):
                assert path_imbalance(t, u, v) == path_imbalance(t, v, u)

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            path_imbalance(path(4), 0, 4)
