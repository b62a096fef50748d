import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import stackedcx as sc
from stackedcx import errors
from stackedcx.generators import all_trees, random_stacked

from conftest import cx, facet


class TestBuild:
    def test_two_edge_tree(self):
        X = cx("1 2", "2 3")
        assert (X.dim, X.n_facets, X.n_vertices) == (1, 2, 3)

    def test_heptagon_counts(self, heptagon):
        assert (heptagon.dim, heptagon.n_facets, heptagon.n_vertices) == (2, 5, 7)

    def test_mixed_sizes_rejected(self):
        with pytest.raises(errors.NotPureError):
            cx("1 2", "1 2 3")

    def test_empty_input(self):
        with pytest.raises(errors.EmptyInputError):
            sc.build_complex([])

    def test_duplicate_facet(self):
        with pytest.raises(errors.DuplicateFacetError):
            cx("1 2", "2 3", "2 1")

    def test_duplicate_vertex_in_facet(self):
        with pytest.raises(errors.DuplicateVertexError):
            sc.build_complex([["1", "1", "2"]])

    def test_dimension_zero_rejected(self):
        with pytest.raises(errors.ZeroDimensionError):
            sc.build_complex([["1"], ["2"]])

    def test_bad_token(self):
        with pytest.raises(errors.InputError):
            sc.build_complex([["a b", "c"]])

    def test_numeric_tokens_sort_numerically(self):
        X = cx("10 2", "2 b")
        assert X.labels == ("2", "10", "b")

    def test_canonical_independent_of_input_order(self):
        a = cx("2 3 4", "2 4 5")
        b = cx("5 4 2", "4 3 2")
        assert a == b and hash(a) == hash(b)

    def test_facet_lookup(self, heptagon):
        i = facet(heptagon, "2,5,7")
        assert heptagon.facet_tokens(i) == ("2", "5", "7")
        with pytest.raises(errors.InputError):
            heptagon.facet_from_tokens(["1", "3", "5"])


class TestStacking:
    def test_single_facet(self):
        X = cx("1 2 3")
        order = sc.find_stacking_order(X)
        assert order == sc.StackingOrder(order=(0,), free_vertices=())
        assert sc.is_stacked(X)

    def test_heptagon_order_replays(self, heptagon):
        order = sc.find_stacking_order(heptagon)
        assert order is not None
        assert sc.replay_stacking_order(heptagon, order)
        assert sc.is_stacked(heptagon)

    def test_two_triangles_sharing_vertex(self):
        X = cx("1 2 3", "1 4 5")
        assert sc.find_stacking_order(X) is None
        assert not sc.is_stacked(X)

    def test_tetrahedron_boundary(self):
        X = cx("1 2 3", "1 2 4", "1 3 4", "2 3 4")
        assert X.n_vertices != X.n_facets + X.dim
        assert not sc.is_stacked(X)

    def test_cycle_plus_lone_edge_passes_count_but_not_stacked(self):
        # v = n + d holds, yet the triangle of edges cannot be peeled
        X = cx("1 2", "2 3", "1 3", "4 5")
        assert X.n_vertices == X.n_facets + X.dim
        assert sc.find_stacking_order(X) is None

    def test_all_small_trees_are_stacked(self):
        for T in all_trees(5):
            assert T.n_vertices == T.n_facets + 1
            assert sc.is_stacked(T)

    def test_replay_rejects_wrong_free_vertex(self, heptagon):
        order = sc.find_stacking_order(heptagon)
        wrong = sc.StackingOrder(order=order.order,
                                 free_vertices=order.free_vertices[::-1])
        bad = wrong.free_vertices != order.free_vertices
        assert not bad or not sc.replay_stacking_order(heptagon, wrong)

    @given(st.integers(0, 200))
    @settings(max_examples=40, deadline=None)
    def test_random_stackings_certify(self, seed):
        X = random_stacked(1 + seed % 3, 1 + seed % 8, seed)
        order = sc.find_stacking_order(X)
        assert order is not None
        assert sc.replay_stacking_order(X, order)


class TestRestrict:
    def test_path_tree(self):
        X = cx("1 2", "2 3")
        ids = {X.id_of("1"), X.id_of("2")}
        assert sc.restrict(X, ids) == (X.facet_from_tokens(["1", "2"]),)

    def test_heptagon(self, heptagon):
        region = {heptagon.id_of(t) for t in "2345"}
        got = sc.restrict(heptagon, region)
        assert got == (facet(heptagon, "2,3,4"), facet(heptagon, "2,4,5"))

    def test_empty_region(self, heptagon):
        assert sc.restrict(heptagon, ()) == ()

    def test_full_region_identity(self, heptagon):
        assert sc.restrict(heptagon, range(heptagon.n_vertices)) == \
            tuple(range(heptagon.n_facets))

    @given(st.integers(0, 500))
    @settings(max_examples=40, deadline=None)
    def test_monotone(self, seed):
        import random
        rng = random.Random(seed)
        X = random_stacked(1 + seed % 3, 1 + seed % 6, seed)
        verts = list(range(X.n_vertices))
        small = {v for v in verts if rng.random() < 0.5}
        large = small | {v for v in verts if rng.random() < 0.5}
        assert set(sc.restrict(X, small)) <= set(sc.restrict(X, large))


class TestDualAdjacency:
    def test_line_tree_is_path_graph(self):
        X = sc.line_graph(3)
        adj = sc.dual_adjacency(X)
        degrees = sorted(len(n) for n in adj)
        assert degrees == [1, 1, 2]

    def test_star_is_complete(self, star_tree):
        adj = sc.dual_adjacency(star_tree)
        assert all(len(n) == 2 for n in adj)

    def test_heptagon_edges(self, heptagon):
        adj = sc.dual_adjacency(heptagon)
        edges = {tuple(sorted((f, g))) for f, ns in enumerate(adj) for g in ns}
        expected_pairs = [("2,3,4", "2,4,5"), ("2,4,5", "2,5,7"),
                          ("2,5,7", "5,6,7"), ("2,5,7", "1,2,7")]
        expected = {tuple(sorted((facet(heptagon, a), facet(heptagon, b))))
                    for a, b in expected_pairs}
        assert edges == expected

    def test_connected_for_stacked(self):
        for seed in range(10):
            X = random_stacked(2, 6, seed)
            adj = sc.dual_adjacency(X)
            seen = {0}
            stack = [0]
            while stack:
                for g in adj[stack.pop()]:
                    if g not in seen:
                        seen.add(g)
                        stack.append(g)
            assert len(seen) == X.n_facets


def test_subcomplex_keeps_tokens(heptagon):
    sub = sc.subcomplex(heptagon, [facet(heptagon, "2,3,4"),
                                   facet(heptagon, "2,4,5")])
    assert sub.labels == ("2", "3", "4", "5")
    assert sub.n_facets == 2
