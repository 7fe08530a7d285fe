import math

import numpy as np
import pytest

from walkingtime.graph import (
    INF,
    ParseError,
    format_edge_list,
    intervals_intersect,
    parse_input,
    restrict_node,
    restrict_pair,
    static_union,
    transform_graph,
)

from helpers import graph_from_edges, random_input_graph


class TestParse:
    def test_interval_record(self):
        g = parse_input("I a b 2 3\n")
        assert g.interval_edges == [(0, 1, 2.0, 3.0)]
        assert g.labels == ["a", "b"]

    def test_point_record(self):
        g = parse_input("P a b 5\n")
        assert g.point_edges == [(0, 1, 5.0)]

    def test_persist_record(self):
        g = parse_input("S a b\n")
        assert g.persist_edges == [(0, 1)]

    def test_degenerate_interval_rejected(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_input("I a b 3 3\n")

    def test_reversed_interval_rejected(self):
        with pytest.raises(ParseError, match="start"):
            parse_input("I a b 4 3\n")

    def test_comments_and_blanks_skipped(self):
        g = parse_input("# header\n\nP a b 1\n   \n# tail\n")
        assert g.num_edges == 1

    def test_bad_arity_names_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_input("P a b 1\nI a b 1\n")

    def test_non_numeric_time(self):
        with pytest.raises(ParseError, match="non-numeric"):
            parse_input("P a b soon\n")

    def test_non_finite_time(self):
        with pytest.raises(ParseError, match="non-finite"):
            parse_input("P a b inf\n")

    def test_unknown_record_type(self):
        with pytest.raises(ParseError, match="unknown record"):
            parse_input("X a b\n")

    def test_labels_first_seen_order(self):
        g = parse_input("P x y 1\nP y z 2\nP a x 3\n")
        assert g.labels == ["x", "y", "z", "a"]

    def test_multiplicity_preserved(self):
        g = parse_input("P a b 1\nP a b 1\nP a b 1\n")
        assert len(g.point_edges) == 3

    def test_self_loop_accepted(self):
        g = parse_input("P a a 1\n")
        assert g.point_edges == [(0, 0, 1.0)]

    def test_format_parse_round_trip(self):
        # ids may be re-interned in file order; labeled edges must survive
        def labeled(g):
            lab = g.labels
            return (
                sorted((lab[u], lab[v], a, b) for u, v, a, b in g.interval_edges),
                sorted((lab[u], lab[v], t) for u, v, t in g.point_edges),
                sorted((lab[u], lab[v]) for u, v in g.persist_edges),
            )

        rng = np.random.default_rng(7)
        for _ in range(20):
            g = random_input_graph(rng)
            g2 = parse_input(format_edge_list(g))
            assert labeled(g2) == labeled(g)


class TestTransform:
    def test_persist_maps_to_indefinite_interval(self):
        g = parse_input("S u v\n")
        tg = transform_graph(g, 3.5)
        (e,) = tg.edges
        assert e.start == -INF and e.end == INF

    def test_point_widened_both_sides(self):
        g = parse_input("P u v 5\n")
        (e,) = transform_graph(g, 1.0).edges
        assert (e.start, e.end) == (4.0, 6.0)

    def test_interval_identity_at_zero(self):
        g = parse_input("I u v 2 3\n")
        (e,) = transform_graph(g, 0.0).edges
        assert (e.start, e.end) == (2.0, 3.0)

    def test_point_degenerate_at_zero(self):
        g = parse_input("P u v 5\n")
        (e,) = transform_graph(g, 0.0).edges
        assert e.start == e.end == 5.0

    def test_negative_extension_rejected(self):
        with pytest.raises(ValueError):
            transform_graph(parse_input("P u v 5\n"), -0.1)

    def test_multiplicity_preserved_for_all_inputs(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            g = random_input_graph(rng)
            tg = transform_graph(g, float(rng.integers(0, 9)) / 4.0)
            assert tg.num_edges == g.num_edges

    def test_monotone_in_extension(self):
        rng = np.random.default_rng(13)
        for _ in range(30):
            g = random_input_graph(rng)
            lam1 = int(rng.integers(0, 8)) / 4.0
            lam2 = lam1 + int(rng.integers(0, 8)) / 4.0
            t1 = transform_graph(g, lam1)
            t2 = transform_graph(g, lam2)
            for e1, e2 in zip(t1.edges, t2.edges):
                assert e2.start <= e1.start and e1.end <= e2.end

    def test_adjacency_lists_sorted_by_start(self):
        g = parse_input("I a b 5 6\nI a c 1 2\nP a d 3\n")
        tg = transform_graph(g, 0.0)
        starts = [tg.edges[i].start for i in tg.adjacency[0]]
        assert starts == sorted(starts)

    def test_edges_appear_in_both_adjacency_lists(self):
        tg = transform_graph(parse_input("P a b 1\n"), 0.0)
        assert tg.adjacency[0] == [0] and tg.adjacency[1] == [0]

    def test_self_loop_listed_once(self):
        tg = transform_graph(parse_input("P a a 1\n"), 0.0)
        assert tg.adjacency[0] == [0]


class TestRestrict:
    def test_restrict_node_incidence(self):
        g = graph_from_edges(3, [(0, 1, 0, 1), (1, 2, 2, 3)])
        assert len(restrict_node(g.edges, 1)) == 2
        assert [e.eid for e in restrict_node(g.edges, 0)] == [0]
        assert restrict_node([], 0) == []

    def test_restrict_pair_unordered(self):
        g = graph_from_edges(3, [(0, 1, 0, 1), (0, 2, 0, 1)])
        assert [e.eid for e in restrict_pair(g.edges, 0, 1)] == [0]
        assert [e.eid for e in restrict_pair(g.edges, 1, 0)] == [0]

    def test_restrict_pair_self_needs_explicit_loop(self):
        g = graph_from_edges(2, [(0, 1, 0, 1)])
        assert restrict_pair(g.edges, 0, 0) == []
        g2 = graph_from_edges(2, [(0, 0, 0, 1)])
        assert len(restrict_pair(g2.edges, 0, 0)) == 1

    def test_pair_subset_of_node_restrictions(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            g = transform_graph(random_input_graph(rng), 0.25)
            v, u = int(rng.integers(g.num_nodes)), int(rng.integers(g.num_nodes))
            pair = {e.eid for e in restrict_pair(g.edges, v, u)}
            both = {e.eid for e in restrict_node(g.edges, v)} & {
                e.eid for e in restrict_node(g.edges, u)
            }
            assert pair <= both


class TestIntervals:
    def test_closed_endpoints_touch(self):
        assert intervals_intersect(0, 1, 1, 2)
        assert not intervals_intersect(0, 1, 1.25, 2)

    def test_symmetric_and_reflexive(self):
        rng = np.random.default_rng(19)
        for _ in range(50):
            a1, a2 = rng.integers(0, 20, 2) / 4.0
            b1 = a1 + rng.integers(0, 8) / 4.0
            b2 = a2 + rng.integers(0, 8) / 4.0
            assert intervals_intersect(a1, b1, a2, b2) == intervals_intersect(a2, b2, a1, b1)
            assert intervals_intersect(a1, b1, a1, b1)

    def test_indefinite_meets_everything(self):
        assert intervals_intersect(-INF, INF, 5, 5)
        assert intervals_intersect(-INF, INF, -INF, INF)


class TestStaticUnion:
    def test_parallel_edges_collapse(self):
        g = graph_from_edges(2, [(0, 1, 0, 1), (0, 1, 5, 6)])
        sg = static_union(g)
        assert sg.edges == {(0, 1)}
        assert sg.nodes == {0, 1}

    def test_empty_graph(self):
        g = graph_from_edges(0, [])
        sg = static_union(g)
        assert sg.nodes == set() and sg.edges == set()

    def test_triangle_with_disjoint_intervals(self):
        g = graph_from_edges(3, [(0, 1, 0, 1), (1, 2, 5, 6), (0, 2, 10, 11)])
        assert static_union(g).edges == {(0, 1), (1, 2), (0, 2)}


def test_node_id_lookup():
    g = transform_graph(parse_input("P a b 1\n"), 0.0)
    assert g.node_id("b") == 1
    with pytest.raises(KeyError):
        g.node_id("zzz")
    with pytest.raises(KeyError):
        g.incident(5)


def test_times_are_float64_with_infinities():
    g = transform_graph(parse_input("S a b\n"), 0.0)
    assert math.isinf(g.edges[0].end)
    assert isinstance(g.edges[0].start, float)
