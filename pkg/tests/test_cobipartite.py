"""A/B/C typing, the cross-pattern conditions, and the staged verdict."""

from itertools import combinations

import pytest

from wordrep.graphs import CoBipartitePartition, Graph, named_witness
from wordrep.constructions import complement_path_graph
from wordrep.orientations import (
    Orientation,
    ShortcutSearcher,
    find_semi_transitive_orientation,
    iter_acyclic_outsets,
)
from wordrep.cobipartite import (
    NonTransitiveCliqueError,
    check_condition_ab,
    check_condition_quad,
    check_condition_typec,
    classify_vertex,
    clique_order,
    is_semi_transitive_cobip,
    sweep_orientations,
)


def join_graph(part_a, part_b, cross=None):
    """Two cliques plus the given cross edges (all of them when cross is None)."""
    edges = list(combinations(part_a, 2)) + list(combinations(part_b, 2))
    if cross is None:
        cross = [(a, b) for a in part_a for b in part_b]
    edges += cross
    g = Graph.from_edges(tuple(part_a) + tuple(part_b), edges)
    return g, CoBipartitePartition(tuple(part_a), tuple(part_b))


class TestCliqueOrder:
    def test_k3_order(self):
        g, _ = join_graph(["a", "b", "c"], [])
        o = Orientation.from_arcs(g, [("a", "b"), ("b", "c"), ("a", "c")])
        assert clique_order(o, ("a", "b", "c")).vertices == ("a", "b", "c")

    def test_cyclic_k3_rejected(self):
        g, _ = join_graph(["a", "b", "c"], [])
        o = Orientation.from_arcs(g, [("a", "b"), ("b", "c"), ("c", "a")])
        with pytest.raises(NonTransitiveCliqueError):
            clique_order(o, ("a", "b", "c"))

    def test_order_induced_k4(self):
        g, _ = join_graph(list("wxyz"), [])
        o = Orientation.from_order(g, list("wxyz"))
        assert clique_order(o, tuple("wxyz")).vertices == tuple("wxyz")


class TestClassifyVertex:
    def test_no_cross_edges_is_type_a_with_empty_interval(self):
        g, part = join_graph(["v"], ["p", "q"], cross=[])
        o = Orientation.from_order(g, ["v", "p", "q"])
        info = classify_vertex(o, part, "v")
        assert info.tag == "A" and info.interval == ()

    def test_type_c_boundary(self):
        # seven vertices: x against a 5-chain with in-edges from the top two
        # and out-edges to the bottom two
        chain = ["p1", "p2", "p3", "p4", "p5"]
        g, part = join_graph(
            ["x", "y"], chain,
            cross=[("x", "p1"), ("x", "p2"), ("x", "p4"), ("x", "p5")],
        )
        arcs = [(u, v) for u, v in combinations(chain, 2)]
        arcs += [("x", "y"), ("p1", "x"), ("p2", "x"), ("x", "p4"), ("x", "p5")]
        o = Orientation.from_arcs(g, arcs)
        info = classify_vertex(o, part, "x")
        assert info.tag == "C"
        assert info.source_group == ("p1", "p2")
        assert info.sink_group == ("p4", "p5")
        assert info.boundary == ("p2", "p4")

    def test_non_consecutive_out_edges_invalid(self):
        order = ["p1", "p2", "p3", "p4"]
        g, part = join_graph(["v"], order, cross=[("v", "p1"), ("v", "p3")])
        arcs = [(u, w) for u, w in combinations(order, 2)]
        arcs += [("v", "p1"), ("v", "p3")]
        o = Orientation.from_arcs(g, arcs)
        assert classify_vertex(o, part, "v").tag == "Invalid"

    def test_type_b_interval(self):
        order = ["p1", "p2", "p3"]
        g, part = join_graph(["v"], order, cross=[("v", "p2"), ("v", "p3")])
        arcs = [(u, w) for u, w in combinations(order, 2)]
        arcs += [("p2", "v"), ("p3", "v")]
        o = Orientation.from_arcs(g, arcs)
        info = classify_vertex(o, part, "v")
        assert info.tag == "B" and info.interval == ("p2", "p3")


class TestConditionAB:
    def test_shared_neighbor_is_reported(self):
        g, part = join_graph(["x", "y"], ["s"], cross=[("x", "s"), ("y", "s")])
        o = Orientation.from_arcs(g, [("y", "x"), ("x", "s"), ("s", "y")])
        violations = check_condition_ab(o, part)
        assert len(violations) == 1
        assert violations[0]["x"] == "x" and violations[0]["y"] == "y"

    def test_disjoint_neighborhoods_are_fine(self):
        g, part = join_graph(["x", "y"], ["s", "t"], cross=[("x", "s"), ("y", "t")])
        o = Orientation.from_arcs(
            g, [("y", "x"), ("s", "t"), ("x", "s"), ("t", "y")]
        )
        assert check_condition_ab(o, part) == []

    def test_clean_on_found_semi_transitive_orientations(self):
        from wordrep.constructions import complement_cycle_graph

        g, part = complement_cycle_graph(3)
        o = find_semi_transitive_orientation(g)
        assert o is not None
        assert check_condition_ab(o, part) == []


class TestConditionQuad:
    def test_pattern_one_missing_diagonals(self):
        # path s -> x -> y -> t with s -> t, both diagonals absent
        g, part = join_graph(["x", "y"], ["s", "t"], cross=[("s", "x"), ("y", "t")])
        o = Orientation.from_arcs(g, [("x", "y"), ("s", "t"), ("s", "x"), ("y", "t")])
        violations = check_condition_quad(o, part)
        assert {v["requires"] for v in violations} == {"x->t", "s->y"}

    def test_pattern_two_missing_diagonals(self):
        # path x -> y -> s -> t with x -> t
        g, part = join_graph(["x", "y"], ["s", "t"], cross=[("y", "s"), ("x", "t")])
        o = Orientation.from_arcs(g, [("x", "y"), ("s", "t"), ("y", "s"), ("x", "t")])
        violations = check_condition_quad(o, part)
        assert {v["requires"] for v in violations} == {"x->s", "y->t"}

    def test_transitive_complete_join_is_clean(self):
        g, part = join_graph(["a1", "a2"], ["b1", "b2"])
        o = Orientation.from_order(g, ["a1", "a2", "b1", "b2"])
        assert check_condition_quad(o, part) == []


class TestConditionTypeC:
    def test_successor_type_a_straddling_boundary(self):
        chain = ["q1", "q2", "q3", "q4"]
        cross = [("x", q) for q in chain] + [("y", "q2"), ("y", "q3")]
        g, part = join_graph(["x", "y"], chain, cross=cross)
        arcs = [(u, w) for u, w in combinations(chain, 2)]
        arcs += [("q1", "x"), ("q2", "x"), ("x", "q3"), ("x", "q4")]
        arcs += [("x", "y"), ("y", "q2"), ("y", "q3")]
        o = Orientation.from_arcs(g, arcs)
        violations = check_condition_typec(o, part)
        assert any(v["condition"] == "typec-successor-a" for v in violations)

    def test_vacuous_without_type_c(self):
        g, part = join_graph(["a1", "a2"], ["b1", "b2"])
        o = Orientation.from_order(g, ["a1", "a2", "b1", "b2"])
        assert check_condition_typec(o, part) == []

    def test_clean_on_co_p8_semi_transitive_orientations(self):
        g, part = complement_path_graph(4)
        searcher = ShortcutSearcher(g)
        checked = 0
        for _, out in iter_acyclic_outsets(g):
            if searcher.find(out) is None:
                o = Orientation(g, out)
                assert check_condition_typec(o, part) == []
                checked += 1
                if checked >= 10:
                    break
        assert checked > 0


class TestStagedVerdict:
    def test_transitive_complete_join_passes(self):
        g, part = join_graph(["a1", "a2"], ["b1", "b2"])
        o = Orientation.from_order(g, ["a1", "a2", "b1", "b2"])
        ok, report = is_semi_transitive_cobip(o, part)
        assert ok and report.failed_stage is None
        assert report.to_json()["semiTransitive"] is True

    def test_every_orientation_of_t1bar_fails(self):
        g, part = named_witness("T1bar")
        stages = set()
        for o in [Orientation(g, out) for _, out in iter_acyclic_outsets(g)]:
            ok, report = is_semi_transitive_cobip(o, part)
            assert not ok
            stages.add(report.failed_stage)
        assert stages  # at least one failing stage seen

    def test_cyclic_clique_reported_as_first_stage(self):
        g, part = join_graph(["a", "b", "c"], ["d"], cross=[])
        o = Orientation.from_arcs(
            g, [("a", "b"), ("b", "c"), ("c", "a")]
        )
        ok, report = is_semi_transitive_cobip(o, part)
        assert not ok and report.failed_stage == "clique-transitivity"

    def test_report_stage_tokens(self):
        # the wire format commits to these stage names
        g, part = join_graph(["x", "y"], ["s", "t"], cross=[("s", "x"), ("y", "t")])
        o = Orientation.from_arcs(g, [("x", "y"), ("s", "t"), ("s", "x"), ("y", "t")])
        ok, report = is_semi_transitive_cobip(o, part)
        assert not ok and report.failed_stage == "lemma42"

    def test_passing_type_c_groups_touch_source_and_sink(self):
        g, part = complement_path_graph(3)
        found = 0
        for _, out in iter_acyclic_outsets(g):
            o = Orientation(g, out)
            ok, _ = is_semi_transitive_cobip(o, part)
            if not ok:
                continue
            for side, opposite in ((part.clique_a, part.clique_b),
                                   (part.clique_b, part.clique_a)):
                order = clique_order(o, opposite)
                for v in side:
                    info = classify_vertex(o, part, v, opposite=order)
                    if info.tag == "C":
                        assert info.source_group[0] == order.vertices[0]
                        assert info.sink_group[-1] == order.vertices[-1]
                        found += 1
        assert found > 0


class TestAgreementSweep:
    def test_exhaustive_2_plus_2(self):
        labels_a, labels_b = ["a1", "a2"], ["b1", "b2"]
        crosspairs = [(a, b) for a in labels_a for b in labels_b]
        for bits in range(16):
            cross = [crosspairs[t] for t in range(4) if bits >> t & 1]
            g, part = join_graph(labels_a, labels_b, cross=cross)
            searcher = ShortcutSearcher(g)
            for _, out in iter_acyclic_outsets(g):
                o = Orientation(g, out)
                path_verdict = searcher.find(out) is None
                structural_verdict, _ = is_semi_transitive_cobip(o, part)
                assert path_verdict == structural_verdict, (bits, o.arcs())

    def test_sweep_helper_counts(self):
        g, part = join_graph(["a1", "a2"], ["b1", "b2"], cross=[])
        result = sweep_orientations(g, part)
        assert result.orientations == 4  # two disjoint edges, 2x2 directions
        assert result.semi_transitive == 4
        assert result.disagreements == ()
        assert not result.sampled

    def test_complete_join_all_orientations_pass(self):
        g, part = join_graph(["a1", "a2", "a3"], ["b1", "b2", "b3"])
        result = sweep_orientations(g, part)
        assert result.orientations == 720  # acyclic tournaments on six vertices
        assert result.semi_transitive == 720
        assert result.disagreements == ()

    def test_sweep_workers_match_serial(self):
        g, part = named_witness("T2bar")
        serial = sweep_orientations(g, part, workers=1)
        parallel = sweep_orientations(g, part, workers=2)
        assert serial.to_json() == parallel.to_json()
        assert serial.semi_transitive == 0

    def test_sweep_sampling_is_seeded(self):
        g, part = named_witness("T1bar")
        a = sweep_orientations(g, part, sample_threshold=500, seed=9)
        b = sweep_orientations(g, part, sample_threshold=500, seed=9)
        assert a.to_json() == b.to_json()
        assert a.sampled and a.seed == 9
        assert a.orientations <= 500

    def test_random_3_plus_4_patterns(self):
        import random

        rng = random.Random(834)
        labels_a, labels_b = ["a1", "a2", "a3"], ["b1", "b2", "b3", "b4"]
        crosspairs = [(a, b) for a in labels_a for b in labels_b]
        for _ in range(10):
            cross = [e for e in crosspairs if rng.random() < 0.5]
            g, part = join_graph(labels_a, labels_b, cross=cross)
            result = sweep_orientations(g, part)
            assert result.disagreements == (), cross

    def test_random_4_plus_4_patterns_sampled_orders(self):
        import random

        rng = random.Random(835)
        labels_a = ["a1", "a2", "a3", "a4"]
        labels_b = ["b1", "b2", "b3", "b4"]
        crosspairs = [(a, b) for a in labels_a for b in labels_b]
        for _ in range(5):
            cross = [e for e in crosspairs if rng.random() < 0.5]
            g, part = join_graph(labels_a, labels_b, cross=cross)
            result = sweep_orientations(g, part, sample_threshold=4000, seed=7)
            assert result.sampled
            assert result.disagreements == (), cross
