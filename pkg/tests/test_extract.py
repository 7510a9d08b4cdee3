import random

import pytest

from ordturan import construct, extract, ograph, patterns, sidon
from ordturan.errors import InternalInvariantError


def k22():
    return ograph.from_edge_list(4, [(1, 3), (1, 4), (2, 3), (2, 4)])


class TestBorderDigraph:
    def test_k22_single_arc(self):
        h = extract.border_digraph(k22(), 4)
        assert h.arcs == (((1, 4), (2, 3)),)
        assert h.witnesses[((1, 4), (2, 3))].vertices == (1, 3, 2, 4)

    def test_construction_is_arcless(self):
        rec = construct.build(20, 2, sidon.best_bk_for_budget(20, 2))
        assert extract.border_digraph(rec.graph, 4).arcs == ()

    def test_arcs_strictly_nest(self):
        rng = random.Random(42)
        for _ in range(60):
            n = rng.randint(5, 20)
            g = ograph.random_ordered_graph(n, rng.randint(0, min(3 * n, n * (n - 1) // 2)), rng)
            for two_l in (4, 6):
                h = extract.border_digraph(g, two_l)
                for (a, b), (a2, b2) in h.arcs:
                    assert a < a2 < b2 < b


class TestColoring:
    def test_arcless_single_color(self):
        h = extract.border_digraph(ograph.from_edge_list(3, [(1, 2), (1, 3)]), 4)
        col = extract.gallai_roy_coloring(h)
        assert col.num_colors == 1 and set(col.colors.values()) == {0}

    def test_single_arc(self):
        col = extract.gallai_roy_coloring(extract.border_digraph(k22(), 4))
        assert col.num_colors == 2
        assert col.colors[(1, 4)] == 1 and col.colors[(2, 3)] == 0

    def test_proper_and_matches_longest_path(self):
        rng = random.Random(4242)
        for _ in range(50):
            n = rng.randint(6, 18)
            m = rng.randint(n, min(3 * n, n * (n - 1) // 2))
            g = ograph.random_ordered_graph(n, m, rng)
            h = extract.border_digraph(g, 4)
            col = extract.gallai_roy_coloring(h)
            out = h.out_neighbors()
            for tail, head in h.arcs:
                assert col.colors[tail] > col.colors[head]

            def longest_from(v, memo={}):
                # independent recomputation by DFS over the same arc set
                best = 0
                for w in out.get(v, ()):
                    best = max(best, 1 + longest_from(w))
                return best

            assert col.longest_path == max(
                (longest_from(v) for v in h.nodes), default=0
            )


class TestExtract:
    def test_k22_trace(self):
        kept, rep = extract.extract_c2l_free(k22(), 3, 2)
        assert kept == ((1, 3), (2, 3), (2, 4))
        assert rep["edges_in"] == 4 and rep["edges_kept"] == 3
        assert rep["fraction"] == 0.75 and rep["bound"] == 0.5
        assert rep["colors_used"] == 2 and rep["longest_path"] == 1
        assert rep["certified_free"] is True
        assert rep["input_free_verified"] is True

    def test_no_bordered_cycles_keeps_everything(self):
        g = ograph.from_edge_list(5, [(1, 5), (2, 4)])
        kept, rep = extract.extract_c2l_free(g, 4, 2)
        assert kept == g.edges and rep["fraction"] == 1.0

    def test_empty_graph(self):
        kept, rep = extract.extract_c2l_free(ograph.from_edge_list(3, []), 3, 2)
        assert kept == () and rep["edges_in"] == 0 and rep["fraction"] == 1.0

    def test_fraction_bound_on_verified_free_corpus(self):
        rng = random.Random(606)
        hits = 0
        for _ in range(80):
            n = rng.randint(6, 28)
            g = ograph.random_ordered_graph(n, rng.randint(0, min(3 * n, n * (n - 1) // 2)), rng)
            for kk, ll in [(3, 2), (5, 3), (4, 2)]:
                if patterns.find_bordered_cycles(g, 2 * kk, limit=1):
                    continue
                kept, rep = extract.extract_c2l_free(g, kk, ll, verify_input=True)
                assert rep["certified_free"] is True
                assert len(kept) * (kk - 1) >= (ll - 1) * g.m
                assert rep["longest_path"] < (kk - 1) // (ll - 1)
                hits += 1
        assert hits > 50

    def test_contradiction_splice_on_nested_rectangles(self):
        # two bordered rectangles sharing a border edge chain to a hexagon
        g = ograph.from_edge_list(
            6, [(1, 6), (1, 5), (2, 6), (2, 5), (3, 5), (3, 4), (2, 4)]
        )
        kept, rep = extract.extract_c2l_free(g, 3, 2)
        assert rep["input_free_verified"] is False  # the spliced hexagon exists
        assert rep["longest_path"] >= 2
        assert "contradiction_witness" in rep
        spliced = rep["contradiction_witness"]
        assert len(spliced) == 6
        host_edges = set(g.edges)
        cyc = patterns.CycleWitness(tuple(spliced), patterns.pattern_from_traversal(
            [sorted(spliced).index(v) + 1 for v in spliced]
        ))
        assert set(cyc.cycle_edges()) <= host_edges
        assert cyc.pattern.has_outer and cyc.pattern.has_inner


class TestSplice:
    def test_two_rectangle_chain(self):
        g = ograph.from_edge_list(
            6, [(1, 6), (1, 5), (2, 6), (2, 5), (3, 5), (3, 4), (2, 4)]
        )
        wits = patterns.find_bordered_cycles(g, 4)
        by_border = {(w.outer_border(), w.inner_border()): w for w in wits}
        c1 = by_border[((1, 6), (2, 5))]
        c2 = by_border[((2, 5), (3, 4))]
        glued = extract.splice_cycle_chain([c1, c2])
        assert len(glued.vertices) == 6  # 2*2*2 - 2*2 + 2
        assert glued.outer_border() == (1, 6)
        assert glued.inner_border() == (3, 4)
        assert glued.pattern.border_class == patterns.BORDERED

    def test_rejects_mismatched_chain(self):
        wits = patterns.find_bordered_cycles(k22(), 4)
        with pytest.raises(ValueError):
            extract.splice_cycle_chain([wits[0], wits[0]])


class TestIterated:
    def test_m2_is_plain_l2(self):
        g = k22()
        kept, rep = extract.iterated_extract(g, 2)
        assert rep["k"] == 2 and rep["bound"] == 1.0
        # K22 contains a bordered quadrilateral, so the k=2 hypothesis fails
        assert rep["input_free_verified"] is False

    def test_m3_on_k22(self):
        kept, rep = extract.iterated_extract(k22(), 3)
        assert rep["k"] == 3
        assert len(kept) == 3 and rep["fraction"] == 0.75 >= rep["bound"] == 0.5
        assert rep["certified_free_lengths"] == {4: True, 6: True}
        assert [s["l"] for s in rep["steps"]] == [3, 2]

    def test_m3_on_free_construction_keeps_all(self):
        rec = construct.build(15, 3, sidon.best_bk_for_budget(15, 3))
        kept, rep = extract.iterated_extract(rec.graph, 3)
        assert len(kept) == rec.edge_count and rep["fraction"] == 1.0

    def test_fraction_bound_on_free_corpus(self):
        rng = random.Random(321)
        hits = 0
        for _ in range(60):
            n = rng.randint(6, 24)
            g = ograph.random_ordered_graph(n, rng.randint(0, min(2 * n, n * (n - 1) // 2)), rng)
            if patterns.find_bordered_cycles(g, 6, limit=1):
                continue
            kept, rep = extract.iterated_extract(g, 3)
            assert len(kept) * 2 >= g.m
            assert rep["certified_free_lengths"] == {2 * 2: True, 2 * 3: True}
            hits += 1
        assert hits > 30


class TestKO:
    def test_k22(self):
        kept, rep = extract.ko_reduction([1, 2], [3, 4], k22().edges, 3)
        assert len(kept) == 3
        assert rep["c4_free"] is True
        assert rep["fraction"] == 0.75 and rep["bound"] == 0.5
        assert rep["input_c2k_free_verified"] is True

    def test_hexagon_k4(self):
        hexagon = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]
        kept, rep = extract.ko_reduction([1, 3, 5], [2, 4, 6], hexagon, 4)
        assert len(kept) == 6 and rep["c4_free"]

    def test_star(self):
        star = [(1, j) for j in range(2, 7)]
        kept, rep = extract.ko_reduction([1], [2, 3, 4, 5, 6], star, 3)
        assert len(kept) == 5

    def test_labels_preserved(self):
        edges = [(10, 20), (10, 21), (11, 20), (11, 21)]
        kept, rep = extract.ko_reduction([10, 11], [20, 21], edges, 3)
        assert set(v for e in kept for v in e) <= {10, 11, 20, 21}
        assert len(kept) == 3

    def test_non_bipartite_rejected(self):
        with pytest.raises(ValueError, match="inside one class"):
            extract.ko_reduction([1, 2], [3], [(1, 2), (1, 3), (2, 3)], 3)

    def test_fraction_bound_on_random_c6_free_bipartite(self):
        rng = random.Random(77)
        hits = 0
        for _ in range(60):
            na, nb = rng.randint(2, 6), rng.randint(2, 6)
            a = list(range(1, na + 1))
            b = list(range(na + 1, na + nb + 1))
            edges = [(i, j) for i in a for j in b if rng.random() < 0.4]
            if not edges:
                continue
            g = ograph.from_edge_list(na + nb, edges)
            if extract._has_cycle_of_length(g, 6):
                continue
            kept, rep = extract.ko_reduction(a, b, edges, 3)
            assert rep["c4_free"]
            assert len(kept) * 2 >= len(edges)
            hits += 1
        assert hits > 20
