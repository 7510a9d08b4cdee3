import io
import json

import pytest

from ordturan import construct, ograph, patterns, sidon


class TestBuild:
    def test_minimal_instance(self):
        # n=1, S={1}: cell (1,1) on, cell (1,2) off; edge {1, 3} on 4 vertices
        rec = construct.build(1, 2, sidon.BkSet((1,), 2, 1))
        assert rec.graph.n == 4
        assert rec.graph.edges == ((1, 3),)

    def test_edge_count_is_n_times_set_size(self):
        rec = construct.build(4, 2, sidon.BkSet((1, 2), 2, 4))
        assert rec.graph.n == 16 and rec.edge_count == 8
        for n, k in [(10, 2), (25, 2), (12, 3)]:
            s = sidon.best_bk_for_budget(n, k)
            rec = construct.build(n, k, s)
            assert rec.edge_count == n * len(s)

    def test_all_edges_cross_and_two_intervals(self):
        rec = construct.build(10, 2, sidon.best_bk_for_budget(10, 2))
        for i, j in rec.graph.edges:
            assert i <= rec.n and 2 * rec.n < j <= 4 * rec.n
        assert ograph.interval_chromatic_number(rec.graph) == 2
        # rows n+1..2n carry no edges but remain as vertices
        for v in range(rec.n + 1, 2 * rec.n + 1):
            assert rec.graph.degree(v) == 0

    def test_matrix_rule_against_direct_evaluation(self):
        n, elements = 5, (1, 2, 5)
        g = construct.construction_graph(n, elements)
        mat = ograph.to_bipartite_matrix(g, 2 * n)
        expected = frozenset(
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, 2 * n + 1)
            if i - j + n in set(elements)
        )
        assert mat.ones == expected

    def test_rejects_non_bk_set(self):
        with pytest.raises(ValueError, match="not B_2"):
            construct.build(3, 2, sidon.BkSet((1, 2, 3), 2, 3))

    def test_rejects_oversized_universe(self):
        with pytest.raises(ValueError):
            construct.build(3, 2, sidon.BkSet((1, 4), 2, 4))


class TestCertify:
    def test_free_for_small_builds(self):
        for n, k in [(25, 2), (25, 3), (40, 2)]:
            rec = construct.build(n, k, sidon.best_bk_for_budget(n, k))
            entries = construct.certify_freeness(rec)
            assert [e["length"] for e in entries] == list(range(4, 2 * k + 1, 2))
            assert all(e["free"] for e in entries)

    def test_adversarial_set_yields_named_witness(self):
        bad = construct.ConstructionRecord(
            3, 2, sidon.BkSet((1, 2, 3), 2, 3), construct.construction_graph(3, (1, 2, 3))
        )
        (entry,) = construct.certify_freeness(bad)
        assert entry["free"] is False
        lsum = entry["lsum"]
        assert lsum["sums_equal"] is True
        assert lsum["values_in_set"] is True
        assert lsum["multisets_equal"] is False
        pair = {tuple(lsum["collision"]["first"]), tuple(lsum["collision"]["second"])}
        assert pair == {(1, 3), (2, 2)}

    def test_certificate_serialization(self):
        rec = construct.build(6, 2, sidon.best_bk_for_budget(6, 2))
        buf = io.StringIO()
        construct.write_certificate(construct.certify_freeness(rec), buf)
        lines = buf.getvalue().strip().splitlines()
        assert [json.loads(line) for line in lines] == [{"free": True, "length": 4}]


def test_lsum_identity_on_any_witness():
    # on a graph that does have a bordered rectangle, the alternating sums agree
    bad = construct.construction_graph(4, (1, 2, 3))
    wits = patterns.find_bordered_cycles(bad, 4)
    assert wits
    for w in wits:
        rep = construct.lsum_report(4, (1, 2, 3), w)
        assert rep["sums_equal"] and rep["values_in_set"]
