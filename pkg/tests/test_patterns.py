import io
import math
import random
from collections import Counter

import pytest

from conftest import brute_bordered_cycles, brute_zigzag_count, detector_key_set
from ordturan import ograph, patterns


class TestEnumeration:
    def test_census_counts(self):
        for k in (2, 3, 4):
            ps = patterns.enumerate_ordered_cycles(2 * k)
            assert len(ps) == math.factorial(k - 1) * math.factorial(k) // 2

    def test_quadrilateral(self):
        (p,) = patterns.enumerate_ordered_cycles(4)
        assert patterns.classify(p) == patterns.BORDERED
        assert patterns.pattern_matrix(p).ones == frozenset(
            {(1, 1), (1, 2), (2, 1), (2, 2)}
        )

    def test_hexagon_census(self):
        ps = patterns.enumerate_ordered_cycles(6)
        by_class = Counter(patterns.classify(p) for p in ps)
        assert by_class == Counter(
            {patterns.BORDERED: 3, patterns.INBORDERED: 1, patterns.OUTBORDERED: 1, patterns.UNBORDERED: 1}
        )

    def test_hexagons_match_named_edge_sets(self):
        named = patterns.named_patterns()
        enumerated = {p.edges for p in patterns.enumerate_ordered_cycles(6)}
        for name in ("C6_1", "C6_2", "C6_3", "C6_O", "C6_U", "C6_I"):
            assert named[name].edges in enumerated

    def test_rejects_bad_lengths(self):
        with pytest.raises(ValueError):
            patterns.enumerate_ordered_cycles(5)
        with pytest.raises(ValueError):
            patterns.enumerate_ordered_cycles(14)

    def test_deterministic_order(self):
        a = [p.key for p in patterns.enumerate_ordered_cycles(8)]
        b = [p.key for p in patterns.enumerate_ordered_cycles(8)]
        assert a == b == sorted(a)


class TestClassify:
    def test_named_classes(self):
        named = patterns.named_patterns()
        assert patterns.classify(named["C6_3"]) == patterns.BORDERED
        assert patterns.classify(named["C6_U"]) == patterns.UNBORDERED
        assert patterns.classify(named["C6_O"]) == patterns.OUTBORDERED
        assert patterns.classify(named["C6_I"]) == patterns.INBORDERED
        assert patterns.classify(named["C4"]) == patterns.BORDERED

    def test_partition(self):
        for two_k in (4, 6, 8):
            for p in patterns.enumerate_ordered_cycles(two_k):
                assert patterns.classify(p) in {
                    patterns.BORDERED,
                    patterns.INBORDERED,
                    patterns.OUTBORDERED,
                    patterns.UNBORDERED,
                }


class TestReversal:
    def test_figure_rows(self):
        named = patterns.named_patterns()
        rv = patterns.reverse_second_interval
        assert rv(named["C6_3"]).edges == named["C6_O"].edges
        assert rv(named["C6_2"]).edges == named["C6_U"].edges
        assert rv(named["C6_1"]).edges == named["C6_I"].edges

    def test_involution_up_to_half_length_4(self):
        rv = patterns.reverse_second_interval
        for two_k in (4, 6, 8):
            for p in patterns.enumerate_ordered_cycles(two_k):
                assert rv(rv(p)).key == p.key


class TestContainsPattern:
    def test_complete_host(self):
        full = ograph.ZeroOneMatrix(
            3, 3, frozenset((i, j) for i in range(1, 4) for j in range(1, 4))
        )
        named = patterns.named_patterns()
        hit = patterns.contains_pattern(full, patterns.pattern_matrix(named["C6_1"]))
        assert hit == ((1, 2, 3), (1, 2, 3))

    def test_identity_embedding(self):
        for name in ("C4", "C6_2", "C6_U"):
            m = patterns.pattern_matrix(patterns.named_patterns()[name])
            assert patterns.contains_pattern(m, m) is not None

    def test_absent(self):
        ident = ograph.ZeroOneMatrix(3, 3, frozenset({(1, 1), (2, 2), (3, 3)}))
        c4 = patterns.pattern_matrix(patterns.named_patterns()["C4"])
        assert patterns.contains_pattern(ident, c4) is None

    def test_too_large_pattern(self):
        host = ograph.ZeroOneMatrix(1, 1, frozenset({(1, 1)}))
        c4 = patterns.pattern_matrix(patterns.named_patterns()["C4"])
        assert patterns.contains_pattern(host, c4) is None

    def test_witness_is_valid(self):
        rng = random.Random(3)
        c4 = patterns.pattern_matrix(patterns.named_patterns()["C4"])
        found = 0
        for _ in range(80):
            ones = frozenset(
                (i, j) for i in range(1, 6) for j in range(1, 6) if rng.random() < 0.5
            )
            if not ones:
                continue
            host = ograph.ZeroOneMatrix(5, 5, ones)
            hit = patterns.contains_pattern(host, c4)
            if hit:
                rows, cols = hit
                for pi, pj in c4.ones:
                    assert (rows[pi - 1], cols[pj - 1]) in ones
                found += 1
        assert found > 10


class TestDetector:
    def test_k22(self):
        g = ograph.from_edge_list(4, [(1, 3), (1, 4), (2, 3), (2, 4)])
        wits = patterns.find_bordered_cycles(g, 4)
        assert [w.vertices for w in wits] == [(1, 3, 2, 4)]
        assert wits[0].outer_border() == (1, 4)
        assert wits[0].inner_border() == (2, 3)

    def test_unbordered_hexagon_host_is_clean(self):
        named = patterns.named_patterns()
        host = ograph.from_edge_list(6, named["C6_U"].edges)
        assert patterns.find_bordered_cycles(host, 6) == []

    def test_bordered_hexagon_hosts_detect_themselves(self):
        named = patterns.named_patterns()
        for name in ("C6_1", "C6_2", "C6_3"):
            host = ograph.from_edge_list(6, named[name].edges)
            wits = patterns.find_bordered_cycles(host, 6)
            assert len(wits) == 1 and wits[0].pattern.edges == named[name].edges

    def test_embedding_with_noise_vertices(self):
        # same hexagon spread over 9 vertices with distractor edges
        named = patterns.named_patterns()
        mapping = {1: 2, 2: 3, 3: 5, 4: 6, 5: 8, 6: 9}
        edges = [(mapping[u], mapping[v]) for u, v in named["C6_2"].edges]
        edges += [(1, 4), (2, 3), (8, 9)]
        host = ograph.from_edge_list(9, edges)
        wits = patterns.find_bordered_cycles(host, 6)
        assert any(sorted(w.vertices) == [2, 3, 5, 6, 8, 9] for w in wits)

    def test_limit(self):
        g = ograph.from_edge_list(6, [(i, j) for i in range(1, 4) for j in range(4, 7)])
        all_wits = patterns.find_bordered_cycles(g, 6)
        assert len(patterns.find_bordered_cycles(g, 6, limit=2)) == 2
        assert len(all_wits) == 3  # the three bordered hexagons, once each

    def test_matches_brute_force_on_random_hosts(self):
        rng = random.Random(20240)
        for _ in range(120):
            n = rng.randint(4, 8)
            g = ograph.random_ordered_graph(n, rng.randint(0, n * (n - 1) // 2), rng)
            for two_l in (4, 6):
                if two_l > n:
                    continue
                assert detector_key_set(g, two_l) == brute_bordered_cycles(g, two_l)

    def test_deterministic_output_order(self):
        rng = random.Random(7)
        g = ograph.random_ordered_graph(8, 18, rng)
        a = [w.vertices for w in patterns.find_bordered_cycles(g, 4)]
        b = [w.vertices for w in patterns.find_bordered_cycles(g, 4)]
        assert a == b == sorted(a)


class TestEmbeddings:
    def test_generic_embeddings_agree_with_detector_for_bordered(self):
        rng = random.Random(99)
        for _ in range(40):
            g = ograph.random_ordered_graph(7, rng.randint(5, 21), rng)
            det = detector_key_set(g, 4)
            via_embed = set()
            for p in patterns.enumerate_ordered_cycles(4):
                if patterns.classify(p) != patterns.BORDERED:
                    continue
                for emb in patterns.find_pattern_embeddings(g, p):
                    via_embed.add((emb, p.key))
            assert det == via_embed


class TestZigzag:
    def test_single_edge_k1(self):
        g = ograph.from_edge_list(2, [(1, 2)])
        assert patterns.count_zigzag_paths(g, 1) == 1

    def test_three_vertex_example(self):
        g = ograph.from_edge_list(3, [(2, 3), (1, 3)])
        assert patterns.count_zigzag_paths(g, 2) == 1
        assert patterns.count_zigzag_paths(g, 2, per_pair=True) == {(2, 1): 1}

    def test_witnesses_are_zigzags(self):
        rng = random.Random(31)
        g = ograph.random_ordered_graph(8, 16, rng)
        counts, wits = patterns.count_zigzag_paths(g, 3, per_pair=True, witnesses=True)
        assert sum(counts.values()) == len(wits)
        for w in wits:
            assert patterns.is_zigzag_sequence(g, w)

    def test_dp_matches_brute_force(self):
        rng = random.Random(55)
        for _ in range(60):
            n = rng.randint(3, 7)
            g = ograph.random_ordered_graph(n, rng.randint(0, n * (n - 1) // 2), rng)
            for k in (1, 2, 3):
                if k + 1 > n:
                    continue
                total = patterns.count_zigzag_paths(g, k)
                per_pair = patterns.count_zigzag_paths(g, k, per_pair=True)
                assert total == brute_zigzag_count(g, k) == sum(per_pair.values())


def test_pattern_file_round_trip():
    p = patterns.named_patterns()["C6_3"]
    buf = io.StringIO()
    patterns.write_pattern(p, buf)
    back = patterns.read_pattern(io.StringIO(buf.getvalue()))
    assert back.key == p.key


def test_resolve_pattern_names():
    got = patterns.resolve_pattern_names(["S2"])
    named = patterns.named_patterns()
    assert {p.edges for p in got} == {named["C6_2"].edges, named["C6_3"].edges}
    assert len(patterns.resolve_pattern_names(["CB6"])) == 3
    assert len(patterns.resolve_pattern_names(["CB4", "C4"])) == 1
    with pytest.raises(ValueError):
        patterns.resolve_pattern_names(["nope"])
