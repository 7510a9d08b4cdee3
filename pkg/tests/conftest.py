"""Shared brute-force oracles, deliberately independent of the library paths
they check: embeddings are tested by trying every increasing vertex tuple,
zigzags by filtering every permutation against the definition."""

import itertools

from ordturan import ograph, patterns


def brute_bordered_cycles(g: ograph.OrderedGraph, two_l: int) -> set:
    """All (sorted vertex tuple, pattern key) pairs of embedded bordered cycles."""
    hits = set()
    for p in patterns.enumerate_ordered_cycles(two_l):
        if patterns.classify(p) != patterns.BORDERED:
            continue
        for w in itertools.combinations(range(1, g.n + 1), two_l):
            if all(g.has_edge(w[u - 1], w[v - 1]) for u, v in p.edges):
                hits.add((w, p.key))
    return hits


def detector_key_set(g: ograph.OrderedGraph, two_l: int) -> set:
    return {
        (tuple(sorted(w.vertices)), w.pattern.key)
        for w in patterns.find_bordered_cycles(g, two_l)
    }


def brute_zigzag_count(g: ograph.OrderedGraph, k: int) -> int:
    count = 0
    for seq in itertools.permutations(range(1, g.n + 1), k + 1):
        if patterns.is_zigzag_sequence(g, seq):
            count += 1
    return count


def brute_interval_chromatic(g: ograph.OrderedGraph) -> int:
    """Exhaustive minimum over all partitions into consecutive intervals."""
    if g.n == 0:
        return 0
    best = g.n
    for cuts in itertools.product([False, True], repeat=g.n - 1):
        bounds = [0] + [i + 1 for i, c in enumerate(cuts) if c] + [g.n]
        ok = True
        for lo, hi in zip(bounds, bounds[1:]):
            for v in range(lo + 1, hi + 1):
                left = g.left_neighbors(v)
                if left and left[-1] > lo:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            best = min(best, len(bounds) - 1)
    return best
