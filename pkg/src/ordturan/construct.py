"""The dense bordered-cycle-free construction and its certification.

Given a B_k set S inside {1..n}, the construction is an ordered graph on 4n
vertices described by a 2n x 2n bipartite adjacency matrix: rows are
vertices 1..2n, columns are vertices 2n+1..4n, and cell (i, j) holds a 1
exactly when 1 <= i <= n and i - j + n lands in S.  Every row i <= n then
carries |S| ones (j = i + n - s stays inside 1..2n), so the graph has
exactly n * |S| edges, and it contains no bordered cycle of length up to
2k: walking any embedded 2l-cycle alternately over rows and columns makes
the two alternating l-sums of the quantities i - j + n equal, the B_k
property forces the two sums to use the same terms, yet a border edge would
uniquely minimize or maximize i - j among the cycle's cells.

``certify_freeness`` re-checks that argument exhaustively with the cycle
detector and, should a witness ever surface, replays the sum identity on it
to name the offending collision.
"""

import json
from dataclasses import dataclass

from .ograph import OrderedGraph, from_edge_list
from .patterns import CycleWitness, find_bordered_cycles
from .sidon import BkSet, verify_bk

__all__ = [
    "ConstructionRecord",
    "construction_graph",
    "build",
    "certify_freeness",
    "witness_matrix_cells",
    "lsum_report",
    "write_certificate",
]


@dataclass(frozen=True)
class ConstructionRecord:
    n: int
    k: int
    sidon_set: BkSet
    graph: OrderedGraph

    @property
    def edge_count(self) -> int:
        return self.graph.m


def construction_graph(n: int, elements) -> OrderedGraph:
    """Apply the matrix rule to an arbitrary element set (no B_k validation).

    Kept separate from ``build`` so adversarial inputs can be exercised.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    elements = sorted(set(elements))
    if elements and not (1 <= elements[0] and elements[-1] <= n):
        raise ValueError(f"elements must lie in 1..{n}")
    pairs = []
    for i in range(1, n + 1):
        for s in elements:
            j = i + n - s  # in 1..2n-1 for i, s in 1..n
            pairs.append((i, 2 * n + j))
    return from_edge_list(4 * n, pairs)


def build(n: int, k: int, s: BkSet) -> ConstructionRecord:
    """Validated construction; edge count is exactly n * |S|."""
    if s.universe_bound > n or (s.elements and s.elements[-1] > n):
        raise ValueError(f"B_k set must live inside 1..{n}")
    if s.k < k:
        raise ValueError(f"need a B_{k} set, got arity {s.k}")
    check = verify_bk(s.elements, k)
    if not check.ok:
        c = check.collision
        raise ValueError(
            f"set is not B_{k}: {c.first} and {c.second} both sum to {c.total}"
        )
    g = construction_graph(n, s.elements)
    if g.m != n * len(s.elements):
        raise AssertionError("edge count differs from n * |S|")  # unreachable
    return ConstructionRecord(n, k, s, g)


def witness_matrix_cells(n: int, witness: CycleWitness) -> list[tuple[int, int]]:
    """Matrix coordinates (i, j) of the witness cycle's edges, in cycle order."""
    cells = []
    verts = witness.vertices
    two_l = len(verts)
    for t in range(two_l):
        u, v = verts[t], verts[(t + 1) % two_l]
        row, col = (u, v) if u < v else (v, u)
        if not (row <= 2 * n < col):
            raise ValueError("witness edge does not cross the row/column split")
        cells.append((row, col - 2 * n))
    return cells


def lsum_report(n: int, elements, witness: CycleWitness) -> dict:
    """Replay the alternating sum identity on a witness cycle.

    The cycle's cells, taken alternately, give two l-sums of values
    i - j + n that are always numerically equal; if those values all lie in
    the element set but the two multisets differ, the witness exhibits the
    sum collision that a genuine B_l set would forbid.
    """
    cells = witness_matrix_cells(n, witness)
    values = [i - j + n for i, j in cells]
    elements = set(elements)
    even = tuple(sorted(values[0::2]))
    odd = tuple(sorted(values[1::2]))
    return {
        "cells": cells,
        "values": values,
        "even_sum": sum(even),
        "odd_sum": sum(odd),
        "sums_equal": sum(even) == sum(odd),
        "values_in_set": all(v in elements for v in values),
        "multisets_equal": even == odd,
        "collision": None if even == odd else {"first": even, "second": odd},
    }


def certify_freeness(rec: ConstructionRecord, lengths=None) -> list[dict]:
    """Detector sweep over each even cycle length up to 2k.

    Every entry reports emptiness; a non-empty result is not an exception
    but carries the witness and its replayed sum identity, which pinpoints
    whether the element set or the builder is at fault.
    """
    if lengths is None:
        lengths = range(4, 2 * rec.k + 1, 2)
    out = []
    for two_l in lengths:
        wits = find_bordered_cycles(rec.graph, two_l, limit=1)
        entry: dict = {"length": two_l, "free": not wits}
        if wits:
            w = wits[0]
            entry["witness"] = list(w.vertices)
            entry["lsum"] = lsum_report(rec.n, rec.sidon_set.elements, w)
        out.append(entry)
    return out


def write_certificate(entries, f) -> None:
    """One JSON object per checked cycle length, stable key order."""
    for entry in entries:
        f.write(json.dumps(entry, sort_keys=True))
        f.write("\n")
