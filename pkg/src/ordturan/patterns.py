"""Ordered cycle patterns: enumeration, border classes, detection, zigzags.

A pattern of half-length k is a 2k-cycle on two intervals {1..k} and
{k+1..2k} with every edge crossing between them (interval chromatic number
2).  The edge joining vertex 1 to vertex 2k is the *outer border*; the edge
joining k to k+1 is the *inner border*.  Patterns holding both are
*bordered*, only the inner *inbordered*, only the outer *outbordered*, and
neither *unbordered*.  Embedded cycles in a host graph are classified the
same way relative to their own vertex set: sort the 2l cycle vertices, the
low half against the high half.

Detection (``find_bordered_cycles``) anchors a DFS on the candidate outer
border edge and walks the cycle alternating between halves, which keeps the
two-interval property enforced at every step.  Zigzag paths -- alternating
sequences whose even-indexed vertices descend below the start while the
odd-indexed ascend above it -- are counted by dynamic programming over
(position, previous, current) states.
"""

import bisect
import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputFormatError
from .ograph import OrderedGraph, ZeroOneMatrix

__all__ = [
    "BORDERED",
    "INBORDERED",
    "OUTBORDERED",
    "UNBORDERED",
    "CyclePattern",
    "CycleWitness",
    "pattern_from_edges",
    "pattern_from_traversal",
    "enumerate_ordered_cycles",
    "classify",
    "reverse_second_interval",
    "pattern_matrix",
    "bordered_patterns",
    "named_patterns",
    "pattern_name",
    "resolve_pattern_names",
    "contains_pattern",
    "find_bordered_cycles",
    "find_pattern_embeddings",
    "count_zigzag_paths",
    "is_zigzag_sequence",
    "write_pattern",
    "read_pattern",
]

BORDERED = "bordered"
INBORDERED = "inbordered"
OUTBORDERED = "outbordered"
UNBORDERED = "unbordered"

MAX_PATTERN_LENGTH = 12


@dataclass(frozen=True)
class CyclePattern:
    """Canonical ordered 2k-cycle with two intervals of k vertices each.

    ``key`` is the traversal starting at vertex 1 toward its smaller cycle
    neighbor, which is invariant under rotation and reflection.
    """

    k: int
    edges: tuple[tuple[int, int], ...]  # sorted (u, v), u <= k < v
    key: tuple[int, ...]

    @property
    def has_outer(self) -> bool:
        return (1, 2 * self.k) in self.edges

    @property
    def has_inner(self) -> bool:
        return (self.k, self.k + 1) in self.edges

    @property
    def border_class(self) -> str:
        return classify(self)

    def __len__(self):
        return 2 * self.k


def _traverse_cycle(edges: frozenset[tuple[int, int]], start: int) -> tuple[int, ...]:
    """Walk the 2-regular edge set from ``start`` toward its smaller neighbor."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v, nb in adj.items():
        if len(nb) != 2:
            raise ValueError(f"vertex {v} has degree {len(nb)}, expected 2")
    seq = [start, min(adj[start])]
    while len(seq) < len(adj):
        a, b = seq[-2], seq[-1]
        nxt = adj[b][0] if adj[b][1] == a else adj[b][1]
        if nxt == start:
            break
        seq.append(nxt)
    if len(seq) != len(adj) or not (
        (min(seq[-1], start), max(seq[-1], start)) in edges
    ):
        raise ValueError("edge set is not a single cycle")
    return tuple(seq)


def pattern_from_edges(edges) -> CyclePattern:
    """Validate and canonicalize a pattern given as 2k crossing edges."""
    norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
    two_k = len(norm)
    if two_k < 4 or two_k % 2:
        raise ValueError("a pattern needs an even number (>= 4) of edges")
    k = two_k // 2
    for u, v in norm:
        if not (1 <= u <= k < v <= 2 * k):
            raise ValueError(
                f"edge ({u}, {v}) does not cross the intervals 1..{k} | {k + 1}..{2 * k}"
            )
    key = _traverse_cycle(norm, 1)
    if set(key) != set(range(1, 2 * k + 1)):
        raise ValueError("cycle does not span 1..2k")
    return CyclePattern(k, tuple(sorted(norm)), key)


def pattern_from_traversal(seq) -> CyclePattern:
    seq = list(seq)
    edges = [(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
    return pattern_from_edges(edges)


def enumerate_ordered_cycles(two_k: int, max_two_k: int = MAX_PATTERN_LENGTH) -> list[CyclePattern]:
    """All ordered 2k-cycles of interval chromatic number 2, canonical order.

    Every such cycle is a Hamiltonian cycle of the complete bipartite graph
    between the two intervals; fixing the traversal to start at vertex 1
    kills rotations and keeping the lexicographically smaller direction
    kills reflections, leaving (k-1)! * k! / 2 distinct patterns.
    """
    if two_k % 2 or not (4 <= two_k <= max_two_k):
        raise ValueError(
            f"length must be even and in 4..{max_two_k}, got {two_k}"
        )
    return list(_enumerate_cached(two_k))


@lru_cache(maxsize=None)
def _enumerate_cached(two_k: int) -> tuple[CyclePattern, ...]:
    k = two_k // 2
    found: dict[tuple[int, ...], CyclePattern] = {}
    for lefts in itertools.permutations(range(2, k + 1)):
        for rights in itertools.permutations(range(k + 1, 2 * k + 1)):
            seq = [1]
            for i in range(k):
                seq.append(rights[i])
                if i + 1 < k:
                    seq.append(lefts[i])
            p = pattern_from_traversal(seq)
            found.setdefault(p.key, p)
    return tuple(found[key] for key in sorted(found))


def classify(p: CyclePattern) -> str:
    if p.has_outer and p.has_inner:
        return BORDERED
    if p.has_inner:
        return INBORDERED
    if p.has_outer:
        return OUTBORDERED
    return UNBORDERED


def bordered_patterns(two_k: int, max_two_k: int = MAX_PATTERN_LENGTH) -> list[CyclePattern]:
    return [p for p in enumerate_ordered_cycles(two_k, max_two_k) if classify(p) == BORDERED]


def reverse_second_interval(p: CyclePattern) -> CyclePattern:
    """Mirror the second interval: edge (u, v) becomes (u, 3k + 1 - v)."""
    k = p.k
    return pattern_from_edges((u, 3 * k + 1 - v) for u, v in p.edges)


def pattern_matrix(p: CyclePattern) -> ZeroOneMatrix:
    """k x k bipartite adjacency view; cell (u, v - k) per edge (u, v)."""
    return ZeroOneMatrix(p.k, p.k, frozenset((u, v - p.k) for u, v in p.edges))


# -- the six hexagons and the quadrilateral, by their conventional names --

_NAMED_EDGES = {
    "C4": ((1, 3), (1, 4), (2, 3), (2, 4)),
    "C6_1": ((1, 5), (2, 5), (2, 4), (3, 4), (3, 6), (1, 6)),
    "C6_2": ((1, 5), (3, 5), (3, 4), (2, 4), (2, 6), (1, 6)),
    "C6_3": ((1, 6), (2, 6), (2, 5), (3, 5), (3, 4), (1, 4)),
    "C6_O": ((1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (1, 6)),
    "C6_U": ((1, 5), (3, 5), (3, 6), (2, 6), (2, 4), (1, 4)),
    "C6_I": ((1, 5), (2, 5), (2, 6), (3, 6), (3, 4), (1, 4)),
}

PATTERN_SET_ALIASES = {
    "S1": ("C6_2", "C6_1"),
    "S2": ("C6_2", "C6_3"),
    "S3": ("C6_U", "C6_I"),
    "S4": ("C6_U", "C6_O"),
    "CB4": ("C4",),
    "CB6": ("C6_1", "C6_2", "C6_3"),
}


def named_patterns() -> dict[str, CyclePattern]:
    return {name: pattern_from_edges(e) for name, e in _NAMED_EDGES.items()}


def pattern_name(p: CyclePattern) -> str | None:
    for name, edges in _NAMED_EDGES.items():
        if tuple(sorted(edges)) == p.edges:
            return name
    return None


def resolve_pattern_names(names) -> list[CyclePattern]:
    """Expand pattern names and set aliases (C6_1, CB6, S1, ...) to patterns."""
    builtins = named_patterns()
    out: list[CyclePattern] = []
    for name in names:
        if name in PATTERN_SET_ALIASES:
            out.extend(builtins[n] for n in PATTERN_SET_ALIASES[name])
        elif name in builtins:
            out.append(builtins[name])
        elif name.startswith("CB") and name[2:].isdigit():
            out.extend(bordered_patterns(int(name[2:])))
        else:
            raise ValueError(f"unknown pattern name {name!r}")
    seen = set()
    unique = []
    for p in out:
        if p.key not in seen:
            seen.add(p.key)
            unique.append(p)
    return unique


# -- 0-1 matrix pattern containment ---------------------------------------


def contains_pattern(
    host: ZeroOneMatrix, pattern: ZeroOneMatrix
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Rows r_1<...<r_a, cols c_1<...<c_b of ``host`` covering the pattern.

    The host must have a 1 wherever the pattern does (extra host ones are
    fine).  DFS over pattern rows keeps, per pattern column, the bitmask of
    host columns still compatible with every chosen row; a leaf is accepted
    when a strictly increasing transversal of those masks exists (greedy
    leftmost selection, which is optimal for increasing transversals).
    """
    if not pattern.ones:
        raise ValueError("pattern must contain at least one 1-cell")
    a, b = pattern.rows, pattern.cols
    if a > host.rows or b > host.cols:
        return None
    pat_rows = [
        frozenset(j for i, j in pattern.ones if i == r) for r in range(1, a + 1)
    ]
    host_masks = [0] * (host.rows + 1)
    for i, j in host.ones:
        host_masks[i] |= 1 << (j - 1)
    full = (1 << host.cols) - 1

    def transversal(masks: list[int]) -> tuple[int, ...] | None:
        cols = []
        prev = 0
        for mask in masks:
            mask >>= prev
            if not mask:
                return None
            step = (mask & -mask).bit_length()
            prev += step
            cols.append(prev)
        return tuple(cols)

    def dfs(pr: int, start_row: int, masks: list[int], rows: list[int]):
        if pr == a:
            cols = transversal(masks)
            if cols is not None:
                return tuple(rows), cols
            return None
        for r in range(start_row, host.rows - (a - pr) + 2):
            new_masks = list(masks)
            ok = True
            for j in pat_rows[pr]:
                new_masks[j - 1] &= host_masks[r]
                if not new_masks[j - 1]:
                    ok = False
                    break
            if ok and transversal(new_masks) is not None:
                rows.append(r)
                hit = dfs(pr + 1, r + 1, new_masks, rows)
                if hit is not None:
                    return hit
                rows.pop()
        return None

    return dfs(0, 1, [full] * b, [])


# -- embedded bordered cycles ----------------------------------------------


@dataclass(frozen=True)
class CycleWitness:
    """An embedded 2l-cycle, as the canonical traversal of host vertices.

    The traversal starts at the smallest cycle vertex and moves toward its
    smaller cycle neighbor.  ``pattern`` is the order type of the embedding.
    """

    vertices: tuple[int, ...]
    pattern: CyclePattern

    @property
    def half_length(self) -> int:
        return len(self.vertices) // 2

    def cycle_edges(self) -> tuple[tuple[int, int], ...]:
        n = len(self.vertices)
        out = []
        for i in range(n):
            u, v = self.vertices[i], self.vertices[(i + 1) % n]
            out.append((min(u, v), max(u, v)))
        return tuple(sorted(out))

    def outer_border(self) -> tuple[int, int]:
        return min(self.vertices), max(self.vertices)

    def inner_border(self) -> tuple[int, int]:
        s = sorted(self.vertices)
        l = len(s) // 2
        return s[l - 1], s[l]


def _induced_pattern(traversal: tuple[int, ...]) -> CyclePattern:
    rank = {v: i + 1 for i, v in enumerate(sorted(traversal))}
    return pattern_from_traversal([rank[v] for v in traversal])


def _range_slice(adj: tuple[int, ...], lo: int, hi: int) -> tuple[int, ...]:
    """Neighbors strictly between lo and hi."""
    return adj[bisect.bisect_right(adj, lo) : bisect.bisect_left(adj, hi)]


def find_bordered_cycles(
    g: OrderedGraph, two_l: int, limit: int | None = None
) -> list[CycleWitness]:
    """All embedded bordered 2l-cycles, anchored on their outer border.

    For each edge (a, b) with a < b, the DFS grows the traversal
    a, v_1, ..., v_{2l-2}, b where odd positions live in the high half
    (strictly between the current low-half maximum and b) and even
    positions in the low half (strictly between a and the current high-half
    minimum).  That invariant forces the sorted vertex set to split into
    two halves with no cycle edge inside either, i.e. a two-interval cycle
    whose outer border is (a, b); the inner border is checked at the leaf.
    Witnesses come out in lexicographic traversal order.
    """
    if two_l < 4 or two_l % 2:
        raise ValueError(f"cycle length must be even and >= 4, got {two_l}")
    found: list[CycleWitness] = []
    steps = two_l - 2  # positions 1 .. 2l-2; position 2l-1 is the anchor top

    def emit(path: list[int]) -> bool:
        traversal = tuple(path)
        found.append(CycleWitness(traversal, _induced_pattern(traversal)))
        return limit is not None and len(found) >= limit

    for a, b in g.edges:
        path = [a]
        used = {a, b}

        def dfs(pos: int, max_a: int, min_b: int) -> bool:
            prev = path[-1]
            if pos == steps:  # last low-half vertex; must also close onto b
                for w in _range_slice(g.neighbors(prev), a, min_b):
                    if w in used or not g.has_edge(w, b):
                        continue
                    path.append(w)
                    path.append(b)
                    inner = (max(max_a, w), min_b)
                    if _cycle_has_edge(path, inner) and emit(path[:]):
                        path.pop()
                        path.pop()
                        return True
                    path.pop()
                    path.pop()
                return False
            if pos % 2:  # high half
                cands = _range_slice(g.neighbors(prev), max_a, b)
            else:  # low half
                cands = _range_slice(g.neighbors(prev), a, min_b)
            for w in cands:
                if w in used:
                    continue
                used.add(w)
                path.append(w)
                if pos % 2:
                    done = dfs(pos + 1, max_a, min(min_b, w))
                else:
                    done = dfs(pos + 1, max(max_a, w), min_b)
                if done:
                    return True
                path.pop()
                used.discard(w)
            return False

        if dfs(1, a, b):
            break
    return found


def _cycle_has_edge(path: list[int], edge: tuple[int, int]) -> bool:
    n = len(path)
    for i in range(n):
        u, v = path[i], path[(i + 1) % n]
        if (min(u, v), max(u, v)) == edge:
            return True
    return False


def find_pattern_embeddings(
    g: OrderedGraph, p: CyclePattern, limit: int | None = None
) -> list[tuple[int, ...]]:
    """Order-respecting embeddings of a pattern: increasing host 2k-tuples.

    Returns tuples (w_1 < ... < w_2k) such that every pattern edge (u, v)
    maps to a host edge (w_u, w_v); extra host edges are allowed.
    """
    two_k = 2 * p.k
    back_edges: list[list[int]] = [[] for _ in range(two_k + 1)]
    for u, v in p.edges:
        back_edges[v].append(u)
    out: list[tuple[int, ...]] = []
    assign: list[int] = []

    def dfs(t: int) -> bool:
        if t > two_k:
            out.append(tuple(assign))
            return limit is not None and len(out) >= limit
        lo = assign[-1] if assign else 0
        for w in range(lo + 1, g.n - (two_k - t) + 1):
            if all(g.has_edge(assign[s - 1], w) for s in back_edges[t]):
                assign.append(w)
                if dfs(t + 1):
                    return True
                assign.pop()
        return False

    dfs(1)
    return out


# -- zigzag paths -----------------------------------------------------------


def is_zigzag_sequence(g: OrderedGraph, seq) -> bool:
    """Adjacent sequence whose evens descend below v0 and odds ascend above v1."""
    seq = list(seq)
    if len(seq) < 2 or seq[0] >= seq[1]:
        return False
    for i in range(2, len(seq)):
        if i % 2 == 0 and seq[i] >= seq[i - 2]:
            return False
        if i % 2 == 1 and seq[i] <= seq[i - 2]:
            return False
    return all(g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def count_zigzag_paths(
    g: OrderedGraph,
    k: int,
    *,
    per_pair: bool = False,
    witnesses: bool = False,
):
    """Count k-zigzag paths; totals by DP, per-endpoint-pair by enumeration.

    Returns the total count, or with ``per_pair`` a Counter keyed by
    (v_0, v_k), or with ``witnesses`` additionally the list of sequences.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not per_pair and not witnesses:
        return _zigzag_total(g, k)
    counts: Counter = Counter()
    wits: list[tuple[int, ...]] = []
    path: list[int] = []

    def dfs(i: int):
        if i == k:
            counts[(path[0], path[-1])] += 1
            if witnesses:
                wits.append(tuple(path))
            return
        prev, cur = path[-2], path[-1]
        adj = g.neighbors(cur)
        if (i + 1) % 2 == 0:
            cands = adj[: bisect.bisect_left(adj, prev)]
        else:
            cands = adj[bisect.bisect_right(adj, prev) :]
        for w in cands:
            path.append(w)
            dfs(i + 1)
            path.pop()

    for a, b in g.edges:
        path = [a, b]
        if k == 1:
            counts[(a, b)] += 1
            if witnesses:
                wits.append((a, b))
        else:
            dfs(1)
    if witnesses:
        return counts, wits
    return counts


def _zigzag_total(g: OrderedGraph, k: int) -> int:
    if k == 1:
        return g.m
    memo: dict[tuple[int, int, int], int] = {}

    def ext(i: int, prev: int, cur: int) -> int:
        if i == k:
            return 1
        key = (i, prev, cur)
        cached = memo.get(key)
        if cached is not None:
            return cached
        adj = g.neighbors(cur)
        if (i + 1) % 2 == 0:
            cands = adj[: bisect.bisect_left(adj, prev)]
        else:
            cands = adj[bisect.bisect_right(adj, prev) :]
        total = sum(ext(i + 1, cur, w) for w in cands)
        memo[key] = total
        return total

    return sum(ext(1, a, b) for a, b in g.edges)


# -- pattern file format ----------------------------------------------------


def write_pattern(p: CyclePattern, f) -> None:
    f.write(f"{p.k}\n")
    for u, v in p.edges:
        f.write(f"{u} {v}\n")


def read_pattern(f) -> CyclePattern:
    lines = [ln.strip() for ln in f if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise InputFormatError("empty pattern file", line=1)
    try:
        k = int(lines[0])
    except ValueError:
        raise InputFormatError("first line must be k", line=1) from None
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise InputFormatError(f"expected 'u v', got {line!r}", line=lineno)
        edges.append((int(parts[0]), int(parts[1])))
    if len(edges) != 2 * k:
        raise InputFormatError(f"expected {2 * k} edges, found {len(edges)}")
    return pattern_from_edges(edges)
