"""Ordered graphs: the core data model.

Vertices are 1..n and the linear order is the integer order; nothing ever
reorders them.  Graphs are immutable after construction, with per-vertex
adjacency kept sorted so left/right neighborhood queries are binary
searches.  A two-interval view of a graph is a 0-1 matrix whose rows are
the first interval and whose columns are the second, both ascending; under
that convention the outer border of a full bipartite pattern sits at cell
(1, c) and the inner border at cell (r, 1).
"""

import bisect
import random
from dataclasses import dataclass, field

from .errors import InputFormatError, SplitError

__all__ = [
    "OrderedGraph",
    "ZeroOneMatrix",
    "from_edge_list",
    "subgraph_with_edges",
    "to_bipartite_matrix",
    "graph_from_matrix",
    "interval_chromatic_number",
    "left_right_neighborhoods",
    "write_graph",
    "read_graph",
    "write_matrix",
    "read_matrix",
    "random_ordered_graph",
]


@dataclass(frozen=True)
class OrderedGraph:
    """Simple graph on vertices 1..n with the integer vertex order."""

    n: int
    edges: tuple[tuple[int, int], ...]  # sorted; each pair (i, j) has i < j
    _adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _edge_set: frozenset[tuple[int, int]] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._edge_set

    def left_neighbors(self, v: int) -> tuple[int, ...]:
        adj = self._adj[v]
        return adj[: bisect.bisect_left(adj, v)]

    def right_neighbors(self, v: int) -> tuple[int, ...]:
        adj = self._adj[v]
        return adj[bisect.bisect_right(adj, v) :]

    def vertices(self) -> range:
        return range(1, self.n + 1)


def from_edge_list(n: int, pairs) -> OrderedGraph:
    """Normalized graph from (i, j) pairs; duplicates collapse, loops reject."""
    if n < 0:
        raise ValueError("vertex count must be >= 0")
    seen: set[tuple[int, int]] = set()
    for i, j in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"vertex out of range 1..{n} in pair ({i}, {j})")
        if i == j:
            raise ValueError(f"loop at vertex {i}")
        seen.add((i, j) if i < j else (j, i))
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    return OrderedGraph(
        n,
        edges,
        tuple(tuple(sorted(a)) for a in adj),
        frozenset(edges),
    )


def subgraph_with_edges(g: OrderedGraph, edge_subset) -> OrderedGraph:
    """Same vertex set, edge set restricted to ``edge_subset``."""
    keep = {(min(i, j), max(i, j)) for i, j in edge_subset}
    extra = keep - g._edge_set
    if extra:
        raise ValueError(f"{sorted(extra)[0]} is not an edge of the host")
    return from_edge_list(g.n, keep)


@dataclass(frozen=True)
class ZeroOneMatrix:
    """Sparse 0-1 matrix; cells are 1-based (row, col) positions of ones."""

    rows: int
    cols: int
    ones: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.ones:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise ValueError(f"cell ({i}, {j}) outside {self.rows}x{self.cols}")

    def row_ones(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(j for r, j in self.ones if r == i))


def to_bipartite_matrix(g: OrderedGraph, split: int) -> ZeroOneMatrix:
    """Bipartite adjacency matrix for the split {1..s} | {s+1..n}.

    Fails (SplitError) on the first edge, in sorted order, lying inside
    either interval.
    """
    if not (1 <= split < g.n):
        raise ValueError(f"split must be in 1..{g.n - 1}")
    ones = set()
    for i, j in g.edges:
        if j <= split or i > split:
            raise SplitError((i, j), split)
        ones.add((i, j - split))
    return ZeroOneMatrix(split, g.n - split, frozenset(ones))


def graph_from_matrix(mat: ZeroOneMatrix) -> OrderedGraph:
    """Inverse of ``to_bipartite_matrix``: rows become 1..r, columns r+1..r+c."""
    return from_edge_list(
        mat.rows + mat.cols, [(i, mat.rows + j) for i, j in mat.ones]
    )


def interval_chromatic_number(g: OrderedGraph) -> int:
    """Minimum number of consecutive intervals with no internal edge.

    Left-to-right sweep opening a new interval exactly when the next vertex
    has a neighbor inside the current one; an exchange argument shows the
    sweep is optimal among interval partitions (cross-checked exhaustively
    in the tests).
    """
    if g.n == 0:
        return 0
    count = 1
    start = 1
    for v in range(2, g.n + 1):
        left = g.left_neighbors(v)
        if left and left[-1] >= start:
            count += 1
            start = v
    return count


def left_right_neighborhoods(g: OrderedGraph, v: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not (1 <= v <= g.n):
        raise ValueError(f"vertex {v} out of range 1..{g.n}")
    return g.left_neighbors(v), g.right_neighbors(v)


# -- text formats ---------------------------------------------------------
#
# Graph file: first line "n m", then m lines "i j" with i < j, ASCII decimal,
# single spaces; lines starting with '#' are comments.  Matrix file: first
# line "r c", then r lines of c characters from {0,1}.


def write_graph(g: OrderedGraph, f) -> None:
    f.write(f"{g.n} {g.m}\n")
    for i, j in g.edges:
        f.write(f"{i} {j}\n")


def read_graph(f) -> OrderedGraph:
    header = None
    pairs = []
    expected = None
    n = 0
    for lineno, raw in enumerate(f, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise InputFormatError("expected 'n m' header", line=lineno)
            try:
                n, expected = int(parts[0]), int(parts[1])
            except ValueError:
                raise InputFormatError("non-integer header", line=lineno) from None
            header = lineno
            continue
        if len(parts) != 2:
            raise InputFormatError(f"expected 'i j', got {line!r}", line=lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(f"non-integer pair {line!r}", line=lineno) from None
        if not (i < j):
            raise InputFormatError(f"edge must satisfy i < j, got {line!r}", line=lineno)
        if not (1 <= i and j <= n):
            raise InputFormatError(f"vertex out of range 1..{n}", line=lineno)
        pairs.append((i, j))
    if header is None:
        raise InputFormatError("empty graph file", line=1)
    if expected != len(pairs):
        raise InputFormatError(
            f"header promises {expected} edges, found {len(pairs)}", line=header
        )
    return from_edge_list(n, pairs)


def write_matrix(mat: ZeroOneMatrix, f) -> None:
    f.write(f"{mat.rows} {mat.cols}\n")
    ones = mat.ones
    for i in range(1, mat.rows + 1):
        f.write("".join("1" if (i, j) in ones else "0" for j in range(1, mat.cols + 1)))
        f.write("\n")


def read_matrix(f) -> ZeroOneMatrix:
    lines = [ln.rstrip("\n") for ln in f]
    body = [(no, ln) for no, ln in enumerate(lines, start=1) if ln.strip()]
    if not body:
        raise InputFormatError("empty matrix file", line=1)
    no0, head = body[0]
    parts = head.split()
    if len(parts) != 2:
        raise InputFormatError("expected 'r c' header", line=no0)
    r, c = int(parts[0]), int(parts[1])
    if len(body) - 1 != r:
        raise InputFormatError(f"expected {r} rows, found {len(body) - 1}", line=no0)
    ones = set()
    for i, (no, row) in enumerate(body[1:], start=1):
        if len(row) != c or any(ch not in "01" for ch in row):
            raise InputFormatError(f"row must be {c} chars of 0/1", line=no)
        for j, ch in enumerate(row, start=1):
            if ch == "1":
                ones.add((i, j))
    return ZeroOneMatrix(r, c, frozenset(ones))


def random_ordered_graph(n: int, m: int, rng: random.Random) -> OrderedGraph:
    """Uniform m-edge graph on 1..n, reproducible from the caller's rng."""
    all_pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if m > len(all_pairs):
        raise ValueError(f"at most {len(all_pairs)} edges on {n} vertices")
    return from_edge_list(n, rng.sample(all_pairs, m))
