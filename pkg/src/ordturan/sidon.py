"""Generation and verification of B_k sets (generalized Sidon sets).

A set of positive integers is a B_k set when all sums of k elements (with
repetition allowed) are pairwise distinct up to reordering the summands.
Equivalently, for every l <= k, equal l-sums force equal multisets of terms.

Three producers are provided:

* ``bose_chowla(q, k)`` -- the finite-field discrete-log construction giving
  exactly q elements inside {1, ..., q^k - 1};
* ``greedy_bk(n, k)`` -- the deterministic first-fit scan of 1..n;
* ``best_bk_for_budget(n, k)`` -- the larger of the two for a universe 1..n.

``verify_bk`` is the exact brute-force oracle used to certify all of them.
"""

import itertools
from dataclasses import dataclass, field

from . import gf
from .errors import ResourceLimitError

__all__ = [
    "BkSet",
    "SumCollision",
    "BkVerification",
    "find_sum_collision",
    "verify_bk",
    "bose_chowla",
    "greedy_bk",
    "best_bk_for_budget",
    "largest_prime_power_for",
    "write_bk_set",
    "read_bk_set",
]

# Ceiling on q^k for the finite-field route (dlog walk is linear in q^k).
FIELD_SIZE_BUDGET = 10**7
MAX_PRIME_POWER_EXPONENT = 20


@dataclass(frozen=True)
class BkSet:
    """A certified-by-construction B_k set inside {1, ..., universe_bound}."""

    elements: tuple[int, ...]
    k: int
    universe_bound: int
    provenance: str = field(default="unspecified", compare=False)

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be >= 2")
        elems = self.elements
        if any(e < 1 for e in elems):
            raise ValueError("elements must be positive")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError("elements must be strictly increasing")
        if elems and elems[-1] > self.universe_bound:
            raise ValueError(
                f"element {elems[-1]} exceeds universe bound {self.universe_bound}"
            )

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class SumCollision:
    """Two distinct multisets of equal size with the same sum."""

    total: int
    first: tuple[int, ...]
    second: tuple[int, ...]


@dataclass(frozen=True)
class BkVerification:
    ok: bool
    collision: SumCollision | None = None

    def __bool__(self):
        return self.ok


def find_sum_collision(elements, l: int) -> SumCollision | None:
    """First pair of distinct l-multisets of ``elements`` with equal sums.

    Scans l-multisets in lexicographic order and hashes their sums, so the
    reported witness is deterministic.  Returns None when all l-sums differ.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    elems = sorted(set(elements))
    seen: dict[int, tuple[int, ...]] = {}
    for combo in itertools.combinations_with_replacement(elems, l):
        s = sum(combo)
        if s in seen:
            return SumCollision(s, seen[s], combo)
        seen[s] = combo
    return None


def verify_bk(candidate, k: int) -> BkVerification:
    """Exact check that all k-multiset sums of ``candidate`` are distinct.

    Distinct k-sums imply distinct l-sums for every l <= k (pad both sides
    of a shorter collision with k - l copies of any fixed element), so this
    single check certifies the whole ladder of sum properties.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    collision = find_sum_collision(candidate, k)
    return BkVerification(collision is None, collision)


def bose_chowla(q: int, k: int, size_budget: int = FIELD_SIZE_BUDGET) -> BkSet:
    """B_k set of exactly q elements in {1, ..., q^k - 1} for a prime power q.

    Fix a multiplicative generator theta of GF(q^k) (built as a degree-k
    extension tower over GF(q)).  The discrete logs of theta + a over all a
    in GF(q) form a B_k set modulo q^k - 1; shifting every residue by +1
    moves the set into the 1-based universe without disturbing sums.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if gf.prime_power_decomposition(q) is None:
        raise ValueError(f"{q} is not a prime power")
    F = gf.extension_over(q, k, size_budget=size_budget)
    theta = gf.find_generator(F)
    targets = {F.add(theta, F.embed(a)): a for a in range(q)}
    logs: list[int] = []
    x = F.one
    theta_digits = F.decode(theta)
    xd = F.decode(x)
    for exp in range(F.size - 1):
        if x in targets:
            logs.append(exp)
            if len(logs) == len(targets):
                break
        xd = F.mul_digits(xd, theta_digits)
        x = F.encode(xd)
    if len(logs) != q:
        raise RuntimeError("discrete-log walk missed a target")  # unreachable
    elements = tuple(sorted(v + 1 for v in logs))
    return BkSet(elements, k, q**k - 1, provenance=f"bose-chowla q={q}")


def greedy_bk(n: int, k: int) -> BkSet:
    """First-fit scan of 1..n keeping the set B_k at every step.

    A candidate x is admitted iff no k-multiset of the enlarged set that
    uses x collides with an existing or concurrently created k-sum; sums
    never involving x are unaffected, so the incremental check is complete.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 2:
        raise ValueError("k must be >= 2")
    chosen: list[int] = []
    sums: set[int] = set()
    for x in range(1, n + 1):
        new_sums: set[int] = set()
        ok = True
        for rest in itertools.combinations_with_replacement(chosen + [x], k - 1):
            s = x + sum(rest)
            if s in sums or s in new_sums:
                ok = False
                break
            new_sums.add(s)
        if ok:
            chosen.append(x)
            sums |= new_sums
    return BkSet(tuple(chosen), k, n, provenance="greedy")


def largest_prime_power_for(n: int, k: int) -> int | None:
    """Largest prime power q with q^k - 1 <= n (exponent <= 20), or None."""
    q = 2
    while (q + 1) ** k - 1 <= n:
        q += 1
    while q >= 2:
        decomp = gf.prime_power_decomposition(q)
        if decomp is not None and decomp[1] <= MAX_PRIME_POWER_EXPONENT:
            if q**k - 1 <= n:
                return q
        q -= 1
    return None


def best_bk_for_budget(n: int, k: int) -> BkSet:
    """Larger of the greedy and Bose-Chowla sets inside {1, ..., n}.

    Ties go to greedy.  The winning route is recorded in ``provenance``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 2:
        raise ValueError("k must be >= 2")
    best = greedy_bk(n, k)
    q = largest_prime_power_for(n, k)
    if q is not None:
        bc = bose_chowla(q, k)
        if len(bc) > len(best):
            best = BkSet(bc.elements, k, n, provenance=bc.provenance)
    return best


def write_bk_set(s: BkSet, f) -> None:
    """Serialize: header '# Bk k=<k> n=<n>' then one element per line."""
    f.write(f"# Bk k={s.k} n={s.universe_bound}\n")
    for e in s.elements:
        f.write(f"{e}\n")


def read_bk_set(f) -> BkSet:
    from .errors import InputFormatError

    header = f.readline()
    parts = header.strip().split()
    if len(parts) != 4 or parts[0] != "#" or parts[1] != "Bk":
        raise InputFormatError("expected header '# Bk k=<k> n=<n>'", line=1)
    try:
        k = int(parts[2].removeprefix("k="))
        n = int(parts[3].removeprefix("n="))
    except ValueError:
        raise InputFormatError("bad k=/n= fields in header", line=1) from None
    elements = []
    for lineno, raw in enumerate(f, start=2):
        raw = raw.strip()
        if not raw or raw.startswith("#"):
            continue
        try:
            elements.append(int(raw))
        except ValueError:
            raise InputFormatError(f"bad integer {raw!r}", line=lineno) from None
    return BkSet(tuple(elements), k, n, provenance="file")
