"""Finite field towers with deterministic element and polynomial orderings.

Every field element is an integer rank in ``0..size-1``.  For a prime field
the rank is the residue itself.  For an extension of degree ``d`` over a base
of size ``Q``, the rank encodes the coefficient vector ``(c_0, ..., c_{d-1})``
of a polynomial ``c_0 + c_1 x + ... + c_{d-1} x^{d-1}`` as ``sum(c_i * Q^i)``,
where each ``c_i`` is itself a base-field rank.  Rank order is therefore a
fixed "counting" order (0, 1, ..., Q-1, x, x+1, ...), and everything that
scans for a smallest object (irreducible modulus, multiplicative generator)
scans in that order, so results are reproducible across runs and platforms.

Reduction polynomials are chosen as the first monic irreducible of the
required degree in counting order; irreducibility is established by trial
division against every monic polynomial of at most half the degree, which is
exact at the small degrees used here.
"""

from functools import lru_cache

from .errors import ResourceLimitError

__all__ = [
    "PrimeField",
    "ExtensionField",
    "prime_power_field",
    "is_prime",
    "prime_power_decomposition",
    "factorize",
    "min_irreducible",
    "find_generator",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, ascending."""
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            e += 1
            n //= d
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """Return (p, e) with q = p**e and p prime, or None."""
    if q < 2:
        return None
    factors = factorize(q)
    if len(factors) != 1:
        return None
    return factors[0]


class PrimeField:
    """GF(p): integers modulo a prime, elements are their own ranks."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.size = p
        self.zero = 0
        self.one = 1

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def ensure_tables(self) -> None:
        pass  # native modular arithmetic is already cheap

    def __repr__(self):
        return f"GF({self.p})"


class ExtensionField:
    """GF(Q^d) as polynomials over a base field modulo a monic irreducible.

    ``modulus`` holds the d non-leading coefficients (base ranks, ascending
    degree) of the reduction polynomial ``x^d + m_{d-1} x^{d-1} + ... + m_0``.
    """

    _TABLE_CAP = 4096  # build full add/mul tables below this size

    def __init__(self, base, modulus: tuple[int, ...]):
        self.base = base
        self.deg = len(modulus)
        if self.deg < 1:
            raise ValueError("extension degree must be >= 1")
        self.modulus = tuple(modulus)
        self.size = base.size**self.deg
        self.zero = 0
        self.one = 1
        # x^deg == -(m_0 + m_1 x + ...): cached digit vector of the negation
        self._xd = tuple(base.neg(c) for c in self.modulus)
        self._mul_table: list[list[int]] | None = None
        self._add_table: list[list[int]] | None = None
        if self.size <= self._TABLE_CAP:
            self._build_tables()

    # -- rank <-> coefficient digits ------------------------------------

    def decode(self, a: int) -> tuple[int, ...]:
        Q = self.base.size
        digits = []
        for _ in range(self.deg):
            a, c = divmod(a, Q)
            digits.append(c)
        return tuple(digits)

    def encode(self, digits) -> int:
        Q = self.base.size
        a = 0
        for c in reversed(digits):
            a = a * Q + c
        return a

    def embed(self, a: int) -> int:
        """Rank of a base element viewed as a constant polynomial."""
        return a

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        badd = self.base.add
        return self.encode(
            [badd(x, y) for x, y in zip(self.decode(a), self.decode(b))]
        )

    def sub(self, a: int, b: int) -> int:
        bsub = self.base.sub
        return self.encode(
            [bsub(x, y) for x, y in zip(self.decode(a), self.decode(b))]
        )

    def neg(self, a: int) -> int:
        return self.encode([self.base.neg(x) for x in self.decode(a)])

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self.encode(self.mul_digits(self.decode(a), self.decode(b)))

    def mul_digits(self, da, db) -> list[int]:
        """Product of two coefficient vectors, reduced mod the modulus."""
        base = self.base
        d = self.deg
        conv = [base.zero] * (2 * d - 1)
        for i, x in enumerate(da):
            if x == base.zero:
                continue
            for j, y in enumerate(db):
                conv[i + j] = base.add(conv[i + j], base.mul(x, y))
        for t in range(2 * d - 2, d - 1, -1):
            c = conv[t]
            if c == base.zero:
                continue
            conv[t] = base.zero
            off = t - d
            for i, m in enumerate(self._xd):
                conv[off + i] = base.add(conv[off + i], base.mul(c, m))
        return conv[:d]

    def pow(self, a: int, e: int) -> int:
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def _build_tables(self):
        n = self.size
        dec = [self.decode(a) for a in range(n)]
        badd = self.base.add
        self._add_table = [
            [self.encode([badd(x, y) for x, y in zip(dec[a], dec[b])]) for b in range(n)]
            for a in range(n)
        ]
        self._mul_table = [
            [self.encode(self.mul_digits(dec[a], dec[b])) for b in range(n)]
            for a in range(n)
        ]

    def __repr__(self):
        return f"GF({self.base.size}^{self.deg} over {self.base!r})"


# -- polynomial helpers over an arbitrary field (ranks) -------------------


def _poly_eval(coeffs, x, field) -> int:
    """Evaluate c_0 + c_1 t + ... at t = x (coeffs ascending)."""
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def _poly_rem_monic(num: list[int], den: list[int], field) -> list[int]:
    """Remainder of num by a monic den (both ascending, den[-1] == 1)."""
    num = list(num)
    dd = len(den) - 1
    for t in range(len(num) - 1, dd - 1, -1):
        c = num[t]
        if c == field.zero:
            continue
        num[t] = field.zero
        for i in range(dd):
            num[t - dd + i] = field.sub(num[t - dd + i], field.mul(c, den[i]))
    return num[:dd]


def _is_irreducible(modulus: tuple[int, ...], field) -> bool:
    """Monic x^d + ... irreducible over field? Exhaustive trial division."""
    d = len(modulus)
    poly = list(modulus) + [field.one]
    if d == 1:
        return True
    # linear factors == roots
    for x in range(field.size):
        if _poly_eval(poly, x, field) == field.zero:
            return False
    # higher-degree monic divisors up to d // 2
    for dd in range(2, d // 2 + 1):
        for enc in range(field.size**dd):
            div, e = [], enc
            for _ in range(dd):
                e, c = divmod(e, field.size)
                div.append(c)
            div.append(field.one)
            if all(c == field.zero for c in _poly_rem_monic(poly, div, field)):
                return False
    return True


def min_irreducible(field, degree: int) -> tuple[int, ...]:
    """Non-leading coefficients of the first monic irreducible of ``degree``.

    Scans coefficient vectors in counting order (rank encoding ascending).
    """
    if degree == 1:
        return (field.zero,)  # x itself
    for enc in range(field.size**degree):
        digits, e = [], enc
        for _ in range(degree):
            e, c = divmod(e, field.size)
            digits.append(c)
        if _is_irreducible(tuple(digits), field):
            return tuple(digits)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


def find_generator(field) -> int:
    """Smallest element (rank order) generating the multiplicative group."""
    order = field.size - 1
    prime_factors = [p for p, _ in factorize(order)]
    for a in range(1, field.size):
        if all(field.pow(a, order // p) != field.one for p in prime_factors):
            return a
    raise RuntimeError("no generator found")  # impossible for a field


@lru_cache(maxsize=None)
def prime_power_field(p: int, e: int):
    """GF(p^e): the prime field for e = 1, else its minimal-modulus extension."""
    if e < 1:
        raise ValueError("exponent must be >= 1")
    base = PrimeField(p)
    if e == 1:
        return base
    return ExtensionField(base, min_irreducible(base, e))


def extension_over(q: int, k: int, size_budget: int | None = None):
    """The degree-k extension of GF(q), built as a tower GF(q) -> GF(q^k)."""
    decomp = prime_power_decomposition(q)
    if decomp is None:
        raise ValueError(f"{q} is not a prime power")
    p, e = decomp
    if size_budget is not None and q**k > size_budget:
        raise ResourceLimitError(
            f"field of size {q}^{k} exceeds budget {size_budget}"
        )
    base = prime_power_field(p, e)
    return ExtensionField(base, min_irreducible(base, k))
