"""Exact arithmetic in Z[sqrt(d)] for squarefree d < 0 with d = 2, 3 mod 4.

Under that hypothesis Z[sqrt(d)] is the full ring of integers, the norm
a^2 - d*b^2 is positive definite, and the units are exactly +-1.  Norm-based
searches make irreducibility and bounded absolute-irreducibility decidable;
primality is only witnessed (explicit non-prime products, or the Euler
criterion for inert rational primes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, ZeroDivisor, ZeroOrUnit
from .abgroup import DEFAULT_NODE_BUDGET


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        if n % f == 0:
            n //= f
        f += 1
    return True


@dataclass(frozen=True)
class QuadInt:
    """a + b*sqrt(d); the ring supplies d."""

    a: int
    b: int

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b})"


@dataclass(frozen=True)
class QuadRing:
    d: int

    def __post_init__(self):
        if self.d >= 0:
            raise ValueError("d must be negative")
        if self.d % 4 not in (2, 3):
            raise ValueError("d must be 2 or 3 mod 4 (otherwise not the maximal order)")
        if not _is_squarefree(self.d):
            raise ValueError("d must be squarefree")

    def element(self, a: int, b: int = 0) -> QuadInt:
        return QuadInt(int(a), int(b))

    def sqrt_d(self) -> QuadInt:
        return QuadInt(0, 1)

    def norm(self, z: QuadInt) -> int:
        return z.a * z.a - self.d * z.b * z.b

    def mul(self, x: QuadInt, y: QuadInt) -> QuadInt:
        return QuadInt(x.a * y.a + self.d * x.b * y.b, x.a * y.b + x.b * y.a)

    def conj(self, z: QuadInt) -> QuadInt:
        return QuadInt(z.a, -z.b)

    def neg(self, z: QuadInt) -> QuadInt:
        return QuadInt(-z.a, -z.b)

    def power(self, z: QuadInt, n: int) -> QuadInt:
        out = QuadInt(1, 0)
        for _ in range(n):
            out = self.mul(out, z)
        return out

    def is_unit(self, z: QuadInt) -> bool:
        return self.norm(z) == 1

    def exact_divide(self, z: QuadInt, w: QuadInt) -> QuadInt | None:
        """z / w when exact, else None."""
        nw = self.norm(w)
        if nw == 0:
            raise ZeroDivisor("division by zero")
        t = self.mul(z, self.conj(w))
        if t.a % nw or t.b % nw:
            return None
        return QuadInt(t.a // nw, t.b // nw)


def canonical_associate(z: QuadInt) -> QuadInt:
    """Representative modulo units: first nonzero coordinate positive."""
    if z.a > 0 or (z.a == 0 and z.b > 0):
        return z
    if z.a == 0 and z.b == 0:
        return z
    return QuadInt(-z.a, -z.b)


def elements_of_norm(ring: QuadRing, m: int) -> list[QuadInt]:
    """All a + b*sqrt(d) with norm exactly m (both signs), sorted by (a, b)."""
    if m < 0:
        return []
    if m == 0:
        return [QuadInt(0, 0)]
    absd = -ring.d
    out = set()
    b = 0
    while absd * b * b <= m:
        rest = m - absd * b * b
        a = math.isqrt(rest)
        if a * a == rest:
            for sa in ((a, -a) if a else (0,)):
                for sb in ((b, -b) if b else (0,)):
                    out.add(QuadInt(sa, sb))
        b += 1
    return sorted(out, key=lambda z: (z.a, z.b))


def _divisors(n: int) -> list[int]:
    out = []
    f = 1
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            if f != n // f:
                out.append(n // f)
        f += 1
    return sorted(out)


def quad_divides(ring: QuadRing, w: QuadInt, z: QuadInt) -> bool:
    """Exact divisibility w | z."""
    if ring.norm(w) == 0:
        raise ZeroDivisor("division by zero")
    return ring.exact_divide(z, w) is not None


@lru_cache(maxsize=None)
def _irreducible_cached(d: int, a: int, b: int) -> bool:
    ring = QuadRing(d)
    z = QuadInt(a, b)
    nz = ring.norm(z)
    for m in _divisors(nz):
        if 1 < m < nz:
            for w in elements_of_norm(ring, m):
                if quad_divides(ring, w, z):
                    return False
    return True


def quad_is_irreducible(ring: QuadRing, z: QuadInt) -> bool:
    """No divisor of norm strictly between 1 and N(z)."""
    nz = ring.norm(z)
    if nz <= 1:
        raise ZeroOrUnit("irreducibility is about nonzero nonunits")
    return _irreducible_cached(ring.d, z.a, z.b)


@dataclass(frozen=True)
class PrimeWitness:
    """Outcome of the primality probe for one element.

    kind "non_prime_witness": z | x*y with z dividing neither factor.
    kind "prime_by_euler": inert odd rational prime (d is a non-residue).
    kind "unknown": neither recipe applies.
    """

    kind: str
    x: QuadInt | None = None
    y: QuadInt | None = None
    detail: str = ""


def quad_is_prime_witness(ring: QuadRing, z: QuadInt) -> PrimeWitness:
    if ring.norm(z) == 0:
        raise ZeroDivisor("primality probe of zero")
    d = ring.d
    if (z.a, z.b) in ((2, 0), (-2, 0)):
        if d % 4 == 2:
            x = y = ring.sqrt_d()
        else:
            x, y = QuadInt(1, 1), QuadInt(1, -1)
        prod = ring.mul(x, y)
        assert quad_divides(ring, z, prod)
        assert not quad_divides(ring, z, x) and not quad_divides(ring, z, y)
        return PrimeWitness("non_prime_witness", x, y,
                            "2 divides the product but neither factor")
    if z.b == 0:
        p = abs(z.a)
        if p > 2 and p % 2 == 1 and _rational_prime(p) and (2 * d) % p != 0:
            if pow(d % p, (p - 1) // 2, p) == p - 1:
                return PrimeWitness("prime_by_euler", detail=f"d^(({p}-1)/2) = -1 mod {p}")
    return PrimeWitness("unknown", detail="no recipe applies to this element")


def _rational_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _irreducible_divisor_candidates(ring: QuadRing, t: QuadInt) -> list[QuadInt]:
    nt = ring.norm(t)
    cands = []
    for m in _divisors(nt):
        if m <= 1:
            continue
        for w in elements_of_norm(ring, m):
            w = canonical_associate(w)
            if w in cands:
                continue
            if _irreducible_cached(ring.d, w.a, w.b) and quad_divides(ring, w, t):
                cands.append(w)
    cands.sort(key=lambda z: (ring.norm(z), z.a, z.b))
    return cands


def quad_factorizations(ring: QuadRing, t: QuadInt,
                        *, budget: int = DEFAULT_NODE_BUDGET) -> list[tuple[int, tuple[QuadInt, ...]]]:
    """All factorizations of t into irreducibles modulo units.

    Each result is (sign, atoms) with atoms canonical and sorted, such that
    sign * product(atoms) = t.  Units themselves have the empty factorization.
    """
    if ring.norm(t) == 0:
        raise ZeroDivisor("cannot factor zero")
    cands = _irreducible_divisor_candidates(ring, t)
    out: list[tuple[int, tuple[QuadInt, ...]]] = []
    acc: list[QuadInt] = []
    nodes = 0

    def rec(rem: QuadInt, start: int):
        nonlocal nodes
        if ring.is_unit(rem):
            out.append((rem.a, tuple(acc)))
            return
        for i in range(start, len(cands)):
            w = cands[i]
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"factorization search exceeded {budget} divisions")
            q = ring.exact_divide(rem, w)
            if q is not None:
                acc.append(w)
                rec(q, i)
                acc.pop()

    rec(t, 0)
    return out


@dataclass(frozen=True)
class QuadAbsirredResult:
    absolutely_irreducible: bool
    n: int | None = None
    witness_sign: int | None = None
    witness: tuple[QuadInt, ...] | None = None


def quad_brute_absirred(ring: QuadRing, z: QuadInt, n_max: int,
                        *, budget: int = DEFAULT_NODE_BUDGET) -> QuadAbsirredResult:
    """Exhaustively check that z**n factors only as n copies of +-z, n <= n_max."""
    if not quad_is_irreducible(ring, z):
        raise ZeroOrUnit("absolute irreducibility is about irreducible elements")
    zc = canonical_associate(z)
    for n in range(1, n_max + 1):
        t = ring.power(z, n)
        for sign, atoms in quad_factorizations(ring, t, budget=budget):
            if atoms != (zc,) * n:
                return QuadAbsirredResult(False, n, sign, atoms)
    return QuadAbsirredResult(True)


def half_factorial_check(ring: QuadRing, max_norm: int,
                         *, budget: int = DEFAULT_NODE_BUDGET) -> tuple[bool, QuadInt | None]:
    """All nonzero nonunits of norm <= max_norm have equal-length factorizations.

    Returns (True, None) or (False, counterexample).
    """
    for m in range(2, max_norm + 1):
        for z in elements_of_norm(ring, m):
            if z != canonical_associate(z):
                continue
            lengths = {len(atoms) for _, atoms in quad_factorizations(ring, z, budget=budget)}
            if len(lengths) != 1:
                return False, z
    return True, None
