"""Finitely generated abelian groups with exact integer linear algebra.

Groups are presented as Z^r + Z/d_1 + ... + Z/d_k.  All arithmetic uses
arbitrary-precision integers throughout; there is no fixed-width fast path,
because Smith normal form intermediates can grow without bound.

Congruence conditions coming from torsion components are reduced to pure
integer kernels by appending one slack column with coefficient -d_j per
torsion component.  The slack coordinates of a kernel vector are uniquely
determined by the leading coordinates, so projecting away the slack part is
a bijection on solutions that preserves the componentwise order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence as Seq

from .errors import BudgetExceeded, DimensionMismatch

#: Sentinel for infinite element order / infinitely many prime divisors.
INFINITE = float("inf")

DEFAULT_NODE_BUDGET = 10**7


# ---------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntMatrix:
    """Immutable rectangular matrix of exact integers."""

    nrows: int
    ncols: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionMismatch("negative matrix dimension")
        if len(self.rows) != self.nrows:
            raise DimensionMismatch("row count does not match nrows")
        for row in self.rows:
            if len(row) != self.ncols:
                raise DimensionMismatch("ragged matrix rows")
            for x in row:
                if not isinstance(x, int):
                    raise TypeError(f"matrix entries must be int, got {x!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], ncols: int | None = None) -> "IntMatrix":
        tup = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            if not tup:
                raise DimensionMismatch("ncols required for a matrix with no rows")
            ncols = len(tup[0])
        return cls(len(tup), ncols, tup)

    @classmethod
    def from_columns(cls, cols: Seq[Seq[int]], nrows: int | None = None) -> "IntMatrix":
        if nrows is None:
            if not cols:
                raise DimensionMismatch("nrows required for a matrix with no columns")
            nrows = len(cols[0])
        rows = tuple(tuple(int(col[i]) for col in cols) for i in range(nrows))
        return cls(nrows, len(cols), rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Seq[int]) -> "IntMatrix":
        n = len(entries)
        return cls(n, n, tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.rows, nrows=self.ncols)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions differ")
        cols = [other.column(j) for j in range(other.ncols)]
        rows = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.rows
        )
        return IntMatrix(self.nrows, other.ncols, rows)

    def det(self) -> int:
        """Exact determinant (fraction-free Bareiss elimination)."""
        if self.nrows != self.ncols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return 1
        m = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U*a*V = D, U and V unimodular.

    D is diagonal with nonnegative entries satisfying d_i | d_{i+1}; zero
    entries come last.
    """
    n, m = a.nrows, a.ncols
    M = [list(row) for row in a.rows]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src, mirrored on U
        mdst, msrc = M[dst], M[src]
        for jj in range(m):
            mdst[jj] += q * msrc[jj]
        udst, usrc = U[dst], U[src]
        for jj in range(n):
            udst[jj] += q * usrc[jj]

    def add_col(dst, src, q):
        for row in M:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def eliminate(t: int) -> bool:
        """Clear row and column t below/right of a pivot; False if submatrix is zero."""
        best = None
        for i in range(t, n):
            for j in range(t, m):
                x = M[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            return False
        _, pi, pj = best
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            dirty = False
            for i in range(t + 1, n):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    add_row(i, t, -q)
                    if M[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, m):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    add_col(j, t, -q)
                    if M[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                return True

    rank = 0
    while rank < min(n, m) and eliminate(rank):
        rank += 1

    def fix_pair(i: int):
        # block [a 0; 0 b] with a not dividing b -> diag(gcd, +-lcm),
        # using operations confined to rows/columns i and i+1
        add_row(i, i + 1, 1)
        while M[i][i + 1]:
            q = M[i][i + 1] // M[i][i]
            add_col(i + 1, i, -q)
            if M[i][i + 1]:
                swap_cols(i, i + 1)
        if M[i + 1][i]:
            q = M[i + 1][i] // M[i][i]
            add_row(i + 1, i, -q)

    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            if M[i + 1][i + 1] % M[i][i] != 0:
                fix_pair(i)
                changed = True

    for i in range(min(n, m)):
        if M[i][i] < 0:
            M[i] = [-x for x in M[i]]
            U[i] = [-x for x in U[i]]

    to_mat = lambda rows, nc: IntMatrix(len(rows), nc, tuple(tuple(r) for r in rows))
    return to_mat(U, n), to_mat(M, m), to_mat(V, m)


def matrix_kernel_basis(a: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the integer kernel {x : a*x = 0}, via Smith normal form."""
    _, d, v = smith_normal_form(a)
    rank = sum(1 for i in range(min(a.nrows, a.ncols)) if d[i, i] != 0)
    return [v.column(j) for j in range(rank, a.ncols)]


# ---------------------------------------------------------------------------
# groups and elements


def _invariant_factors(torsion: tuple[int, ...]) -> tuple[int, ...]:
    if not torsion:
        return ()
    _, d, _ = smith_normal_form(IntMatrix.diagonal(list(torsion)))
    factors = [d[i, i] for i in range(len(torsion))]
    return tuple(x for x in factors if x > 1)


@dataclass(frozen=True, eq=False)
class FinGenAbelianGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_k in the presentation given at construction.

    Equality and hashing compare the invariant-factor normal form, so two
    different presentations of isomorphic groups compare equal.  Element
    coordinates always live in the original presentation.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion order {d} < 2")

    @classmethod
    def free(cls, r: int) -> "FinGenAbelianGroup":
        return cls(free_rank=r)

    @classmethod
    def cyclic(cls, n: int) -> "FinGenAbelianGroup":
        if n < 1:
            raise ValueError("cyclic order must be >= 1")
        return cls() if n == 1 else cls(torsion=(n,))

    @cached_property
    def invariant_factors(self) -> tuple[int, ...]:
        return _invariant_factors(self.torsion)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinGenAbelianGroup):
            return NotImplemented
        return (self.free_rank, self.invariant_factors) == (other.free_rank, other.invariant_factors)

    def __hash__(self) -> int:
        return hash((self.free_rank, self.invariant_factors))

    def same_presentation(self, other: "FinGenAbelianGroup") -> bool:
        return self.free_rank == other.free_rank and self.torsion == other.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def cardinality(self) -> int | float:
        if not self.is_finite:
            return INFINITE
        return math.prod(self.torsion)

    def element(self, coords: Iterable[int]) -> "GroupElement":
        coords = tuple(int(x) for x in coords)
        r, k = self.free_rank, len(self.torsion)
        if len(coords) != r + k:
            raise DimensionMismatch(
                f"expected {r + k} coordinates, got {len(coords)}")
        free = coords[:r]
        tors = tuple(coords[r + j] % self.torsion[j] for j in range(k))
        return GroupElement(self, free, tors)

    def zero(self) -> "GroupElement":
        return self.element((0,) * (self.free_rank + len(self.torsion)))

    def elements(self) -> Iterator["GroupElement"]:
        """All elements of a finite group, in lexicographic coordinate order."""
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")
        for coords in product(*(range(d) for d in self.torsion)):
            yield GroupElement(self, (), coords)

    def __repr__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return "FinGenAbelianGroup(" + (" + ".join(parts) if parts else "trivial") + ")"


@dataclass(frozen=True, eq=False)
class GroupElement:
    """Element of a FinGenAbelianGroup; torsion residues stored reduced."""

    group: FinGenAbelianGroup
    free_part: tuple[int, ...]
    torsion_part: tuple[int, ...]

    def coords(self) -> tuple[int, ...]:
        return self.free_part + self.torsion_part

    def _check_partner(self, other: "GroupElement"):
        if not isinstance(other, GroupElement):
            raise TypeError("expected a GroupElement")
        if not self.group.same_presentation(other.group):
            raise DimensionMismatch("elements of differently presented groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check_partner(other)
        free = tuple(a + b for a, b in zip(self.free_part, other.free_part))
        tors = tuple((a + b) % d for a, b, d in
                     zip(self.torsion_part, other.torsion_part, self.group.torsion))
        return GroupElement(self.group, free, tors)

    def __neg__(self) -> "GroupElement":
        free = tuple(-a for a in self.free_part)
        tors = tuple((-a) % d for a, d in zip(self.torsion_part, self.group.torsion))
        return GroupElement(self.group, free, tors)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __mul__(self, k: int) -> "GroupElement":
        if not isinstance(k, int):
            return NotImplemented
        free = tuple(k * a for a in self.free_part)
        tors = tuple((k * a) % d for a, d in zip(self.torsion_part, self.group.torsion))
        return GroupElement(self.group, free, tors)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.free_part) and not any(self.torsion_part)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (self.group.same_presentation(other.group)
                and self.free_part == other.free_part
                and self.torsion_part == other.torsion_part)

    def __hash__(self) -> int:
        return hash((self.group.free_rank, self.group.torsion,
                     self.free_part, self.torsion_part))

    def __repr__(self) -> str:
        return f"GroupElement{self.coords()}"


def order(group: FinGenAbelianGroup, g: GroupElement) -> int | float:
    """Least n >= 1 with n*g = 0, or INFINITE when the free part is nonzero."""
    if not group.same_presentation(g.group):
        raise DimensionMismatch("element does not belong to the group")
    if any(g.free_part):
        return INFINITE
    n = 1
    for t, d in zip(g.torsion_part, group.torsion):
        n = math.lcm(n, d // math.gcd(d, t))
    return n


# ---------------------------------------------------------------------------
# kernels of group-element families


def zero_sum_columns(group: FinGenAbelianGroup,
                     family: Seq[GroupElement]) -> list[tuple[int, ...]]:
    """Columns of the augmented system for sum_i x_i * g_i = 0 in the group.

    One column per family member (free coordinates, then torsion residues),
    followed by one slack column per torsion component carrying -d_j.
    """
    r, torsion = group.free_rank, group.torsion
    k = len(torsion)
    cols = []
    for g in family:
        if not group.same_presentation(g.group):
            raise DimensionMismatch("family element from a different group")
        cols.append(g.free_part + g.torsion_part)
    for j, d in enumerate(torsion):
        cols.append(tuple(0 for _ in range(r)) +
                    tuple(-d if i == j else 0 for i in range(k)))
    return cols


def kernel_lattice(group: FinGenAbelianGroup,
                   family: Seq[GroupElement]) -> list[tuple[int, ...]]:
    """Lattice basis of {alpha in Z^m : sum_i alpha_i * g_i = 0 in the group}."""
    if not family:
        raise ValueError("family must be nonempty")
    m = len(family)
    cols = zero_sum_columns(group, family)
    a = IntMatrix.from_columns(cols, nrows=group.free_rank + len(group.torsion))
    return [vec[:m] for vec in matrix_kernel_basis(a)]


def is_z_independent(group: FinGenAbelianGroup,
                     family: Seq[GroupElement]) -> bool:
    """True iff the family has no nonzero integer relation; empty families qualify."""
    if not family:
        return True
    return not kernel_lattice(group, family)


def positive_kernel_vector(group: FinGenAbelianGroup,
                           family: Seq[GroupElement],
                           *, budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, ...] | None:
    """Some nonzero alpha >= 0 with sum_i alpha_i * g_i = 0, or None.

    A rank-one kernel lattice is decided from its generator's signs; higher
    ranks fall back to the completion search for a minimal solution.
    """
    if not family:
        raise ValueError("family must be nonempty")
    basis = kernel_lattice(group, family)
    if not basis:
        return None
    if len(basis) == 1:
        b = basis[0]
        if all(x >= 0 for x in b):
            return b
        if all(x <= 0 for x in b):
            return tuple(-x for x in b)
        return None
    m = len(family)
    cols = zero_sum_columns(group, family)
    sols = minimal_nonneg_kernel(cols, budget=budget, limit=1)
    return sols[0][:m] if sols else None


# ---------------------------------------------------------------------------
# minimal nonnegative kernel vectors (completion search)


def minimal_nonneg_kernel(columns: Seq[tuple[int, ...]],
                          *, budget: int = DEFAULT_NODE_BUDGET,
                          limit: int | None = None) -> list[tuple[int, ...]]:
    """All minimal nonzero x in N^m with sum_i x_i * columns[i] = 0.

    Contejean-Devie completion: a breadth-first frontier starting from the
    unit vectors, incrementing coordinate i of a partial solution x only when
    <A*x, A*e_i> < 0, and discarding anything that dominates a solution found
    earlier.  The frontier advances one total degree per level, so solutions
    are found in order of length and the domination filter is exact.

    Terminates on every input; ``budget`` caps frontier insertions as a
    safety valve and raises BudgetExceeded beyond it.  With ``limit`` set,
    returns as soon as that many minimal solutions have been collected.
    """
    m = len(columns)
    height = len(columns[0]) if m else 0
    zero = (0,) * height
    sols: list[tuple[int, ...]] = []

    def dominates_some_solution(t):
        return any(all(tj >= sj for tj, sj in zip(t, s)) for s in sols)

    frontier: dict[tuple[int, ...], tuple[int, ...]] = {}
    for i in range(m):
        unit = tuple(int(i == j) for j in range(m))
        frontier[unit] = columns[i]
    nodes = 0
    while frontier:
        for t, v in frontier.items():
            if v == zero and not dominates_some_solution(t):
                sols.append(t)
                if limit is not None and len(sols) >= limit:
                    return sols
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for t, v in frontier.items():
            if v == zero or dominates_some_solution(t):
                continue
            for i in range(m):
                col = columns[i]
                if sum(a * b for a, b in zip(v, col)) < 0:
                    child = t[:i] + (t[i] + 1,) + t[i + 1:]
                    if child in nxt or dominates_some_solution(child):
                        continue
                    nodes += 1
                    if nodes > budget:
                        raise BudgetExceeded(
                            f"completion search exceeded {budget} nodes")
                    nxt[child] = tuple(a + b for a, b in zip(v, col))
        frontier = nxt
    return sols


# ---------------------------------------------------------------------------
# misc group utilities


def abelian_groups_of_order(n: int) -> list[FinGenAbelianGroup]:
    """One group per isomorphism class of abelian groups of order n."""
    if n < 1:
        raise ValueError("order must be positive")

    def chains(remaining: int, bound: int | None):
        if remaining == 1:
            yield ()
            return
        for d in range(2, remaining + 1):
            if remaining % d == 0 and (bound is None or bound % d == 0):
                for rest in chains(remaining // d, d):
                    yield (d,) + rest

    groups = []
    for chain in chains(n, None):
        groups.append(FinGenAbelianGroup(torsion=tuple(reversed(chain))))
    groups.sort(key=lambda g: g.torsion)
    return groups
