"""Sequences over a finite class set and the monoid of zero-sum sequences.

A sequence is an exponent vector over an ordered list of distinct group
elements.  Atoms (minimal zero-sum sequences) are enumerated with the
completion algorithm from :mod:`strongatoms.abgroup`, which terminates on
mixed free/torsion groups without an a-priori degree bound; factorizations
into atoms are enumerated by depth-first search in nondecreasing atom order,
so each multiset of atoms is produced exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence as Seq

from .abgroup import (
    DEFAULT_NODE_BUDGET,
    FinGenAbelianGroup,
    GroupElement,
    minimal_nonneg_kernel,
    zero_sum_columns,
)
from .errors import (
    AtomNotInSet,
    BudgetExceeded,
    DimensionMismatch,
    InfiniteGroupNoBound,
    NotZeroSum,
)


@dataclass(frozen=True)
class ClassSet:
    """An ordered list of distinct group elements (the support universe G0)."""

    group: FinGenAbelianGroup
    classes: tuple[GroupElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        if not self.classes:
            raise ValueError("class set must be nonempty")
        seen = set()
        for g in self.classes:
            if not self.group.same_presentation(g.group):
                raise DimensionMismatch("class from a different group")
            key = g.coords()
            if key in seen:
                raise ValueError(f"duplicate class {key}")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.classes)

    def index_of(self, g: GroupElement) -> int:
        for i, c in enumerate(self.classes):
            if c == g:
                return i
        raise ValueError(f"{g!r} is not a class of this set")

    def sequence(self, exponents: Seq[int]) -> "Sequence":
        return Sequence(self, tuple(int(e) for e in exponents))

    def empty_sequence(self) -> "Sequence":
        return self.sequence((0,) * len(self.classes))

    def zero_class_index(self) -> int | None:
        for i, c in enumerate(self.classes):
            if c.is_zero():
                return i
        return None


@dataclass(frozen=True)
class Sequence:
    """Element of the free abelian monoid over a class set (an exponent vector)."""

    class_set: ClassSet
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.class_set):
            raise DimensionMismatch("exponent vector length does not match class set")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    def sigma(self) -> GroupElement:
        """The sum of the sequence in the ambient group."""
        total = self.class_set.group.zero()
        for e, g in zip(self.exponents, self.class_set.classes):
            if e:
                total = total + e * g
        return total

    def __len__(self) -> int:
        return sum(self.exponents)

    def support_indices(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def support(self) -> tuple[GroupElement, ...]:
        return tuple(self.class_set.classes[i] for i in self.support_indices())

    def is_zero_sum(self) -> bool:
        return self.sigma().is_zero()

    def is_empty(self) -> bool:
        return not any(self.exponents)

    def __mul__(self, other: "Sequence") -> "Sequence":
        if self.class_set != other.class_set:
            raise DimensionMismatch("sequences over different class sets")
        return Sequence(self.class_set,
                        tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, n: int) -> "Sequence":
        if n < 0:
            raise ValueError("negative power of a sequence")
        return Sequence(self.class_set, tuple(n * e for e in self.exponents))

    def divides(self, other: "Sequence") -> bool:
        if len(self.exponents) != len(other.exponents):
            raise DimensionMismatch("sequences over different class sets")
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: "Sequence") -> "Sequence":
        if not other.divides(self):
            raise ValueError("not a subsequence")
        return Sequence(self.class_set,
                        tuple(a - b for a, b in zip(self.exponents, other.exponents)))


def is_minimal_zero_sum(s: Sequence) -> bool:
    """True iff s is a nonempty zero-sum sequence with no proper nonempty
    zero-sum subsequence."""
    if s.is_empty():
        raise ValueError("the empty sequence is the unit, not an atom candidate")
    if not s.is_zero_sum():
        return False
    exps = s.exponents
    classes = s.class_set.classes
    idx = [i for i, e in enumerate(exps) if e]
    zero = s.class_set.group.zero()

    # DFS over subexponent vectors, accumulating partial sums coordinate by
    # coordinate; stops at the first proper nonempty zero-sum subsequence.
    def walk(pos: int, partial: GroupElement, taken: int) -> bool:
        if pos == len(idx):
            return 0 < taken < len(s) and partial == zero
        i = idx[pos]
        g = classes[i]
        cur = partial
        for c in range(exps[i] + 1):
            if walk(pos + 1, cur, taken + c):
                return True
            cur = cur + g
        return False

    return not walk(0, zero, 0)


# ---------------------------------------------------------------------------
# atom enumeration


@dataclass(frozen=True)
class AtomSet:
    """Complete list of atoms of the zero-sum monoid over a class set.

    Atoms are stored in lexicographic exponent order, which fixes the indices
    used by factorizations and reports.
    """

    class_set: ClassSet
    atoms: tuple[Sequence, ...]
    certificate: Mapping[str, object] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[Sequence]:
        return iter(self.atoms)

    def __getitem__(self, i: int) -> Sequence:
        return self.atoms[i]

    def index(self, s: Sequence) -> int:
        for i, a in enumerate(self.atoms):
            if a.exponents == s.exponents:
                return i
        raise AtomNotInSet(f"sequence {s.exponents} is not an atom of this set")

    def contains(self, s: Sequence) -> bool:
        return any(a.exponents == s.exponents for a in self.atoms)


def minimal_zero_sum_vectors(group: FinGenAbelianGroup,
                             values: Seq[GroupElement],
                             *, budget: int = DEFAULT_NODE_BUDGET) -> list[tuple[int, ...]]:
    """Exponent vectors of all minimal zero-sum sequences over ``values``.

    ``values`` may contain repeated group elements (used when distinct prime
    divisors share a class); positions are kept apart.
    """
    m = len(values)
    cols = zero_sum_columns(group, values)
    sols = minimal_nonneg_kernel(cols, budget=budget)
    return sorted(sol[:m] for sol in sols)


def enumerate_atoms(class_set: ClassSet,
                    *, budget: int = DEFAULT_NODE_BUDGET) -> AtomSet:
    """All minimal zero-sum sequences over the class set, with certificate."""
    vectors = minimal_zero_sum_vectors(class_set.group, class_set.classes,
                                       budget=budget)
    atoms = tuple(class_set.sequence(v) for v in vectors)
    cert = {
        "method": "completion-search",
        "columns": len(class_set),
        "slack_columns": len(class_set.group.torsion),
        "node_budget": budget,
    }
    return AtomSet(class_set, atoms, cert)


def atom_length_bound(class_set: ClassSet) -> int:
    """Upper bound for atom lengths: the order of the (finite) torsion part.

    Valid because the maximal length of a minimal zero-sum sequence over a
    finite group never exceeds the group order.  Raises when any class has a
    nonzero free part, since no uniform bound exists then.
    """
    for g in class_set.classes:
        if any(g.free_part):
            raise InfiniteGroupNoBound(
                "class set touches the free part; supply an explicit bound")
    bound = 1
    for d in class_set.group.torsion:
        bound *= d
    return bound


# ---------------------------------------------------------------------------
# factorizations


@dataclass(frozen=True)
class Factorization:
    """Multiset of atom indices, stored sorted ascending."""

    atom_indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "atom_indices", tuple(sorted(self.atom_indices)))

    def __len__(self) -> int:
        return len(self.atom_indices)

    def product(self, atom_set: AtomSet) -> Sequence:
        out = atom_set.class_set.empty_sequence()
        for i in self.atom_indices:
            out = out * atom_set[i]
        return out


def vector_factorizations(target: Seq[int],
                          atom_vectors: Seq[tuple[int, ...]],
                          *, budget: int = DEFAULT_NODE_BUDGET,
                          limit: int | None = None) -> list[tuple[int, ...]]:
    """All multisets of atom vectors summing to ``target``, as sorted index tuples.

    DFS in nondecreasing index order; a suffix support mask prunes branches
    that can no longer cover some coordinate.  ``limit`` stops the search
    early once that many factorizations have been found.
    """
    m = len(target)
    n = len(atom_vectors)
    masks = []
    for v in atom_vectors:
        mask = 0
        for j, e in enumerate(v):
            if e:
                mask |= 1 << j
        masks.append(mask)
    suffix_cover = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_cover[i] = suffix_cover[i + 1] | masks[i]
    lengths = [sum(v) for v in atom_vectors]

    out: list[tuple[int, ...]] = []
    rem = list(target)
    acc: list[int] = []
    nodes = 0

    def rem_mask() -> int:
        mask = 0
        for j in range(m):
            if rem[j]:
                mask |= 1 << j
        return mask

    def rec(total: int, start: int) -> bool:
        nonlocal nodes
        if total == 0:
            out.append(tuple(acc))
            return limit is not None and len(out) >= limit
        needed = rem_mask()
        if needed & ~suffix_cover[start]:
            return False
        for i in range(start, n):
            v = atom_vectors[i]
            if lengths[i] > total:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"factorization search exceeded {budget} divisions")
            if all(v[j] <= rem[j] for j in range(m)):
                for j in range(m):
                    rem[j] -= v[j]
                acc.append(i)
                stop = rec(total - lengths[i], i)
                acc.pop()
                for j in range(m):
                    rem[j] += v[j]
                if stop:
                    return True
        return False

    rec(sum(target), 0)
    return out


def factorizations(b: Sequence, atom_set: AtomSet,
                   *, budget: int = DEFAULT_NODE_BUDGET,
                   limit: int | None = None) -> list[Factorization]:
    """Complete, duplicate-free list of factorizations of b into atoms.

    The empty sequence has exactly the empty factorization.  Raises
    NotZeroSum unless sigma(b) = 0.
    """
    if b.class_set != atom_set.class_set:
        raise DimensionMismatch("sequence and atom set over different class sets")
    if not b.is_zero_sum():
        raise NotZeroSum(f"sigma of {b.exponents} is nonzero")
    vecs = [a.exponents for a in atom_set.atoms]
    found = vector_factorizations(b.exponents, vecs, budget=budget, limit=limit)
    return [Factorization(ix) for ix in found]


def length_set(b: Sequence, atom_set: AtomSet,
               *, budget: int = DEFAULT_NODE_BUDGET) -> set[int]:
    return {len(f) for f in factorizations(b, atom_set, budget=budget)}


def elasticity(b: Sequence, atom_set: AtomSet,
               *, budget: int = DEFAULT_NODE_BUDGET) -> Fraction:
    """max/min factorization length; the empty sequence has elasticity 1."""
    lengths = length_set(b, atom_set, budget=budget)
    if lengths == {0}:
        return Fraction(1)
    return Fraction(max(lengths), min(lengths))
