"""Absolute-irreducibility criteria and the eight-scenario classifier.

A Krull-monoid specification is a class group, the set G0 of classes that
contain prime divisors, and a multiplicity per class (how many prime divisors
it contains).  Prime divisors are never materialized individually: every
criterion decided here depends only on class values and on the distinction
"exactly one divisor" versus "more than one", so multiplicities above 2 are
capped at 2 for the existence searches.

Three routes to absolute irreducibility of an atom are implemented and kept
in agreement: support minimality within the atom set, the kernel criterion on
the support family (nonnegative dependence of the whole family, integer
independence of every proper subfamily), and explicit power-factorization
witnesses.  A bounded brute-force oracle over small powers cross-checks them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence as Seq

from .abgroup import (
    DEFAULT_NODE_BUDGET,
    INFINITE,
    FinGenAbelianGroup,
    GroupElement,
    is_z_independent,
    positive_kernel_vector,
)
from .errors import DimensionMismatch
from .zsm import (
    AtomSet,
    ClassSet,
    Factorization,
    Sequence,
    enumerate_atoms,
    factorizations,
    minimal_zero_sum_vectors,
    vector_factorizations,
)


@dataclass(frozen=True)
class KrullSpec:
    """Class group, classes containing prime divisors, and their multiplicities.

    ``mult[i]`` is the number of prime divisors in class ``class_set.classes[i]``
    (a positive integer or INFINITE).  The set G1 of classes containing exactly
    one prime divisor is derived, never stored.
    """

    class_set: ClassSet
    mult: tuple[int | float, ...]

    def __post_init__(self):
        object.__setattr__(self, "mult", tuple(self.mult))
        if len(self.mult) != len(self.class_set):
            raise DimensionMismatch("one multiplicity per class required")
        for m in self.mult:
            if m == INFINITE:
                continue
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"multiplicity {m!r} must be a positive integer or INFINITE")

    @property
    def group(self) -> FinGenAbelianGroup:
        return self.class_set.group

    def g1_indices(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.mult) if m == 1)

    def capped_mult(self) -> tuple[int, ...]:
        # two divisors in one class already decide every criterion used here
        return tuple(2 if m == INFINITE or m > 2 else int(m) for m in self.mult)


@dataclass(frozen=True)
class SearchBounds:
    """Bounds for the classifier's searches."""

    support_bound: int = 4
    nmax: int = 4
    budget: int = DEFAULT_NODE_BUDGET


# ---------------------------------------------------------------------------
# absolute irreducibility of a single atom


def is_absirred_support(u: Sequence, atom_set: AtomSet) -> bool:
    """True iff u is the unique atom whose support is contained in supp(u)."""
    iu = atom_set.index(u)
    su = set(u.support_indices())
    for i, v in enumerate(atom_set):
        if i == iu:
            continue
        if set(v.support_indices()) <= su:
            return False
    return True


def is_absirred_kernel(group: FinGenAbelianGroup,
                       family: Seq[GroupElement],
                       *, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Kernel criterion on a family of classes (repeats = distinct divisors).

    The family must admit a nonzero nonnegative relation while every proper
    subfamily is integrally independent; it suffices to check the subfamilies
    omitting one member, since independence is inherited by subfamilies.
    """
    if not family:
        raise ValueError("family must be nonempty")
    if positive_kernel_vector(group, family, budget=budget) is None:
        return False
    for i in range(len(family)):
        sub = list(family[:i]) + list(family[i + 1:])
        if not is_z_independent(group, sub):
            return False
    return True


@dataclass(frozen=True)
class PowerWitness:
    """Two essentially different factorizations of atom**n."""

    atom: Sequence
    n: int
    standard: Factorization    # n copies of the atom
    different: Factorization


def witness_non_absirred(u: Sequence, atom_set: AtomSet,
                         *, budget: int = DEFAULT_NODE_BUDGET) -> PowerWitness | None:
    """A power of u with an essentially different factorization, or None.

    Picks the first atom v != u supported inside supp(u), raises u to the
    smallest power divisible by v, and factors the cofactor.  Returns None
    exactly when u has minimal support.
    """
    iu = atom_set.index(u)
    su = set(u.support_indices())
    pick = None
    for i, v in enumerate(atom_set):
        if i != iu and set(v.support_indices()) <= su:
            pick = (i, v)
            break
    if pick is None:
        return None
    iv, v = pick
    n = max(-(-v.exponents[j] // u.exponents[j]) for j in v.support_indices())
    power = u ** n
    cofactor = power / v
    co_facs = factorizations(cofactor, atom_set, budget=budget, limit=1)
    different = Factorization((iv,) + co_facs[0].atom_indices)
    standard = Factorization((iu,) * n)
    return PowerWitness(u, n, standard, different)


def brute_force_absirred(u: Sequence, atom_set: AtomSet, n_max: int,
                         *, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Oracle: no power u**n with n <= n_max has a second factorization.

    This is a necessary-condition test; witnesses may live beyond n_max.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    iu = atom_set.index(u)
    for n in range(1, n_max + 1):
        facs = factorizations(u ** n, atom_set, budget=budget, limit=2)
        expected = Factorization((iu,) * n)
        if len(facs) > 1 or facs[0] != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# all-atoms criteria


@dataclass(frozen=True)
class AllAbsirredReport:
    """Outcome of the every-irreducible-is-absolutely-irreducible test."""

    holds: bool
    atom_set: AtomSet
    failing_atom: Sequence | None = None
    failed_condition: str | None = None      # "support-minimality" | "repeated-class-multiplicity"
    failing_class_index: int | None = None


def all_irreducibles_absirred(spec: KrullSpec,
                              *, budget: int = DEFAULT_NODE_BUDGET) -> AllAbsirredReport:
    """Every irreducible of the modeled monoid is absolutely irreducible.

    Holds iff (a) every atom of the zero-sum monoid over G0 has minimal
    support, and (b) atoms never repeat a class that contains more than one
    prime divisor.
    """
    atom_set = enumerate_atoms(spec.class_set, budget=budget)
    g1 = set(spec.g1_indices())
    supports = [set(a.support_indices()) for a in atom_set]
    for i, u in enumerate(atom_set):
        for j, sv in enumerate(supports):
            if j != i and sv <= supports[i]:
                return AllAbsirredReport(False, atom_set, u, "support-minimality")
        for j, e in enumerate(u.exponents):
            if e > 1 and j not in g1:
                return AllAbsirredReport(False, atom_set, u,
                                         "repeated-class-multiplicity", j)
    return AllAbsirredReport(True, atom_set)


@dataclass(frozen=True)
class BgWitness:
    """Atoms S, S' (, S'') and T over a small class set with prod = T**power."""

    class_set: ClassSet
    factors: tuple[Sequence, ...]
    atom: Sequence
    power: int


@dataclass(frozen=True)
class BgReport:
    all_absolutely_irreducible: bool
    witness: BgWitness | None = None


def check_bg_all_absirred(group: FinGenAbelianGroup) -> BgReport:
    """For finite G: every atom of the full zero-sum monoid is absolutely
    irreducible iff |G| <= 2; failing cases carry an explicit witness."""
    if not group.is_finite:
        raise ValueError("finite groups only; infinite cases need an explicit class set")
    if group.cardinality() <= 2:
        return BgReport(True)

    # some cyclic component of order >= 3, if any
    for j, d in enumerate(group.torsion):
        if d >= 3:
            g = group.element(tuple(int(i == j) for i in range(len(group.torsion))))
            cs = ClassSet(group, (g, -g))
            s = cs.sequence((d, 0))
            s2 = cs.sequence((0, d))
            t = cs.sequence((1, 1))
            return BgReport(False, BgWitness(cs, (s, s2), t, d))

    # otherwise an elementary 2-group with at least two independent involutions
    k = len(group.torsion)
    g = group.element(tuple(int(i == 0) for i in range(k)))
    h = group.element(tuple(int(i == 1) for i in range(k)))
    cs = ClassSet(group, (g, h, g + h))
    s = cs.sequence((2, 0, 0))
    s2 = cs.sequence((0, 2, 0))
    s3 = cs.sequence((0, 0, 2))
    t = cs.sequence((1, 1, 1))
    return BgReport(False, BgWitness(cs, (s, s2, s3), t, 2))


# ---------------------------------------------------------------------------
# scenario classification


def has_prime_element(spec: KrullSpec) -> bool:
    """A prime element exists iff the trivial class contains a prime divisor."""
    return spec.class_set.zero_class_index() is not None


@dataclass(frozen=True)
class AbsirredSearch:
    """Bounded search for an absolutely irreducible nonprime element.

    ``witness`` lists class indices with repetition standing for distinct
    prime divisors of equal class.  ``exhaustive`` is True when the bound
    covered every family, making a negative answer exact.  ``per_class_cap``
    records the capped divisor counts actually searched (multiplicities above
     2 decide nothing further).
    """

    found: bool
    witness: tuple[int, ...] | None
    exhaustive: bool
    support_bound: int
    per_class_cap: tuple[int, ...] = ()
    family_semantics: str = "multiset over classes"


def exists_absirred_nonprime(spec: KrullSpec, support_bound: int,
                             *, budget: int = DEFAULT_NODE_BUDGET) -> AbsirredSearch:
    """Search families of prime divisors for an absolutely irreducible support.

    Families are multisets of classes with per-class multiplicity at most the
    (capped) number of divisors in that class; the single divisor of class 0
    is excluded, since that element is prime.
    """
    if support_bound < 1:
        raise ValueError("support_bound must be >= 1")
    classes = spec.class_set.classes
    caps = spec.capped_mult()
    zero_idx = spec.class_set.zero_class_index()
    total = sum(caps)
    exhaustive = support_bound >= total
    for size in range(1, support_bound + 1):
        for combo in combinations_with_replacement(range(len(classes)), size):
            if any(combo.count(i) > caps[i] for i in set(combo)):
                continue
            if size == 1 and combo[0] == zero_idx:
                continue
            family = [classes[i] for i in combo]
            if is_absirred_kernel(spec.group, family, budget=budget):
                return AbsirredSearch(True, combo, exhaustive, support_bound, caps)
    return AbsirredSearch(False, None, exhaustive, support_bound, caps)


@dataclass(frozen=True)
class RepeatedClassWitness:
    """Witness for an atom repeating a class with a second prime divisor.

    Modeling the two divisors p, q of the repeated class as separate symbols,
    ``a`` (all copies on p) divides ``b**2`` (one copy moved to q), and b**2
    acquires a factorization essentially different from b*b.  Exponent vectors
    are over ``symbol_classes``: two symbols for the repeated class first,
    then one per remaining support class.
    """

    atom: Sequence
    class_index: int
    symbol_classes: tuple[int, ...]
    a_exponents: tuple[int, ...]
    b_exponents: tuple[int, ...]
    n: int
    b_power_standard: tuple[tuple[int, ...], ...]
    b_power_different: tuple[tuple[int, ...], ...]


def repeated_class_witness(spec: KrullSpec, atom: Sequence, class_index: int,
                           *, budget: int = DEFAULT_NODE_BUDGET) -> RepeatedClassWitness:
    """Build and verify the a | b**2 witness for a repeated-class atom."""
    cs = spec.class_set
    g = cs.classes[class_index]
    m_g = atom.exponents[class_index]
    if m_g < 2:
        raise ValueError("atom does not repeat the class")
    others = [(i, e) for i, e in enumerate(atom.exponents) if e and i != class_index]
    symbol_classes = (class_index, class_index) + tuple(i for i, _ in others)
    values = [g, g] + [cs.classes[i] for i, _ in others]
    rest = tuple(e for _, e in others)
    a_vec = (m_g, 0) + rest
    b_vec = (m_g - 1, 1) + rest

    symbol_atoms = minimal_zero_sum_vectors(spec.group, values, budget=budget)
    if a_vec not in symbol_atoms or b_vec not in symbol_atoms:
        raise AssertionError("divisor-level sequences failed to be atoms")
    b_sq = tuple(2 * e for e in b_vec)
    if not all(x <= y for x, y in zip(a_vec, b_sq)):
        raise AssertionError("a does not divide b**2 at the divisor level")
    facs = vector_factorizations(b_sq, symbol_atoms, budget=budget)
    ib = symbol_atoms.index(b_vec)
    standard = tuple(sorted((ib, ib)))
    others_found = [f for f in facs if f != standard]
    if standard not in facs or not others_found:
        raise AssertionError("b**2 lacks the expected second factorization")
    expand = lambda f: tuple(symbol_atoms[i] for i in f)
    return RepeatedClassWitness(atom, class_index, symbol_classes,
                                a_vec, b_vec, 2,
                                expand(standard), expand(others_found[0]))


@dataclass(frozen=True)
class ScenarioReport:
    """Which of the three element kinds exist, in the table's column order
    (non-absolutely-irreducible, absolutely-irreducible-nonprime, prime).

    ``has_absirred_nonprime`` is None when the bounded search neither found a
    witness nor exhausted the family space; the row label then carries '?'.
    """

    has_prime: bool
    has_absirred_nonprime: bool | None
    has_nonabsirred: bool
    row_label: str
    absirred_search: AbsirredSearch
    nonabsirred_witness: PowerWitness | RepeatedClassWitness | None
    bounds: SearchBounds


def _sign(value: bool | None) -> str:
    if value is None:
        return "?"
    return "+" if value else "-"


def classify_scenario(spec: KrullSpec,
                      bounds: SearchBounds = SearchBounds()) -> ScenarioReport:
    """Fill the scenario row for a specification, with verified witnesses."""
    prime = has_prime_element(spec)
    search = exists_absirred_nonprime(spec, bounds.support_bound, budget=bounds.budget)
    if search.found:
        absnp: bool | None = True
    elif search.exhaustive:
        absnp = False
    else:
        absnp = None
    allabs = all_irreducibles_absirred(spec, budget=bounds.budget)
    witness: PowerWitness | RepeatedClassWitness | None = None
    if not allabs.holds:
        if allabs.failed_condition == "support-minimality":
            witness = witness_non_absirred(allabs.failing_atom, allabs.atom_set,
                                           budget=bounds.budget)
        else:
            witness = repeated_class_witness(spec, allabs.failing_atom,
                                             allabs.failing_class_index,
                                             budget=bounds.budget)
    has_nonabs = not allabs.holds
    label = f"({_sign(has_nonabs)},{_sign(absnp)},{_sign(prime)})"
    return ScenarioReport(prime, absnp, has_nonabs, label, search, witness, bounds)


def angermueller_check(spec: KrullSpec,
                       bounds: SearchBounds = SearchBounds()) -> bool:
    """Cross-consistency: all absolutely irreducibles found within bounds are
    prime exactly when the spec is factorial (G0 inside the trivial class)."""
    search = exists_absirred_nonprime(spec, bounds.support_bound, budget=bounds.budget)
    all_absirred_prime = not search.found
    factorial = all(g.is_zero() for g in spec.class_set.classes)
    return all_absirred_prime == factorial
