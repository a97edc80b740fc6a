import random

import pytest

from strongatoms.errors import ZeroDivisor, ZeroOrUnit
from strongatoms.quadratic import (
    QuadInt,
    QuadRing,
    canonical_associate,
    elements_of_norm,
    half_factorial_check,
    quad_brute_absirred,
    quad_divides,
    quad_factorizations,
    quad_is_irreducible,
    quad_is_prime_witness,
)

R14 = QuadRing(-14)
R5 = QuadRing(-5)


def test_ring_validation():
    QuadRing(-5)
    QuadRing(-14)
    QuadRing(-6)
    with pytest.raises(ValueError):
        QuadRing(-15)      # 1 mod 4
    with pytest.raises(ValueError):
        QuadRing(-7)       # 1 mod 4
    with pytest.raises(ValueError):
        QuadRing(-12)      # not squarefree
    with pytest.raises(ValueError):
        QuadRing(5)        # positive


def test_norm_and_multiplicativity():
    assert R14.norm(R14.element(2)) == 4
    assert R14.norm(R14.sqrt_d()) == 14
    rng = random.Random(31)
    for _ in range(100):
        x = QuadInt(rng.randint(-9, 9), rng.randint(-9, 9))
        y = QuadInt(rng.randint(-9, 9), rng.randint(-9, 9))
        assert R14.norm(R14.mul(x, y)) == R14.norm(x) * R14.norm(y)
        assert R14.norm(x) >= 0
        assert (R14.norm(x) == 0) == (x == QuadInt(0, 0))


def test_units_are_plus_minus_one():
    for d in (-5, -6, -14):
        ring = QuadRing(d)
        units = [z for m in range(1, 3) for z in elements_of_norm(ring, m)
                 if ring.is_unit(z)]
        assert sorted(units, key=lambda z: (z.a, z.b)) == [QuadInt(-1, 0), QuadInt(1, 0)]


def test_elements_of_norm():
    assert elements_of_norm(R14, 2) == []
    assert elements_of_norm(R14, 4) == [QuadInt(-2, 0), QuadInt(2, 0)]
    assert elements_of_norm(R14, 14) == [QuadInt(0, -1), QuadInt(0, 1)]
    assert elements_of_norm(R14, 0) == [QuadInt(0, 0)]
    # exhaustive cross-check against a direct scan
    for m in range(1, 40):
        got = set(elements_of_norm(R5, m))
        want = {QuadInt(a, b) for a in range(-8, 9) for b in range(-4, 5)
                if a * a + 5 * b * b == m}
        assert got == want


def test_irreducibility():
    assert quad_is_irreducible(R14, R14.element(2))
    assert quad_is_irreducible(R14, R14.sqrt_d())
    assert not quad_is_irreducible(R14, R14.element(-14))
    assert not quad_is_irreducible(R14, R14.element(4))
    with pytest.raises(ZeroOrUnit):
        quad_is_irreducible(R14, R14.element(1))
    with pytest.raises(ZeroOrUnit):
        quad_is_irreducible(R14, R14.element(0))


def test_divides():
    assert quad_divides(R14, R14.element(2), R14.element(-14))
    assert not quad_divides(R14, R14.element(2), R14.sqrt_d())
    assert quad_divides(R14, R14.sqrt_d(), R14.element(-14))
    with pytest.raises(ZeroDivisor):
        quad_divides(R14, R14.element(0), R14.element(2))


def test_prime_witness_two():
    w = quad_is_prime_witness(R14, R14.element(2))
    assert w.kind == "non_prime_witness"
    assert w.x == QuadInt(0, 1) and w.y == QuadInt(0, 1)
    # d = 3 mod 4 branch
    r6 = QuadRing(-6)
    w6 = quad_is_prime_witness(r6, r6.element(2))
    assert w6.kind == "non_prime_witness"
    r5w = quad_is_prime_witness(R5, R5.element(2))
    assert r5w.kind == "non_prime_witness"
    assert (r5w.x, r5w.y) == (QuadInt(1, 1), QuadInt(1, -1))


def test_prime_witness_euler():
    w = quad_is_prime_witness(R14, R14.element(11))
    assert w.kind == "prime_by_euler"
    # cross-check: x^2 + 14 has no root mod 11
    assert all((x * x + 14) % 11 for x in range(11))
    w3 = quad_is_prime_witness(R14, R14.element(3))
    assert w3.kind == "unknown"
    # -14 = 1 mod 3 is a square mod 3
    assert any((x * x + 14) % 3 == 0 for x in range(3))


def test_brute_absirred():
    res2 = quad_brute_absirred(R14, R14.element(2), 3)
    assert res2.absolutely_irreducible

    root = R14.sqrt_d()
    res = quad_brute_absirred(R14, root, 2)
    assert not res.absolutely_irreducible
    assert res.n == 2
    assert sorted((z.a, z.b) for z in res.witness) == [(2, 0), (7, 0)]
    # witness remultiplies to root**2 = -14
    prod = QuadInt(1, 0)
    for z in res.witness:
        prod = R14.mul(prod, z)
    prod = R14.mul(prod, QuadInt(res.witness_sign, 0))
    assert prod == R14.power(root, 2)

    res11 = quad_brute_absirred(R14, R14.element(11), 2)
    assert res11.absolutely_irreducible
    with pytest.raises(ZeroOrUnit):
        quad_brute_absirred(R14, R14.element(4), 2)


def test_factorizations_remultiply():
    rng = random.Random(37)
    for _ in range(30):
        z = QuadInt(rng.randint(-7, 7), rng.randint(-2, 2))
        if R5.norm(z) <= 1:
            continue
        for sign, atoms in quad_factorizations(R5, z):
            prod = QuadInt(sign, 0)
            for w in atoms:
                prod = R5.mul(prod, w)
            assert prod == z
            assert all(quad_is_irreducible(R5, w) for w in atoms)
            assert all(w == canonical_associate(w) for w in atoms)


def test_power_factorizations_remultiply():
    for z in (R14.element(2), R14.element(3), R14.sqrt_d()):
        for n in (1, 2):
            t = R14.power(z, n)
            for sign, atoms in quad_factorizations(R14, t):
                prod = QuadInt(sign, 0)
                for w in atoms:
                    prod = R14.mul(prod, w)
                assert prod == t


def test_half_factorial_small():
    ok, counterexample = half_factorial_check(R5, 100)
    assert ok and counterexample is None


def test_not_half_factorial_detectable():
    # 18 = 2*3*3 = (2 - sqrt(-14))(2 + sqrt(-14)) gives lengths {3, 2}
    ok, z = half_factorial_check(R14, 324)
    assert not ok
    assert z == QuadInt(18, 0)
    facs = quad_factorizations(R14, z)
    assert {len(atoms) for _, atoms in facs} == {2, 3}
    for sign, atoms in facs:
        prod = QuadInt(sign, 0)
        for w in atoms:
            prod = R14.mul(prod, w)
        assert prod == z
        assert all(quad_is_irreducible(R14, w) for w in atoms)
