"""Root systems, canonicalization, and the dimension formula."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from branchlab import weights
from branchlab.weights import (
    A,
    B,
    BC,
    C,
    D,
    G2,
    Product,
    Trivial,
    dominant_representative,
    full_orbit,
    inner_product,
    positive_roots,
    random_weyl_image,
    rho,
    simple_roots,
    weyl_dimension,
    weyl_orbit_equal,
)


def F(*args):
    return tuple(Fraction(a) for a in args)


def test_positive_roots_B2():
    assert set(positive_roots(B(2))) == {F(1, -1), F(1, 1), F(1, 0), F(0, 1)}


def test_positive_roots_A1():
    assert positive_roots(A(1)) == [F(1, -1)]


def test_positive_roots_D4_brute_force():
    # oracle: all +-1 pairs with positive leading sign
    expected = set()
    for i in range(4):
        for j in range(i + 1, 4):
            for s in (1, -1):
                v = [0] * 4
                v[i], v[j] = 1, s
                expected.add(F(*v))
    assert set(positive_roots(D(4))) == expected
    assert len(positive_roots(D(4))) == 12


def test_positive_roots_counts():
    assert len(positive_roots(B(3))) == 9
    assert len(positive_roots(C(3))) == 9
    assert len(positive_roots(BC(2))) == 6
    assert len(positive_roots(G2)) == 6


def test_positive_roots_rejects_trivial_and_product():
    with pytest.raises(ValueError):
        positive_roots(Trivial(1))
    with pytest.raises(ValueError):
        positive_roots(Product(B(2), B(1)))


def _half_sum(t):
    total = [Fraction(0)] * t.ncoords
    for r in positive_roots(t):
        total = [a + b for a, b in zip(total, r)]
    return tuple(x / 2 for x in total)


@pytest.mark.parametrize("t", [B(4), D(4), A(1), A(3), C(3), BC(3), G2])
def test_rho_is_half_sum(t):
    assert rho(t) == _half_sum(t)


def test_rho_values():
    assert rho(B(4)) == F(Fraction(7, 2), Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))
    assert rho(D(4)) == F(3, 2, 1, 0)
    assert rho(A(1)) == F(Fraction(1, 2), Fraction(-1, 2))
    assert rho(G2) == F(1, 1)  # omega1 + omega2


@pytest.mark.parametrize("t", [A(3), B(4), C(4), D(4), G2])
def test_rho_pairs_one_with_simple_coroots(t):
    r = rho(t)
    for a in simple_roots(t):
        assert 2 * weights.pairing(t, r, a) / weights.pairing(t, a, a) == 1


def test_dominant_representative_examples():
    assert dominant_representative(B(2), F(-1, 3)) == F(3, 1)
    assert dominant_representative(D(3), F(-2, 1, -1)) == F(2, 1, 1)
    assert dominant_representative(A(2), F(0, 5, -1)) == F(5, 0, -1)


def test_dominant_representative_D_parity():
    # odd number of sign flips leaves one negative entry on the smallest slot
    assert dominant_representative(D(3), F(2, 1, -1)) == F(2, 1, -1)
    assert dominant_representative(D(3), F(-2, -1, -1)) == F(2, 1, -1)
    # a zero coordinate absorbs the parity
    assert dominant_representative(D(3), F(0, -2, 1)) == F(2, 1, 0)


def test_weyl_orbit_equal_examples():
    assert weyl_orbit_equal(B(2), F(3, 1), F(-1, 3))
    assert not weyl_orbit_equal(D(3), F(2, 1, 1), F(2, 1, -1))
    assert weyl_orbit_equal(A(1), F(1, 0), F(0, 1))


def test_inner_product_examples():
    assert inner_product(F(1, 0), F(0, 1)) == 0
    h = Fraction(1, 2)
    assert inner_product((h, h, h, h), (h, h, h, h)) == 1
    assert inner_product(F(2, 1), F(2, 1)) == 5
    with pytest.raises(ValueError):
        inner_product(F(1, 0), F(1, 0, 0))


TYPES = [A(2), A(3), B(2), B(3), B(4), C(3), C(4), D(3), D(4), BC(3), G2]


@pytest.mark.parametrize("t", TYPES)
def test_canonicalization_idempotent_and_invariant(t):
    rng = random.Random(20260810 + t.ncoords)
    for _ in range(200):
        v = tuple(Fraction(rng.randint(-12, 12), rng.choice((1, 2))) for _ in range(t.ncoords))
        canon = dominant_representative(t, v)
        assert dominant_representative(t, canon) == canon
        for _ in range(20):
            moved = random_weyl_image(t, v, rng)
            assert dominant_representative(t, moved) == canon


@pytest.mark.parametrize("t", [A(2), A(3), B(3), B(4), C(4), D(3), D(4), G2])
def test_canonicalization_matches_orbit_enumeration(t):
    rng = random.Random(7 * t.ncoords + 1)
    for _ in range(12):
        v = tuple(Fraction(rng.randint(-4, 4)) for _ in range(t.ncoords))
        orbit = full_orbit(t, v)
        dominant = [w for w in orbit if weights.is_dominant(t, w)]
        assert dominant, (t, v)
        canon = dominant_representative(t, v)
        assert canon in orbit
        assert canon in dominant
        # unique dominant element up to chamber-wall coincidences: the canonical
        # form must be reproduced from every orbit element
        for w in orbit:
            assert dominant_representative(t, w) == canon


@given(st.lists(st.integers(-30, 30), min_size=4, max_size=4))
@settings(max_examples=120, deadline=None)
def test_canonicalization_D4_hypothesis(coords):
    v = tuple(Fraction(c) for c in coords)
    canon = dominant_representative(D(4), v)
    assert weights.is_dominant(D(4), canon)
    flips = sum(1 for x in v if x < 0)
    if 0 not in [abs(x) for x in v]:
        assert sorted(map(abs, canon), reverse=True) == sorted(map(abs, v), reverse=True)
        assert (sum(1 for x in canon if x < 0) % 2) == (flips % 2)


def test_product_canonicalization_factorwise():
    t = Product(B(2), Trivial(1), A(1))
    v = F(-1, 3, -5, 0, 2)
    assert dominant_representative(t, v) == F(3, 1, -5, 2, 0)


def test_weyl_dimension_examples():
    assert weyl_dimension(B(2), rho(B(2)), F(1, 0)) == 5
    assert weyl_dimension(B(2), rho(B(2)), F(2, 0)) == 14
    assert weyl_dimension(D(4), rho(D(4)), F(1, 0, 0, 0)) == 8


def test_weyl_dimension_trivial_weight_is_one():
    for t in TYPES:
        zero = tuple(Fraction(0) for _ in range(t.ncoords))
        assert weyl_dimension(t, rho(t), zero) == 1


def test_weyl_dimension_nondominant_rejected():
    with pytest.raises(ValueError):
        weyl_dimension(B(2), rho(B(2)), F(0, 1))


def _binom(n, k):
    import math

    return math.comb(n, k) if 0 <= k <= n else 0


def test_weyl_dimension_spherical_harmonics_oracle():
    # dim H^j(R^m) = C(j+m-1, m-1) - C(j+m-3, m-1)
    for m, t in [(7, B(3)), (8, D(4)), (9, B(4)), (16, D(8))]:
        for j in range(7):
            lam = tuple(Fraction(j if i == 0 else 0) for i in range(t.ncoords))
            expected = _binom(j + m - 1, m - 1) - _binom(j + m - 3, m - 1)
            assert weyl_dimension(t, rho(t), lam) == expected


def test_weyl_dimension_complex_harmonics_oracle():
    # dim H^{k,l}(C^m) via U(m) highest weight (k,0,...,0,-l)
    for m in (3, 4):
        t = A(m - 1)
        for k in range(5):
            for l in range(5):
                lam = [0] * m
                lam[0], lam[-1] = k, lam[-1] - l
                expected = _binom(k + m - 1, k) * _binom(l + m - 1, l) - _binom(
                    k + m - 2, k - 1
                ) * _binom(l + m - 2, l - 1)
                assert weyl_dimension(t, rho(t), tuple(map(Fraction, lam))) == expected


def test_weyl_dimension_G2_matches_seven_sphere_harmonics():
    # Rep(G2, k*omega2) has the dimension of H^k(R^7)
    for k in range(8):
        lam = (Fraction(0), Fraction(k))
        expected = _binom(k + 6, 6) - _binom(k + 4, 6)
        assert weyl_dimension(G2, rho(G2), lam) == expected


def test_weyl_dimension_constant_on_orbits():
    t = B(3)
    lam = F(4, 2, 1)
    dim = weyl_dimension(t, rho(t), lam)
    rng = random.Random(5)
    for _ in range(10):
        moved = random_weyl_image(t, lam, rng)
        canon = dominant_representative(t, moved)
        assert weyl_dimension(t, rho(t), canon) == dim
