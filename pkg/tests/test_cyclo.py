import cmath
import random
from fractions import Fraction

import pytest

from stjac.cyclo import CycloElt, cyclotomic_poly, embed, is_root_of_unity
from stjac.errors import NotCoprimeError
from stjac.primes import euler_phi


def test_cyclotomic_poly_base_cases():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_poly_degree_and_product():
    from stjac.primes import divisors

    for n in range(1, 50):
        assert len(cyclotomic_poly(n)) - 1 == euler_phi(n)
    # prod over d | n of Phi_d = x^n - 1
    for n in (6, 10, 18, 30):
        prod = [1]
        for d in divisors(n):
            phi = list(cyclotomic_poly(d))
            out = [0] * (len(prod) + len(phi) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(phi):
                    out[i + j] += a * b
            prod = out
        expected = [0] * (n + 1)
        expected[0], expected[n] = -1, 1
        assert prod == expected


def test_zeta_has_exact_order():
    for n in (1, 2, 6, 10, 12, 18):
        z = CycloElt.zeta(n)
        assert z**n == 1
        for k in range(1, n):
            assert z**k != 1 or n == 1


def test_basic_arithmetic():
    z = CycloElt.zeta(10)
    assert z**5 == -1
    assert (z**-1) * z == 1
    assert z.inv() * z == 1
    assert (z + 2) - z == 2
    assert (z * 0).is_zero()
    assert CycloElt.from_rational(10, Fraction(3, 4)) * 4 == 3


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycloElt.zero(12).inv()


def test_inverse_random_elements():
    rng = random.Random(1)
    for n in (5, 8, 12):
        for _ in range(10):
            w = CycloElt._make(
                n, [Fraction(rng.randrange(-3, 4)) for _ in range(euler_phi(n))]
            )
            if w.is_zero():
                continue
            assert w * w.inv() == 1


def test_conj_is_ring_involution():
    rng = random.Random(2)
    n = 12
    elts = [
        CycloElt._make(n, [Fraction(rng.randrange(-3, 4)) for _ in range(euler_phi(n))])
        for _ in range(6)
    ]
    for w in elts:
        assert w.conj().conj() == w
    for w, v in zip(elts, elts[1:]):
        assert (w * v).conj() == w.conj() * v.conj()
        assert (w + v).conj() == w.conj() + v.conj()


def test_embed_basics():
    z = CycloElt.zeta(10)
    assert abs(embed(z, 1) - cmath.exp(1j * cmath.pi / 5)) < 1e-12
    w = CycloElt.from_rational(10, 7)
    assert abs(embed(w, 3) - 7) < 1e-12
    with pytest.raises(NotCoprimeError):
        embed(z, 5)


def test_embed_respects_ring_ops():
    rng = random.Random(3)
    n = 18
    for _ in range(10):
        w = CycloElt._make(
            n, [Fraction(rng.randrange(-2, 3)) for _ in range(euler_phi(n))]
        )
        v = CycloElt._make(
            n, [Fraction(rng.randrange(-2, 3)) for _ in range(euler_phi(n))]
        )
        for k in (1, 5, 7):
            assert abs(embed(w * v, k) - embed(w, k) * embed(v, k)) < 1e-9
            assert abs(embed(w + v, k) - (embed(w, k) + embed(v, k))) < 1e-9
        assert abs(embed(w.conj(), 1) - embed(w, 1).conjugate()) < 1e-12


def test_lift_preserves_value():
    z6 = CycloElt.zeta(6)
    z12 = CycloElt.zeta(12)
    assert z6.lift(12) == z12**2
    w = 2 * z6 - 3
    assert abs(embed(w.lift(12), 1) - embed(w, 1)) < 1e-12
    with pytest.raises(ValueError):
        z6.lift(10)


def test_root_of_unity_detection():
    assert is_root_of_unity(CycloElt.one(10)) == 1
    assert is_root_of_unity(-CycloElt.one(10)) == 2
    assert is_root_of_unity(CycloElt.zeta(10)) == 10
    # -zeta_18 = zeta_18^10 already lies in mu_18: order 9, not lcm(2,18)
    assert is_root_of_unity(-CycloElt.zeta(18)) == 9
    # odd conductor: -zeta_9 genuinely needs the factor of 2
    assert is_root_of_unity(-CycloElt.zeta(9)) == 18
    assert is_root_of_unity(CycloElt.one(10) + CycloElt.zeta(10)) is None
    assert is_root_of_unity(CycloElt.zero(8)) is None
    assert is_root_of_unity(CycloElt.from_rational(6, 2)) is None


def test_root_of_unity_exhaustive_small_conductor():
    import math

    for n in (6, 9, 12):
        bound = math.lcm(2, n)
        z = CycloElt.zeta(n)
        for s in (1, -1):
            for k in range(n):
                w = s * z**k
                order = is_root_of_unity(w)
                assert order is not None
                assert w**order == 1
                for m in range(1, order):
                    assert w**m != 1
                assert bound % order == 0
