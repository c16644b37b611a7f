"""Field, polynomial, and binomial arithmetic.

Oracles: math.comb for binomials, a sieve for primality, a test-local
sparse multiply for power-map identities.  All comparisons are exact.
"""

import math
import random

import pytest

from anumber.ffpoly import (
    DensePolynomial,
    LimitExceededError,
    Prime,
    Residue,
    SparseCoeffMap,
    is_prime,
    lucas_binom,
    poly_derivative,
    poly_gcd,
    poly_pow_coeffs,
)


def sparse_mul(a: SparseCoeffMap, b: SparseCoeffMap) -> SparseCoeffMap:
    # Independent product of coefficient maps, used as the oracle for
    # exponent additivity of poly_pow_coeffs.
    p = a.modulus.value
    out: dict[int, int] = {}
    for n, c in a.items():
        for k, d in b.items():
            out[n + k] = (out.get(n + k, 0) + c * d) % p
    return SparseCoeffMap(out, a.modulus)


def sieve(limit: int) -> set[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for n in range(2, int(limit ** 0.5) + 1):
        if flags[n]:
            flags[n * n::n] = bytearray(len(flags[n * n::n]))
    return {n for n in range(limit + 1) if flags[n]}


def test_is_prime_matches_sieve():
    primes = sieve(2000)
    for n in range(-5, 2001):
        assert is_prime(n) == (n in primes), n


def test_is_prime_large_known_values():
    assert is_prime(2 ** 31 - 1)
    assert is_prime(2 ** 61 - 1)
    assert is_prime(10 ** 9 + 7)
    assert is_prime(10 ** 9 + 9)
    # Carmichael numbers fool Fermat tests but not Miller-Rabin.
    assert not is_prime(561)
    assert not is_prime(1105)
    assert not is_prime(6601)
    assert not is_prime((2 ** 31 - 1) * (2 ** 31 + 11))


def test_prime_validation():
    assert Prime(3).value == 3
    assert Prime(10 ** 9 + 7).value == 10 ** 9 + 7
    with pytest.raises(ValueError, match="characteristic 2"):
        Prime(2)
    for bad in (0, 1, -3, 4, 9, 15, 2 ** 31 + 1):
        with pytest.raises(ValueError):
            Prime(bad)
    with pytest.raises(TypeError):
        Prime(7.0)


def test_prime_acts_as_integer():
    p = Prime(7)
    assert int(p) == 7
    # __index__ lets a Prime stand in for an int in indexing contexts.
    assert list(range(p)) == [0, 1, 2, 3, 4, 5, 6]
    assert "abcdefgh"[:p] == "abcdefg"


def test_residue_validation():
    p = Prime(5)
    assert Residue(3, p).value == 3
    assert int(Residue(0, p)) == 0
    with pytest.raises(ValueError):
        Residue(5, p)
    with pytest.raises(ValueError):
        Residue(-1, p)


def test_dense_polynomial_normalization():
    p = Prime(5)
    f = DensePolynomial([6, -1, 0, 0], p)
    assert f.coeffs == (1, 4)
    assert f.degree == 1
    assert not f.is_zero()
    assert f.leading_coefficient() == 4
    zero = DensePolynomial([0, 0], p)
    assert zero.is_zero()
    assert zero.degree == -1
    assert zero.coeffs == ()
    assert zero.leading_coefficient() == 0


def test_dense_polynomial_monic_and_equality():
    p = Prime(5)
    f = DensePolynomial([4, 0, 2], p)  # 2x^2 + 4
    m = f.monic()
    assert m.coeffs == (2, 0, 1)  # x^2 + 2
    assert m.leading_coefficient() == 1
    assert f == DensePolynomial([9, 5, 7], p)
    assert hash(f) == hash(DensePolynomial([9, 5, 7], p))
    assert f != DensePolynomial([4, 0, 2], Prime(7))
    assert DensePolynomial([], p).monic().is_zero()


def test_sparse_coeff_map_drops_zeros():
    p = Prime(7)
    a = SparseCoeffMap({0: 7, 2: 3, 5: 14}, p)
    assert len(a) == 1
    assert 2 in a and 0 not in a and 5 not in a
    assert a.get(2) == 3
    assert a.get(99) == 0
    assert a.max_exponent() == 2
    assert a.min_exponent() == 2
    assert a == SparseCoeffMap([(2, 10), (4, 0)], p)
    assert hash(a) == hash(SparseCoeffMap({2: 3}, p))
    assert a != SparseCoeffMap({2: 3}, Prime(5))


def test_sparse_coeff_map_negative_exponents():
    p = Prime(3)
    a = SparseCoeffMap({-4: 2, 0: 1, 3: 2}, p)
    assert a.min_exponent() == -4
    assert a.max_exponent() == 3
    assert sorted(a.exponents()) == [-4, 0, 3]


def test_lucas_binom_examples():
    assert lucas_binom(3, 1, Prime(7)).value == 3
    # C(6, 3) = 20, divisible by 5.
    assert lucas_binom(6, 3, Prime(5)).value == 0
    assert lucas_binom(0, 0, Prime(3)).value == 1
    # r > n gives zero through a zero digit binomial.
    assert lucas_binom(4, 6, Prime(11)).value == 0


def test_lucas_binom_matches_comb_exhaustively():
    for p in (Prime(3), Prime(5), Prime(7)):
        for n in range(p.value ** 2 + 2):
            for r in range(n + 2):
                assert lucas_binom(n, r, p).value == math.comb(n, r) % p.value, \
                    (n, r, p)


def test_lucas_binom_classic_identities():
    for p in (Prime(3), Prime(5), Prime(13), Prime(101)):
        v = p.value
        # Interior entries of row p vanish mod p.
        assert lucas_binom(v, 1, p).value == 0
        assert lucas_binom(v, v - 1, p).value == 0
        assert lucas_binom(v, 0, p).value == 1
        # Row 2p: digits (2, 0) over (1, 0).
        assert lucas_binom(2 * v, v, p).value == 2


def test_lucas_binom_large_arguments():
    p = Prime(13)
    n = 10 ** 18 + 5
    r = 10 ** 9
    got = lucas_binom(n, r, p).value
    # Digit-by-digit recomputation with math.comb as the digit oracle.
    want = 1
    nn, rr = n, r
    while nn or rr:
        want = want * (math.comb(nn % 13, rr % 13) % 13) % 13
        nn //= 13
        rr //= 13
    assert got == want


def test_poly_pow_examples():
    p = Prime(5)
    f = DensePolynomial([1, 1], p)  # 1 + x
    sq = poly_pow_coeffs(f, 2)
    assert dict(sq.items()) == {0: 1, 1: 2, 2: 1}
    # Characteristic 3: cubing is coefficient-wise.
    g = DensePolynomial([1, 0, 0, 0, 1], Prime(3))  # x^4 + 1
    cube = poly_pow_coeffs(g, 3)
    assert dict(cube.items()) == {0: 1, 12: 1}


def test_poly_pow_edge_exponents():
    p = Prime(7)
    f = DensePolynomial([3, 1], p)
    one = poly_pow_coeffs(f, 0)
    assert dict(one.items()) == {0: 1}
    same = poly_pow_coeffs(f, 1)
    assert dict(same.items()) == {0: 3, 1: 1}
    zero = poly_pow_coeffs(DensePolynomial([], p), 4)
    assert len(zero) == 0
    with pytest.raises(ValueError):
        poly_pow_coeffs(f, -1)


def test_poly_pow_exponent_additivity():
    rng = random.Random(6006)
    for _ in range(200):
        p = Prime(rng.choice([3, 5, 7, 11, 13]))
        deg = rng.randrange(1, 6)
        coeffs = [rng.randrange(p.value) for _ in range(deg)] + [
            rng.randrange(1, p.value)
        ]
        f = DensePolynomial(coeffs, p)
        ea = rng.randrange(0, 6)
        eb = rng.randrange(0, 6)
        assert poly_pow_coeffs(f, ea + eb) == \
            sparse_mul(poly_pow_coeffs(f, ea), poly_pow_coeffs(f, eb))


def test_poly_pow_frobenius_identity():
    # f(x)^p = f(x^p) in characteristic p.
    rng = random.Random(7007)
    for _ in range(60):
        p = Prime(rng.choice([3, 5, 7]))
        deg = rng.randrange(1, 5)
        coeffs = [rng.randrange(p.value) for _ in range(deg)] + [
            rng.randrange(1, p.value)
        ]
        f = DensePolynomial(coeffs, p)
        want = SparseCoeffMap(
            {n * p.value: c for n, c in enumerate(f.coeffs)}, p
        )
        assert poly_pow_coeffs(f, p.value) == want


def test_poly_pow_coefficient_limit():
    p = Prime(5)
    f = DensePolynomial([1, 0, 1], p)  # degree 2
    # f^6 needs 13 slots.
    with pytest.raises(LimitExceededError):
        poly_pow_coeffs(f, 6, limit=12)
    ok = poly_pow_coeffs(f, 6, limit=13)
    assert ok.max_exponent() == 12


def test_poly_gcd_examples():
    p = Prime(5)
    f = DensePolynomial([-1, 0, 1], p)  # x^2 - 1
    g = DensePolynomial([-1, 1], p)    # x - 1
    d = poly_gcd(f, g)
    assert d.coeffs == (4, 1)  # monic x - 1 is x + 4 mod 5
    # Coprime arguments give the constant 1.
    h = DensePolynomial([1, 1], p)     # x + 1... shares a root with f
    coprime = poly_gcd(DensePolynomial([2, 0, 1], p), g)
    assert coprime.coeffs == (1,)
    assert poly_gcd(f, h).coeffs == (1, 1)
    # An operand whose coefficients reduce to a nonzero constant is a
    # unit, so the gcd is 1: gcd(x^3 + x, 3x^2 + 1) over F_3.
    p3 = Prime(3)
    unit = poly_gcd(DensePolynomial([0, 1, 0, 1], p3),
                    DensePolynomial([1, 0, 3], p3))
    assert unit.coeffs == (1,)


def test_poly_gcd_degenerate_arguments():
    p = Prime(7)
    f = DensePolynomial([2, 4], p)
    zero = DensePolynomial([], p)
    assert poly_gcd(f, zero) == f.monic()
    assert poly_gcd(zero, f) == f.monic()
    with pytest.raises(ValueError):
        poly_gcd(zero, zero)
    with pytest.raises(ValueError):
        poly_gcd(f, DensePolynomial([2, 4], Prime(5)))


def test_poly_gcd_of_multiple_is_the_factor():
    # gcd(f, f*h) = monic(f) whenever f is nonzero.
    rng = random.Random(8008)
    for _ in range(100):
        p = Prime(rng.choice([3, 5, 13]))
        v = p.value
        f = DensePolynomial(
            [rng.randrange(v) for _ in range(rng.randrange(1, 5))]
            + [rng.randrange(1, v)], p
        )
        h = DensePolynomial(
            [rng.randrange(v) for _ in range(rng.randrange(1, 5))]
            + [rng.randrange(1, v)], p
        )
        product = sparse_mul(
            SparseCoeffMap(enumerate(f.coeffs), p),
            SparseCoeffMap(enumerate(h.coeffs), p),
        )
        dense_product = DensePolynomial(
            [product.get(n) for n in range(product.max_exponent() + 1)], p
        )
        # The gcd divides f and f divides both arguments, so the gcd
        # is exactly monic(f).
        assert poly_gcd(f, dense_product) == f.monic()


def test_poly_derivative_examples():
    f = DensePolynomial([0, 1] + [0] * 7 + [1], Prime(3))  # x^9 + x
    assert poly_derivative(f).coeffs == (1,)
    g = DensePolynomial([5, 2, 0, 1], Prime(7))  # x^3 + 2x + 5
    assert poly_derivative(g).coeffs == (2, 0, 3)
    assert poly_derivative(DensePolynomial([4], Prime(5))).is_zero()
    assert poly_derivative(DensePolynomial([], Prime(5))).is_zero()


def test_poly_derivative_product_rule():
    rng = random.Random(9009)
    for _ in range(60):
        p = Prime(rng.choice([3, 5, 7]))
        v = p.value
        f = DensePolynomial([rng.randrange(v) for _ in range(5)], p)
        g = DensePolynomial([rng.randrange(v) for _ in range(5)], p)
        def mul(a, b):
            prod = sparse_mul(
                SparseCoeffMap(enumerate(a.coeffs), p),
                SparseCoeffMap(enumerate(b.coeffs), p),
            )
            top = prod.max_exponent() if len(prod) else -1
            return DensePolynomial([prod.get(n) for n in range(top + 1)], p)
        left = poly_derivative(mul(f, g))
        fg = mul(poly_derivative(f), g)
        gf = mul(f, poly_derivative(g))
        want = DensePolynomial(
            [
                (fg.coeffs[n] if n < len(fg.coeffs) else 0)
                + (gf.coeffs[n] if n < len(gf.coeffs) else 0)
                for n in range(max(len(fg.coeffs), len(gf.coeffs)))
            ],
            p,
        )
        assert left == want


def test_squarefree_detection_via_gcd():
    p = Prime(5)
    # (x+1)^2 (x+2) has a repeated root; gcd(f, f') is divisible by x+1.
    sq = DensePolynomial([2, 5, 4, 1], p)
    d = poly_gcd(sq, poly_derivative(sq))
    assert d.degree >= 1
    assert d.coeffs == (1, 1)
    # (x+1)(x+2)(x+3) is squarefree.
    free = DensePolynomial([6, 11, 6, 1], p)
    assert poly_gcd(free, poly_derivative(free)).degree == 0
