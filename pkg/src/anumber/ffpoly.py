"""Exact arithmetic over the prime field F_p.

Everything here is integer arithmetic: residues are least non-negative
representatives, polynomials are coefficient containers over a validated
odd prime modulus, and no floating point appears anywhere.  Dense
polynomials carry coefficients indexed by exponent; sparse coefficient
maps hold exponent -> nonzero residue and allow negative exponents so
the same container serves Laurent differentials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import _kernels

#: Default ceiling on coefficient slots allocated by poly_pow_coeffs.
DEFAULT_COEFF_LIMIT = 10**7

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class LimitExceededError(RuntimeError):
    """A dense expansion would exceed the configured coefficient budget."""


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witnesses)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for q in _MR_BASES:
        x = pow(q, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Prime:
    """An odd prime modulus, validated at construction."""

    value: int

    def __post_init__(self):
        if not isinstance(self.value, int):
            raise TypeError(f"prime must be an int, got {type(self.value).__name__}")
        if self.value == 2:
            raise ValueError("characteristic 2 is not supported")
        if self.value < 3 or not is_prime(self.value):
            raise ValueError(f"{self.value} is not an odd prime")

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Prime({self.value})"


@dataclass(frozen=True)
class Residue:
    """An element of F_p as its least non-negative representative."""

    value: int
    modulus: Prime

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.value:
            raise ValueError(
                f"residue {self.value} outside [0, {self.modulus.value})"
            )

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.modulus.value})"


class DensePolynomial:
    """Polynomial over F_p as a coefficient tuple indexed by exponent.

    Trailing zero coefficients are stripped; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Iterable[int], modulus: Prime):
        p = modulus.value
        reduced = [int(c) % p for c in coeffs]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        self.coeffs: tuple[int, ...] = tuple(reduced)
        self.modulus = modulus

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> "DensePolynomial":
        if self.is_zero():
            return self
        p = self.modulus.value
        inv = pow(self.coeffs[-1], -1, p)
        return DensePolynomial([c * inv % p for c in self.coeffs], self.modulus)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.coeffs, self.modulus))

    def __repr__(self) -> str:
        if self.is_zero():
            return f"DensePolynomial(0 mod {self.modulus.value})"
        terms = " + ".join(
            f"{c}*x^{n}" for n, c in enumerate(self.coeffs) if c
        )
        return f"DensePolynomial({terms} mod {self.modulus.value})"


class SparseCoeffMap:
    """Map exponent -> nonzero residue mod p; exponents may be negative.

    Zero coefficients are never stored, so two maps are equal exactly
    when they describe the same Laurent polynomial over the same field.
    Instances are not mutated after construction.
    """

    __slots__ = ("_entries", "modulus")

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]],
                 modulus: Prime):
        p = modulus.value
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        store: dict[int, int] = {}
        for n, c in pairs:
            c = int(c) % p
            if c:
                store[int(n)] = c
        self._entries = store
        self.modulus = modulus

    def get(self, exponent: int, default: int = 0) -> int:
        return self._entries.get(exponent, default)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._entries.items())

    def exponents(self) -> Iterator[int]:
        return iter(self._entries)

    def max_exponent(self) -> int:
        """Largest exponent with nonzero coefficient (the map must be nonempty)."""
        return max(self._entries)

    def min_exponent(self) -> int:
        return min(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, exponent: int) -> bool:
        return exponent in self._entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseCoeffMap):
            return NotImplemented
        return self._entries == other._entries and self.modulus == other.modulus

    def __hash__(self):
        return hash((frozenset(self._entries.items()), self.modulus))

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}: {c}" for n, c in sorted(self._entries.items()))
        return f"SparseCoeffMap({{{inner}}} mod {self.modulus.value})"


def _binom_mod(n: int, r: int, p: int) -> int:
    # n, r < p, so no factor below is divisible by p.
    if r > n:
        return 0
    r = min(r, n - r)
    num = den = 1
    for t in range(1, r + 1):
        num = num * ((n - r + t) % p) % p
        den = den * t % p
    return num * pow(den, -1, p) % p


def lucas_binom(n: int, r: int, p: Prime) -> Residue:
    """Binomial coefficient C(n, r) mod p, digit-wise in base p.

    The product of digit binomials equals C(n, r) mod p; when r > n some
    digit of r exceeds the corresponding digit of n, so the result is 0
    without a separate check.
    """
    if n < 0 or r < 0:
        raise ValueError("binomial arguments must be non-negative")
    pv = p.value
    acc = 1
    while n or r:
        nd, n = n % pv, n // pv
        rd, r = r % pv, r // pv
        if rd > nd:
            return Residue(0, p)
        acc = acc * _binom_mod(nd, rd, pv) % pv
    return Residue(acc, p)


def poly_pow_coeffs(f: DensePolynomial, e: int,
                    limit: int = DEFAULT_COEFF_LIMIT) -> SparseCoeffMap:
    """Coefficient map of f**e via repeated squaring with dense convolution.

    Raises LimitExceededError when the result would need more than
    ``limit`` coefficient slots, which a parameter sweep treats as a
    skippable point rather than an error.
    """
    if e < 0:
        raise ValueError("exponent must be non-negative")
    p = f.modulus
    if e == 0:
        return SparseCoeffMap({0: 1}, p)
    if f.is_zero():
        return SparseCoeffMap({}, p)
    slots = e * f.degree + 1
    if slots > limit:
        raise LimitExceededError(
            f"f**{e} needs {slots} coefficient slots (limit {limit})"
        )
    pv = p.value
    base = list(f.coeffs)
    acc = [1]
    while e:
        if e & 1:
            acc = _kernels.convolve_mod(acc, base, pv)
        e >>= 1
        if e:
            base = _kernels.convolve_mod(base, base, pv)
    return SparseCoeffMap(enumerate(acc), p)


def _poly_rem(u: list[int], v: list[int], p: int) -> list[int]:
    # Remainder of u by v; v nonzero with nonzero leading coefficient.
    u = list(u)
    dv = len(v) - 1
    inv = pow(v[-1], -1, p)
    for i in range(len(u) - 1, dv - 1, -1):
        c = u[i]
        if c:
            q = c * inv % p
            for j in range(dv + 1):
                u[i - dv + j] = (u[i - dv + j] - q * v[j]) % p
    del u[dv:]
    while u and u[-1] == 0:
        u.pop()
    return u


def poly_gcd(a: DensePolynomial, b: DensePolynomial) -> DensePolynomial:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if a.modulus != b.modulus:
        raise ValueError("polynomials have different moduli")
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    p = a.modulus.value
    fa, fb = list(a.coeffs), list(b.coeffs)
    while fb:
        fa, fb = fb, _poly_rem(fa, fb, p)
    return DensePolynomial(fa, a.modulus).monic()


def poly_derivative(f: DensePolynomial) -> DensePolynomial:
    """Formal derivative; exponents divisible by p drop out."""
    p = f.modulus.value
    return DensePolynomial(
        [n * c % p for n, c in enumerate(f.coeffs)][1:], f.modulus
    )
