"""Hyperelliptic curve instances y^2 = f(x) over F_p.

A curve is described by a family (x^m + 1, x^m + x, or explicit
coefficients), validated into a CurveSpec carrying the materialized
polynomial, its degree and the genus, and expanded into the coefficient
map of f(x)^((p-1)/2) -- the data every later computation consumes.

Validation rejects rather than repairs: a polynomial with repeated
roots, or one too small to give a positive genus, is an error.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .ffpoly import (
    DensePolynomial,
    Prime,
    SparseCoeffMap,
    lucas_binom,
    poly_derivative,
    poly_gcd,
    poly_pow_coeffs,
)


class Family(enum.Enum):
    """Curve family tag: A is y^2 = x^m + 1, B is y^2 = x^m + x."""

    A = "A"
    B = "B"
    GENERIC = "G"


class Strategy(enum.Enum):
    """Coefficient expansion strategy for f^((p-1)/2)."""

    SPARSE = "sparse"
    DENSE = "dense"


class CurveValidationError(ValueError):
    """A curve description failed validation.

    ``reason`` is one of "not-squarefree", "degree-too-small",
    "genus-zero".
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class CurveFamily:
    """Which curve to build: a family tag with m, or explicit coefficients."""

    tag: Family
    m: int | None = None
    f_coeffs: DensePolynomial | None = None

    def __post_init__(self):
        if self.tag is Family.GENERIC:
            if self.f_coeffs is None:
                raise ValueError("generic curves need explicit coefficients")
            if self.m is not None:
                raise ValueError("generic curves do not take m")
        else:
            if self.f_coeffs is not None:
                raise ValueError("family curves do not take explicit coefficients")
            if self.m is None:
                raise ValueError("family curves need m")
            if self.m < 3:
                raise CurveValidationError(
                    "genus-zero",
                    f"m={self.m} gives a curve of genus 0 (need m >= 3)",
                )


def family_a(m: int) -> CurveFamily:
    """y^2 = x^m + 1."""
    return CurveFamily(Family.A, m=m)


def family_b(m: int) -> CurveFamily:
    """y^2 = x^m + x."""
    return CurveFamily(Family.B, m=m)


def generic(f: DensePolynomial) -> CurveFamily:
    """y^2 = f(x) with explicit coefficients."""
    return CurveFamily(Family.GENERIC, f_coeffs=f)


@dataclass(frozen=True)
class CurveSpec:
    """A validated curve: prime, family, materialized f, degree and genus."""

    p: Prime
    family: CurveFamily
    f: DensePolynomial
    d: int
    g: int


def _materialize(p: Prime, family: CurveFamily) -> DensePolynomial:
    if family.tag is Family.A:
        coeffs = [0] * (family.m + 1)
        coeffs[0] = 1
        coeffs[family.m] = 1
        return DensePolynomial(coeffs, p)
    if family.tag is Family.B:
        coeffs = [0] * (family.m + 1)
        coeffs[1] = 1
        coeffs[family.m] = 1
        return DensePolynomial(coeffs, p)
    f = family.f_coeffs
    if f.modulus != p:
        raise ValueError(
            f"curve polynomial is over F_{f.modulus.value}, not F_{p.value}"
        )
    return f


def make_curve(p: Prime, family: CurveFamily) -> CurveSpec:
    """Validate a curve description into a CurveSpec.

    Checks: degree at least 3, genus at least 1, and f squarefree
    (gcd(f, f') = 1; for x^m + 1 this fails exactly when p divides m).
    """
    f = _materialize(p, family)
    d = f.degree
    if family.tag is Family.GENERIC and d < 3:
        raise CurveValidationError(
            "degree-too-small", f"deg f = {d}, need at least 3"
        )
    g = (d - 1) // 2
    if g < 1:
        raise CurveValidationError(
            "genus-zero", f"deg f = {d} gives genus 0"
        )
    if poly_gcd(f, poly_derivative(f)).degree != 0:
        raise CurveValidationError(
            "not-squarefree",
            f"f = {f!r} is not squarefree (gcd(f, f') is non-constant)",
        )
    return CurveSpec(p=p, family=family, f=f, d=d, g=g)


def half_power_coeffs(spec: CurveSpec,
                      strategy: Strategy | None = None) -> SparseCoeffMap:
    """Coefficient map of f(x)^((p-1)/2).

    The sparse strategy expands the binomial directly: for x^m + 1 the
    exponents are j*m with coefficient C((p-1)/2, j); for x^m + x the
    factorization x*(x^(m-1) + 1) shifts every exponent by (p-1)/2, so
    the exponents are j*(m-1) + (p-1)/2.  The dense strategy raises f by
    repeated squaring.  Both must agree entry for entry.

    With strategy=None, families use the sparse path and generic curves
    the dense one.
    """
    if strategy is None:
        strategy = (Strategy.DENSE if spec.family.tag is Family.GENERIC
                    else Strategy.SPARSE)
    e = (spec.p.value - 1) // 2
    if strategy is Strategy.DENSE:
        return poly_pow_coeffs(spec.f, e)
    if spec.family.tag is Family.GENERIC:
        raise ValueError(
            "sparse expansion is only defined for family A and B curves"
        )
    m = spec.family.m
    entries = {}
    for j in range(e + 1):
        c = lucas_binom(e, j, spec.p).value
        # C((p-1)/2, j) with j <= (p-1)/2 < p is never divisible by p.
        assert c != 0, (spec.p.value, j)
        exponent = j * m if spec.family.tag is Family.A else j * (m - 1) + e
        entries[exponent] = c
    return SparseCoeffMap(entries, spec.p)
