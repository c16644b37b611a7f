"""The Cartier operator: primitive action, matrix, rank, a-number.

On a monomial differential the operator sends x^j dx to x^(s-1) dx when
j + 1 = p*s and to zero when p does not divide j + 1; coefficients pass
through unchanged because they live in the prime field, where the
1/p-power is the identity.  For a hyperelliptic curve y^2 = f(x) with
basis x^(i-1) dx / y of the holomorphic differentials, the operator is
represented by the g x g matrix with entry (i, j) = c_(i*p - j), where
c_n are the coefficients of f(x)^((p-1)/2).  The a-number is the kernel
dimension: genus minus the matrix rank over F_p.

Two independent constructions are provided and must be transposes of
each other: the direct index formula (cartier_matrix) and the row-wise
application of the primitive to x^(i-1) * f^((p-1)/2) dx
(cartier_action_on_basis).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import _kernels
from .curves import CurveSpec, half_power_coeffs
from .ffpoly import Prime, Residue, SparseCoeffMap


class LaurentDifferential:
    """h(x) dx with h a Laurent polynomial over F_p."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: SparseCoeffMap):
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentDifferential):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"LaurentDifferential({self.coeffs!r})"


def cartier_differential(omega: LaurentDifferential) -> LaurentDifferential:
    """Apply the operator to a Laurent differential, monomial by monomial.

    x^j dx contributes its coefficient at exponent s - 1 when j + 1 = p*s
    (s may be zero or negative: x^(-1) dx is fixed) and nothing otherwise.
    """
    modulus = omega.coeffs.modulus
    p = modulus.value
    out: dict[int, int] = {}
    for j, c in omega.coeffs.items():
        if (j + 1) % p == 0:
            s = (j + 1) // p
            out[s - 1] = (out.get(s - 1, 0) + c) % p
    return LaurentDifferential(SparseCoeffMap(out, modulus))


@dataclass(frozen=True)
class CartierMatrix:
    """The g x g matrix with rows[i-1][j-1] = c_(i*p - j) reduced mod p."""

    p: Prime
    g: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> Residue:
        """1-based entry accessor."""
        return Residue(self.rows[i - 1][j - 1], self.p)

    def transpose_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows)) if self.g else ()


def cartier_matrix(spec: CurveSpec,
                   coeffs: SparseCoeffMap | None = None) -> CartierMatrix:
    """Build the matrix from the coefficient map of f^((p-1)/2).

    Indices i*p - j outside the map (negative or absent) give entry 0.
    """
    if coeffs is None:
        coeffs = half_power_coeffs(spec)
    p, g = spec.p.value, spec.g
    n_max = (p - 1) // 2 * spec.d
    if len(coeffs):
        assert 0 <= coeffs.min_exponent() and coeffs.max_exponent() <= n_max
    # Entries lie in the prime field, so the 1/p-power twist on the
    # matrix is the identity; checked, not assumed.
    assert all(pow(c, p, p) == c for _, c in coeffs.items())
    rows = tuple(
        tuple(coeffs.get(i * p - j) for j in range(1, g + 1))
        for i in range(1, g + 1)
    )
    return CartierMatrix(p=spec.p, g=g, rows=rows)


def cartier_action_on_basis(
    spec: CurveSpec, coeffs: SparseCoeffMap | None = None
) -> tuple[tuple[int, ...], ...]:
    """Row i = coordinates of the image of x^(i-1) dx / y in the basis.

    Computed independently of cartier_matrix by applying the primitive
    to x^(i-1) * f^((p-1)/2) dx and reading off the surviving monomials
    x^l dx for l = 0 .. g-1.  Equals the transpose of cartier_matrix.
    """
    if coeffs is None:
        coeffs = half_power_coeffs(spec)
    g = spec.g
    rows = []
    for i in range(1, g + 1):
        shifted = SparseCoeffMap(
            ((n + i - 1, c) for n, c in coeffs.items()), spec.p
        )
        image = cartier_differential(LaurentDifferential(shifted))
        # The image of a holomorphic differential stays holomorphic:
        # every surviving exponent is within 0 .. g-1.
        assert all(0 <= t < g for t in image.coeffs.exponents())
        rows.append(tuple(image.coeffs.get(t) for t in range(g)))
    return tuple(rows)


def row_reduce(rows: Sequence[Sequence[int]], p: Prime | int):
    """Reduced row echelon form over F_p; returns (rref, pivot columns)."""
    return _kernels.row_reduce_mod([list(r) for r in rows], int(p))


def rank_of_rows(rows: Sequence[Sequence[int]], p: Prime | int) -> int:
    """Exact rank of a matrix given as rows of residues."""
    _, pivots = row_reduce(rows, p)
    return len(pivots)


def rank_mod_p(matrix: CartierMatrix) -> int:
    """Exact rank via Gaussian elimination with modular inverses."""
    return rank_of_rows(matrix.rows, matrix.p)


def nullspace_mod_p(matrix: CartierMatrix) -> list[tuple[int, ...]]:
    """Basis of the right null space, read off the reduced row echelon form."""
    p = matrix.p.value
    g = matrix.g
    rref, pivots = row_reduce(matrix.rows, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(g):
        if free in pivot_set:
            continue
        v = [0] * g
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][free] % p
        basis.append(tuple(v))
    return basis


class ANumberCore(NamedTuple):
    """Result fragment of one a-number computation."""

    genus: int
    rank: int
    a_number: int


def a_number(spec: CurveSpec) -> ANumberCore:
    """a = genus - rank of the operator matrix; 0 <= a <= genus."""
    r = rank_mod_p(cartier_matrix(spec))
    return ANumberCore(genus=spec.g, rank=r, a_number=spec.g - r)


def format_matrix(matrix: CartierMatrix, spec: CurveSpec) -> str:
    """Matrix dump: a comment header, then one comma-separated row per line.

    The header records p, m (the degree of f; equal to m for the
    families), the family letter and the genus.
    """
    header = (
        f"# p={spec.p.value} m={spec.d} family={spec.family.tag.value} g={spec.g}"
    )
    lines = [header]
    lines.extend(",".join(str(c) for c in row) for row in matrix.rows)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> tuple[dict[str, int | str], list[list[int]]]:
    """Parse the dump format back into (header fields, rows)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("matrix dump must start with a '# ...' header line")
    fields: dict[str, int | str] = {}
    for token in lines[0].lstrip("#").split():
        key, _, value = token.partition("=")
        fields[key] = value if key == "family" else int(value)
    rows = [[int(tok) for tok in ln.split(",")] for ln in lines[1:]]
    if len(rows) != fields.get("g") or any(
        len(r) != fields.get("g") for r in rows
    ):
        raise ValueError("matrix dump dimensions disagree with header genus")
    return fields, rows
