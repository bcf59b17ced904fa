"""Perfect linear block codes and the fixtures the transforms are built from.

A :class:`CodeSpec` bundles a parity-check matrix H (shape (N-k) x N,
full rank) with the code parameters, and optionally the check polynomial
h(x) when the code is cyclic. Constructors cover the Hamming family over
any prime (column form and cyclic form), the binary and ternary Golay
codes, a systematic ternary Golay parity check, the extended ternary
Golay matrix used by the combination-inflated transform, and a shortened
Hamming control code that is deliberately not perfect.

Hard-coded matrices are data, not derivations; the test suite cross
checks them (rank, minimum distance by exhaustive enumeration, and the
golden transforms they produce).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .gf import PrimeField
from .matrix import FieldMatrix, circulant_from_first_row, format_matrix_text, kernel_basis, parse_matrix, rref
from .poly import FieldPoly, reversed_coefficient_row


class UnsupportedParametersError(ValueError):
    """Raised when no construction exists for the requested parameters."""


@dataclass(frozen=True)
class CodeSpec:
    """An [N, k, d] linear code over GF(p), given by its parity check.

    h is the check polynomial for cyclic codes (ascending coefficients,
    degree k, divides x^N - 1) and None otherwise. d may be None when no
    distance is claimed for the code.
    """

    field: PrimeField
    N: int
    k: int
    d: int | None
    H: FieldMatrix
    h: FieldPoly | None
    label: str

    def __post_init__(self) -> None:
        if not (0 <= self.k < self.N):
            raise ValueError(f"need 0 <= k < N, got k={self.k}, N={self.N}")
        if self.H.field != self.field:
            raise ValueError("parity-check field does not match the code field")
        if self.H.shape != (self.N - self.k, self.N):
            raise ValueError(
                f"parity check must be {(self.N - self.k, self.N)}, got {self.H.shape}"
            )
        if rref(self.H)[1] != self.N - self.k:
            raise ValueError(f"parity check of {self.label} is rank deficient")
        if self.d is not None and self.d < 1:
            raise ValueError("distance must be positive when given")
        if self.h is not None:
            if self.h.field != self.field:
                raise ValueError("check polynomial field does not match the code field")
            if self.h.degree != self.k:
                raise ValueError(
                    f"check polynomial degree {self.h.degree} != k = {self.k}"
                )
            modulus = FieldPoly.monomial(self.field, self.N) - FieldPoly.one(self.field)
            if not (modulus % self.h).is_zero():
                raise ValueError("check polynomial does not divide x^N - 1")

    @property
    def redundancy(self) -> int:
        return self.N - self.k

    def __repr__(self) -> str:
        return f"CodeSpec({self.label} over {self.field!r})"


# -- Hamming family ----------------------------------------------------------


def hamming_parity_check(p: int, m: int) -> CodeSpec:
    """Hamming code over GF(p) with m parity checks, in column form.

    The columns of H are the normalized projective representatives of
    GF(p)^m \\ {0} (first nonzero coordinate scaled to 1), listed in
    ascending lexicographic order. N = (p^m - 1)/(p - 1), k = N - m,
    d = 3.
    """
    field = PrimeField(p)
    if m < 2:
        raise UnsupportedParametersError(f"Hamming construction needs m >= 2, got {m}")
    cols = [
        c
        for c in product(range(p), repeat=m)
        if any(c) and next(v for v in c if v) == 1
    ]
    cols.sort()
    n = (p**m - 1) // (p - 1)
    assert len(cols) == n
    h_matrix = FieldMatrix(field, np.array(cols, dtype=np.int64).T)
    k = n - m
    return CodeSpec(field, n, k, 3, h_matrix, None, f"hamming({n},{k},3)")


def _order_is(g: FieldPoly, e: int) -> bool:
    """True when the multiplicative order of x modulo g is exactly e."""
    one = FieldPoly.one(g.field)

    def divides_x_pow(d: int) -> bool:
        return ((FieldPoly.monomial(g.field, d) - one) % g).is_zero()

    if not divides_x_pow(e):
        return False
    for d in range(1, e):
        if e % d == 0 and divides_x_pow(d):
            return False
    return True


def _is_irreducible(g: FieldPoly) -> bool:
    """Trial division by all lower-degree monic polynomials."""
    if g.degree < 1:
        return False
    field = g.field
    for deg in range(1, g.degree // 2 + 1):
        for low in product(range(field.p), repeat=deg):
            f = FieldPoly(low + (1,), field)
            if (g % f).is_zero():
                return False
    return True


def cyclic_hamming_parity_poly(p: int, m: int) -> FieldPoly:
    """Check polynomial h(x) = (x^N - 1)/g(x) for the cyclic Hamming code.

    g is chosen among the monic degree-m irreducible divisors of
    x^N - 1 whose root has multiplicative order exactly N, taking the
    lexicographically smallest coefficient list with the leading
    coefficient compared first. A cyclic code equivalent to the Hamming
    code only exists when gcd(N, p-1) = 1 (always true for p = 2);
    otherwise the order-N construction yields a code with repeated
    projective points and minimum distance 2, so it is rejected.
    """
    field = PrimeField(p)
    if m < 2:
        raise UnsupportedParametersError(f"Hamming construction needs m >= 2, got {m}")
    n = (p**m - 1) // (p - 1)
    if math.gcd(n, p - 1) != 1:
        raise UnsupportedParametersError(
            f"no cyclic representation: gcd({n}, {p - 1}) != 1, so no cyclic code "
            f"of length {n} over GF({p}) is equivalent to the Hamming code"
        )
    modulus = FieldPoly.monomial(field, n) - FieldPoly.one(field)
    candidates = []
    for low in product(range(p), repeat=m):
        g = FieldPoly(low + (1,), field)
        if not (modulus % g).is_zero():
            continue
        if not _is_irreducible(g):
            continue
        if not _order_is(g, n):
            continue
        candidates.append(g)
    if not candidates:
        raise UnsupportedParametersError(
            f"no cyclic representation: no monic irreducible degree-{m} divisor of "
            f"x^{n}-1 over GF({p}) has order {n}"
        )
    g = min(candidates, key=lambda f: tuple(reversed(f.coeffs)))
    return modulus // g


def parity_rows_from_check_poly(h: FieldPoly, n: int) -> FieldMatrix:
    """First n - deg(h) rows of the circulant generated by h.

    Row 0 places h's coefficients in descending degree (leading first)
    padded with zeros to length n; row i is that row cyclically shifted
    right by i. The rows span the dual code, so the slice is a parity
    check for the cyclic code with check polynomial h.
    """
    field = h.field
    circ = circulant_from_first_row(field, reversed_coefficient_row(h, n))
    return FieldMatrix(field, circ.data[: n - h.degree])


def cyclic_hamming_spec(p: int, m: int) -> CodeSpec:
    """Hamming code over GF(p) in cyclic form, with its check polynomial."""
    h = cyclic_hamming_parity_poly(p, m)
    n = (p**m - 1) // (p - 1)
    k = n - m
    h_matrix = parity_rows_from_check_poly(h, n)
    return CodeSpec(PrimeField(p), n, k, 3, h_matrix, h, f"hamming({n},{k},3)-cyclic")


# -- fixed parity-check data --------------------------------------------------

# Classic systematic parity check of the [7,4,3] binary Hamming code,
# H = [P | I3]; its kernel's canonical generator is the usual G = [I4 | P^T].
_H74_CLASSIC = (
    (1, 1, 0, 1, 1, 0, 0),
    (1, 1, 1, 0, 0, 1, 0),
    (1, 0, 1, 1, 0, 0, 1),
)

# Check polynomials of the two perfect Golay codes, ascending coefficients.
# binary [23,12,7]: h(x) = x^12+x^11+x^10+x^9+x^8+x^5+x^2+1
_GOLAY23_H_COEFFS = (1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1)
# ternary [11,6,5]: h(x) = x^6+2x^5+2x^4+2x^3+x^2+1
_GOLAY11_H_COEFFS = (1, 0, 1, 2, 2, 2, 1)

# Systematic parity check of the ternary Golay code, H = [B | I5].
_GOLAY11_SYSTEMATIC_H = (
    (1, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0),
    (1, 1, 2, 1, 0, 2, 0, 1, 0, 0, 0),
    (1, 2, 1, 0, 1, 2, 0, 0, 1, 0, 0),
    (1, 2, 0, 1, 2, 1, 0, 0, 0, 1, 0),
    (1, 0, 2, 2, 1, 1, 0, 0, 0, 0, 1),
)

# 6 x 12 parity check used for the combination-inflated length-12 transform,
# written with -1 entries; FieldMatrix normalizes them to 2 mod 3. Exhaustive
# weight enumeration of its kernel gives minimum distance 5 (the matrix is one
# entry away from the classical self-dual form, whose kernel has distance 6).
_EXTENDED_GOLAY_H = (
    (0, -1, -1, -1, -1, -1, 1, 0, 0, 0, 0, 0),
    (-1, 0, -1, 1, 1, -1, 0, 1, 0, 0, 0, 0),
    (-1, -1, 0, -1, 1, 1, 0, 0, 1, 0, 0, 0),
    (-1, 1, -1, 0, -1, 1, 0, 0, 0, 1, 0, 0),
    (-1, 1, 1, -1, 0, 1, 0, 0, 0, 0, 1, 0),
    (-1, -1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 1),
)

# Shortened [6,3] binary code: the classic [7,4] parity check with its first
# coordinate deleted. Rank stays 3, minimum distance stays 3, and the
# sphere-packing equality fails for every radius, so this is the control case
# that transforms can be built from but never certified perfect.
_SHORTENED63_H = (
    (1, 0, 1, 1, 0, 0),
    (1, 1, 0, 0, 1, 0),
    (0, 1, 1, 0, 0, 1),
)

GOLAY_VARIANTS = ("binary", "ternary", "ternary_systematic", "extended_ternary")


def hamming74_systematic() -> CodeSpec:
    """The classic [7,4,3] binary Hamming code in systematic form."""
    field = PrimeField(2)
    return CodeSpec(
        field, 7, 4, 3, FieldMatrix(field, _H74_CLASSIC), None, "hamming(7,4,3)"
    )


def golay_spec(variant: str) -> CodeSpec:
    """One of the Golay-family fixtures.

    "binary" and "ternary" are the perfect cyclic Golay codes with their
    check polynomials; "ternary_systematic" is the same ternary code via
    a fixed systematic parity check; "extended_ternary" is the length-12
    matrix used by the combination-inflated transform (minimum distance
    5 by enumeration, not perfect).
    """
    if variant == "binary":
        field = PrimeField(2)
        h = FieldPoly(_GOLAY23_H_COEFFS, field)
        return CodeSpec(
            field, 23, 12, 7, parity_rows_from_check_poly(h, 23), h, "golay(23,12,7)"
        )
    if variant == "ternary":
        field = PrimeField(3)
        h = FieldPoly(_GOLAY11_H_COEFFS, field)
        return CodeSpec(
            field, 11, 6, 5, parity_rows_from_check_poly(h, 11), h, "golay(11,6,5)"
        )
    if variant == "ternary_systematic":
        field = PrimeField(3)
        return CodeSpec(
            field,
            11,
            6,
            5,
            FieldMatrix(field, _GOLAY11_SYSTEMATIC_H),
            None,
            "golay(11,6,5)-systematic",
        )
    if variant == "extended_ternary":
        field = PrimeField(3)
        return CodeSpec(
            field,
            12,
            6,
            5,
            FieldMatrix(field, _EXTENDED_GOLAY_H),
            None,
            "extended-golay(12,6,5)",
        )
    raise UnsupportedParametersError(
        f"unknown Golay variant {variant!r}; expected one of {GOLAY_VARIANTS}"
    )


def shortened_hamming_6_3() -> CodeSpec:
    """The [6,3,3] control code: valid for transforms, not perfect."""
    field = PrimeField(2)
    return CodeSpec(
        field, 6, 3, 3, FieldMatrix(field, _SHORTENED63_H), None, "shortened-hamming(6,3,3)"
    )


# -- derived objects -----------------------------------------------------------


def generator_from_parity(spec: CodeSpec) -> FieldMatrix:
    """Canonical k x N generator: the RREF kernel basis of H."""
    basis = kernel_basis(spec.H)
    if basis.rows != spec.k:
        raise ValueError(
            f"{spec.label}: kernel dimension {basis.rows} does not match k = {spec.k}"
        )
    return basis


def all_codewords(spec: CodeSpec) -> np.ndarray:
    """All p^k codewords as a (p^k, N) residue array."""
    p = spec.field.p
    if spec.k == 0:
        return np.zeros((1, spec.N), dtype=np.int64)
    gen = generator_from_parity(spec)
    messages = np.array(list(product(range(p), repeat=spec.k)), dtype=np.int64)
    return (messages @ gen.data) % p


def minimum_distance(spec: CodeSpec) -> int:
    """Exhaustive minimum weight over all nonzero codewords."""
    if spec.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    words = all_codewords(spec)
    weights = np.count_nonzero(words, axis=1)
    return int(weights[weights > 0].min())


# -- sphere packing ------------------------------------------------------------


def sphere_packing_sum(p: int, n: int, t: int) -> int:
    """|B_t|: exact number of words within Hamming distance t of a point."""
    return sum(math.comb(n, i) * (p - 1) ** i for i in range(t + 1))


def perfect_witness(p: int, n: int, k: int) -> int | None:
    """The radius t >= 1 with |B_t| * p^k = p^n, or None.

    Exact integer arithmetic throughout; a code is perfect exactly when
    such a t exists for its parameters.
    """
    target = p ** (n - k)
    for t in range(1, n + 1):
        s = sphere_packing_sum(p, n, t)
        if s == target:
            return t
        if s > target:
            return None
    return None


# -- serialization ---------------------------------------------------------------


def format_code_spec(spec: CodeSpec) -> str:
    """Header "code <label> p=<p> N=<N> k=<k> d=<d>" plus the matrix text."""
    d = "?" if spec.d is None else str(spec.d)
    header = f"code {spec.label} p={spec.field.p} N={spec.N} k={spec.k} d={d}"
    return format_matrix_text(spec.H, header=header)


def parse_code_spec(text: str) -> CodeSpec:
    """Inverse of :func:`format_code_spec` (the check polynomial is not
    serialized, so round-tripped cyclic specs come back with h = None)."""
    lines = text.strip().splitlines()
    if not lines or not lines[0].startswith("code "):
        raise ValueError('expected a header line starting with "code "')
    fields = lines[0].split()
    label = fields[1]
    params = dict(f.split("=", 1) for f in fields[2:])
    h_matrix = parse_matrix("\n".join(lines[1:]))
    d = None if params["d"] == "?" else int(params["d"])
    return CodeSpec(
        h_matrix.field, int(params["N"]), int(params["k"]), d, h_matrix, None, label
    )
