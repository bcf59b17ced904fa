"""Transform construction: inflate a parity check to N x N and add lambda*I.

A code's parity-check matrix H has shape (N-k) x N. Inflation extends it
to a square matrix H_e whose extra k rows are either zeros ("null_rows"),
sums of pairs of parity rows ("row_combinations"), or — when the code is
cyclic — the remaining cyclic shifts that complete the circulant
("cyclic_shifts"). The transform is then

    T = H_e + lambda * I

and lambda is admissible exactly when det(T) != 0. Every vector fixed by
T is a codeword and vice versa: the lambda-eigenspace of T is the code
itself, which is what makes these matrices transforms with a meaningful
inverse on the one side and a parity check on the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from .codes import CodeSpec, golay_spec, perfect_witness
from .gf import PrimeField
from .matrix import (
    FieldMatrix,
    as_vector,
    circulant_from_first_row,
    determinant,
    format_matrix_text,
    hstack,
    inverse,
    kernel_basis,
    vstack,
)
from .poly import CyclicRing, FieldPoly, reversed_coefficient_row

FORM_STANDARD_NULLROW = "standard_nullrow"
FORM_STANDARD_COMBO = "standard_combo"
FORM_CYCLIC = "cyclic"
FORM_APPENDIX = "appendix_systematic"

# Row pairs whose sums complete the 6 x 12 extended ternary parity check
# to a square matrix (indices into the parity rows, applied in order).
EXTENDED_GOLAY_COMBINATION_PAIRS = ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2))


class EigenvalueUnsuitableError(ValueError):
    """The chosen lambda makes H_e + lambda*I singular."""

    def __init__(self, lam: int, label: str):
        self.lam = lam
        super().__init__(
            f"eigenvalue lambda={lam} is unsuitable for {label}: "
            f"H_e + {lam}*I is singular"
        )


@dataclass(frozen=True)
class InflationStrategy:
    """How the (N-k) x N parity check is extended to N x N."""

    kind: str
    pairs: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def null_rows(cls) -> "InflationStrategy":
        return cls("null_rows")

    @classmethod
    def row_combinations(cls, pairs) -> "InflationStrategy":
        return cls("row_combinations", tuple((int(a), int(b)) for a, b in pairs))

    @classmethod
    def cyclic_shifts(cls) -> "InflationStrategy":
        return cls("cyclic_shifts")


def inflate(code: CodeSpec, strategy: InflationStrategy) -> FieldMatrix:
    """The N x N inflated parity check H_e (no diagonal added yet)."""
    n, k, r = code.N, code.k, code.redundancy
    if strategy.kind == "null_rows":
        return vstack(code.H, FieldMatrix.zeros(code.field, k, n))
    if strategy.kind == "row_combinations":
        pairs = strategy.pairs or ()
        if len(pairs) != k:
            raise ValueError(
                f"row_combinations needs exactly k={k} pairs, got {len(pairs)}"
            )
        extra = []
        for a, b in pairs:
            if not (0 <= a < r and 0 <= b < r):
                raise ValueError(f"pair ({a},{b}) indexes outside the {r} parity rows")
            extra.append((code.H.data[a] + code.H.data[b]) % code.field.p)
        return vstack(code.H, FieldMatrix(code.field, np.array(extra, dtype=np.int64)))
    if strategy.kind == "cyclic_shifts":
        if code.h is None:
            raise ValueError(
                f"{code.label} has no check polynomial; cyclic inflation undefined"
            )
        return circulant_from_first_row(
            code.field, reversed_coefficient_row(code.h, n)
        )
    raise ValueError(f"unknown inflation strategy {strategy.kind!r}")


@dataclass(frozen=True)
class TransformSpec:
    """A built transform with its inverse cached eagerly.

    Construction fails fast on a singular choice of lambda, so every
    TransformSpec in existence is invertible and carries a nonzero det.
    """

    code: CodeSpec
    lam: int
    form: str
    matrix: FieldMatrix
    inverse_matrix: FieldMatrix
    det: int

    @property
    def field(self) -> PrimeField:
        return self.code.field

    @property
    def n(self) -> int:
        return self.code.N

    def apply(self, v) -> np.ndarray:
        return self.matrix.mat_vec(v)

    def apply_inverse(self, v) -> np.ndarray:
        return self.inverse_matrix.mat_vec(v)

    def first_column(self) -> np.ndarray:
        return self.matrix.column(0)

    def __repr__(self) -> str:
        return (
            f"TransformSpec({self.code.label}, lambda={self.lam}, form={self.form})"
        )


def _finish(code: CodeSpec, lam: int, inflated: FieldMatrix, form: str) -> TransformSpec:
    lam = lam % code.field.p
    t_matrix = inflated + FieldMatrix.identity(code.field, code.N).scaled(lam)
    det = determinant(t_matrix)
    if det == 0:
        raise EigenvalueUnsuitableError(lam, code.label)
    return TransformSpec(
        code=code,
        lam=lam,
        form=form,
        matrix=t_matrix,
        inverse_matrix=inverse(t_matrix),
        det=det,
    )


def build_standard(
    code: CodeSpec, lam: int, strategy: InflationStrategy | None = None
) -> TransformSpec:
    """Transform from a parity check inflated with null rows or row sums."""
    strategy = strategy or InflationStrategy.null_rows()
    if strategy.kind == "null_rows":
        form = FORM_STANDARD_NULLROW
    elif strategy.kind == "row_combinations":
        form = FORM_STANDARD_COMBO
    else:
        raise ValueError(
            f"build_standard accepts null_rows or row_combinations, got {strategy.kind!r}"
        )
    return _finish(code, lam, inflate(code, strategy), form)


def build_cyclic(code: CodeSpec, lam: int) -> TransformSpec:
    """Transform whose H_e is the full circulant of the check polynomial."""
    return _finish(code, lam, inflate(code, InflationStrategy.cyclic_shifts()), FORM_CYCLIC)


def build_extended_golay(lam: int = 1) -> TransformSpec:
    """The length-12 combination-inflated transform over GF(3)."""
    code = golay_spec("extended_ternary")
    strategy = InflationStrategy.row_combinations(EXTENDED_GOLAY_COMBINATION_PAIRS)
    return _finish(code, lam, inflate(code, strategy), FORM_STANDARD_COMBO)


def build_appendix_systematic(p_block: FieldMatrix, lam: int) -> TransformSpec:
    """Transform assembled blockwise from a systematic code's P block.

    Given the k x (N-k) block P of a systematic generator [I | P], the
    parity check is H = [-P^T | I] and the transform is assembled
    directly as

        [ lambda*I - P^T | I        ]
        [ 0              | lambda*I ]

    with rectangular identities where the blocks are not square. For
    N - k <= k this equals the null-row standard build on the same H.
    lambda = 0 always gives a singular matrix and is rejected up front;
    the determinant is still checked because unusual P blocks can be
    singular at nonzero lambda too.
    """
    field = p_block.field
    k, r = p_block.shape
    n = k + r
    lam = lam % field.p
    h_matrix = hstack(
        p_block.transpose().scaled(-1), FieldMatrix.identity(field, r)
    )
    code = CodeSpec(field, n, k, None, h_matrix, None, f"systematic({n},{k})")
    if lam == 0:
        raise EigenvalueUnsuitableError(0, code.label)
    p = field.p
    top = np.hstack(
        [
            (lam * np.eye(r, k, dtype=np.int64) - p_block.data.T) % p,
            np.eye(r, dtype=np.int64),
        ]
    )
    bottom = np.hstack(
        [
            np.zeros((k, r), dtype=np.int64),
            lam * np.eye(k, dtype=np.int64),
        ]
    )
    t_matrix = FieldMatrix(field, np.vstack([top, bottom]))
    det = determinant(t_matrix)
    if det == 0:
        raise EigenvalueUnsuitableError(lam, code.label)
    return TransformSpec(
        code=code,
        lam=lam,
        form=FORM_APPENDIX,
        matrix=t_matrix,
        inverse_matrix=inverse(t_matrix),
        det=det,
    )


# -- eigenstructure ------------------------------------------------------------


def eigen_candidates(
    code: CodeSpec, strategy: InflationStrategy | None = None
) -> list[tuple[int, int]]:
    """(lambda, det(H_e + lambda*I)) for every residue lambda.

    Admissible eigenvalues are exactly those with nonzero determinant.
    """
    strategy = strategy or InflationStrategy.null_rows()
    he = inflate(code, strategy)
    ident = FieldMatrix.identity(code.field, code.N)
    return [
        (lam, determinant(he + ident.scaled(lam))) for lam in range(code.field.p)
    ]


def eigenspace(t: TransformSpec, lam: int | None = None) -> FieldMatrix:
    """Canonical basis of ker(T - lambda*I); defaults to the built lambda."""
    lam = t.lam if lam is None else lam % t.field.p
    shifted = t.matrix - FieldMatrix.identity(t.field, t.n).scaled(lam)
    return kernel_basis(shifted)


def is_perfect_transform(t: TransformSpec) -> tuple[bool, int | None, int]:
    """Sphere-packing certificate for the transform's eigenspace.

    Returns (perfect, witness radius or None, eigenspace dimension). The
    dimension is computed from the transform, not read off the code, so
    a wrong fixture cannot vacuously pass.
    """
    dim = eigenspace(t).rows
    witness = perfect_witness(t.field.p, t.n, dim)
    return witness is not None, witness, dim


# -- application routes -----------------------------------------------------------


def rotate_right(v, m: int) -> np.ndarray:
    """Cyclic right shift: entry i of the result is v[(i - m) mod n]."""
    return np.roll(np.asarray(v, dtype=np.int64), m)


def first_column_poly(t: TransformSpec) -> FieldPoly:
    """The transform's impulse response as a ring element."""
    return FieldPoly(tuple(int(x) for x in t.first_column()), t.field)


def apply_via_polynomial(t: TransformSpec, v) -> np.ndarray:
    """Apply a cyclic transform as multiplication in GF(p)[x]/(x^n - 1).

    Independent of the matrix product route: the input vector and the
    impulse response are multiplied as ring elements and the coefficient
    vector comes back. Must agree with apply() entry for entry.
    """
    if t.form != FORM_CYCLIC:
        raise ValueError(f"polynomial application needs a cyclic transform, got {t.form}")
    ring = CyclicRing(t.n, t.field)
    vec = as_vector(t.field, v)
    if vec.shape[0] != t.n:
        raise ValueError(f"expected a length-{t.n} vector, got {vec.shape[0]}")
    product = ring.mul(ring.from_vector(vec.tolist()), first_column_poly(t))
    return np.array(product.padded(t.n), dtype=np.int64)


# -- property verification ----------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: object
    got: object
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        s = f"CHECK {self.name} {status} expected={self.expected} got={self.got}"
        if self.note:
            s += f" note={self.note}"
        return s


@dataclass
class PropertyReport:
    label: str
    trials: int
    seed: int
    checks: list[CheckResult] = dataclass_field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def verify_properties(t: TransformSpec, trials: int = 1000, seed: int = 1234) -> PropertyReport:
    """Randomized and exact checks of the transform's algebraic behavior.

    Always checked: linearity over random vector pairs and scalars, and
    the impulse response (the image of the unit impulse is the first
    matrix column). For cyclic transforms additionally: commutation with
    every cyclic shift (time shift), the inverse-side converse
    (frequency shift), the constant-sequence rule with the matrix row
    sum as the scaling factor, and agreement of the matrix and
    polynomial application routes.
    """
    rng = np.random.default_rng(seed)
    p = t.field.p
    n = t.n
    tmat = t.matrix.data
    report = PropertyReport(label=t.code.label, trials=trials, seed=seed)

    # linearity, fully batched
    vs = rng.integers(0, p, size=(trials, n), dtype=np.int64)
    ws = rng.integers(0, p, size=(trials, n), dtype=np.int64)
    ab = rng.integers(0, p, size=(trials, 2), dtype=np.int64)
    lhs = (((ab[:, 0:1] * vs + ab[:, 1:2] * ws) % p) @ tmat.T) % p
    rhs = (ab[:, 0:1] * ((vs @ tmat.T) % p) + ab[:, 1:2] * ((ws @ tmat.T) % p)) % p
    fails = int(np.count_nonzero(np.any(lhs != rhs, axis=1)))
    report.checks.append(
        CheckResult("linearity", fails == 0, "0/%d failures" % trials, f"{fails}/{trials} failures")
    )

    # impulse response
    delta = np.zeros(n, dtype=np.int64)
    delta[0] = 1
    got = t.apply(delta)
    expected = t.first_column()
    report.checks.append(
        CheckResult(
            "impulse_response",
            bool(np.array_equal(got, expected)),
            "first matrix column",
            "match" if np.array_equal(got, expected) else f"{got.tolist()}",
        )
    )

    if t.form == FORM_CYCLIC:
        shift_idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n

        # time shift: T(rot_m v) == rot_m(T v) for every m
        fails = 0
        for v in vs:
            shifted_inputs = v[shift_idx]  # row m = rot_m(v)
            out = (shifted_inputs @ tmat.T) % p
            image = (tmat @ v) % p
            want = image[shift_idx]
            if not np.array_equal(out, want):
                fails += 1
        report.checks.append(
            CheckResult(
                "time_shift",
                fails == 0,
                "0/%d failures" % trials,
                f"{fails}/{trials} failures",
                note="all shifts per trial",
            )
        )

        # frequency shift: inverse converts shifted images back to shifted inputs
        tinv = t.inverse_matrix.data
        fails = 0
        for v in vs:
            image = (tmat @ v) % p
            shifted_images = image[shift_idx]
            back = (shifted_images @ tinv.T) % p
            want = v[shift_idx]
            if not np.array_equal(back, want):
                fails += 1
        report.checks.append(
            CheckResult(
                "frequency_shift",
                fails == 0,
                "0/%d failures" % trials,
                f"{fails}/{trials} failures",
                note="all shifts per trial",
            )
        )

        # constant sequences scale by the row sum (exact over all residues)
        row_sums = np.unique(tmat.sum(axis=1) % p)
        s = int(row_sums[0])
        uniform = row_sums.shape[0] == 1
        ok = uniform
        for r in range(p):
            got_const = (tmat @ np.full(n, r, dtype=np.int64)) % p
            if not np.array_equal(got_const, np.full(n, (r * s) % p)):
                ok = False
        weight_figure = None
        if t.code.h is not None:
            weight_figure = sum(1 for c in t.code.h.coeffs if c) % p
        note = f"row sum s={s}"
        if weight_figure is not None:
            note += f"; check-polynomial weight mod p={weight_figure}"
        report.checks.append(
            CheckResult(
                "constant_sequence",
                ok,
                "r*s*ones for all residues r",
                "match" if ok else "mismatch",
                note=note,
            )
        )

        # matrix route vs polynomial route
        fails = 0
        for v in vs:
            if not np.array_equal((tmat @ v) % p, apply_via_polynomial(t, v)):
                fails += 1
        report.checks.append(
            CheckResult(
                "polynomial_route",
                fails == 0,
                "0/%d failures" % trials,
                f"{fails}/{trials} failures",
            )
        )

    return report


# -- serialization -------------------------------------------------------------------


def format_transform(t: TransformSpec) -> str:
    """Header "transform form=<form> lambda=<l> code=<label>" + matrix text."""
    header = f"transform form={t.form} lambda={t.lam} code={t.code.label}"
    return format_matrix_text(t.matrix, header=header)
