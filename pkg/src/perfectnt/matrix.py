"""Dense linear algebra over GF(p), backed by small integer numpy arrays.

Entries are canonical residues held in read-only int64 arrays; products
are computed with integer matmul followed by a single reduction, which
is exact for the matrix sizes this package works with (the largest is
23x23 over GF(3), nowhere near int64 overflow).

Algorithms that need to be division-aware (RREF, determinant, inverse)
pivot with modular inverses. The characteristic polynomial uses the
Berkowitz method, which is division-free, so it is exact over any prime
field without special-casing small p.
"""

from __future__ import annotations

import json

import numpy as np

from .gf import ModulusMismatchError, PrimeField
from .poly import FieldPoly


class SingularMatrixError(ValueError):
    """Raised when a singular matrix is inverted; carries the determinant."""

    def __init__(self, message: str, det: int = 0):
        super().__init__(message)
        self.det = det


class FieldMatrix:
    """Immutable dense matrix over GF(p)."""

    __slots__ = ("field", "data")

    def __init__(self, field: PrimeField, data):
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        arr = arr % field.p
        arr.setflags(write=False)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "FieldMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> "FieldMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def from_rows(cls, field: PrimeField, rows) -> "FieldMatrix":
        return cls(field, [list(r) for r in rows])

    # -- shape and access -------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, idx):
        return self.data[idx]

    def row(self, i: int) -> np.ndarray:
        return self.data[i]

    def column(self, j: int) -> np.ndarray:
        return self.data[:, j]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.data.T)

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "FieldMatrix") -> None:
        if not isinstance(other, FieldMatrix):
            raise TypeError(f"expected FieldMatrix, got {type(other).__name__}")
        if other.field != self.field:
            raise ModulusMismatchError(
                f"cannot combine matrices over {self.field!r} and {other.field!r}"
            )

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return FieldMatrix(self.field, self.data + other.data)

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return FieldMatrix(self.field, self.data - other.data)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.shape} by {other.shape}: inner dimensions differ"
            )
        return FieldMatrix(self.field, self.data @ other.data)

    def scaled(self, c: int) -> "FieldMatrix":
        return FieldMatrix(self.field, self.data * (c % self.field.p))

    def mat_vec(self, v) -> np.ndarray:
        """Matrix-vector product; returns a 1-D residue array."""
        vec = as_vector(self.field, v)
        if vec.shape[0] != self.cols:
            raise ValueError(f"expected a length-{self.cols} vector, got {vec.shape[0]}")
        return (self.data @ vec) % self.field.p

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    __hash__ = None

    def __repr__(self) -> str:
        return f"FieldMatrix({self.field!r}, shape={self.shape})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.data)


def as_vector(field: PrimeField, v) -> np.ndarray:
    """Coerce a sequence to a 1-D canonical-residue array over the field."""
    arr = np.asarray(v, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {arr.shape}")
    return arr % field.p


def vstack(top: FieldMatrix, bottom: FieldMatrix) -> FieldMatrix:
    top._check(bottom)
    if top.cols != bottom.cols:
        raise ValueError("column counts differ")
    return FieldMatrix(top.field, np.vstack([top.data, bottom.data]))


def hstack(left: FieldMatrix, right: FieldMatrix) -> FieldMatrix:
    left._check(right)
    if left.rows != right.rows:
        raise ValueError("row counts differ")
    return FieldMatrix(left.field, np.hstack([left.data, right.data]))


# -- elimination-based algorithms ------------------------------------------


def rref(m: FieldMatrix) -> tuple[FieldMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form via Gauss-Jordan with modular pivoting.

    Returns (reduced matrix, rank, pivot column indices). Pivots are
    scaled to 1 and cleared above and below, so the output is the unique
    canonical representative of the row space.
    """
    p = m.field.p
    a = m.data.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        # locate a nonzero pivot in column c at or below row r
        pivot_row = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        if pivot_row != r:
            a[[r, pivot_row]] = a[[pivot_row, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        for i in range(rows):
            if i != r and a[i, c] != 0:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return FieldMatrix(m.field, a), r, tuple(pivots)


def rank(m: FieldMatrix) -> int:
    return rref(m)[1]


def kernel_basis(m: FieldMatrix) -> FieldMatrix:
    """Canonical basis of the right null space {v : m v = 0}.

    The usual free-column basis is extracted from the RREF and then the
    basis itself is put in RREF, so two matrices have the same null
    space exactly when this function returns identical matrices. The
    result has (cols - rank) rows; a trivial kernel gives a 0 x cols
    matrix.
    """
    reduced, rk, pivots = rref(m)
    n = m.cols
    free = [c for c in range(n) if c not in set(pivots)]
    if not free:
        return FieldMatrix.zeros(m.field, 0, n)
    p = m.field.p
    basis = np.zeros((len(free), n), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = (-reduced.data[ri, fc]) % p
    canonical, brank, _ = rref(FieldMatrix(m.field, basis))
    # the free-column basis is always independent
    assert brank == len(free)
    return canonical


def determinant(m: FieldMatrix) -> int:
    """Determinant by Gaussian elimination, tracking row-swap signs."""
    if m.rows != m.cols:
        raise ValueError(f"determinant needs a square matrix, got {m.shape}")
    p = m.field.p
    a = m.data.copy()
    n = m.rows
    det = 1
    for c in range(n):
        pivot_row = -1
        for i in range(c, n):
            if a[i, c] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            return 0
        if pivot_row != c:
            a[[c, pivot_row]] = a[[pivot_row, c]]
            det = (-det) % p
        det = (det * int(a[c, c])) % p
        inv = pow(int(a[c, c]), -1, p)
        for i in range(c + 1, n):
            if a[i, c] != 0:
                a[i] = (a[i] - a[i, c] * inv * a[c]) % p
    return det


def inverse(m: FieldMatrix) -> FieldMatrix:
    """Inverse via Gauss-Jordan on [m | I]; raises SingularMatrixError."""
    if m.rows != m.cols:
        raise ValueError(f"inverse needs a square matrix, got {m.shape}")
    n = m.rows
    aug = FieldMatrix(m.field, np.hstack([m.data, np.eye(n, dtype=np.int64)]))
    reduced, rk, _ = rref(aug)
    if rk < n or not np.array_equal(reduced.data[:, :n], np.eye(n, dtype=np.int64)):
        raise SingularMatrixError(
            f"matrix is singular over {m.field!r} (determinant = 0)", det=0
        )
    return FieldMatrix(m.field, reduced.data[:, n:])


def char_poly(m: FieldMatrix) -> FieldPoly:
    """Characteristic polynomial det(xI - m) by the Berkowitz method.

    Division-free: exact over any prime field. The result is monic of
    degree n, returned with ascending coefficients.

    The recurrence processes leading principal submatrices. For each
    size k it forms the Toeplitz factor t from the new row/column border
    (R, C, corner a) via t_j = -R M^{j-2} C, then convolves it with the
    previous coefficient vector.
    """
    if m.rows != m.cols:
        raise ValueError(f"characteristic polynomial needs a square matrix, got {m.shape}")
    n = m.rows
    field = m.field
    p = field.p
    if n == 0:
        return FieldPoly.one(field)
    a = m.data
    # pv holds descending coefficients of the charpoly of the leading
    # (k-1) x (k-1) principal submatrix
    pv = [1, (-int(a[0, 0])) % p]
    for k in range(2, n + 1):
        sub = a[: k - 1, : k - 1]
        row = a[k - 1, : k - 1]
        col = a[: k - 1, k - 1]
        t = [1, (-int(a[k - 1, k - 1])) % p]
        w = col
        for _ in range(k - 1):
            t.append((-int(row @ w)) % p)
            w = (sub @ w) % p
        t = t[: k + 1]
        new = [0] * (k + 1)
        for i in range(k + 1):
            s = 0
            for j in range(max(0, i - k), min(i, k - 1) + 1):
                s += t[i - j] * pv[j]
            new[i] = s % p
        pv = new
    pv.reverse()
    return FieldPoly(tuple(pv), field)


def multiplicative_order(m: FieldMatrix, cap: int = 10**6) -> int | None:
    """Smallest e >= 1 with m^e = I, or None if the search passes cap.

    Requires an invertible square matrix (the powers of a singular
    matrix never reach the identity).
    """
    if m.rows != m.cols:
        raise ValueError(f"multiplicative order needs a square matrix, got {m.shape}")
    if determinant(m) == 0:
        raise SingularMatrixError(
            "singular matrix has no multiplicative order (determinant = 0)", det=0
        )
    p = m.field.p
    ident = np.eye(m.rows, dtype=np.int64)
    power = m.data.copy()
    for e in range(1, cap + 1):
        if np.array_equal(power, ident):
            return e
        power = (power @ m.data) % p
    return None


def circulant_from_first_row(field: PrimeField, first_row) -> FieldMatrix:
    """n x n circulant: row i is the first row cyclically shifted right by i.

    Equivalently entry (i, j) = first_row[(j - i) mod n].
    """
    r = as_vector(field, first_row)
    n = r.shape[0]
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return FieldMatrix(field, r[idx])


# -- serialization -----------------------------------------------------------


def format_matrix_text(m: FieldMatrix, header: str | None = None) -> str:
    """Text form: optional header line, then "p rows cols", then the rows."""
    lines = [] if header is None else [header]
    lines.append(f"{m.field.p} {m.rows} {m.cols}")
    for i in range(m.rows):
        lines.append(" ".join(str(x) for x in m.data[i]))
    return "\n".join(lines) + "\n"


def format_matrix_json(m: FieldMatrix) -> str:
    return json.dumps({"p": m.field.p, "rows": m.data.tolist()})


def parse_matrix(text: str) -> FieldMatrix:
    """Parse either serialized matrix form.

    Accepts the text format (dimension line "p rows cols" followed by
    rows of space-separated residues, optionally preceded by one header
    line) or the JSON object {"p": ..., "rows": [[...], ...]}.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty matrix input")
    if s[0] == "{":
        obj = json.loads(s)
        if "p" not in obj or "rows" not in obj:
            raise ValueError('JSON matrix must have "p" and "rows" keys')
        return FieldMatrix(PrimeField(int(obj["p"])), obj["rows"])
    lines = [ln.strip() for ln in s.splitlines() if ln.strip()]
    first = lines[0].split()
    if not all(tok.lstrip("-").isdigit() for tok in first):
        lines = lines[1:]  # skip a header line such as "transform form=... lambda=..."
        if not lines:
            raise ValueError("matrix input has a header but no dimension line")
    dims = lines[0].split()
    if len(dims) != 3:
        raise ValueError(f"expected dimension line 'p rows cols', got {lines[0]!r}")
    p, nrows, ncols = (int(t) for t in dims)
    body = lines[1:]
    if len(body) != nrows:
        raise ValueError(f"expected {nrows} rows, got {len(body)}")
    rows = []
    for ln in body:
        vals = [int(t) for t in ln.split()]
        if len(vals) != ncols:
            raise ValueError(f"expected {ncols} entries per row, got {len(vals)}")
        rows.append(vals)
    if nrows == 0:
        return FieldMatrix.zeros(PrimeField(p), 0, ncols)
    return FieldMatrix(PrimeField(p), rows)
