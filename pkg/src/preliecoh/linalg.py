"""Exact linear algebra over the rationals.

Everything here is deterministic: row reduction always picks the first
nonzero entry scanning rows top-down and columns left-right, so kernels,
images, right inverses and quotient coordinates come out the same on
every run. Scalars are fractions.Fraction throughout; floats are refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadBasis, DimensionMismatch, ShapeError

Scalar = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x: object) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise ShapeError(f"expected an exact rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ShapeError(f"expected an exact rational, got {x!r}")


def vector(entries: Iterable[object]) -> Vector:
    return tuple(as_fraction(e) for e in entries)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return all(a == 0 for a in v)


def standard_basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


@dataclass(frozen=True)
class MatrixQ:
    """Dense rational matrix, row-major, immutable."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs "
                f"{self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> "MatrixQ":
        rows = [vector(r) for r in rows]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ShapeError("ragged rows")
        elif cols is None:
            cols = 0
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[object]], rows: int | None = None) -> "MatrixQ":
        if not cols:
            return cls(rows if rows is not None else 0, 0, ())
        vecs = [vector(c) for c in cols]
        if not vecs[0]:
            return cls(0, len(vecs), ())
        return cls.from_rows(list(zip(*vecs)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "MatrixQ":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "MatrixQ":
        return MatrixQ(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def mul_vec(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"matrix has {self.cols} cols, vector has {len(v)}")
        return tuple(
            sum((self.at(i, j) * v[j] for j in range(self.cols)), ZERO)
            for i in range(self.rows)
        )

    def __matmul__(self, other: "MatrixQ") -> "MatrixQ":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum((ri[k] * other.at(k, j) for k in range(self.cols)), ZERO))
        return MatrixQ(self.rows, other.cols, tuple(out))

    def __add__(self, other: "MatrixQ") -> "MatrixQ":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return MatrixQ(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "MatrixQ") -> "MatrixQ":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return MatrixQ(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c: Fraction) -> "MatrixQ":
        return MatrixQ(self.rows, self.cols, tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)


def _rref(rows: list[list[Fraction]]) -> list[int]:
    """Reduce rows in place to reduced row echelon form; return pivot columns.

    Pivot rule: columns left to right, within a column the first row
    (top-down) with a nonzero entry.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


@dataclass(frozen=True)
class SubspaceBasis:
    """An ordered independent spanning set of a subspace of Q^ambient_dim."""

    ambient_dim: int
    vectors: tuple[Vector, ...]

    def __post_init__(self) -> None:
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise ShapeError("basis vector length differs from ambient dimension")

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def as_column_matrix(self) -> MatrixQ:
        return MatrixQ.from_cols(list(self.vectors), rows=self.ambient_dim)

    def contains(self, v: Sequence[Fraction]) -> bool:
        if not self.vectors:
            return is_zero_vector(tuple(v))
        return solve_particular(self.as_column_matrix(), tuple(v)) is not None


def rank_kernel_image(m: MatrixQ) -> tuple[int, SubspaceBasis, SubspaceBasis]:
    """Rank, kernel basis (in Q^cols) and image basis (in Q^rows) of m.

    Kernel vectors are ordered by increasing free column, with the free
    coordinate set to 1. Image vectors are the original columns of m at
    the pivot positions, in order.
    """
    rows = m.row_list()
    pivots = _rref(rows)
    rank = len(pivots)
    pivot_set = set(pivots)
    kernel = []
    for j in range(m.cols):
        if j in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[j] = ONE
        for t, p in enumerate(pivots):
            v[p] = -rows[t][j]
        kernel.append(tuple(v))
    image = tuple(m.col(p) for p in pivots)
    return rank, SubspaceBasis(m.cols, tuple(kernel)), SubspaceBasis(m.rows, image)


def rank_of(m: MatrixQ) -> int:
    rows = m.row_list()
    return len(_rref(rows))


def solve_particular(m: MatrixQ, b: Sequence[Fraction]) -> Vector | None:
    """One solution of m x = b with every free variable set to 0, else None."""
    if len(b) != m.rows:
        raise DimensionMismatch(f"matrix has {m.rows} rows, rhs has {len(b)}")
    rows = [list(m.row(i)) + [b[i]] for i in range(m.rows)]
    if not rows:
        return zero_vector(m.cols)
    pivots = _rref(rows)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for t, p in enumerate(pivots):
        x[p] = rows[t][m.cols]
    return tuple(x)


def invert(m: MatrixQ) -> MatrixQ:
    """Inverse of a square invertible matrix; BadBasis if singular."""
    if m.rows != m.cols:
        raise ShapeError("only square matrices can be inverted")
    n = m.rows
    rows = [list(m.row(i)) + list(standard_basis_vector(n, i)) for i in range(n)]
    pivots = _rref(rows)
    if pivots != list(range(n)):
        raise BadBasis("matrix is singular")
    return MatrixQ.from_rows([rows[i][n:] for i in range(n)])


def right_inverse_on_image(m: MatrixQ) -> MatrixQ:
    """A section s of m with m @ s @ m == m.

    On im(m) this is a genuine right inverse: columns of m at pivot
    positions map back to the matching standard basis vectors of the
    source; the deterministic complement of im(m) (standard basis
    vectors at non-pivot coordinates of the image) maps to zero.
    """
    rows = m.row_list()
    col_pivots = _rref(rows)
    r = len(col_pivots)
    image_cols = [m.col(p) for p in col_pivots]
    img_rows = [list(v) for v in image_cols]
    row_pivots = _rref(img_rows) if img_rows else []
    complement = [j for j in range(m.rows) if j not in set(row_pivots)]
    basis_cols = image_cols + [standard_basis_vector(m.rows, j) for j in complement]
    if not basis_cols:
        return MatrixQ.zero(m.cols, m.rows)
    b = MatrixQ.from_cols(basis_cols, rows=m.rows)
    c_cols = [standard_basis_vector(m.cols, p) for p in col_pivots]
    c_cols += [zero_vector(m.cols)] * len(complement)
    c = MatrixQ.from_cols(c_cols, rows=m.cols)
    return c @ invert(b)


@dataclass(frozen=True)
class QuotientMap:
    """Coordinates on Q^ambient_dim / span(sub), via non-pivot coordinates.

    reduce() rewrites a vector modulo the subspace so that all pivot
    coordinates of the reduced row echelon basis of the subspace vanish,
    then reads off the remaining (non-pivot) coordinates.
    """

    ambient_dim: int
    sub_rref: tuple[Vector, ...]
    pivots: tuple[int, ...]
    complement: tuple[int, ...]

    @classmethod
    def build(cls, ambient_dim: int, sub: SubspaceBasis) -> "QuotientMap":
        if sub.ambient_dim != ambient_dim:
            raise DimensionMismatch("subspace lives in a different ambient space")
        rows = [list(v) for v in sub.vectors]
        pivots = _rref(rows) if rows else []
        if len(pivots) != len(sub.vectors):
            raise BadBasis("subspace vectors are linearly dependent")
        complement = tuple(j for j in range(ambient_dim) if j not in set(pivots))
        return cls(ambient_dim, tuple(tuple(r) for r in rows), tuple(pivots), complement)

    @property
    def dim(self) -> int:
        return len(self.complement)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        w = list(v)
        for t, p in enumerate(self.pivots):
            coeff = w[p]
            if coeff != 0:
                w = [a - coeff * b for a, b in zip(w, self.sub_rref[t])]
        return tuple(w[j] for j in self.complement)

    def lift(self, coords: Sequence[Fraction]) -> Vector:
        if len(coords) != self.dim:
            raise DimensionMismatch("coordinate length differs from quotient dimension")
        w = [ZERO] * self.ambient_dim
        for c, j in zip(coords, self.complement):
            w[j] = c
        return tuple(w)

    def reduce_matrix(self) -> MatrixQ:
        cols = [self.reduce(standard_basis_vector(self.ambient_dim, j)) for j in range(self.ambient_dim)]
        return MatrixQ.from_cols(cols, rows=self.dim)


def quotient_reduce(ambient_dim: int, sub: SubspaceBasis, v: Sequence[Fraction]) -> Vector:
    """Coordinates of v in Q^ambient_dim / span(sub); see QuotientMap."""
    return QuotientMap.build(ambient_dim, sub).reduce(v)
