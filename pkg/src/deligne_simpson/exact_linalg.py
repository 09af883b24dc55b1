"""Exact dense linear algebra over the rationals.

Scalars are ``fractions.Fraction`` values and every result is exact.  The
matrices used by the rest of the package are tiny (nothing past a few dozen
rows), so the implementation is plain Gaussian elimination with an integer
fast path for rank computations; no floating point anywhere.

Vectorization convention: an n x n matrix X maps to the length n**2 vector
vec(X) listing entries row by row (row-major).  All operator matrices built
here (left/right multiplication, commutator maps) share this ordering.

Serialization: rationals are strings "p/q" or "p" with the sign on the
numerator; matrices are JSON arrays of arrays of such strings.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


class LinalgError(Exception):
    """Base class for exact linear algebra errors."""


class ShapeMismatchError(LinalgError):
    pass


class SingularMatrixError(LinalgError):
    pass


class NoSolutionError(LinalgError):
    pass


def rational_from_str(text: str) -> Fraction:
    """Parse "p/q" or "p" (sign on the numerator) into a Fraction."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def rational_to_str(value: Fraction) -> str:
    return str(Fraction(value))


def rat(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rational_from_str(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class RatMatrix:
    """Immutable dense matrix with Fraction entries, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int | str | Fraction]):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        data = tuple(rat(x) for x in entries)
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | str | Fraction]]) -> RatMatrix:
        if not rows:
            raise ValueError("need at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> RatMatrix:
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int | str | Fraction]) -> RatMatrix:
        n = len(values)
        m = [[Fraction(0)] * n for _ in range(n)]
        for i, v in enumerate(values):
            m[i][i] = rat(v)
        return cls.from_rows(m)

    @classmethod
    def column(cls, values: Sequence[int | str | Fraction]) -> RatMatrix:
        return cls(len(values), 1, values)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: RatMatrix) -> RatMatrix:
        self._require_same_shape(other)
        return RatMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        self._require_same_shape(other)
        return RatMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> RatMatrix:
        return RatMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c: int | str | Fraction) -> RatMatrix:
        c = rat(c)
        return RatMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        return matmul(self, other)

    def transpose(self) -> RatMatrix:
        return RatMatrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ShapeMismatchError("trace needs a square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == RatMatrix.identity(self.rows)

    def _require_same_shape(self, other: RatMatrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatchError(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def to_json(self) -> list[list[str]]:
        return [[rational_to_str(x) for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int | str]]) -> RatMatrix:
        return cls.from_rows([[rat(x) for x in row] for row in data])


def matmul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.cols != b.rows:
        raise ShapeMismatchError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = [b.col(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for bc in bcols:
            out.append(sum((x * y for x, y in zip(arow, bc)), Fraction(0)))
    return RatMatrix(a.rows, b.cols, out)


def product(matrices: Sequence[RatMatrix]) -> RatMatrix:
    if not matrices:
        raise ValueError("empty product")
    acc = matrices[0]
    for m in matrices[1:]:
        acc = matmul(acc, m)
    return acc


def commutator(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    return matmul(a, b) - matmul(b, a)


def hstack(matrices: Sequence[RatMatrix]) -> RatMatrix:
    rows = matrices[0].rows
    if any(m.rows != rows for m in matrices):
        raise ShapeMismatchError("hstack needs equal row counts")
    out = []
    for i in range(rows):
        for m in matrices:
            out.extend(m.row(i))
    return RatMatrix(rows, sum(m.cols for m in matrices), out)


def vstack(matrices: Sequence[RatMatrix]) -> RatMatrix:
    cols = matrices[0].cols
    if any(m.cols != cols for m in matrices):
        raise ShapeMismatchError("vstack needs equal column counts")
    out = []
    for m in matrices:
        out.extend(m.entries)
    return RatMatrix(sum(m.rows for m in matrices), cols, out)


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    # Row scaling does not change the rank, so clear denominators per row.
    rows = []
    for i in range(m.rows):
        row = m.row(i)
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * scale) for x in row])
    return rows


def rank(m: RatMatrix) -> int:
    """Rank over the rationals, via integer forward elimination."""
    rows = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, nrows):
            if rows[i][c] == 0:
                continue
            f = rows[i][c]
            rows[i] = [p * x - f * y for x, y in zip(rows[i], rows[r])]
            g = math.gcd(*rows[i])
            if g > 1:
                rows[i] = [x // g for x in rows[i]]
        r += 1
        if r == nrows:
            break
    return r


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot column indices)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    rows, pivots = _rref(m.row_lists())
    return RatMatrix.from_rows(rows), tuple(pivots)


def nullspace_basis(m: RatMatrix) -> list[RatMatrix]:
    """Exact basis of the right kernel, as column vectors; len = cols - rank."""
    rows, pivots = _rref(m.row_lists())
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * m.cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(RatMatrix.column(vec))
    return basis


def nullity(m: RatMatrix) -> int:
    return m.cols - rank(m)


def inverse(m: RatMatrix) -> RatMatrix:
    if m.rows != m.cols:
        raise ShapeMismatchError("inverse needs a square matrix")
    n = m.rows
    aug = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows, pivots = _rref(aug)
    if list(pivots) != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return RatMatrix.from_rows([r[n:] for r in rows])


def solve(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """One exact solution x of a @ x = b (free variables set to 0)."""
    if a.rows != b.rows:
        raise ShapeMismatchError("incompatible right-hand side")
    aug = [list(a.row(i)) + list(b.row(i)) for i in range(a.rows)]
    rows, pivots = _rref(aug)
    ncols = a.cols
    for r in range(len(pivots), a.rows):
        if any(x != 0 for x in rows[r][ncols:]):
            raise NoSolutionError("inconsistent linear system")
    if pivots and pivots[-1] >= ncols:
        raise NoSolutionError("inconsistent linear system")
    out = [[Fraction(0)] * b.cols for _ in range(ncols)]
    for r, pc in enumerate(pivots):
        out[pc] = rows[r][ncols:]
    return RatMatrix.from_rows(out)


def left_mul_matrix(a: RatMatrix) -> RatMatrix:
    """Matrix L with L . vec(X) = vec(A X), for X of size a.cols x a.cols."""
    if a.rows != a.cols:
        raise ShapeMismatchError("left multiplication operator needs a square matrix")
    n = a.rows
    out = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[i * n + j][k * n + j] = a[i, k]
    return RatMatrix.from_rows(out)


def right_mul_matrix(a: RatMatrix) -> RatMatrix:
    """Matrix R with R . vec(X) = vec(X A)."""
    if a.rows != a.cols:
        raise ShapeMismatchError("right multiplication operator needs a square matrix")
    n = a.rows
    out = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[i * n + j][i * n + k] = a[k, j]
    return RatMatrix.from_rows(out)


def vectorize_commutator_map(m: RatMatrix) -> RatMatrix:
    """The n^2 x n^2 matrix of X -> [m, X] = mX - Xm under row-major vec."""
    return left_mul_matrix(m) - right_mul_matrix(m)
