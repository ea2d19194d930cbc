"""Exact linear algebra over the rationals.

Dense matrices with :class:`fractions.Fraction` entries.  Ranks and kernels
go through integer-pivot Gaussian elimination: rows are cleared of
denominators, then reduced by cross-multiplication with content gcds, so no
intermediate result is ever rounded.  Pivot choice is unobservable in the
outputs (only ranks and spans matter); subspaces are canonicalized through a
fully reduced row echelon form so equal spans compare equal.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, NamedTuple, Sequence

from .errors import AmbientMismatchError, NotSquareError, ShapeError

Rational = Fraction


def rat(value: int | str | Fraction) -> Fraction:
    """Coerce an int, "p/q" string, or Fraction to Fraction.

    Floats are rejected on purpose: every quantity in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(rat(value))


class RatMatrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        data = tuple(rat(x) for x in entries)
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative shape {rows}x{cols}")
        if len(data) != rows * cols:
            raise ShapeError(f"expected {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self.entries = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(nrows, ncols, [x for r in rows for x in r])

    @classmethod
    def from_cols(cls, ambient: int, cols: Sequence[Sequence]) -> "RatMatrix":
        for c in cols:
            if len(c) != ambient:
                raise ShapeError("column length does not match ambient dimension")
        return cls(ambient, len(cols), [c[i] for i in range(ambient) for c in cols])

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols}, {[ [str(x) for x in r] for r in self.to_rows() ]})"

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, scalar) -> "RatMatrix":
        s = rat(scalar)
        return RatMatrix(self.rows, self.cols, [s * a for a in self.entries])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = [Fraction(0)] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * self.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if not a:
                    continue
                obase = k * other.cols
                rbase = i * other.cols
                for j in range(other.cols):
                    b = other.entries[obase + j]
                    if b:
                        out[rbase + j] += a * b
        return RatMatrix(self.rows, other.cols, out)

    def mul_vector(self, vec: Sequence) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise ShapeError("vector length does not match column count")
        v = [rat(x) for x in vec]
        return tuple(
            sum((self.entries[i * self.cols + j] * v[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise NotSquareError("trace of a non-square matrix")
        return sum((self.at(i, i) for i in range(self.rows)), Fraction(0))

    def kron(self, other: "RatMatrix") -> "RatMatrix":
        rows, cols = self.rows * other.rows, self.cols * other.cols
        out = [Fraction(0)] * (rows * cols)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.at(i, j)
                if not a:
                    continue
                for k in range(other.rows):
                    rbase = (i * other.rows + k) * cols + j * other.cols
                    obase = k * other.cols
                    for l in range(other.cols):
                        b = other.entries[obase + l]
                        if b:
                            out[rbase + l] = a * b
        return RatMatrix(rows, cols, out)

    def power(self, exponent: int) -> "RatMatrix":
        if self.rows != self.cols:
            raise NotSquareError("power of a non-square matrix")
        if exponent < 0:
            raise ShapeError("negative matrix power")
        result = RatMatrix.identity(self.rows)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result @ base
            base = base @ base if e > 1 else base
            e >>= 1
        return result

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ShapeError("row counts differ")
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
            out.extend(other.row(i))
        return RatMatrix(self.rows, self.cols + other.cols, out)

    @staticmethod
    def stack_rows(mats: Sequence["RatMatrix"]) -> "RatMatrix":
        if not mats:
            raise ShapeError("nothing to stack")
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise ShapeError("column counts differ")
        entries: list[Fraction] = []
        for m in mats:
            entries.extend(m.entries)
        return RatMatrix(sum(m.rows for m in mats), cols, entries)

    @staticmethod
    def block_diag(mats: Sequence["RatMatrix"]) -> "RatMatrix":
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = [Fraction(0)] * (rows * cols)
        roff = coff = 0
        for m in mats:
            for i in range(m.rows):
                base = (roff + i) * cols + coff
                mrow = m.row(i)
                for j in range(m.cols):
                    out[base + j] = mrow[j]
            roff += m.rows
            coff += m.cols
        return RatMatrix(rows, cols, out)

    def is_zero(self) -> bool:
        return all(not x for x in self.entries)

    def _same_shape(self, other: "RatMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


# ---------------------------------------------------------------------------
# integer-pivot elimination
# ---------------------------------------------------------------------------

def _content(row: list[int]) -> int:
    return reduce(math.gcd, row, 0)


def _int_rows(m: RatMatrix) -> list[list[int]]:
    """Clear denominators row by row; row scaling preserves rank and kernel."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        scale = reduce(math.lcm, (x.denominator for x in row), 1)
        ints = [int(x * scale) for x in row]
        g = _content(ints)
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


def _echelon(rows: list[list[int]], cols: int) -> list[tuple[int, int]]:
    """In-place forward elimination; returns the pivot (row, col) list."""
    pivots: list[tuple[int, int]] = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        best = -1
        for i in range(r, nrows):
            v = rows[i][c]
            if v and (best < 0 or abs(v) < abs(rows[best][c])):
                best = i
        if best < 0:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if not f:
                continue
            g = math.gcd(f, p)
            mi, mp = p // g, f // g
            tail = [mi * a - mp * b for a, b in zip(rows[i][c:], prow[c:])]
            cg = _content(tail)
            if cg > 1:
                tail = [x // cg for x in tail]
            rows[i][c:] = tail
        pivots.append((r, c))
        r += 1
    return pivots


def rank(m: RatMatrix) -> int:
    """Row rank = column rank, by exact fraction-free elimination."""
    rows = [r for r in _int_rows(m) if any(r)]
    return len(_echelon(rows, m.cols))


def _kernel_vectors(m: RatMatrix) -> list[tuple[Fraction, ...]]:
    rows = [r for r in _int_rows(m) if any(r)]
    pivots = _echelon(rows, m.cols)
    pivot_cols = [c for _, c in pivots]
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, c in reversed(pivots):
            if c > f:
                continue
            row = rows[r]
            s = sum((Fraction(row[j]) * v[j] for j in range(c + 1, m.cols) if row[j] and v[j]), Fraction(0))
            v[c] = -s / row[c]
        basis.append(tuple(v))
    return basis


def _rref(vectors: Iterable[Sequence[Fraction]], width: int) -> list[tuple[Fraction, ...]]:
    """Fully reduced row echelon form with unit pivots; canonical for the span."""
    rows = [list(v) for v in vectors if any(v)]
    r = 0
    for c in range(width):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r] if any(row)]


class Subspace:
    """A subspace of Q^n given by a basis of column vectors.

    Equality is mutual containment; the stored basis is the canonical fully
    reduced echelon basis of the span, so equal spans have equal bases.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: RatMatrix) -> None:
        if basis.rows != ambient_dim:
            raise ShapeError("basis rows must equal the ambient dimension")
        if rank(basis) != basis.cols:
            raise ShapeError("basis columns are linearly dependent")
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_spanning(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [[rat(x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ShapeError("spanning vector has wrong length")
        canon = _rref(vecs, ambient_dim)
        return cls(ambient_dim, RatMatrix.from_cols(ambient_dim, [list(r) for r in canon]))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RatMatrix.zeros(ambient_dim, 0))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RatMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return [self.basis.col(j) for j in range(self.basis.cols)]

    def contains_vector(self, vec: Sequence) -> bool:
        v = [rat(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise AmbientMismatchError("vector length differs from ambient dimension")
        if all(not x for x in v):
            return True
        stacked = self.basis.hstack(RatMatrix.from_cols(self.ambient_dim, [v]))
        return rank(stacked) == self.dim

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatchError("ambient dimensions differ")
        return all(self.contains_vector(v) for v in other.vectors())

    def plus(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatchError("ambient dimensions differ")
        return Subspace.from_spanning(self.ambient_dim, self.vectors() + other.vectors())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim:
            return False
        return self.contains(other) and other.contains(self)

    def __hash__(self) -> int:
        canon = _rref(self.vectors(), self.ambient_dim)
        return hash((self.ambient_dim, tuple(canon)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"


def kernel(m: RatMatrix) -> Subspace:
    """Basis of the null space {v : m v = 0}; dim = cols - rank."""
    return Subspace.from_spanning(m.cols, _kernel_vectors(m))


def image(m: RatMatrix) -> Subspace:
    """Column space of m."""
    return Subspace.from_spanning(m.rows, [m.col(j) for j in range(m.cols)])


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection of two subspaces of the same ambient space."""
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatchError("ambient dimensions differ")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    stacked = a.basis.hstack(b.basis)
    vectors = []
    for k in _kernel_vectors(stacked):
        x = k[: a.dim]
        vec = a.basis.mul_vector(x)
        if any(vec):
            vectors.append(vec)
    return Subspace.from_spanning(a.ambient_dim, vectors)


def generalized_kernel(m: RatMatrix, power: int) -> Subspace:
    """Kernel of m**power; with power = ambient dim this is the full
    generalized eigenspace of 0."""
    if m.rows != m.cols:
        raise NotSquareError("generalized kernel of a non-square matrix")
    if power < 1:
        raise ShapeError("power must be positive")
    return kernel(m.power(power))


def char_poly(m: RatMatrix) -> tuple[Fraction, ...]:
    """Monic characteristic polynomial det(xI - m), coefficients by degree."""
    if m.rows != m.cols:
        raise NotSquareError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    acc = RatMatrix.identity(n)
    for k in range(1, n + 1):
        acc = m @ acc
        c = -acc.trace() / k
        coeffs[n - k] = c
        if k < n:
            acc = acc + RatMatrix.identity(n).scale(c)
    return tuple(coeffs)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _horner(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    # synthetic division by (x - root); caller guarantees zero remainder
    degree = len(coeffs) - 1
    quotient = [Fraction(0)] * degree
    carry = coeffs[degree]
    quotient[degree - 1] = carry
    for k in range(degree - 1, 0, -1):
        carry = coeffs[k] + root * carry
        quotient[k - 1] = carry
    return quotient


class EigenvalueReport(NamedTuple):
    values: tuple[tuple[Fraction, int], ...]
    split: bool


def rational_roots(coeffs: Sequence[Fraction]) -> EigenvalueReport:
    """All rational roots with multiplicity; split=True when they exhaust the degree."""
    poly = list(coeffs)
    while len(poly) > 1 and not poly[-1]:
        poly.pop()
    found: dict[Fraction, int] = {}
    zero_mult = 0
    while len(poly) > 1 and not poly[0]:
        poly = poly[1:]
        zero_mult += 1
    if zero_mult:
        found[Fraction(0)] = zero_mult
    if len(poly) > 1:
        scale = reduce(math.lcm, (c.denominator for c in poly), 1)
        ints = [int(c * scale) for c in poly]
        g = _content(ints)
        if g > 1:
            ints = [x // g for x in ints]
        candidates = set()
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                candidates.add(Fraction(p, q))
                candidates.add(Fraction(-p, q))
        for cand in sorted(candidates):
            while len(poly) > 1 and _horner(poly, cand) == 0:
                poly = _deflate(poly, cand)
                found[cand] = found.get(cand, 0) + 1
    values = tuple(sorted(found.items()))
    return EigenvalueReport(values=values, split=(len(poly) == 1))


def rational_eigenvalues(m: RatMatrix) -> EigenvalueReport:
    """Rational eigenvalues with algebraic multiplicity and a split flag."""
    return rational_roots(char_poly(m))


def solve_in_span(columns: RatMatrix, target: Sequence) -> tuple[Fraction, ...] | None:
    """Coordinates x with columns @ x = target, or None when inconsistent.

    Assumes the columns are linearly independent (unique solution)."""
    t = [rat(x) for x in target]
    if len(t) != columns.rows:
        raise ShapeError("target length does not match")
    aug = columns.hstack(RatMatrix.from_cols(columns.rows, [t]))
    reduced = _rref(aug.to_rows(), aug.cols)
    n = columns.cols
    solution = [Fraction(0)] * n
    for row in reduced:
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            continue
        if lead == n:
            return None
        solution[lead] = row[n]
    residual = [sum((columns.at(i, j) * solution[j] for j in range(n)), Fraction(0)) - t[i] for i in range(columns.rows)]
    if any(residual):
        return None
    return tuple(solution)
