"""Chevalley-Eilenberg chain and cochain complexes with finite-dimensional
coefficients, and Betti numbers by rank-nullity.

Basis of degree k is {(i_1 < ... < i_k) (x) basis of V} ordered
lexicographically on the index sets, so serialized complexes are
bit-reproducible.  The boundary of a left module carries the antipode sign on
the coefficient factor (x . g = -g . x); the coboundary uses the plain left
action.  Either way d∘d = 0 is checked eagerly on every constructed complex
and a failure means the coefficients were not a module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import AlgebraMismatchError, DifferentialSquareError, SideMismatchError
from .liealg import LieAlgebra, top_exterior_character
from .linalg import RatMatrix, rank
from .reporting import Report
from .reps import Representation, one_dim_module, twist

_Sparse = dict[int, list[tuple[int, Fraction]]]  # column -> [(row, value)]


@dataclass(frozen=True)
class BettiTable:
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(k for k, b in enumerate(self.values) if b)

    def any_nonzero(self) -> bool:
        return any(self.values)

    def __add__(self, other: "BettiTable") -> "BettiTable":
        return BettiTable(tuple(a + b for a, b in zip(self.values, other.values)))


@dataclass(frozen=True)
class ChainComplex:
    """Descending complex; differentials[k] maps degree k to degree k-1,
    differentials[0] is the empty map out of degree 0."""

    lengths: tuple[int, ...]
    differentials: tuple[RatMatrix, ...]


@dataclass(frozen=True)
class CochainComplex:
    """Ascending complex; deltas[k] maps codegree k to codegree k+1."""

    lengths: tuple[int, ...]
    deltas: tuple[RatMatrix, ...]


def _insertion_sign(sorted_tuple: tuple[int, ...], new_index: int) -> int:
    below = sum(1 for t in sorted_tuple if t < new_index)
    return -1 if below % 2 else 1


def _check_square_zero(out_cols: _Sparse, in_cols: _Sparse, ncols_in: int) -> None:
    for col in range(ncols_in):
        acc: dict[int, Fraction] = {}
        for mid, v1 in in_cols.get(col, ()):  # d_{k+1} column
            for row, v2 in out_cols.get(mid, ()):  # then d_k
                acc[row] = acc.get(row, Fraction(0)) + v1 * v2
        if any(acc.values()):
            raise DifferentialSquareError("d∘d is nonzero; invalid coefficient module")


def _sparse_matrix(nrows: int, ncols: int, cols: _Sparse) -> RatMatrix:
    entries = [Fraction(0)] * (nrows * ncols)
    for col, items in cols.items():
        for row, value in items:
            entries[row * ncols + col] += value
    return RatMatrix(nrows, ncols, entries)


def _validate_pair(g: LieAlgebra, v: Representation) -> None:
    if v.algebra != g:
        raise AlgebraMismatchError("module is not defined over this algebra")
    if v.side != "left":
        raise SideMismatchError("complexes take left modules")


def chain_complex(g: LieAlgebra, v: Representation) -> ChainComplex:
    """The homology complex wedge^k g (x) V with the boundary differential."""
    _validate_pair(g, v)
    n, m = g.dim, v.dim
    lengths = tuple(comb(n, k) * m for k in range(n + 1))
    diffs: list[RatMatrix] = [RatMatrix.zeros(0, lengths[0])]
    sparse_by_degree: list[_Sparse] = [dict()]
    for k in range(1, n + 1):
        subsets = list(combinations(range(n), k))
        prev_subsets = {s: p for p, s in enumerate(combinations(range(n), k - 1))}
        cols: _Sparse = {}

        def add(row: int, col: int, value: Fraction) -> None:
            cols.setdefault(col, []).append((row, value))

        for s_pos, s in enumerate(subsets):
            # coefficient terms: remove one index, act by it (antipode sign)
            for pos, idx in enumerate(s):
                t = s[:pos] + s[pos + 1 :]
                t_pos = prev_subsets[t]
                sign = -1 if pos % 2 == 0 else 1  # (-1)^(pos+1), 1-based position
                mat = v.action[idx]
                for b_col in range(m):
                    col = s_pos * m + b_col
                    for b_row in range(m):
                        a = mat.at(b_row, b_col)
                        if a:
                            add(t_pos * m + b_row, col, sign * a)
            # bracket terms: contract two indices into their bracket
            for pa in range(k):
                for pb in range(pa + 1, k):
                    sign0 = 1 if (pa + pb) % 2 == 0 else -1  # (-1)^(a+b), 1-based
                    rest = tuple(x for p, x in enumerate(s) if p not in (pa, pb))
                    vec = g.bracket_basis(s[pa], s[pb])
                    for idx, c in enumerate(vec):
                        if not c or idx in rest:
                            continue
                        t = tuple(sorted(rest + (idx,)))
                        coef = sign0 * _insertion_sign(rest, idx) * c
                        t_pos = prev_subsets[t]
                        for b in range(m):
                            add(t_pos * m + b, s_pos * m + b, coef)
        _check_square_zero(sparse_by_degree[-1], cols, lengths[k])
        sparse_by_degree.append(cols)
        diffs.append(_sparse_matrix(lengths[k - 1], lengths[k], cols))
    return ChainComplex(lengths=lengths, differentials=tuple(diffs))


def cochain_complex(g: LieAlgebra, v: Representation) -> CochainComplex:
    """The cohomology complex Hom(wedge^k g, V) with the standard
    action-plus-bracket coboundary."""
    _validate_pair(g, v)
    n, m = g.dim, v.dim
    lengths = tuple(comb(n, k) * m for k in range(n + 1))
    deltas: list[RatMatrix] = []
    previous: _Sparse = dict()
    for k in range(n):
        # delta_k maps codegree k to codegree k+1
        source = {s: p for p, s in enumerate(combinations(range(n), k))}
        targets = list(combinations(range(n), k + 1))
        cols: _Sparse = {}

        def add(row: int, col: int, value: Fraction) -> None:
            cols.setdefault(col, []).append((row, value))

        for t_pos, t in enumerate(targets):
            for pos, idx in enumerate(t):
                rest = t[:pos] + t[pos + 1 :]
                sign = 1 if pos % 2 == 0 else -1  # (-1)^pos, 0-based
                mat = v.action[idx]
                s_pos = source[rest]
                for b_col in range(m):
                    for b_row in range(m):
                        a = mat.at(b_row, b_col)
                        if a:
                            add(t_pos * m + b_row, s_pos * m + b_col, sign * a)
            for pa in range(k + 1):
                for pb in range(pa + 1, k + 1):
                    sign0 = 1 if (pa + pb) % 2 == 0 else -1
                    rest = tuple(x for p, x in enumerate(t) if p not in (pa, pb))
                    vec = g.bracket_basis(t[pa], t[pb])
                    for idx, c in enumerate(vec):
                        if not c or idx in rest:
                            continue
                        arg = tuple(sorted(rest + (idx,)))
                        coef = sign0 * _insertion_sign(rest, idx) * c
                        s_pos = source[arg]
                        for b in range(m):
                            add(t_pos * m + b, s_pos * m + b, coef)
        if k:
            _check_square_zero(cols, previous, lengths[k - 1])
        previous = cols
        deltas.append(_sparse_matrix(lengths[k + 1], lengths[k], cols))
    return CochainComplex(lengths=lengths, deltas=tuple(deltas))


def _euler_check(lengths: tuple[int, ...], values: list[int]) -> None:
    lhs = sum((-1) ** k * b for k, b in enumerate(values))
    rhs = sum((-1) ** k * l for k, l in enumerate(lengths))
    if lhs != rhs:
        raise DifferentialSquareError("Euler characteristic mismatch")


def betti_of_chain(cx: ChainComplex) -> BettiTable:
    n = len(cx.lengths) - 1
    ranks = [rank(d) for d in cx.differentials]
    values = [
        cx.lengths[k] - ranks[k] - (ranks[k + 1] if k < n else 0) for k in range(n + 1)
    ]
    _euler_check(cx.lengths, values)
    return BettiTable(tuple(values))


def betti_of_cochain(cx: CochainComplex) -> BettiTable:
    n = len(cx.lengths) - 1
    ranks = [rank(d) for d in cx.deltas]
    values = [
        cx.lengths[k] - (ranks[k] if k < n else 0) - (ranks[k - 1] if k > 0 else 0)
        for k in range(n + 1)
    ]
    _euler_check(cx.lengths, values)
    return BettiTable(tuple(values))


def betti_homology(g: LieAlgebra, v: Representation) -> BettiTable:
    """Dimensions of the degree-k homology of g with coefficients in v."""
    return betti_of_chain(chain_complex(g, v))


def betti_cohomology(g: LieAlgebra, v: Representation) -> BettiTable:
    """Dimensions of the degree-k cohomology of g with coefficients in v."""
    return betti_of_cochain(cochain_complex(g, v))


def check_poincare(g: LieAlgebra, v: Representation) -> Report:
    """Cohomology of v equals homology of the top-wedge-dual twist, reversed."""
    n = g.dim
    top = one_dim_module(g, top_exterior_character(g))
    twisted = twist(v, top)  # twist dualizes its second argument
    co = betti_cohomology(g, v)
    ho = betti_homology(g, twisted)
    mismatches = tuple(
        f"degree {k}: cohomology {co[k]} vs homology {ho[n - k]}"
        for k in range(n + 1)
        if co[k] != ho[n - k]
    )
    return Report(name="poincare-duality", passed=not mismatches, details=mismatches)
