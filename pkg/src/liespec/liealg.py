"""Lie algebras by structure constants.

A :class:`LieAlgebra` stores the brackets [g_i, g_j] for i < j as vectors of
rational coefficients; antisymmetry is implicit and the Jacobi identity is
validated at construction (the error carries the violating triple).
Characters are full length-dim value vectors checked to vanish on every
bracket, so validity is basis-independent.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatchError,
    JacobiError,
    NonSplitError,
    NotACharacterError,
    NotSolvableError,
    ShapeError,
    UnsupportedAlgebraError,
)
from .linalg import RatMatrix, Subspace, rank, rat


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q given by structure constants.

    ``brackets`` maps 0-based index pairs (i, j) with i < j to the coefficient
    vector of [g_i, g_j] in the basis.  Omitted pairs mean zero bracket.
    """

    __slots__ = ("dim", "basis_names", "brackets", "_table")

    def __init__(
        self,
        dim: int,
        basis_names: Sequence[str],
        brackets: Mapping[tuple[int, int], Sequence],
    ) -> None:
        if dim < 1:
            raise ShapeError("dimension must be positive")
        if len(basis_names) != dim:
            raise ShapeError("need one basis name per dimension")
        table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for (i, j), vec in brackets.items():
            if not (0 <= i < j < dim):
                raise ShapeError(f"bracket indices ({i}, {j}) out of range")
            values = tuple(rat(x) for x in vec)
            if len(values) != dim:
                raise ShapeError("bracket coefficient vector has wrong length")
            if any(values):
                table[(i, j)] = values
        self.dim = dim
        self.basis_names = tuple(str(n) for n in basis_names)
        self.brackets = tuple(sorted(table.items()))
        self._table = table
        self._check_jacobi()

    def bracket_basis(self, i: int, j: int) -> tuple[Fraction, ...]:
        """[g_i, g_j] as a coefficient vector, any i, j."""
        if i == j:
            return (Fraction(0),) * self.dim
        if i < j:
            return self._table.get((i, j), (Fraction(0),) * self.dim)
        vec = self._table.get((j, i))
        if vec is None:
            return (Fraction(0),) * self.dim
        return tuple(-x for x in vec)

    def _check_jacobi(self) -> None:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    total = [Fraction(0)] * self.dim
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket_basis(b, c)
                        outer = _bracket_with_basis(self, a, inner)
                        for t in range(self.dim):
                            total[t] += outer[t]
                    if any(total):
                        names = (self.basis_names[i], self.basis_names[j], self.basis_names[k])
                        raise JacobiError((i, j, k), names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.brackets == other.brackets

    def __hash__(self) -> int:
        return hash((self.dim, self.brackets))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, basis={list(self.basis_names)})"


def _bracket_with_basis(g: LieAlgebra, i: int, vec: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * g.dim
    for j, c in enumerate(vec):
        if not c:
            continue
        bv = g.bracket_basis(i, j)
        for t in range(g.dim):
            if bv[t]:
                out[t] += c * bv[t]
    return out


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
    """Bilinear antisymmetric extension of the structure constants."""
    xs = [rat(v) for v in x]
    ys = [rat(v) for v in y]
    if len(xs) != g.dim or len(ys) != g.dim:
        raise DimensionMismatchError("vectors must have length dim")
    out = [Fraction(0)] * g.dim
    for i in range(g.dim):
        if not xs[i]:
            continue
        for j in range(g.dim):
            coeff = xs[i] * ys[j]
            if not coeff:
                continue
            bv = g.bracket_basis(i, j)
            for t in range(g.dim):
                if bv[t]:
                    out[t] += coeff * bv[t]
    return tuple(out)


class Character:
    """Linear functional on g vanishing on [g, g]; labels 1-dim modules."""

    __slots__ = ("values",)

    def __init__(self, g: LieAlgebra, values: Sequence) -> None:
        vals = tuple(rat(x) for x in values)
        if len(vals) != g.dim:
            raise DimensionMismatchError("character needs one value per basis element")
        for (i, j), vec in g.brackets:
            pairing = sum((vals[t] * vec[t] for t in range(g.dim)), Fraction(0))
            if pairing:
                raise NotACharacterError(
                    f"does not vanish on [{g.basis_names[i]}, {g.basis_names[j]}]"
                )
        self.values = vals

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.values == other.values

    def __lt__(self, other: "Character") -> bool:
        return self.values < other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return "Character(" + ", ".join(str(v) for v in self.values) + ")"


def zero_character(g: LieAlgebra) -> Character:
    return Character(g, [0] * g.dim)


def derived_subalgebra(g: LieAlgebra) -> Subspace:
    """[g, g] as a subspace: the span of all basis bracket vectors."""
    return Subspace.from_spanning(g.dim, [vec for _, vec in g.brackets])


def _bracket_of_subspaces(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vectors = []
    for u in a.vectors():
        for v in b.vectors():
            w = bracket(g, u, v)
            if any(w):
                vectors.append(w)
    return Subspace.from_spanning(g.dim, vectors)


def is_solvable(g: LieAlgebra) -> bool:
    """Derived series reaches zero."""
    current = Subspace.full(g.dim)
    while current.dim:
        nxt = _bracket_of_subspaces(g, current, current)
        if nxt.dim == current.dim:
            return False
        current = nxt
    return True


def is_nilpotent(g: LieAlgebra) -> bool:
    """Lower central series reaches zero."""
    full = Subspace.full(g.dim)
    current = full
    while current.dim:
        nxt = _bracket_of_subspaces(g, full, current)
        if nxt.dim == current.dim:
            return False
        current = nxt
    return True


def adjoint_rep(g: LieAlgebra):
    """The adjoint representation: g_i acts by ad g_i."""
    from .reps import Representation

    matrices = []
    for i in range(g.dim):
        cols = [g.bracket_basis(i, j) for j in range(g.dim)]
        matrices.append(RatMatrix.from_cols(g.dim, [list(c) for c in cols]))
    return Representation(g, g.dim, "left", matrices)


def killing_form(g: LieAlgebra) -> RatMatrix:
    """K(x, y) = trace(ad x · ad y) on the basis."""
    ad = adjoint_rep(g).action
    entries = []
    for i in range(g.dim):
        for j in range(g.dim):
            entries.append((ad[i] @ ad[j]).trace())
    return RatMatrix(g.dim, g.dim, entries)


def is_semisimple(g: LieAlgebra) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    return rank(killing_form(g)) == g.dim


def jordan_holder_values(g: LieAlgebra):
    """Weights of the adjoint representation, as a WeightTable.

    Defined for solvable algebras; total multiplicity is dim g."""
    from .reps import weights

    if not is_solvable(g):
        raise NotSolvableError("Jordan-Holder values need a solvable algebra")
    table = weights(adjoint_rep(g))
    if sum(m for _, m in table.entries) != g.dim:
        raise NonSplitError("adjoint weights do not fill the algebra")
    return table


def two_rho(g: LieAlgebra) -> Character:
    """The trace character g -> trace(ad g); the sum of the adjoint weights."""
    if not is_solvable(g):
        raise NotSolvableError("the trace character needs a solvable algebra")
    ad = adjoint_rep(g).action
    return Character(g, [ad[i].trace() for i in range(g.dim)])


def top_exterior_character(g: LieAlgebra) -> Character:
    """Character of the 1-dim module of top wedge degree.

    Equals the trace character for solvable g and zero for semisimple g;
    mixed algebras are not supported."""
    if is_solvable(g):
        return two_rho(g)
    if is_semisimple(g):
        return zero_character(g)
    raise UnsupportedAlgebraError("algebra is neither solvable nor semisimple")


def transport(g: LieAlgebra, basis_change: RatMatrix, names: Iterable[str] | None = None) -> LieAlgebra:
    """Structure constants of g expressed on the new basis given by the
    columns of an invertible matrix.  Produces an isomorphic algebra."""
    if basis_change.rows != g.dim or basis_change.cols != g.dim:
        raise ShapeError("basis change must be dim x dim")
    from .linalg import solve_in_span

    new_brackets: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    cols = [list(basis_change.col(j)) for j in range(g.dim)]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            vec = bracket(g, cols[i], cols[j])
            coords = solve_in_span(basis_change, vec)
            if coords is None:
                raise ShapeError("basis change is not invertible")
            new_brackets[(i, j)] = coords
    if names is None:
        names = [f"b{k + 1}" for k in range(g.dim)]
    return LieAlgebra(g.dim, list(names), new_brackets)
