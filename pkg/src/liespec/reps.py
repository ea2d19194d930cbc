"""Finite-dimensional modules and the functor calculus on them.

Left modules satisfy action[[x, y]] = [action x, action y]; right modules
satisfy the reversed (antipode) convention.  Tensor products of two left
modules resolve the antipode sign on the first factor, so the action is the
Kronecker sum; for a 1-dimensional first factor this shifts every weight by
its character.

Weights of a module over a solvable algebra are computed through joint
generalized kernels, never by triangularizing a basis.  Any characteristic
polynomial that fails to split over Q aborts the computation with
NonSplitError; a silently missing weight would corrupt every candidate set
built on top of it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import (
    AlgebraMismatchError,
    NonSplitError,
    NotSolvableError,
    ShapeError,
    SideMismatchError,
)
from .liealg import Character, LieAlgebra, is_solvable, top_exterior_character
from .linalg import (
    RatMatrix,
    Subspace,
    generalized_kernel,
    intersect,
    kernel,
    rank,
    rat,
    rational_eigenvalues,
)
from .reporting import Report


class Representation:
    """Action matrices of every basis element on a finite-dimensional space."""

    __slots__ = ("algebra", "dim", "side", "action")

    def __init__(
        self,
        algebra: LieAlgebra,
        dim: int,
        side: str,
        action: Sequence[RatMatrix],
    ) -> None:
        if side not in ("left", "right"):
            raise ShapeError(f"side must be 'left' or 'right', got {side!r}")
        if dim < 0:
            raise ShapeError("module dimension must be nonnegative")
        if len(action) != algebra.dim:
            raise ShapeError("need one action matrix per basis element")
        for m in action:
            if m.rows != dim or m.cols != dim:
                raise ShapeError("action matrices must be dim x dim")
        self.algebra = algebra
        self.dim = dim
        self.side = side
        self.action = tuple(action)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.dim == other.dim
            and self.side == other.side
            and self.action == other.action
        )

    def __repr__(self) -> str:
        return f"Representation(dim={self.dim}, side={self.side}, over dim-{self.algebra.dim} algebra)"


class WeightTable:
    """Distinct characters with multiplicities; multiplicities fill the module."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[tuple[Character, int]]) -> None:
        seen = set()
        for chi, mult in entries:
            if chi.values in seen:
                raise ShapeError("weight table characters must be distinct")
            if mult < 1:
                raise ShapeError("weight multiplicities must be positive")
            seen.add(chi.values)
        self.entries = tuple(sorted(entries, key=lambda e: e[0].values))

    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def characters(self) -> tuple[Character, ...]:
        return tuple(chi for chi, _ in self.entries)

    def as_dict(self) -> dict[tuple[Fraction, ...], int]:
        return {chi.values: m for chi, m in self.entries}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightTable):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __repr__(self) -> str:
        inner = ", ".join(f"{chi!r}: {m}" for chi, m in self.entries)
        return f"WeightTable({inner})"


def trivial_module(g: LieAlgebra) -> Representation:
    return Representation(g, 1, "left", [RatMatrix.zeros(1, 1) for _ in range(g.dim)])


def one_dim_module(g: LieAlgebra, chi: Character) -> Representation:
    """The 1-dimensional left module where g acts by chi(g)."""
    return Representation(g, 1, "left", [RatMatrix(1, 1, [v]) for v in chi.values])


def top_module(g: LieAlgebra) -> Representation:
    """The 1-dimensional module of top wedge degree."""
    return one_dim_module(g, top_exterior_character(g))


def _commutator(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    return (a @ b) - (b @ a)


def check_representation(v: Representation) -> Report:
    """Verify the homomorphism law on every basis pair; report violations."""
    g = v.algebra
    violations = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            vec = g.bracket_basis(i, j)
            expected = RatMatrix.zeros(v.dim, v.dim)
            for t, c in enumerate(vec):
                if c:
                    expected = expected + v.action[t].scale(c)
            if v.side == "left":
                actual = _commutator(v.action[i], v.action[j])
            else:
                actual = _commutator(v.action[j], v.action[i])
            if actual != expected:
                violations.append(f"pair ({g.basis_names[i]}, {g.basis_names[j]})")
    return Report(
        name="module-axioms",
        passed=not violations,
        details=tuple(violations),
    )


def dual(v: Representation) -> Representation:
    """Dual module: action matrices are negated transposes; side preserved."""
    return Representation(
        v.algebra, v.dim, v.side, [(-m).transpose() for m in v.action]
    )


def antipode(v: Representation) -> Representation:
    """Flip the side, negate every action matrix."""
    side = "right" if v.side == "left" else "left"
    return Representation(v.algebra, v.dim, side, [-m for m in v.action])


def tensor(v: Representation, w: Representation) -> Representation:
    """Tensor product over the same algebra.

    left x left and right x right carry the antipode on the first factor
    (Kronecker sum); right x left is the mixed product and gives a left
    module.  left x right is not needed anywhere and is rejected.
    """
    if v.algebra != w.algebra:
        raise AlgebraMismatchError("tensor factors live over different algebras")
    g = v.algebra
    iv = RatMatrix.identity(v.dim)
    iw = RatMatrix.identity(w.dim)
    if v.side == "left" and w.side == "left":
        action = [v.action[i].kron(iw) + iv.kron(w.action[i]) for i in range(g.dim)]
        return Representation(g, v.dim * w.dim, "left", action)
    if v.side == "right" and w.side == "left":
        action = [iv.kron(w.action[i]) - v.action[i].kron(iw) for i in range(g.dim)]
        return Representation(g, v.dim * w.dim, "left", action)
    if v.side == "right" and w.side == "right":
        action = [v.action[i].kron(iw) + iv.kron(w.action[i]) for i in range(g.dim)]
        return Representation(g, v.dim * w.dim, "right", action)
    raise SideMismatchError("left x right tensor is not supported; apply antipode first")


def twist(v: Representation, s: Representation) -> Representation:
    """The s-twist dual(s) (x) v used by every spectrum membership test.

    For 1-dimensional s with character c this shifts every weight by -c."""
    return tensor(dual(s), v)


def direct_sum(v: Representation, w: Representation) -> Representation:
    if v.algebra != w.algebra:
        raise AlgebraMismatchError("summands live over different algebras")
    if v.side != w.side:
        raise SideMismatchError("summands must have the same side")
    action = [
        RatMatrix.block_diag([v.action[i], w.action[i]]) for i in range(v.algebra.dim)
    ]
    return Representation(v.algebra, v.dim + w.dim, v.side, action)


def invariants_dim(v: Representation) -> int:
    """dim of the joint kernel of the action."""
    _require_left(v)
    if v.dim == 0:
        return 0
    stacked = RatMatrix.stack_rows(list(v.action))
    return v.dim - rank(stacked)


def coinvariants_dim(v: Representation) -> int:
    """dim of V / (sum of the images of the action)."""
    _require_left(v)
    if v.dim == 0:
        return 0
    side_by_side = v.action[0]
    for m in v.action[1:]:
        side_by_side = side_by_side.hstack(m)
    return v.dim - rank(side_by_side)


def _require_left(v: Representation) -> None:
    if v.side != "left":
        raise SideMismatchError("operation defined for left modules")


def _shifted(m: RatMatrix, value: Fraction) -> RatMatrix:
    return m - RatMatrix.identity(m.rows).scale(value)


def weights(v: Representation) -> WeightTable:
    """Joint generalized weight decomposition of a module over a solvable
    algebra.  Multiplicities are generalized-eigenspace dimensions and sum
    to dim v; a non-splitting characteristic polynomial raises NonSplitError.
    """
    _require_left(v)
    g = v.algebra
    if not is_solvable(g):
        raise NotSolvableError("weights need a solvable algebra")
    if v.dim == 0:
        return WeightTable([])
    branches: list[tuple[tuple[Fraction, ...], Subspace]] = [((), Subspace.full(v.dim))]
    for i in range(g.dim):
        report = rational_eigenvalues(v.action[i])
        if not report.split:
            raise NonSplitError(
                f"action of {g.basis_names[i]} has irrational eigenvalues"
            )
        new_branches = []
        for prefix, space in branches:
            for value, _ in report.values:
                gker = generalized_kernel(_shifted(v.action[i], value), v.dim)
                piece = intersect(space, gker)
                if piece.dim:
                    new_branches.append((prefix + (value,), piece))
        branches = new_branches
    entries = [(Character(g, prefix), space.dim) for prefix, space in branches]
    table = WeightTable(entries)
    if table.total() != v.dim:
        raise NonSplitError("joint weight spaces do not fill the module")
    return table


def hom_dim(v: Representation, w: Representation) -> int:
    """Dimension of the space of module maps v -> w."""
    if v.algebra != w.algebra:
        raise AlgebraMismatchError("modules live over different algebras")
    _require_left(v)
    _require_left(w)
    return invariants_dim(twist(w, v))


def has_one_dim_submodule_with_character(v: Representation, chi: Character) -> bool:
    """True when a strict joint eigenvector with the given character exists."""
    _require_left(v)
    if v.dim == 0:
        return False
    stacked = RatMatrix.stack_rows(
        [_shifted(v.action[i], chi.values[i]) for i in range(v.algebra.dim)]
    )
    return rank(stacked) < v.dim
