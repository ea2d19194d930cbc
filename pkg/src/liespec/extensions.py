"""One-dimensional Lie algebra extensions from 2-cocycles, the pullback of
modules along the projection, and the spectrum checks for both.

The cocycle condition is not verified separately: the extension bracket is
built and handed to the Jacobi validator, which accepts exactly the cocycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import (
    BaseMismatchError,
    JacobiError,
    NotACocycleError,
    NotSolvableError,
    ShapeError,
)
from .liealg import Character, LieAlgebra, is_solvable
from .linalg import RatMatrix, rat
from .reporting import Report
from .reps import Representation
from .spectrum import spectrum_solvable


@dataclass(frozen=True)
class ExtensionSpec:
    """Base algebra, twisting character, and antisymmetric 2-cochain given on
    basis pairs (i < j)."""

    base: LieAlgebra
    char: Character
    cocycle: Mapping[tuple[int, int], Fraction]

    def __post_init__(self) -> None:
        for (i, j), value in self.cocycle.items():
            if not (0 <= i < j < self.base.dim):
                raise ShapeError(f"cocycle indices ({i}, {j}) out of range")
            rat(value)


@dataclass(frozen=True)
class Extension:
    algebra: LieAlgebra
    base: LieAlgebra
    char: Character
    projection: RatMatrix  # drops the appended coordinate


def build_extension(spec: ExtensionSpec) -> Extension:
    """Adjoin a 1-dimensional ideal spanned by c to the base.

    Bracket: [h_i, h_j] keeps the base value plus cocycle(i, j) on c, and
    [h_i, c] = char(h_i) c.  The Jacobi validator rejects non-cocycles with
    the violating triple."""
    base = spec.base
    n = base.dim
    brackets: dict[tuple[int, int], list[Fraction]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            vec = list(base.bracket_basis(i, j)) + [rat(spec.cocycle.get((i, j), 0))]
            brackets[(i, j)] = vec
        value = spec.char.values[i]
        if value:
            brackets[(i, n)] = [Fraction(0)] * n + [value]
    names = list(base.basis_names) + ["c"]
    try:
        algebra = LieAlgebra(n + 1, names, brackets)
    except JacobiError as err:
        raise NotACocycleError(err.triple) from err
    projection = RatMatrix(
        n, n + 1, [1 if i == j else 0 for i in range(n) for j in range(n + 1)]
    )
    return Extension(algebra=algebra, base=base, char=spec.char, projection=projection)


def pullback(ext: Extension, v: Representation) -> Representation:
    """Pull a base module back along the projection: the appended generator
    acts as zero, the base generators act as before."""
    if v.algebra != ext.base:
        raise BaseMismatchError("module is not defined over the extension base")
    action = []
    for k in range(ext.algebra.dim):
        m = RatMatrix.zeros(v.dim, v.dim)
        for j in range(ext.base.dim):
            c = ext.projection.at(j, k)
            if c:
                m = m + v.action[j].scale(c)
        action.append(m)
    return Representation(ext.algebra, v.dim, v.side, action)


def check_extension_spectrum(ext: Extension, v: Representation) -> Report:
    """Spectrum of the pulled-back module against the base spectrum:
    containment in the base characters, membership up to the twisting
    character, and equality in the central case."""
    if not is_solvable(ext.base):
        raise NotSolvableError("extension spectrum checks need a solvable base")
    n = ext.base.dim
    sigma_ext = spectrum_solvable(ext.algebra, pullback(ext, v)).character_values()
    sigma_base = set(spectrum_solvable(ext.base, v).character_values())
    lam = ext.char.values
    failures = []
    for mu in sigma_ext:
        if mu[n]:
            failures.append(f"{mu} does not vanish on the appended generator")
        head = mu[:n]
        shifted = tuple(a - b for a, b in zip(head, lam))
        if head not in sigma_base and shifted not in sigma_base:
            failures.append(f"{mu} is neither a base spectrum element nor a shift")
    if not any(lam):
        restricted = {mu[:n] for mu in sigma_ext}
        if restricted != sigma_base:
            failures.append(
                f"central extension spectrum {sorted(restricted)} differs from base {sorted(sigma_base)}"
            )
    return Report(name="extension-spectrum", passed=not failures, details=tuple(failures))
