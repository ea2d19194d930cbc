"""Taylor spectrum of finite-dimensional modules.

Membership of a simple module S is decided by the homology of the twisted
module dual(S) (x) V: nonzero in some degree means S is in the spectrum.
Solvable algebras get a complete enumeration over weight-plus-subset-sum
candidates; nilpotent and semisimple algebras also have shortcut paths that
can be cross-checked against the homological test.

Every element listed in a report carries its homological evidence table,
whichever method decided membership.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    AlgebraMismatchError,
    NotNilpotentError,
    NotSemisimpleError,
    NotSolvableError,
    ToolkitError,
)
from .homology import BettiTable, betti_homology
from .liealg import (
    Character,
    LieAlgebra,
    is_nilpotent,
    is_semisimple,
    is_solvable,
    jordan_holder_values,
    two_rho,
)
from .reporting import Report
from .reps import (
    Representation,
    dual,
    has_one_dim_submodule_with_character,
    hom_dim,
    one_dim_module,
    tensor,
    top_module,
    trivial_module,
    twist,
    weights,
)


@dataclass(frozen=True)
class SpectrumElement:
    label: str
    character: Character | None
    evidence: BettiTable
    first_degree: int

    def sort_key(self):
        if self.character is not None:
            return (0, self.character.values, self.label)
        return (1, (), self.label)


@dataclass(frozen=True)
class SpectrumReport:
    algebra_class: str
    method: str
    elements: tuple[SpectrumElement, ...]

    def characters(self) -> tuple[Character, ...]:
        return tuple(e.character for e in self.elements if e.character is not None)

    def character_values(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(c.values for c in self.characters())

    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.elements)

    def __post_init__(self) -> None:
        for e in self.elements:
            if not e.evidence.any_nonzero():
                raise ToolkitError(f"spectrum element {e.label} has empty evidence")


def in_spectrum(
    g: LieAlgebra, v: Representation, s: Representation
) -> tuple[bool, BettiTable]:
    """Homological membership test with the evidence table."""
    if v.algebra != g or s.algebra != g:
        raise AlgebraMismatchError("module and candidate must live over g")
    table = betti_homology(g, twist(v, s))
    return table.any_nonzero(), table


def _element_from_character(label: str, chi: Character, table: BettiTable) -> SpectrumElement:
    first = min(table.nonzero_degrees())
    return SpectrumElement(label=label, character=chi, evidence=table, first_degree=first)


def _character_label(chi: Character) -> str:
    return "(" + ", ".join(str(v) for v in chi.values) + ")"


def subset_sum_characters(g: LieAlgebra) -> tuple[Character, ...]:
    """Distinct sums over subsets of the adjoint weight multiset."""
    jh = jordan_holder_values(g)
    values: list[tuple[Fraction, ...]] = []
    for chi, mult in jh.entries:
        values.extend([chi.values] * mult)
    sums = {tuple(Fraction(0) for _ in range(g.dim))}
    for size in range(1, len(values) + 1):
        for combo in combinations(values, size):
            total = tuple(sum(col, Fraction(0)) for col in zip(*combo))
            sums.add(total)
    return tuple(Character(g, s) for s in sorted(sums))


def _candidate_betti(
    g: LieAlgebra, v: Representation, values: tuple[Fraction, ...]
) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    chi = Character(g, values)
    table = betti_homology(g, twist(v, one_dim_module(g, chi)))
    return values, table.values


def spectrum_solvable(g: LieAlgebra, v: Representation, jobs: int = 1) -> SpectrumReport:
    """Complete spectrum over a solvable algebra.

    Candidates are module weights shifted by every subset sum of the adjoint
    weights; each candidate is decided by the homological test.  Candidate
    evaluations are independent, so jobs > 1 may fan them out to processes;
    the merged output is sorted canonically either way.
    """
    if not is_solvable(g):
        raise NotSolvableError("spectrum_solvable needs a solvable algebra")
    module_weights = weights(v)
    sums = subset_sum_characters(g)
    candidates = sorted(
        {
            tuple(a + b for a, b in zip(chi.values, s.values))
            for chi in module_weights.characters()
            for s in sums
        }
    )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_candidate_betti, [g] * len(candidates), [v] * len(candidates), candidates))
    else:
        results = [_candidate_betti(g, v, values) for values in candidates]
    elements = []
    for values, betti_values in sorted(results):
        table = BettiTable(betti_values)
        if table.any_nonzero():
            chi = Character(g, values)
            elements.append(_element_from_character(_character_label(chi), chi, table))
    return SpectrumReport(
        algebra_class="solvable", method="homological", elements=tuple(elements)
    )


def spectrum_nilpotent(
    g: LieAlgebra, v: Representation, method: str = "both"
) -> SpectrumReport:
    """Spectrum over a nilpotent algebra: the weights realized by genuine
    one-dimensional submodules, optionally cross-checked homologically."""
    if not is_nilpotent(g):
        raise NotNilpotentError("spectrum_nilpotent needs a nilpotent algebra")
    if method not in ("shortcut", "homological", "both"):
        raise ToolkitError(f"unknown method {method!r}")
    table = weights(v)
    decided: list[Character] = []
    for chi in table.characters():
        shortcut = has_one_dim_submodule_with_character(v, chi)
        if method == "shortcut":
            member = shortcut
        else:
            member, _ = in_spectrum(g, v, one_dim_module(g, chi))
            if method == "both" and member != shortcut:
                raise ToolkitError(
                    f"shortcut and homological tests disagree at {chi!r}"
                )
        if member:
            decided.append(chi)
    elements = []
    for chi in decided:
        _, evidence = in_spectrum(g, v, one_dim_module(g, chi))
        elements.append(_element_from_character(_character_label(chi), chi, evidence))
    elements.sort(key=SpectrumElement.sort_key)
    return SpectrumReport(
        algebra_class="nilpotent", method=method, elements=tuple(elements)
    )


def spectrum_semisimple(
    g: LieAlgebra,
    v: Representation,
    candidates: Sequence[Representation],
    labels: Sequence[str] | None = None,
    method: str = "both",
) -> SpectrumReport:
    """Spectrum over a semisimple algebra from a caller-supplied candidate
    list of simple modules: exactly the candidates mapping into v."""
    if not is_semisimple(g):
        raise NotSemisimpleError("spectrum_semisimple needs a semisimple algebra")
    if method not in ("shortcut", "homological", "both"):
        raise ToolkitError(f"unknown method {method!r}")
    if labels is None:
        labels = [f"S{i}" for i in range(len(candidates))]
    if len(labels) != len(candidates):
        raise ToolkitError("need one label per candidate")
    elements = []
    for label, s in zip(labels, candidates):
        shortcut = hom_dim(s, v) > 0
        if method == "shortcut":
            member = shortcut
        else:
            member, _ = in_spectrum(g, v, s)
            if method == "both" and member != shortcut:
                raise ToolkitError(f"shortcut and homological tests disagree at {label}")
        if member:
            _, evidence = in_spectrum(g, v, s)
            first = min(evidence.nonzero_degrees())
            elements.append(
                SpectrumElement(label=label, character=None, evidence=evidence, first_degree=first)
            )
    elements.sort(key=SpectrumElement.sort_key)
    return SpectrumReport(
        algebra_class="semisimple", method=method, elements=tuple(elements)
    )


def check_two_rho_symmetry(g: LieAlgebra) -> Report:
    """The trivial-module spectrum is symmetric about its weight sum."""
    if not is_solvable(g):
        raise NotSolvableError("symmetry check needs a solvable algebra")
    report = spectrum_solvable(g, trivial_module(g))
    sigma = set(report.character_values())
    center = two_rho(g).values
    failures = tuple(
        f"{values} in spectrum but reflection missing"
        for values in sigma
        if tuple(c - x for c, x in zip(center, values)) not in sigma
    )
    return Report(name="two-rho-symmetry", passed=not failures, details=failures)


def check_dual_spectrum(g: LieAlgebra, v: Representation, s: Representation) -> Report:
    """Membership of s in the spectrum of v matches membership of the
    top-wedge twist of dual(s) in the spectrum of dual(v)."""
    member, _ = in_spectrum(g, v, s)
    partner = tensor(dual(s), top_module(g))
    dual_member, _ = in_spectrum(g, dual(v), partner)
    detail = f"direct {member} vs dual {dual_member}"
    return Report(name="dual-spectrum", passed=member == dual_member, details=(detail,))
