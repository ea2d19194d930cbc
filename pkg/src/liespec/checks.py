"""Registered invariant suites shared by the CLI check command and the
acceptance tests.  Each suite returns (case name, Report) pairs."""

from __future__ import annotations

from fractions import Fraction

from .catalog import get, restrict, sl2_irrep
from .extensions import ExtensionSpec, build_extension, check_extension_spectrum, pullback
from .homology import betti_cohomology, betti_homology, check_poincare
from .liealg import Character, zero_character
from .reporting import Report
from .reps import direct_sum, dual, one_dim_module, trivial_module, weights
from .roots import borel_spectrum_formula, check_kostant, check_semidirect_formula
from .spectrum import (
    check_two_rho_symmetry,
    in_spectrum,
    spectrum_nilpotent,
    spectrum_semisimple,
    spectrum_solvable,
)


def poincare_pairs() -> list[tuple[str, object, object]]:
    """The catalog (algebra, module) pairs used by the duality checks."""
    pairs = []

    def add(entry, refs):
        for ref in refs:
            pairs.append((f"{entry.name}/{ref}", entry.algebra, entry.module(ref)))

    add(get("abelian", [1]), ("trivial", "char:1", "jordan2"))
    add(get("abelian", [2]), ("trivial", "char:1:0"))
    add(get("abelian", [3]), ("trivial", "char:1:-2:1/2"))
    add(get("heisenberg3"), ("trivial", "indecomposable2", "char:1:0:0", "char:1/2:-1:0"))
    add(get("solvable3"), ("trivial", "char:1:0:0"))
    add(get("solvable3", [2]), ("trivial",))
    add(get("solvable3", [-1]), ("trivial",))
    add(get("sl2"), ("trivial", "adjoint", "irrep:1", "irrep:2", "irrep:3"))
    add(get("borel_sl2"), ("trivial", "char:1:0", "restrict:irrep:1", "restrict:irrep:2"))
    add(get("borel_sl3"), ("trivial", "restrict:adjoint"))
    add(get("sl3"), ("trivial",))
    add(get("a1xa1"), ("trivial", "irrep:1:1"))
    return pairs


def duality_suite() -> list[tuple[str, Report]]:
    out = []
    for name, g, v in poincare_pairs():
        poincare = check_poincare(g, v)
        dual_match = betti_cohomology(g, dual(v)).values == betti_homology(g, v).values
        combined = Report(
            name=f"duality/{name}",
            passed=poincare.passed and dual_match,
            details=poincare.details
            + (() if dual_match else ("cohomology of the dual differs from homology",)),
        )
        out.append((combined.name, combined))
    return out


def spectra_suite() -> list[tuple[str, Report]]:
    out = []
    # solvable closed form
    for lam in (Fraction(5, 3), Fraction(2), Fraction(-1), Fraction(0)):
        entry = get("solvable3", [lam])
        sigma = spectrum_solvable(entry.algebra, entry.module("trivial"))
        expected = sorted({(Fraction(0),), (Fraction(1),), (lam,), (1 + lam,)})
        got = sorted({(c.values[0],) for c in sigma.characters()})
        out.append(
            (
                f"spectra/solvable3({lam})",
                Report(
                    name=f"spectra/solvable3({lam})",
                    passed=got == expected,
                    details=(f"got {got}",) if got != expected else (),
                ),
            )
        )
    # nilpotent shortcut agreement runs inside method="both"
    h3 = get("heisenberg3")
    for ref in h3.module_names:
        report = spectrum_nilpotent(h3.algebra, h3.module(ref), method="both")
        expected_chars = set(weights(h3.module(ref)).characters())
        ok = set(report.characters()) == expected_chars
        out.append(
            (
                f"spectra/heisenberg3/{ref}",
                Report(name=f"spectra/heisenberg3/{ref}", passed=ok),
            )
        )
    # semisimple shortcut agreement
    sl2 = get("sl2")
    candidates = [sl2_irrep(m) for m in range(6)]
    labels = [f"V_{m}" for m in range(6)]
    for a in range(3):
        for b in range(a + 1, 4):
            v = direct_sum(sl2_irrep(a), sl2_irrep(b))
            report = spectrum_semisimple(sl2.algebra, v, candidates, labels, method="both")
            ok = report.labels() == (f"V_{a}", f"V_{b}")
            out.append(
                (
                    f"spectra/sl2/V{a}+V{b}",
                    Report(name=f"spectra/sl2/V{a}+V{b}", passed=ok),
                )
            )
    # symmetry about the weight sum
    for name, params in (
        ("abelian", [2]),
        ("heisenberg3", []),
        ("solvable3", []),
        ("borel_sl2", []),
        ("borel_sl3", []),
    ):
        entry = get(name, params)
        report = check_two_rho_symmetry(entry.algebra)
        out.append((f"spectra/two-rho/{entry.name}", report))
    return out


def kostant_suite() -> list[tuple[str, Report]]:
    out = []
    b2 = get("borel_sl2")
    for m in range(5):
        v = restrict(sl2_irrep(m), b2.borel)
        out.append((f"kostant/borel_sl2/V_{m}", check_kostant(b2, v)))
        out.append((f"semidirect/borel_sl2/V_{m}", check_semidirect_formula(b2, v)))
    b3 = get("borel_sl3")
    for ref in ("trivial", "restrict:adjoint"):
        v = b3.module(ref)
        out.append((f"kostant/borel_sl3/{ref}", check_kostant(b3, v)))
        out.append((f"semidirect/borel_sl3/{ref}", check_semidirect_formula(b3, v)))
    # closed-form Borel spectra against the homological enumeration
    for m in range(3):
        v = b2.module(f"restrict:irrep:{m}")
        formula = set(borel_spectrum_formula(b2.root_system, [m]))
        computed = {c.values[: b2.rank] for c in spectrum_solvable(b2.algebra, v).characters()}
        out.append(
            (
                f"borel-formula/A1/m={m}",
                Report(name=f"borel-formula/A1/m={m}", passed=formula == computed),
            )
        )
    return out


def extensions_suite() -> list[tuple[str, Report]]:
    out = []
    ab2 = get("abelian", [2]).algebra
    heis = build_extension(ExtensionSpec(ab2, zero_character(ab2), {(0, 1): Fraction(1)}))
    out.append(("extensions/heisenberg-central", check_extension_spectrum(heis, trivial_module(ab2))))

    ab1 = get("abelian", [1]).algebra
    affine = build_extension(ExtensionSpec(ab1, Character(ab1, [1]), {}))
    out.append(("extensions/affine-line", check_extension_spectrum(affine, trivial_module(ab1))))

    base = affine.algebra
    lam = Fraction(5, 3)
    solv = build_extension(ExtensionSpec(base, Character(base, [lam, 0]), {}))
    same = solv.algebra == get("solvable3", [lam]).algebra
    out.append(
        (
            "extensions/solvable3-rebuild",
            Report(name="extensions/solvable3-rebuild", passed=same),
        )
    )
    out.append(("extensions/solvable3-spectrum", check_extension_spectrum(solv, trivial_module(base))))

    # cohomologous cocycles give observably isomorphic extensions
    plain = build_extension(ExtensionSpec(base, zero_character(base), {}))
    shifted = build_extension(ExtensionSpec(base, zero_character(base), {(0, 1): Fraction(1)}))
    same_spectrum = (
        spectrum_solvable(plain.algebra, trivial_module(plain.algebra)).character_values()
        == spectrum_solvable(shifted.algebra, trivial_module(shifted.algebra)).character_values()
    )
    same_betti = (
        betti_homology(plain.algebra, trivial_module(plain.algebra)).values
        == betti_homology(shifted.algebra, trivial_module(shifted.algebra)).values
    )
    out.append(
        (
            "extensions/cohomologous-cocycles",
            Report(
                name="extensions/cohomologous-cocycles",
                passed=same_spectrum and same_betti,
            ),
        )
    )
    return out


SUITES = {
    "duality": duality_suite,
    "spectra": spectra_suite,
    "kostant": kostant_suite,
    "extensions": extensions_suite,
}


def run_suite(name: str) -> list[tuple[str, Report]]:
    if name == "all":
        results = []
        for suite in SUITES.values():
            results.extend(suite())
        return results
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
