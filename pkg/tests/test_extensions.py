from __future__ import annotations

from fractions import Fraction

import pytest

from liespec.catalog import get
from liespec.errors import BaseMismatchError, NotACocycleError
from liespec.extensions import (
    Extension,
    ExtensionSpec,
    build_extension,
    check_extension_spectrum,
    pullback,
)
from liespec.homology import betti_homology
from liespec.liealg import Character, zero_character
from liespec.reps import check_representation, one_dim_module, trivial_module
from liespec.spectrum import spectrum_solvable


def _affine_line() -> Extension:
    ab1 = get("abelian", [1]).algebra
    return build_extension(ExtensionSpec(ab1, Character(ab1, [1]), {}))


def test_heisenberg_from_central_cocycle():
    ab2 = get("abelian", [2]).algebra
    ext = build_extension(ExtensionSpec(ab2, zero_character(ab2), {(0, 1): Fraction(1)}))
    assert ext.algebra == get("heisenberg3").algebra
    assert ext.algebra.basis_names == ("a1", "a2", "c")


def test_affine_line_extension():
    ext = _affine_line()
    assert ext.algebra.brackets == (((0, 1), (Fraction(0), Fraction(1))),)


def test_trivial_extension_appends_center():
    ab2 = get("abelian", [2]).algebra
    ext = build_extension(ExtensionSpec(ab2, zero_character(ab2), {}))
    assert ext.algebra.brackets == ()
    assert ext.algebra.dim == 3


def test_solvable3_as_iterated_extension():
    base = _affine_line().algebra
    lam = Fraction(5, 3)
    ext = build_extension(ExtensionSpec(base, Character(base, [lam, 0]), {}))
    assert ext.algebra == get("solvable3", [lam]).algebra


def test_non_cocycle_rejected_with_triple():
    g = get("solvable3", [Fraction(1)]).algebra
    with pytest.raises(NotACocycleError) as exc:
        build_extension(ExtensionSpec(g, zero_character(g), {(1, 2): Fraction(1)}))
    assert exc.value.triple == ("e1", "e2", "e3")


def test_pullback_of_trivial_is_trivial():
    ext = _affine_line()
    pulled = pullback(ext, trivial_module(ext.base))
    assert pulled.action == trivial_module(ext.algebra).action


def test_pullback_is_a_module_and_kills_the_new_generator():
    ab2 = get("abelian", [2]).algebra
    ext = build_extension(ExtensionSpec(ab2, zero_character(ab2), {(0, 1): Fraction(1)}))
    mu = Character(ab2, [Fraction(1, 2), -2])
    pulled = pullback(ext, one_dim_module(ab2, mu))
    assert check_representation(pulled).passed
    assert pulled.action[2].is_zero()
    assert pulled.action[0].at(0, 0) == Fraction(1, 2)


def test_pullback_rejects_foreign_modules():
    ext = _affine_line()
    with pytest.raises(BaseMismatchError):
        pullback(ext, trivial_module(get("heisenberg3").algebra))


def test_central_extension_spectrum_equality():
    ab2 = get("abelian", [2]).algebra
    ext = build_extension(ExtensionSpec(ab2, zero_character(ab2), {(0, 1): Fraction(1)}))
    report = check_extension_spectrum(ext, trivial_module(ab2))
    assert report.passed
    sigma = spectrum_solvable(ext.algebra, pullback(ext, trivial_module(ab2)))
    assert sigma.character_values() == ((Fraction(0),) * 3,)


def test_affine_extension_spectrum_containment():
    ext = _affine_line()
    assert check_extension_spectrum(ext, trivial_module(ext.base)).passed
    sigma = spectrum_solvable(ext.algebra, pullback(ext, trivial_module(ext.base)))
    assert {v[0] for v in sigma.character_values()} == {0, 1}


def test_extension_spectrum_with_character_coefficients():
    ext = _affine_line()
    mu = Character(ext.base, [Fraction(1, 3)])
    assert check_extension_spectrum(ext, one_dim_module(ext.base, mu)).passed


def test_solvable3_extension_matches_catalog_spectrum():
    base = _affine_line().algebra
    lam = Fraction(5, 3)
    ext = build_extension(ExtensionSpec(base, Character(base, [lam, 0]), {}))
    assert check_extension_spectrum(ext, trivial_module(base)).passed
    sigma = spectrum_solvable(ext.algebra, pullback(ext, trivial_module(base)))
    assert sorted(v[0] for v in sigma.character_values()) == [0, 1, lam, 1 + lam]


def test_cohomologous_cocycles_are_observationally_isomorphic():
    base = _affine_line().algebra  # [e1, e2] = e2, so coboundaries can shift cocycles
    plain = build_extension(ExtensionSpec(base, zero_character(base), {}))
    shifted = build_extension(ExtensionSpec(base, zero_character(base), {(0, 1): Fraction(1)}))
    t_plain = trivial_module(plain.algebra)
    t_shifted = trivial_module(shifted.algebra)
    assert (
        betti_homology(plain.algebra, t_plain).values
        == betti_homology(shifted.algebra, t_shifted).values
    )
    assert (
        spectrum_solvable(plain.algebra, t_plain).character_values()
        == spectrum_solvable(shifted.algebra, t_shifted).character_values()
    )
