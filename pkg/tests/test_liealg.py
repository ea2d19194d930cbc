from __future__ import annotations

import random
from fractions import Fraction

import pytest

from liespec.catalog import get
from liespec.errors import (
    JacobiError,
    NotACharacterError,
    NotSolvableError,
    UnsupportedAlgebraError,
)
from liespec.homology import betti_homology
from liespec.liealg import (
    Character,
    LieAlgebra,
    adjoint_rep,
    bracket,
    derived_subalgebra,
    is_nilpotent,
    is_semisimple,
    is_solvable,
    jordan_holder_values,
    killing_form,
    top_exterior_character,
    transport,
    two_rho,
    zero_character,
)
from liespec.linalg import RatMatrix, rank
from liespec.reps import check_representation, trivial_module


def _random_invertible(rng, n):
    while True:
        m = RatMatrix(n, n, [rng.randint(-2, 2) for _ in range(n * n)])
        if rank(m) == n:
            return m


def _transported_catalog(rng):
    out = []
    for name, params in (
        ("heisenberg3", []),
        ("solvable3", []),
        ("sl2", []),
        ("borel_sl2", []),
        ("abelian", [3]),
    ):
        g = get(name, params).algebra
        out.append((name, transport(g, _random_invertible(rng, g.dim))))
    return out


def test_bracket_heisenberg():
    g = get("heisenberg3").algebra
    assert bracket(g, [1, 0, 0], [0, 1, 0]) == (0, 0, 1)


def test_bracket_antisymmetric_on_random_vectors():
    g = get("sl2").algebra
    rng = random.Random(1)
    for _ in range(10):
        v = [rng.randint(-3, 3) for _ in range(3)]
        assert bracket(g, v, v) == (0, 0, 0)


def test_bracket_solvable3_scaling():
    lam = Fraction(5, 3)
    g = get("solvable3", [lam]).algebra
    assert bracket(g, [1, 0, 0], [0, 0, 1]) == (0, 0, lam)


def test_jacobi_violation_carries_triple():
    with pytest.raises(JacobiError) as exc:
        LieAlgebra(
            3,
            ("e1", "e2", "e3"),
            {(0, 1): [0, 1, 0], (0, 2): [0, 0, 1], (1, 2): [1, 0, 0]},
        )
    assert exc.value.triple == ("e1", "e2", "e3")
    assert exc.value.indices == (0, 1, 2)


def test_derived_subalgebra_abelian_is_zero():
    assert derived_subalgebra(get("abelian", [3]).algebra).dim == 0


def test_derived_subalgebra_sl2_is_everything():
    assert derived_subalgebra(get("sl2").algebra).dim == 3


def test_derived_subalgebra_borel_is_the_nilradical():
    d = derived_subalgebra(get("borel_sl2").algebra)
    assert d.dim == 1
    assert d.contains_vector([0, 1])


def test_classification_predicates():
    assert (is_solvable(get("heisenberg3").algebra), is_nilpotent(get("heisenberg3").algebra)) == (True, True)
    assert (is_solvable(get("borel_sl2").algebra), is_nilpotent(get("borel_sl2").algebra)) == (True, False)
    assert (is_solvable(get("sl2").algebra), is_nilpotent(get("sl2").algebra)) == (False, False)


def test_nilpotent_implies_solvable_on_transported_algebras():
    rng = random.Random(23)
    for _, g in _transported_catalog(rng):
        if is_nilpotent(g):
            assert is_solvable(g)


def test_killing_form_sl2():
    k = killing_form(get("sl2").algebra)
    assert k == RatMatrix.from_rows([[8, 0, 0], [0, 0, 4], [0, 4, 0]])
    assert is_semisimple(get("sl2").algebra)


def test_killing_form_abelian_is_zero():
    assert killing_form(get("abelian", [2]).algebra).is_zero()
    assert not is_semisimple(get("abelian", [2]).algebra)


def test_killing_form_heisenberg_degenerate():
    assert rank(killing_form(get("heisenberg3").algebra)) < 3
    assert not is_semisimple(get("heisenberg3").algebra)


def test_killing_vanishes_on_derived_subalgebra_of_solvable():
    for name, params in (("heisenberg3", []), ("solvable3", []), ("borel_sl2", []), ("borel_sl3", [])):
        g = get(name, params).algebra
        k = killing_form(g)
        d = derived_subalgebra(g)
        for u in d.vectors():
            for v in d.vectors():
                value = sum(
                    u[i] * k.at(i, j) * v[j] for i in range(g.dim) for j in range(g.dim)
                )
                assert value == 0


def test_adjoint_rep_is_zero_for_abelian():
    rep = adjoint_rep(get("abelian", [2]).algebra)
    assert all(m.is_zero() for m in rep.action)


def test_adjoint_rep_eigenvalues_solvable3():
    lam = Fraction(5, 3)
    rep = adjoint_rep(get("solvable3", [lam]).algebra)
    from liespec.linalg import rational_eigenvalues

    report = rational_eigenvalues(rep.action[0])
    assert dict(report.values) == {Fraction(0): 1, Fraction(1): 1, lam: 1}


def test_adjoint_rep_always_a_module():
    rng = random.Random(29)
    for name, g in _transported_catalog(rng):
        assert check_representation(adjoint_rep(g)).passed, name


def test_jordan_holder_values_borel():
    table = jordan_holder_values(get("borel_sl2").algebra)
    assert table.as_dict() == {(Fraction(0), Fraction(0)): 1, (Fraction(2), Fraction(0)): 1}


def test_jordan_holder_values_solvable3():
    lam = Fraction(5, 3)
    table = jordan_holder_values(get("solvable3", [lam]).algebra)
    firsts = sorted(chi.values[0] for chi, _ in table.entries)
    assert firsts == [0, 1, lam]


def test_jordan_holder_values_abelian():
    table = jordan_holder_values(get("abelian", [4]).algebra)
    assert table.as_dict() == {(Fraction(0),) * 4: 4}


def test_jordan_holder_requires_solvable():
    with pytest.raises(NotSolvableError):
        jordan_holder_values(get("sl2").algebra)


def test_two_rho_is_sum_of_jordan_holder_values():
    for name, params in (("solvable3", []), ("borel_sl2", []), ("borel_sl3", []), ("heisenberg3", [])):
        g = get(name, params).algebra
        table = jordan_holder_values(g)
        total = [Fraction(0)] * g.dim
        for chi, mult in table.entries:
            for i, x in enumerate(chi.values):
                total[i] += mult * x
        assert tuple(total) == two_rho(g).values


def test_two_rho_values():
    lam = Fraction(5, 3)
    assert two_rho(get("solvable3", [lam]).algebra).values[0] == 1 + lam
    assert two_rho(get("heisenberg3").algebra).values == (0, 0, 0)
    assert two_rho(get("borel_sl2").algebra).values == (2, 0)


def test_top_exterior_character():
    assert top_exterior_character(get("sl2").algebra).values == (0, 0, 0)
    assert top_exterior_character(get("abelian", [2]).algebra).values == (0, 0)
    lam = Fraction(5, 3)
    assert top_exterior_character(get("solvable3", [lam]).algebra).values[0] == 1 + lam


def test_top_exterior_unsupported_for_mixed_algebra():
    # sl2 plus the affine line: neither solvable nor semisimple
    mixed = LieAlgebra(
        5,
        ("h", "e", "f", "a", "b"),
        {
            (0, 1): [0, 2, 0, 0, 0],
            (0, 2): [0, 0, -2, 0, 0],
            (1, 2): [1, 0, 0, 0, 0],
            (3, 4): [0, 0, 0, 0, 1],
        },
    )
    assert not is_solvable(mixed) and not is_semisimple(mixed)
    with pytest.raises(UnsupportedAlgebraError):
        top_exterior_character(mixed)


def test_character_must_vanish_on_brackets():
    g = get("heisenberg3").algebra
    with pytest.raises(NotACharacterError):
        Character(g, [0, 0, 1])
    chi = Character(g, [Fraction(1, 2), -1, 0])
    assert chi.values == (Fraction(1, 2), -1, 0)


def test_transport_preserves_betti_numbers():
    rng = random.Random(31)
    g = get("heisenberg3").algebra
    moved = transport(g, _random_invertible(rng, 3))
    assert betti_homology(moved, trivial_module(moved)).values == (1, 2, 2, 1)


def test_zero_character_always_valid():
    for name, params in (("sl2", []), ("borel_sl3", [])):
        g = get(name, params).algebra
        assert zero_character(g).values == (Fraction(0),) * g.dim
