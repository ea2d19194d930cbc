from __future__ import annotations

import random
from fractions import Fraction

import pytest

from liespec.catalog import get, restrict, sl2_irrep
from liespec.errors import (
    AlgebraMismatchError,
    NonSplitError,
    NotSolvableError,
    SideMismatchError,
)
from liespec.homology import betti_cohomology, betti_homology
from liespec.liealg import Character, adjoint_rep, zero_character
from liespec.linalg import RatMatrix
from liespec.reps import (
    Representation,
    antipode,
    check_representation,
    coinvariants_dim,
    direct_sum,
    dual,
    has_one_dim_submodule_with_character,
    hom_dim,
    invariants_dim,
    one_dim_module,
    tensor,
    trivial_module,
    twist,
    weights,
)


def _char_module(name, params, values):
    g = get(name, params).algebra
    return one_dim_module(g, Character(g, values))


def test_check_representation_accepts_adjoint():
    assert check_representation(adjoint_rep(get("sl2").algebra)).passed


def test_check_representation_accepts_trivial():
    for name, params in (("sl2", []), ("heisenberg3", []), ("borel_sl3", [])):
        assert check_representation(trivial_module(get(name, params).algebra)).passed


def test_check_representation_rejects_swapped_raising_lowering():
    v1 = sl2_irrep(1)
    h, e, f = v1.action
    broken = Representation(v1.algebra, v1.dim, "left", [h, f, e])
    report = check_representation(broken)
    assert not report.passed
    assert "pair (e, f)" in report.details


def test_dual_of_character_module_negates():
    lam = Fraction(3, 4)
    g = get("abelian", [1]).algebra
    v = one_dim_module(g, Character(g, [lam]))
    assert dual(v).action[0].at(0, 0) == -lam


def test_dual_is_an_involution_on_matrices():
    for v in (sl2_irrep(2), get("heisenberg3").module("indecomposable2")):
        assert dual(dual(v)).action == v.action


def test_dual_of_trivial_is_trivial():
    g = get("sl2").algebra
    assert dual(trivial_module(g)).action == trivial_module(g).action


def test_antipode_involution_and_side_flip():
    v = sl2_irrep(2)
    flipped = antipode(v)
    assert flipped.side == "right"
    assert antipode(flipped).action == v.action
    assert antipode(flipped).side == "left"


def test_antipode_of_character():
    lam = Fraction(2)
    g = get("abelian", [1]).algebra
    v = one_dim_module(g, Character(g, [lam]))
    assert antipode(v).action[0].at(0, 0) == -lam


def test_tensor_of_characters_adds():
    g = get("heisenberg3").algebra
    a = one_dim_module(g, Character(g, [1, 0, 0]))
    b = one_dim_module(g, Character(g, [Fraction(1, 2), 3, 0]))
    prod = tensor(a, b)
    assert prod.action[0].at(0, 0) == Fraction(3, 2)
    assert prod.action[1].at(0, 0) == 3


def test_tensor_with_trivial_is_identity_on_matrices():
    v = sl2_irrep(3)
    g = v.algebra
    assert tensor(trivial_module(g), v).action == v.action


def test_tensor_v1_v1_weights():
    v = sl2_irrep(1)
    prod = tensor(v, v)
    h = prod.action[0]
    diag = sorted(h.at(i, i) for i in range(4))
    assert diag == [-2, 0, 0, 2]


def test_tensor_requires_same_algebra():
    with pytest.raises(AlgebraMismatchError):
        tensor(trivial_module(get("sl2").algebra), trivial_module(get("heisenberg3").algebra))


def test_tensor_mixed_sides():
    v = sl2_irrep(1)
    mixed = tensor(antipode(v), v)
    assert mixed.side == "left"
    assert check_representation(mixed).passed
    with pytest.raises(SideMismatchError):
        tensor(v, antipode(v))


def test_tensor_right_right():
    v = antipode(sl2_irrep(1))
    prod = tensor(v, v)
    assert prod.side == "right"
    assert check_representation(prod).passed


def test_twist_by_trivial_is_identity():
    v = sl2_irrep(2)
    assert twist(v, trivial_module(v.algebra)).action == v.action


def test_twist_of_character_by_itself_is_trivial():
    g = get("solvable3").algebra
    c = one_dim_module(g, Character(g, [Fraction(7, 2), 0, 0]))
    assert twist(c, c).action == trivial_module(g).action


def test_twist_shifts_weights():
    lam = Fraction(1, 3)
    b = get("borel_sl2")
    v = b.module("restrict:irrep:2")
    shift = one_dim_module(b.algebra, Character(b.algebra, [lam, 0]))
    shifted = weights(twist(v, shift))
    plain = weights(v)
    expected = {
        (chi.values[0] - lam, chi.values[1]): m for chi, m in plain.entries
    }
    assert {chi.values: m for chi, m in shifted.entries} == expected


def test_invariants_and_coinvariants_trivial():
    g = get("sl2").algebra
    assert invariants_dim(trivial_module(g)) == 1
    assert coinvariants_dim(trivial_module(g)) == 1


def test_invariants_and_coinvariants_adjoint_sl2():
    v = adjoint_rep(get("sl2").algebra)
    assert invariants_dim(v) == 0
    assert coinvariants_dim(v) == 0


def test_invariants_and_coinvariants_nonzero_character():
    v = _char_module("abelian", [1], [Fraction(5)])
    assert invariants_dim(v) == 0
    assert coinvariants_dim(v) == 0


def test_invariants_match_degree_zero_cohomology():
    for entry_name, params, ref in (
        ("heisenberg3", [], "indecomposable2"),
        ("sl2", [], "irrep:2"),
        ("borel_sl2", [], "restrict:irrep:1"),
    ):
        entry = get(entry_name, params)
        v = entry.module(ref)
        assert invariants_dim(v) == betti_cohomology(v.algebra, v)[0]
        assert coinvariants_dim(v) == betti_homology(v.algebra, v)[0]


def test_weights_of_character_module():
    lam = Fraction(-4, 7)
    v = _char_module("abelian", [1], [lam])
    table = weights(v)
    assert table.as_dict() == {(lam,): 1}


def test_weights_of_solvable3_adjoint():
    lam = Fraction(5, 3)
    g = get("solvable3", [lam]).algebra
    table = weights(adjoint_rep(g))
    assert sorted(chi.values[0] for chi, _ in table.entries) == [0, 1, lam]
    assert table.total() == 3


def test_weights_of_restricted_irrep():
    b = get("borel_sl2")
    v = b.module("restrict:irrep:3")
    table = weights(v)
    assert sorted(chi.values[0] for chi, _ in table.entries) == [-3, -1, 1, 3]


def test_weights_nonsplit_aborts():
    v = get("abelian", [1]).module("rotation2")
    with pytest.raises(NonSplitError):
        weights(v)


def test_weights_need_solvable():
    with pytest.raises(NotSolvableError):
        weights(sl2_irrep(1))


def test_hom_dim_schur():
    for m in range(3):
        assert hom_dim(sl2_irrep(m), sl2_irrep(m)) == 1


def test_hom_dim_distinct_irreps_vanish():
    assert hom_dim(sl2_irrep(1), sl2_irrep(2)) == 0


def test_hom_dim_trivial():
    g = get("sl2").algebra
    assert hom_dim(trivial_module(g), trivial_module(g)) == 1


def test_hom_dim_additive_in_direct_sums():
    a, b = sl2_irrep(1), sl2_irrep(2)
    v = direct_sum(a, b)
    assert hom_dim(a, v) == hom_dim(a, a) + hom_dim(a, b)
    assert hom_dim(v, a) == hom_dim(a, a) + hom_dim(b, a)


def test_direct_sum_dims_and_weights():
    b = get("borel_sl2")
    v = b.module("restrict:irrep:1")
    w = b.module("char:1:0")
    s = direct_sum(v, w)
    assert s.dim == v.dim + w.dim
    combined = {}
    for table in (weights(v), weights(w)):
        for chi, m in table.entries:
            combined[chi.values] = combined.get(chi.values, 0) + m
    assert {chi.values: m for chi, m in weights(s).entries} == combined


def test_has_one_dim_submodule():
    h3 = get("heisenberg3")
    assert has_one_dim_submodule_with_character(
        h3.module("trivial"), zero_character(h3.algebra)
    )
    assert has_one_dim_submodule_with_character(
        h3.module("indecomposable2"), zero_character(h3.algebra)
    )
    lam = Character(h3.algebra, [1, 0, 0])
    assert not has_one_dim_submodule_with_character(h3.module("trivial"), lam)


def test_highest_weight_line_is_the_only_submodule_of_restricted_irrep():
    b = get("borel_sl2")
    v = b.module("restrict:irrep:1")
    top = Character(b.algebra, [1, 0])
    bottom = Character(b.algebra, [-1, 0])
    assert has_one_dim_submodule_with_character(v, top)
    assert not has_one_dim_submodule_with_character(v, bottom)


def test_functor_outputs_remain_modules():
    rng = random.Random(17)
    pool = [
        sl2_irrep(2),
        get("heisenberg3").module("indecomposable2"),
        get("borel_sl3").module("restrict:adjoint"),
    ]
    for v in pool:
        assert check_representation(dual(v)).passed
        assert check_representation(antipode(v)).passed
        assert check_representation(twist(v, v)).passed
        assert check_representation(direct_sum(v, v)).passed
    a, b = pool[0], adjoint_rep(get("sl2").algebra)
    assert check_representation(tensor(a, b)).passed
