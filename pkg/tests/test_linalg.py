from __future__ import annotations

import random
from fractions import Fraction

import pytest

from liespec.errors import AmbientMismatchError, NotSquareError
from liespec.linalg import (
    RatMatrix,
    Subspace,
    char_poly,
    generalized_kernel,
    intersect,
    kernel,
    rank,
    rat,
    rational_eigenvalues,
)
from oracles import charpoly_cofactor, rank_by_minors


def _random_matrix(rng, rows, cols, span=4):
    return RatMatrix(
        rows,
        cols,
        [Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(rows * cols)],
    )


def test_rank_identity():
    assert rank(RatMatrix.identity(2)) == 2


def test_rank_zero_matrix():
    assert rank(RatMatrix.zeros(3, 3)) == 0


def test_rank_proportional_rows():
    assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_of_identity_is_zero():
    assert kernel(RatMatrix.identity(3)).dim == 0


def test_kernel_of_zero_map_is_everything():
    assert kernel(RatMatrix.zeros(2, 3)).dim == 3


def test_kernel_single_relation():
    ker = kernel(RatMatrix.from_rows([[1, 1]]))
    assert ker.dim == 1
    assert ker.contains_vector([1, -1])


def test_kernel_vectors_annihilate():
    rng = random.Random(7)
    for _ in range(25):
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        ker = kernel(m)
        assert m.cols == rank(m) + ker.dim
        for v in ker.vectors():
            assert not any(m.mul_vector(v))


def test_intersect_coordinate_planes():
    a = Subspace.from_spanning(3, [[1, 0, 0], [0, 1, 0]])
    b = Subspace.from_spanning(3, [[0, 1, 0], [0, 0, 1]])
    meet = intersect(a, b)
    assert meet.dim == 1
    assert meet.contains_vector([0, 1, 0])


def test_intersect_idempotent():
    v = Subspace.from_spanning(4, [[1, 2, 0, 0], [0, 0, 1, 1]])
    assert intersect(v, v) == v


def test_intersect_transverse_lines():
    a = Subspace.from_spanning(2, [[1, 0]])
    b = Subspace.from_spanning(2, [[0, 1]])
    assert intersect(a, b).dim == 0


def test_intersect_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        intersect(Subspace.full(2), Subspace.full(3))


def test_intersect_commutative_and_associative():
    rng = random.Random(11)
    for _ in range(15):
        spaces = [
            Subspace.from_spanning(
                4, [[rng.randint(-2, 2) for _ in range(4)] for _ in range(rng.randint(1, 3))]
            )
            for _ in range(3)
        ]
        a, b, c = spaces
        assert intersect(a, b) == intersect(b, a)
        assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))


def test_generalized_kernel_nilpotent_block():
    j2 = RatMatrix.from_rows([[0, 1], [0, 0]])
    assert generalized_kernel(j2, 2).dim == 2
    assert generalized_kernel(j2, 1).dim == 1


def test_generalized_kernel_identity():
    assert generalized_kernel(RatMatrix.identity(3), 5).dim == 0


def test_generalized_kernel_diagonal():
    m = RatMatrix.from_rows([[0, 0], [0, 1]])
    gk = generalized_kernel(m, 3)
    assert gk.dim == 1
    assert gk.contains_vector([1, 0])


def test_generalized_kernel_requires_square():
    with pytest.raises(NotSquareError):
        generalized_kernel(RatMatrix.zeros(2, 3), 1)


def test_rational_eigenvalues_with_multiplicity():
    m = RatMatrix.from_rows(
        [[Fraction(1, 2), 0, 0], [0, Fraction(1, 2), 0], [0, 0, -3]]
    )
    report = rational_eigenvalues(m)
    assert report.split
    assert report.values == ((Fraction(-3), 1), (Fraction(1, 2), 2))


def test_rational_eigenvalues_rotation_does_not_split():
    report = rational_eigenvalues(RatMatrix.from_rows([[0, -1], [1, 0]]))
    assert report.values == ()
    assert not report.split


def test_rational_eigenvalues_zero_matrix():
    report = rational_eigenvalues(RatMatrix.zeros(4, 4))
    assert report.split
    assert report.values == ((Fraction(0), 4),)


def test_multiplicities_sum_to_dimension_iff_split():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = _random_matrix(rng, n, n, span=3)
        report = rational_eigenvalues(m)
        total = sum(mult for _, mult in report.values)
        assert (total == n) == report.split


def test_char_poly_matches_cofactor_oracle():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = _random_matrix(rng, n, n, span=3)
        assert char_poly(m) == charpoly_cofactor(m)


def test_rank_matches_minor_oracle():
    rng = random.Random(13)
    for _ in range(20):
        m = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), span=2)
        assert rank(m) == rank_by_minors(m)


def test_rational_string_round_trip():
    for text in ["0", "5", "-7", "1/2", "-22/7", "355/113"]:
        assert str(rat(text)) == text


def test_rat_rejects_floats():
    with pytest.raises(TypeError):
        rat(0.5)


def test_subspace_equality_is_span_equality():
    a = Subspace.from_spanning(3, [[1, 1, 0], [0, 0, 1]])
    b = Subspace.from_spanning(3, [[2, 2, 2], [0, 0, -1]])
    assert a == b
    assert a != Subspace.from_spanning(3, [[1, 0, 0], [0, 0, 1]])


def test_matrix_power_and_kron():
    m = RatMatrix.from_rows([[1, 1], [0, 1]])
    assert m.power(3) == RatMatrix.from_rows([[1, 3], [0, 1]])
    eye = RatMatrix.identity(2)
    k = m.kron(eye)
    assert (k.rows, k.cols) == (4, 4)
    assert k.at(0, 2) == 1  # upper-right block is the identity


def test_matmul_shapes_and_values():
    a = RatMatrix.from_rows([[1, 2, 3]])
    b = RatMatrix.from_rows([[1], [0], [-1]])
    assert (a @ b).entries == (Fraction(-2),)
