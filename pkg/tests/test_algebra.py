"""Structure constants, brackets, and the z + v bookkeeping."""

import random
from fractions import Fraction

import pytest

from nilharm.algebra import (LieAlgebraData, ad_matrix, bracket, center,
                             derived_subalgebra, from_json, is_two_step,
                             jacobi_defect, nilpotency_class, subalgebra,
                             to_json)
from nilharm.catalog import abelian, free_two_step, heisenberg, \
    octonion_double


def rand_vec(rng, n):
    return [Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            for _ in range(n)]


def test_bracket_is_bilinear_and_antisymmetric():
    alg = heisenberg(2, "C")
    rng = random.Random(5)
    for _ in range(20):
        x, y, z = (rand_vec(rng, alg.dim) for _ in range(3))
        a = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        lhs = bracket(alg, [a * xi + yi for xi, yi in zip(x, y)], z)
        rhs = [a * u + v for u, v in
               zip(bracket(alg, x, z), bracket(alg, y, z))]
        assert lhs == rhs
        assert bracket(alg, x, y) == [-c for c in bracket(alg, y, x)]
        assert bracket(alg, x, x) == [Fraction(0)] * alg.dim


def test_jacobi_holds_for_every_catalog_family():
    for alg in (heisenberg(1, "C"), heisenberg(2, "H"), heisenberg(1, "O"),
                free_two_step(3, "R"), free_two_step(3, "C"),
                octonion_double(), abelian(4)):
        assert jacobi_defect(alg) == 0


def test_jacobi_defect_detects_a_broken_table():
    # [x,y] = z and [x,z] = x: cyclic sum at (x,y,z) leaves -z over
    structure = {(0, 1): [0, 0, 1], (0, 2): [1, 0, 0]}
    alg = LieAlgebraData(3, ["x", "y", "z"], structure,
                         center_indices=(), complement_indices=(0, 1, 2))
    assert jacobi_defect(alg) == 1


def test_two_step_and_derived_inside_center():
    alg = free_two_step(4, "R")
    assert nilpotency_class(alg) == 2
    assert is_two_step(alg)
    zset = set(alg.center_indices)
    for row in derived_subalgebra(alg):
        assert all(row[k] == 0 for k in range(alg.dim) if k not in zset)


def test_center_matches_declared_indices():
    alg = heisenberg(2, "C")
    rows = center(alg)
    assert len(rows) == len(alg.center_indices)
    zset = set(alg.center_indices)
    for row in rows:
        assert all(row[k] == 0 for k in range(alg.dim) if k not in zset)


def test_abelian_center_is_everything():
    alg = abelian(3)
    assert nilpotency_class(alg) == 1
    assert len(center(alg)) == 3
    assert derived_subalgebra(alg) == []


def test_ad_matrix_columns_are_brackets():
    alg = heisenberg(1, "H")
    for i in range(alg.dim):
        M = ad_matrix(alg, i)
        for j in range(alg.dim):
            col = [M[r][j] for r in range(alg.dim)]
            assert col == alg.bracket_basis(i, j)


def test_structure_key_validation():
    with pytest.raises(ValueError):
        LieAlgebraData(2, ["a", "b"], {(1, 0): [1, 0]},
                       center_indices=(1,), complement_indices=(0,))
    with pytest.raises(ValueError):
        LieAlgebraData(2, ["a", "b"], {},
                       center_indices=(0,), complement_indices=(0, 1))


def test_subalgebra_closure_check():
    alg = free_two_step(3, "R")
    # v alone is not closed: brackets land in the center
    with pytest.raises(ValueError):
        subalgebra(alg, list(alg.complement_indices))
    sub = subalgebra(alg, list(alg.center_indices) + [alg.complement_indices[0]])
    assert sub.dim == len(alg.center_indices) + 1


def test_json_round_trip():
    alg = heisenberg(2, "C")
    doc = to_json(alg)
    back = from_json(doc)
    assert back.dim == alg.dim
    assert back.structure == alg.structure
    assert back.center_indices == alg.center_indices
    rng = random.Random(1)
    x, y = rand_vec(rng, alg.dim), rand_vec(rng, alg.dim)
    assert bracket(back, x, y) == bracket(alg, x, y)
