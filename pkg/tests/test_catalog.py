"""Families, table rows, naming, and the special functionals."""

from fractions import Fraction

import pytest

from nilharm.algebra import jacobi_defect, nilpotency_class
from nilharm.catalog import (CatalogError, abelian, direct_sum, free_two_step,
                             from_name, get_entry, heisenberg, lambda_a,
                             list_entries, octonion_double)


def test_heisenberg_dimensions():
    # dim = n*dim_F + dim_ImF
    assert heisenberg(1, "C").dim == 2 + 1
    assert heisenberg(3, "C").dim == 6 + 1
    assert heisenberg(1, "H").dim == 4 + 3
    assert heisenberg(2, "H").dim == 8 + 3
    assert heisenberg(1, "O").dim == 8 + 7
    assert len(heisenberg(2, "H").center_indices) == 3


def test_free_two_step_dimensions():
    # n + n(n-1)/2 over R, doubled wedge part over C
    alg = free_two_step(4, "R")
    assert alg.dim == 4 + 6
    assert len(alg.center_indices) == 6
    algc = free_two_step(3, "C")
    assert algc.dim == 6 + 6
    assert len(algc.center_indices) == 6


def test_octonion_double_shape():
    alg = octonion_double()
    assert alg.dim == 14
    assert len(alg.center_indices) == 7
    assert jacobi_defect(alg) == 0
    assert nilpotency_class(alg) == 2


def test_heisenberg_bracket_is_imaginary_part():
    # [x, y] = Im(x conj(y)) forces [e0, e1] = -e1 component in C
    alg = heisenberg(1, "C")
    v0, v1 = alg.complement_indices
    vec = alg.bracket_basis(v0, v1)
    z = alg.center_indices[0]
    nonzero = [(k, c) for k, c in enumerate(vec) if c != 0]
    assert len(nonzero) == 1
    assert nonzero[0][0] == z
    assert abs(nonzero[0][1]) == 1


def test_from_name_matches_direct_constructors():
    pairs = [("heisenberg:2:C", heisenberg(2, "C")),
             ("heisenberg:1:H", heisenberg(1, "H")),
             ("heisenberg:1:O", heisenberg(1, "O")),
             ("free2step:3:R", free_two_step(3, "R")),
             ("free2step:3:C", free_two_step(3, "C")),
             ("octdouble", octonion_double()),
             ("abelian:5", abelian(5))]
    for name, direct in pairs:
        alg = from_name(name)
        assert alg.dim == direct.dim
        assert alg.structure == direct.structure
        assert alg.center_indices == direct.center_indices


def test_from_name_table_rows_with_params():
    alg = from_name("table:2.1:1:n=5")
    assert alg.dim == free_two_step(5, "R").dim
    alg = from_name("table:2.2:10")
    assert alg.dim == 2 * heisenberg(1, "H").dim


def test_from_name_errors_list_families():
    with pytest.raises(CatalogError) as err:
        from_name("mystery:3")
    assert "heisenberg:<n>:<C|H|O>" in str(err.value)
    with pytest.raises(CatalogError) as err:
        from_name("heisenberg:2:Q")
    assert "C, H, O" in str(err.value)
    with pytest.raises(CatalogError):
        from_name("free2step:2")


def test_table_entries_present():
    assert len(list_entries("2.1")) == 23
    assert len(list_entries("2.2")) == 25
    assert len(list_entries()) == 48
    entry = get_entry("2.1", 2)
    assert "Spin(7)" in entry.group_K
    with pytest.raises(CatalogError):
        get_entry("2.1", 99)


def test_constructible_rows_build_two_step_algebras():
    for entry in list_entries(constructible=True):
        alg = entry.build()
        assert jacobi_defect(alg) == 0
        assert nilpotency_class(alg) <= 2


def test_lambda_a_free_real_layout():
    alg = free_two_step(5, "R")
    pairs = [tuple(pq) for pq in alg.meta["wedge_pairs"]]
    coeffs = lambda_a(alg, [Fraction(2), Fraction(-3)])
    assert coeffs[pairs.index((0, 1))] == 2
    assert coeffs[pairs.index((2, 3))] == -3
    assert sum(1 for c in coeffs if c != 0) == 2
    with pytest.raises(CatalogError):
        lambda_a(alg, [1, 1, 1])


def test_lambda_a_complex_split():
    alg = free_two_step(5, "C")
    coeffs = lambda_a(alg, [(Fraction(1), Fraction(2))])
    nz = [(t, c) for t, c in enumerate(coeffs) if c != 0]
    assert len(nz) == 2
    assert nz[0][1] == 1 and nz[1][1] == 2
    assert nz[1][0] == nz[0][0] + 1


def test_lambda_a_octonion_double_units():
    alg = octonion_double()
    coeffs = lambda_a(alg, [5, 7, 11])
    # supported at the duals of e3, e6, e2
    assert coeffs[2] == 5
    assert coeffs[5] == 7
    assert coeffs[1] == 11
    with pytest.raises(CatalogError):
        lambda_a(alg, [1, 2])


def test_lambda_a_rejects_unknown_family():
    with pytest.raises(CatalogError):
        lambda_a(heisenberg(1, "C"), [1])


def test_direct_sum_blocks():
    a = heisenberg(1, "C")
    b = abelian(2)
    s = direct_sum(a, b)
    assert s.dim == a.dim + b.dim
    assert len(s.center_indices) == len(a.center_indices) + 2
    assert jacobi_defect(s) == 0
