import pytest

import oracle
from hopfpairs import catalog as cat
from hopfpairs import linalg as la
from hopfpairs.forms import (bialgebra_formula_crosscheck, induced_form, psi_conjugation, psi_definition,
                             psi_form, psi_left_closed, psi_right_closed, radicals, radicals_check,
                             realize_L_in_dual, unit_vector_form)
from hopfpairs.modules import character_pairs, kernel_of
from hopfpairs.scalars import Scalar


@pytest.fixture(scope="module")
def DT2():
    return cat.double_taft(2)


@pytest.fixture(scope="module")
def DT3():
    return cat.double_taft(3)


def _pairs(H):
    rhos, chis = character_pairs(H)
    return [(r, c) for r in rhos for c in chis]


def test_counit_pair_gives_counit_form(DT2):
    rhos, chis = character_pairs(DT2)
    assert psi_definition(DT2, rhos[0], chis[0]) == unit_vector_form(DT2)


def test_psi_agrees_with_module_expressions(DT2):
    for rho, chi in _pairs(DT2):
        F = psi_form(DT2, rho, chi)
        assert F.report.ok
        assert radicals_check(F).ok
        assert realize_L_in_dual(F).ok


def test_psi_rank_matches_numerical_rank(DT3):
    for rho, chi in _pairs(DT3):
        F = psi_form(DT3, rho, chi)
        assert F.rank == oracle.rank(F.matrix)
        assert radicals_check(F).ok


def test_induced_forms_on_taft_double(DT2):
    rhos, chis = character_pairs(DT2)
    got = {}
    for r, rho in enumerate(rhos):
        for c, chi in enumerate(chis):
            I = induced_form(psi_form(DT2, rho, chi))
            assert I.report.ok
            got[(r, c)] = [[str(x) for x in row] for row in I.matrix]
    assert got == {
        (0, 0): [["1"]],
        (0, 1): [["-1", "0"], ["0", "2"]],
        (1, 0): [["0", "1"], ["2", "0"]],
        (1, 1): [["-1"]],
    }


def test_trivial_twist_gives_rank_one_product_form():
    T2 = cat.taft_algebra(2)
    K = cat.cyclic_group_algebra(2, 2)
    H = cat.plain_tensor(T2, K)
    for rho, chi in _pairs(H):
        P = psi_definition(H, rho, chi)
        assert P == [[chi[j] * rho[i] for i in range(H.dimU)] for j in range(H.dimA)]
        assert la.rank(P) == 1
        F = psi_form(H, rho, chi)
        _, right = radicals(F)
        assert right == la.span(kernel_of(rho, 2), H.dimU, 2)
        Q = induced_form(F).matrix
        assert len(Q) == 1 and Q[0][0].num
        unit_a = next(iter(H.Aalg.unit))
        unit_u = next(iter(H.Ualg.unit))
        assert P[unit_a][unit_u] == Scalar.from_int(1, 2)


def test_closed_forms_on_nontrivial_pair(DT3):
    rhos, chis = character_pairs(DT3)
    rho, chi = rhos[1], chis[2]
    P = psi_definition(DT3, rho, chi)
    assert psi_conjugation(DT3, rho, chi) == P
    assert psi_right_closed(DT3, rho, chi) == P
    assert psi_left_closed(DT3, rho, chi) == P
    assert bialgebra_formula_crosscheck(DT3, rho, chi).ok
