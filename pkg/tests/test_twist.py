import numpy as np
import pytest

import oracle
from hopfpairs import catalog as cat
from hopfpairs import linalg as la
from hopfpairs.algebra import hopf_grouplikes, tensor_algebra, to_dense, verify_hopf
from hopfpairs.modules import ModuleError, character_pairs, lemma_modulo_check
from hopfpairs.scalars import Scalar
from hopfpairs.twist import (Pairing, build_twisted, central_grouplike_scan, cocycle_check, comparison_map,
                             convolution_check, double_pullback_check, drinfeld_double, evaluation_pairing,
                             factorization_check, op_reversal, pairing_inverse, pairing_left_map_check,
                             trivial_pairing, verify_pairing_axioms, yd_compat_check)


@pytest.fixture(scope="module")
def T2():
    return cat.taft_algebra(2)


@pytest.fixture(scope="module")
def DT2():
    return cat.double_taft(2)


def _mult_tensor(alg) -> np.ndarray:
    n = alg.dim
    t = np.zeros((n, n, n), dtype=complex)
    for i, j, k, c in alg.entries():
        t[i, j, k] = oracle.value(c)
    return t


def test_trivial_pairing_satisfies_axioms(T2):
    K = cat.cyclic_group_algebra(2, 2)
    P = trivial_pairing(T2, K)
    assert verify_pairing_axioms(T2, K, P.matrix).ok


def test_evaluation_pairing_satisfies_axioms(T2):
    P = evaluation_pairing(T2)
    assert verify_pairing_axioms(P.U, T2, P.matrix).ok
    assert pairing_left_map_check(P.U, T2, P.matrix).ok


def test_negated_pairing_fails_every_axiom(T2):
    P = evaluation_pairing(T2)
    neg = [[-x for x in row] for row in P.matrix]
    rep = verify_pairing_axioms(P.U, T2, neg)
    assert {f["check"] for f in rep.failures} == {"A1", "A2", "A3", "A4"}
    with pytest.raises(ValueError, match="invalid pairing"):
        build_twisted(P.U, T2, neg)


def test_pairing_shape_is_checked(T2):
    K = cat.cyclic_group_algebra(2, 2)
    with pytest.raises(ValueError, match="shape"):
        Pairing(T2, K, la.identity(4, 2))


@pytest.mark.parametrize("N", [2, 3])
def test_inverse_routes_agree_and_invert(N):
    A = cat.taft_algebra(N)
    P = evaluation_pairing(A)
    via_u = pairing_inverse(P.U, A, P.matrix, via="U")
    via_a = pairing_inverse(P.U, A, P.matrix, via="A")
    assert via_u == via_a
    assert convolution_check(P.U, A, P.matrix, via_u).ok


def test_unknown_inverse_route(T2):
    P = evaluation_pairing(T2)
    with pytest.raises(ValueError):
        pairing_inverse(P.U, T2, P.matrix, via="nowhere")


def test_trivial_twist_is_plain_tensor(T2):
    K = cat.cyclic_group_algebra(2, 2)
    H = build_twisted(T2, K, trivial_pairing(T2, K))
    assert H.algebra.mult == tensor_algebra(T2.algebra, K.algebra).mult
    assert factorization_check(H).ok


def test_double_of_taft_is_hopf(DT2):
    assert DT2.dim == 16
    assert verify_hopf(DT2.H).ok
    assert factorization_check(DT2).ok


def test_double_of_group_algebra_is_commutative():
    D = drinfeld_double(cat.cyclic_group_algebra(2, 2))
    t = _mult_tensor(D.algebra)
    assert np.allclose(t, t.transpose(1, 0, 2))


def test_double_of_taft_is_noncommutative(DT2):
    t = _mult_tensor(DT2.algebra)
    assert not np.allclose(t, t.transpose(1, 0, 2))


@pytest.mark.parametrize("which", ["group", "taft"])
def test_cocycle_identity(which):
    H = drinfeld_double(cat.cyclic_group_algebra(2, 2)) if which == "group" else cat.double_taft(2)
    assert cocycle_check(H).ok


def test_cocycle_sweep_has_a_size_cap(DT2):
    with pytest.raises(ValueError):
        cocycle_check(DT2, max_dim=8)


def test_op_reversal_is_factorized(DT2):
    rev = op_reversal(DT2)
    assert rev.dimU == DT2.dimA and rev.dimA == DT2.dimU
    assert factorization_check(rev).ok


def test_comparison_map_on_a_double_is_identity(DT2):
    f, D = comparison_map(DT2)
    assert f == la.identity(16, 2)
    assert D.algebra.mult == DT2.algebra.mult


def test_central_grouplikes_of_double(DT2):
    found = central_grouplike_scan(DT2)
    one = Scalar.from_int(1, 2)
    assert (DT2.U.unit(), {0: one}) in found
    assert len(found) == 2
    # numerical cross-check: commutators with every basis element vanish exactly for these
    t = _mult_tensor(DT2.algebra)
    for u in hopf_grouplikes(DT2.U):
        for g in hopf_grouplikes(DT2.A):
            x = np.array([oracle.value(c) for c in to_dense(DT2.pure(u, g), 16, 2)])
            comm = np.einsum("i,ijk->jk", x, t) - np.einsum("j,ijk->ik", x, t)
            assert np.allclose(comm, 0) == ((u, g) in found)


def test_lemma_modulo_at_the_identity(DT2):
    rhos, chis = character_pairs(DT2)
    one = Scalar.from_int(1, 2)
    assert lemma_modulo_check(DT2, DT2.U.unit(), {0: one}, rhos[0], chis[0]) == (True, True)


def test_lemma_modulo_rejects_non_central(DT2):
    rhos, chis = character_pairs(DT2)
    one = Scalar.from_int(1, 2)
    with pytest.raises(ModuleError):
        lemma_modulo_check(DT2, DT2.U.unit(), {2: one}, rhos[0], chis[0])


def test_yetter_drinfeld_with_counit(T2):
    assert yd_compat_check(T2, T2.coalgebra.counit).ok
    K = cat.cyclic_group_algebra(3, 3)
    assert yd_compat_check(K, K.coalgebra.counit).ok


def test_yetter_drinfeld_broken_action_fails(T2):
    rep = yd_compat_check(T2, T2.coalgebra.counit, broken=True)
    assert not rep.ok


@pytest.mark.parametrize("which", ["group", "taft"])
def test_double_pullback(which):
    D = drinfeld_double(cat.cyclic_group_algebra(2, 2)) if which == "group" else cat.double_taft(2)
    rhos, chis = character_pairs(D)
    for rho in rhos:
        for chi in chis:
            assert double_pullback_check(D, rho, chi).ok


def test_double_pullback_with_wrong_grouplike(DT2):
    rhos, chis = character_pairs(DT2)
    wrong = hopf_grouplikes(DT2.A)[1]
    rep = double_pullback_check(DT2, rhos[0], chis[0], g=wrong)
    assert not rep.ok
    assert rep.failures[0]["check"] == "pullback action"
