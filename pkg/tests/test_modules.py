import pytest
from hypothesis import given, settings, strategies as st

import oracle
from hopfpairs import catalog as cat
from hopfpairs import linalg as la
from hopfpairs.algebra import to_dense
from hopfpairs.modules import (ModuleError, UnsupportedModule, all_L, all_R, character_pairs, condition_C_check,
                               direct_sum, duality_bullet, find_annihilated_weight_vector,
                               find_codim_one_U_submodules, find_one_dim_A_submodules, generated_rep,
                               grouplike_hypotheses_check, induced_A_rho, induced_A_rho_formula, induced_U_chi,
                               induced_U_chi_formula, intertwiners, is_invariant, is_simple,
                               largest_submodule_within, lift_morphism_L, module_iso, permute,
                               randomized_cyclic_check, submodule_generated, submodule_lattice, verify_triple,
                               weight_decomposition)
from hopfpairs.scalars import Scalar

L_DIMS = {
    2: {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 1},
    3: {(0, 0): 1, (0, 1): 3, (0, 2): 2, (1, 0): 2, (1, 1): 1, (1, 2): 3, (2, 0): 3, (2, 1): 2, (2, 2): 1},
}


@pytest.fixture(scope="module")
def DT2():
    return cat.double_taft(2)


@pytest.fixture(scope="module")
def simple2():
    return cat.example_simple_rep(2)


@pytest.mark.parametrize("N", [2, 3])
def test_L_dimensions_match_numerical_oracle(N):
    D = cat.double_taft(N)
    Ls = all_L(D)
    assert {k: v.dim for k, v in Ls.items()} == L_DIMS[N]
    rhos, chis = character_pairs(D)
    for (r, c), L in Ls.items():
        Uchi = L.info["Uchi"]
        assert oracle.quotient_dim_by_orbit(Uchi.basis_actions, rhos[r]) == L.dim


def test_L_objects_are_triples(DT2):
    for L in all_L(DT2).values():
        assert verify_triple(L).ok
    for R in all_R(DT2).values():
        assert verify_triple(R).ok


def test_induced_modules_match_closed_formulas(DT2):
    rhos, chis = character_pairs(DT2)
    for chi in chis:
        assert induced_U_chi(DT2, chi).basis_actions == induced_U_chi_formula(DT2, chi)
    for rho in rhos:
        assert induced_A_rho(DT2, rho).basis_actions == induced_A_rho_formula(DT2, rho)


def test_unit_generates_induced_modules(DT2):
    rhos, chis = character_pairs(DT2)
    one_u = to_dense(DT2.Ualg.unit, DT2.dimU, 2)
    one_a = to_dense(DT2.Aalg.unit, DT2.dimA, 2)
    for chi in chis:
        assert len(submodule_generated(induced_U_chi(DT2, chi), one_u)) == DT2.dimU
    for rho in rhos:
        assert len(submodule_generated(induced_A_rho(DT2, rho), one_a)) == DT2.dimA


def test_induced_modules_restrict_as_expected(DT2):
    rhos, chis = character_pairs(DT2)
    for rho in rhos:
        for chi in chis:
            assert grouplike_hypotheses_check(DT2, rho, chi).ok


def test_non_character_is_rejected(DT2):
    bogus = [Scalar.from_int(2, 2)] * DT2.dimA
    with pytest.raises(ValueError):
        induced_U_chi(DT2, bogus)


def test_largest_submodule_extremes(DT2):
    _, chis = character_pairs(DT2)
    M = induced_U_chi(DT2, chis[0])
    full = la.identity(M.dim, 2)
    assert len(largest_submodule_within(M, full)) == M.dim
    assert largest_submodule_within(M, []) == []
    assert submodule_generated(M, [Scalar.from_int(0, 2)] * M.dim) == []


def test_dual_triple_of_R_is_L(DT2):
    Ls, Rs = all_L(DT2), all_R(DT2)
    for key, R in Rs.items():
        dual, rep = duality_bullet(R)
        assert rep.ok
        assert module_iso(dual.M, Ls[key].M) is not None


def test_simple_rep_weights(simple2):
    rep, _ = simple2
    wd = weight_decomposition(rep)
    assert len(wd) == 2
    assert sorted(str(w["g"]) for w, _ in wd) == ["-1", "1"]
    assert is_simple(rep)
    assert randomized_cyclic_check(rep)


def test_condition_C(simple2):
    rep, D = simple2
    q = D.chi[0].values[0]
    assert condition_C_check(rep, {"x": {"g": q}}).ok
    bad = condition_C_check(rep, {"x": {"g": Scalar.from_int(1, 2)}})
    assert {f["check"] for f in bad.failures} == {"conjugation", "character nontrivial"}


def test_simple_rep_has_no_annihilated_vector(simple2):
    rep, _ = simple2
    assert find_annihilated_weight_vector(rep) is None
    assert find_one_dim_A_submodules(rep) == []


def test_nilpotent_rep_has_annihilated_vector():
    z, one, m1 = Scalar.from_int(0, 2), Scalar.from_int(1, 2), Scalar.from_int(-1, 2)
    rep = generated_rep({"g": [[one, z], [z, m1]], "x": [[z, z], [one, z]]}, 2, ["g"], ["x"])
    v = find_annihilated_weight_vector(rep)
    assert v == [z, one]
    assert not is_simple(rep)


def test_direct_sum_of_simple_with_itself(simple2):
    rep, _ = simple2
    S = direct_sum(rep, rep)
    assert S.dim == 4
    assert len(intertwiners(S, S)) == 4
    with pytest.raises(UnsupportedModule):
        is_simple(S)


def test_direct_sum_of_one_dimensional_modules(DT2):
    Ls = all_L(DT2)
    a, b = Ls[(0, 0)].M, Ls[(1, 1)].M
    S = direct_sum(a, b)
    assert not is_simple(S)
    assert len(find_one_dim_A_submodules(S)) == 2
    assert len([W for W in submodule_lattice(S) if len(W) == 1]) == 2
    assert module_iso(a, b) is None


def test_module_iso_with_self_and_permutation(DT2):
    L = all_L(DT2)[(0, 1)].M
    assert module_iso(L, L) is not None
    P, _ = permute(L, [1, 0])
    T = module_iso(L, P)
    assert T is not None
    for name in L.gens:
        assert la.matmul(T, L.gens[name]) == la.matmul(P.gens[name], T)


def test_unique_special_submodules(DT2):
    for L in all_L(DT2).values():
        ones = find_one_dim_A_submodules(L.M)
        assert len(ones) == 1 and la.span(ones, L.dim, 2) == la.span([L.m], L.dim, 2)
        cods = find_codim_one_U_submodules(L.M)
        assert len(cods) == 1 and cods[0] == la.span(L.N, L.dim, 2)


def test_lift_identity(DT2):
    rhos, chis = character_pairs(DT2)
    I_u, I_a = la.identity(DT2.dimU, 2), la.identity(DT2.dimA, 2)
    for rho in rhos:
        for chi in chis:
            Lf, L, Lb, rep = lift_morphism_L(I_u, I_a, DT2, DT2, rho, chi)
            assert rep.ok
            assert Lf == la.identity(L.dim, 2)


@pytest.mark.parametrize("example", [cat.restricted_double_example, cat.quotient_example])
def test_lift_examples(example):
    H, f, g, Hbar = example()
    rhos, chis = character_pairs(Hbar)
    for rho in rhos:
        for chi in chis:
            Lf, L, Lb, rep = lift_morphism_L(f, g, H, Hbar, rho, chi)
            assert rep.ok
            assert L.dim == Lb.dim == 1


def test_restriction_to_non_invariant_subspace_fails(simple2):
    rep, _ = simple2
    v = [la.unit_vector(2, 0, 2)]
    assert not is_invariant(rep, v)
    with pytest.raises(ModuleError):
        rep.restrict(v)


def test_non_diagonalizable_torus_is_reported():
    z, one = Scalar.from_int(0, 2), Scalar.from_int(1, 2)
    rep = generated_rep({"g": [[one, one], [z, one]]}, 2, ["g"], [])
    with pytest.raises(ModuleError, match="not diagonalizable"):
        weight_decomposition(rep)


# --------------------------------------------------------------------------
# properties

scalars2 = st.integers(-3, 3).map(lambda n: Scalar.from_int(n, 2))


def _random_rep(entries):
    n = 2
    x = [entries[i * n:(i + 1) * n] for i in range(n)]
    g = [[Scalar.from_int(1, 2), Scalar.from_int(0, 2)], [Scalar.from_int(0, 2), Scalar.from_int(-1, 2)]]
    return generated_rep({"g": g, "x": x}, 2, ["g"], ["x"])


@settings(deadline=None)
@given(st.lists(scalars2, min_size=4, max_size=4), st.lists(scalars2, min_size=2, max_size=2))
def test_generated_submodule_is_invariant_and_contains_seed(entries, v):
    M = _random_rep(entries)
    S = submodule_generated(M, v)
    assert is_invariant(M, S)
    assert la.contains(S, v)


@settings(deadline=None)
@given(st.lists(scalars2, min_size=4, max_size=4), st.lists(scalars2, min_size=2, max_size=2))
def test_largest_submodule_is_invariant_and_inside(entries, w):
    M = _random_rep(entries)
    W = la.span([w], 2, 2)
    V = largest_submodule_within(M, W)
    assert is_invariant(M, V)
    assert all(la.contains(W, v) for v in V)


@settings(deadline=None)
@given(st.lists(scalars2, min_size=4, max_size=4), st.permutations([0, 1]))
def test_permuted_module_is_isomorphic(entries, perm):
    M = _random_rep(entries)
    P, _ = permute(M, perm)
    assert module_iso(M, P) is not None
