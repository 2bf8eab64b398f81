import pytest
import sympy
from hypothesis import given, strategies as st

from hopfpairs import catalog as cat
from hopfpairs import linalg as la
from hopfpairs.algebra import (AlgebraData, HopfData, cop_variant, dual_hopf, grouplikes, hopf_grouplikes,
                               is_grouplike, op_variant, verify_algebra, verify_bialgebra, verify_hopf)
from hopfpairs.groups import AbelianGroup
from hopfpairs.scalars import Scalar


def _perturbed_group_algebra():
    K = cat.cyclic_group_algebra(2)
    one = Scalar.from_int(1, 2)
    entries = [(i, j, k, c + (one if (i, j, k) == (0, 0, 0) else 0)) for i, j, k, c in K.algebra.entries()]
    return AlgebraData(2, entries, K.algebra.unit, 2)


def test_group_algebra_is_an_algebra():
    assert verify_algebra(cat.cyclic_group_algebra(2).algebra).ok


def test_perturbed_structure_constant_is_reported():
    rep = verify_algebra(_perturbed_group_algebra())
    assert not rep.ok
    assert {"check": "associativity", "index": (0, 0, 1)} in rep.failures
    assert any(f["check"] == "left unit" and f["index"] == (0,) for f in rep.failures)


def test_taft_algebras_verify():
    assert verify_algebra(cat.taft_algebra(2).algebra).ok
    for N in (2, 3, 4):
        assert verify_hopf(cat.taft_algebra(N)).ok


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cyclic_group_algebras_are_hopf(n):
    H = cat.cyclic_group_algebra(n)
    assert verify_hopf(H).ok
    assert verify_bialgebra(H).ok


def test_identity_antipode_fails():
    T = cat.taft_algebra(2)
    bad = HopfData(T.algebra, T.coalgebra, la.identity(4, 2), name="bad")
    assert verify_bialgebra(bad).ok
    rep = verify_hopf(bad)
    assert not rep.ok
    # S = id only breaks the antipode identity on elements involving x
    assert {f["index"] for f in rep.failures} == {(cat.taft_index(2, 0, 1),), (cat.taft_index(2, 1, 1),)}
    assert all("S(" in f["check"] for f in rep.failures)


def test_verify_hopf_needs_an_antipode():
    T = cat.taft_algebra(2)
    with pytest.raises(ValueError):
        verify_hopf(HopfData(T.algebra, T.coalgebra, None))


def test_dual_of_kz2_is_functions_on_z2():
    D = dual_hopf(cat.cyclic_group_algebra(2))
    assert verify_hopf(D).ok
    one = Scalar.from_int(1, 2)
    # dual basis elements are orthogonal idempotents
    assert D.algebra.mul({0: one}, {0: one}) == {0: one}
    assert D.algebra.mul({0: one}, {1: one}) == {}
    assert len(hopf_grouplikes(D)) == 2


@pytest.mark.parametrize("N", [2, 3, 4])
def test_dual_of_cyclic_group_has_n_grouplikes(N):
    assert len(hopf_grouplikes(dual_hopf(cat.cyclic_group_algebra(N)))) == N


@pytest.mark.parametrize("N", [2, 3])
def test_double_dual_is_the_identity(N):
    T = cat.taft_algebra(N)
    DD = dual_hopf(dual_hopf(T))
    assert DD.algebra.mult == T.algebra.mult
    assert DD.coalgebra.comult == T.coalgebra.comult
    assert DD.coalgebra.counit == T.coalgebra.counit
    assert DD.antipode == T.antipode


def test_op_and_cop():
    K = cat.cyclic_group_algebra(3)
    assert op_variant(K.algebra).mult == K.algebra.mult
    T = cat.taft_algebra(2)
    assert cop_variant(T.coalgebra).comult != T.coalgebra.comult
    assert op_variant(op_variant(T.algebra)).mult == T.algebra.mult
    assert cop_variant(cop_variant(T.coalgebra)).comult == T.coalgebra.comult
    assert verify_hopf(op_variant(T)).ok and verify_hopf(cop_variant(T)).ok


def test_grouplikes_of_group_algebra():
    K = cat.cyclic_group_algebra(4)
    gl = hopf_grouplikes(K)
    assert len(gl) == 4
    assert sorted(next(iter(g)) for g in gl) == [0, 1, 2, 3]


def _sympy_grouplikes(H):
    """Solve Delta v = v (x) v, eps(v) = 1 symbolically for rational structure constants."""
    n = H.dim
    v = sympy.symbols(f"v0:{n}")

    def rat(s):
        c = s.constant().coefficients()
        assert all(x == 0 for x in c[1:])
        return sympy.Rational(c[0].numerator, c[0].denominator)

    eqs = []
    for i in range(n):
        for j in range(n):
            lhs = sum(v[k] * rat(c) for k in range(n) for a, b, c in H.coalgebra.comult[k] if (a, b) == (i, j))
            eqs.append(sympy.expand(lhs - v[i] * v[j]))
    eqs.append(sum(v[k] * rat(H.coalgebra.counit[k]) for k in range(n)) - 1)
    sols = sympy.solve(eqs, v, dict=True)
    return sorted(tuple(int(s[x]) for x in v) for s in sols)


def test_taft2_grouplikes_match_a_symbolic_solve():
    T = cat.taft_algebra(2)
    ours = sorted(tuple(int(str(la_val)) for la_val in (g.get(k, Scalar.from_int(0, 2)) for k in range(4)))
                  for g in hopf_grouplikes(T))
    assert ours == _sympy_grouplikes(T)
    assert len(ours) == 2  # 1 and g


def test_double_of_taft2_has_four_grouplikes():
    D = cat.double_taft(2)
    gl = grouplikes(D.H.coalgebra)
    assert len(gl) == 4
    assert len(D.grouplikes()) == 4
    assert all(is_grouplike(D.H.coalgebra, g) for g in D.grouplikes())


@pytest.mark.parametrize("H", [cat.taft_algebra(3), cat.cyclic_group_algebra(4), cat.double_taft(2).H],
                         ids=["T3", "kZ4", "D(T2)"])
def test_grouplikes_form_a_group(H):
    gl = hopf_grouplikes(H)
    keys = [tuple(sorted((k, v.key()) for k, v in g.items())) for g in gl]
    for a in gl:
        for b in gl:
            ab = H.mul(a, b)
            assert tuple(sorted((k, v.key()) for k, v in ab.items())) in keys
        assert H.mul(a, H.S(a)) == H.unit()


@given(st.sampled_from([(2,), (3,), (2, 2)]))
def test_group_algebras_are_commutative_and_cocommutative(torsion):
    K = cat.group_algebra(AbelianGroup(0, torsion), 6)
    assert op_variant(K.algebra).mult == K.algebra.mult
    assert cop_variant(K.coalgebra).comult == K.coalgebra.comult
