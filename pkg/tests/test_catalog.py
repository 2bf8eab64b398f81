import pytest

from hopfpairs import catalog as cat
from hopfpairs.algebra import hopf_grouplikes, verify_hopf
from hopfpairs.cartan import symmetrizers, verify_datum
from hopfpairs.groups import AbelianGroup
from hopfpairs.modules import character_pairs
from hopfpairs.scalars import Field, Scalar


@pytest.mark.parametrize("N", [2, 3, 4])
def test_taft_dimension_and_grouplikes(N):
    T = cat.taft_algebra(N)
    assert T.dim == N * N
    assert len(hopf_grouplikes(T)) == N


def test_taft_with_other_primitive_root():
    q = Field(3).root_of_unity(3, 2)
    assert verify_hopf(cat.taft_algebra(3, q)).ok


@pytest.mark.parametrize("N,q", [(2, Scalar.from_int(1, 2)), (4, Scalar.from_int(-1, 4)), (2, Scalar.q(2))])
def test_taft_rejects_wrong_order(N, q):
    with pytest.raises(ValueError, match="order exactly"):
        cat.taft_algebra(N, q)


def test_taft_rejects_small_N():
    with pytest.raises(ValueError):
        cat.taft_algebra(1)


def test_sweedler_is_taft_two():
    assert cat.sweedler().algebra.mult == cat.taft_algebra(2).algebra.mult


@pytest.mark.parametrize("N", [2, 3])
def test_double_taft_counts(N):
    D = cat.double_taft(N)
    assert D.dim == N ** 4
    assert len(D.grouplikes()) == N * N
    rhos, chis = character_pairs(D)
    assert len(rhos) * len(chis) == N * N


def test_group_algebra_of_product_group():
    G = AbelianGroup(0, (2, 3))
    H = cat.group_algebra(G, 6)
    assert H.dim == 6
    assert len(hopf_grouplikes(H)) == 6


def test_plain_tensor_dimension():
    K = cat.cyclic_group_algebra(2, 2)
    assert cat.plain_tensor(cat.taft_algebra(2), K).dim == 8


@pytest.mark.parametrize("label", sorted(cat.FINITE_TYPES))
def test_finite_type_data(label):
    D = cat.finite_type_datum(label)
    assert verify_datum(D).ok
    assert symmetrizers(D).d == cat.FINITE_TYPES[label][1]


def test_g2_symmetrizer():
    assert cat.FINITE_TYPES["G2"] == ([[2, -1], [-3, 2]], [3, 1])
    D = cat.finite_type_datum("G2")
    q = Scalar.q(1)
    assert D.qi(0) == q ** 6 and D.qi(1) == q ** 2


def test_unknown_type():
    with pytest.raises(ValueError):
        cat.finite_type_datum("E8")


def test_counterexample_datum():
    D = cat.counterexample_datum()
    assert verify_datum(D).ok
    q = Scalar.q(1)
    assert D.q(0, 1) == q ** -2


@pytest.mark.parametrize("N", [2, 3, 4])
def test_simple_rep_shape(N):
    rep, D = cat.example_simple_rep(N)
    assert rep.dim == N
    assert D.qi(0).is_root_of_unity()


def test_bicharacter_pairing_rejects_non_bicharacter():
    K = cat.cyclic_group_algebra(2, 2)
    two = Scalar.from_int(2, 2)
    with pytest.raises(cat.CatalogError):
        cat.bicharacter_pairing(K, K, {(0, 0): two, (0, 1): two, (1, 0): two, (1, 1): two})
    one, m1 = Scalar.from_int(1, 2), Scalar.from_int(-1, 2)
    P = cat.bicharacter_pairing(K, K, {(0, 0): one, (0, 1): one, (1, 0): one, (1, 1): m1})
    assert P.matrix[1][1] == m1
