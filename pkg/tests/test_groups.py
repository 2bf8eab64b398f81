import pytest
from hypothesis import given, strategies as st

from hopfpairs.groups import (AbelianGroup, Character, char_eval, char_power, char_product,
                              enumerate_characters, trivial_character)
from hopfpairs.scalars import Field, Scalar


def test_trivial_character_evaluates_to_one():
    G = AbelianGroup(1, (4,))
    t = trivial_character(G, 4)
    assert char_eval(t, G.element([7, 3])) == 1


def test_rank_two_free_character_values():
    G = AbelianGroup(2, ())
    q = Scalar.q(1)
    a = [[2, -2], [-2, 2]]
    chi1 = Character(G, [q ** a[i][0] for i in range(2)])
    assert char_eval(chi1, G.element([1, 0])) == q ** 2
    assert char_eval(chi1, G.element([0, 1])) == q ** -2
    assert char_eval(chi1, G.element([3, 1])) == q ** 4


def test_order_two_character_on_square():
    G = AbelianGroup(0, (2,))
    chi = Character(G, [Scalar.from_int(-1, 2)])
    g = G.generator(0)
    assert char_eval(chi, G.element([2])) == 1
    assert char_eval(chi, g) == -1


def test_torsion_exponents_are_reduced():
    G = AbelianGroup(0, (3,))
    assert G.element([5]) == G.element([2])


def test_shape_mismatch_raises():
    G, K = AbelianGroup(0, (2,)), AbelianGroup(0, (3,))
    with pytest.raises(ValueError):
        char_eval(trivial_character(G, 6), K.generator(0))
    with pytest.raises(ValueError):
        char_product(trivial_character(G, 6), trivial_character(K, 6))


def test_torsion_values_must_have_the_right_order():
    G = AbelianGroup(0, (2,))
    with pytest.raises(ValueError):
        Character(G, [Field(3).root_of_unity(3)])


@pytest.mark.parametrize("torsion,N,count", [((2,), 2, 2), ((2, 2), 2, 4), ((3,), 3, 3), ((2, 3), 6, 6)])
def test_enumeration_counts(torsion, N, count):
    chars = enumerate_characters(AbelianGroup(0, torsion), N)
    assert len(chars) == count
    assert len({tuple(v.key() for v in c.values) for c in chars}) == count


def test_enumeration_values_for_z3():
    chars = enumerate_characters(AbelianGroup(0, (3,)), 3)
    F = Field(3)
    assert {c.values[0] for c in chars} == {F.one, F.root_of_unity(3, 1), F.root_of_unity(3, 2)}


def test_enumeration_rejects_bad_input():
    with pytest.raises(ValueError):
        enumerate_characters(AbelianGroup(1, ()), 2)
    with pytest.raises(ValueError):
        enumerate_characters(AbelianGroup(0, (5,)), 3)


def test_products_and_powers():
    G = AbelianGroup(2, ())
    q = Scalar.q(1)
    chi1 = Character(G, [q ** 2, q ** -2])
    chi2 = Character(G, [q ** -2, q ** 2])
    triv = trivial_character(G, 1)
    assert char_product(chi1, chi2).values == triv.values
    assert char_product(chi1, char_power(chi1, -1)).values == triv.values
    assert char_power(chi1, 0).values == triv.values


@given(st.sampled_from([(2,), (3,), (2, 2), (4,), (2, 3)]), st.data())
def test_evaluation_is_multiplicative(torsion, data):
    G = AbelianGroup(0, torsion)
    N = 12
    chars = enumerate_characters(G, N)
    c1 = data.draw(st.sampled_from(chars))
    c2 = data.draw(st.sampled_from(chars))
    g = G.element([data.draw(st.integers(-5, 5)) for _ in torsion])
    h = G.element([data.draw(st.integers(-5, 5)) for _ in torsion])
    assert char_eval(char_product(c1, c2), g) == char_eval(c1, g) * char_eval(c2, g)
    assert char_eval(c1, g * h) == char_eval(c1, g) * char_eval(c1, h)


@pytest.mark.parametrize("torsion", [(2,), (4,), (2, 2), (3,)])
def test_character_group_is_closed_and_has_the_right_size(torsion):
    G = AbelianGroup(0, torsion)
    chars = enumerate_characters(G, 12)
    keys = {tuple(v.key() for v in c.values) for c in chars}
    assert len(keys) == G.order()
    for a in chars:
        for b in chars:
            assert tuple(v.key() for v in char_product(a, b).values) in keys
