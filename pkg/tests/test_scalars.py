import cmath
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from hopfpairs.scalars import (CycloElem, Field, Scalar, cyclotomic_poly, euler_phi, is_root_of_unity,
                               multiplicative_order, normalize, pow_int)

import oracle

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 12]


# ---------------------------------------------------------------- examples

def test_normalize_cancels_common_factor():
    one = 1
    s = normalize([-1, 0, 1], [-1, 1], N=1)  # (q^2 - 1) / (q - 1)
    q = Scalar.q(1)
    assert s == q + one
    assert len(s.den) == 1 and s.den[0].is_one()


def test_normalize_zero_numerator():
    s = normalize([0], [0, 0, 0, 1], N=1)
    assert s.is_zero()
    assert s == Scalar.from_int(0, 1)


def test_normalize_absorbs_constants_into_monic_denominator():
    s = normalize([0, 2], [4], N=1)
    assert s == Scalar.q(1) / 2
    assert len(s.den) == 1 and s.den[0].is_one()


def test_normalize_rejects_zero_denominator():
    with pytest.raises((ValueError, ZeroDivisionError)):
        normalize([1], [0], N=1)


def test_normalize_scaling_invariance():
    a = normalize([1, 2, 3], [5, 0, 1], N=3)
    z = CycloElem.zeta(3)
    b = normalize([z * CycloElem.from_int(3, k) for k in (1, 2, 3)],
                  [z * CycloElem.from_int(3, k) for k in (5, 0, 1)], N=3)
    assert a == b
    assert a.num == b.num and a.den == b.den


def test_roots_of_unity_examples():
    assert is_root_of_unity(Scalar.const(CycloElem.zeta(3)))
    assert not is_root_of_unity(Scalar.q(3))
    assert is_root_of_unity(Scalar.from_int(-1, 4))
    with pytest.raises(ValueError):
        is_root_of_unity(Scalar.from_int(0, 4))


def test_pow_int_examples():
    q = Scalar.q(1)
    assert pow_int(q, -2) == 1 / (q * q)
    assert pow_int(Scalar.const(CycloElem.zeta(4)), 4) == 1
    assert pow_int(q + 1, 2) == q * q + 2 * q + 1
    assert pow_int(q, 0) == 1
    with pytest.raises(ZeroDivisionError):
        pow_int(Scalar.from_int(0, 1), -1)


@pytest.mark.parametrize("N", CONDUCTORS)
def test_zeta_relations(N):
    z = CycloElem.zeta(N)
    assert (z ** N).is_one()
    acc = CycloElem.from_int(N, 0)
    for k, c in enumerate(cyclotomic_poly(N)):
        acc = acc + CycloElem.from_int(N, c) * z ** k
    assert acc.is_zero()
    assert len(z.coefficients()) == euler_phi(N)


@pytest.mark.parametrize("N", [3, 4, 5, 12])
def test_zeta_agrees_with_complex_oracle(N):
    z = CycloElem.zeta(N)
    assert abs(oracle.cyclo_value(z, N) - cmath.exp(2j * cmath.pi / N)) < 1e-12


def test_field_roots_and_orders():
    F = Field(6)
    assert F.unity_order == 6
    assert [multiplicative_order(x) for x in F.roots_of_unity()] == [1, 6, 3, 2, 3, 6]
    with pytest.raises(ValueError):
        F.root_of_unity(4)
    assert Field(3).unity_order == 6  # -1 is always present


def test_json_round_trip_example():
    q = Scalar.q(5)
    s = (q ** 2 + Scalar.const(CycloElem.zeta(5, 2))) / (3 * q - 1)
    obj = s.to_json()
    assert obj["conductor"] == 5
    assert all(isinstance(x, str) for row in obj["num"] for x in row)
    back = Scalar.from_json(obj)
    assert back == s and back.to_json() == obj


def test_conductor_mismatch_is_an_error():
    with pytest.raises(ValueError):
        Scalar.q(3) + Scalar.q(4)


# ---------------------------------------------------------------- properties

small = st.integers(-4, 4)


@st.composite
def cyclos(draw, N):
    phi = euler_phi(N)
    return CycloElem(N, [Fraction(draw(small), draw(st.integers(1, 3))) for _ in range(phi)])


@st.composite
def scalars(draw, N=None):
    N = N or draw(st.sampled_from([1, 3, 4, 6]))
    deg_n = draw(st.integers(0, 2))
    deg_d = draw(st.integers(0, 2))
    num = [draw(cyclos(N)) for _ in range(deg_n + 1)]
    den = [draw(cyclos(N)) for _ in range(deg_d + 1)]
    assume(any(not c.is_zero() for c in den))
    return normalize(num, den, N)


@st.composite
def triples(draw):
    N = draw(st.sampled_from([1, 3, 4, 6]))
    return draw(scalars(N)), draw(scalars(N)), draw(scalars(N))


@given(triples())
def test_field_axioms(t):
    x, y, z = t
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0
    if not x.is_zero():
        assert x * x.inverse() == 1


@given(triples())
def test_arithmetic_matches_complex_oracle(t):
    x, y, z = t
    vx, vy, vz = (oracle.value(s) for s in t)
    assert abs(oracle.value(x * y + z) - (vx * vy + vz)) < 1e-6 * (1 + abs(vx * vy + vz))
    if not y.is_zero():
        assert abs(oracle.value(x / y) - vx / vy) < 1e-6 * (1 + abs(vx / vy))


@given(scalars(), st.integers(1, 5))
def test_canonical_form_is_unique(x, k):
    # the same value reached along two arithmetic routes has identical components
    y = (x * k + x) / (k + 1)
    assert y == x
    assert y.num == x.num and y.den == x.den
    assert not x.den[-1].is_zero() and x.den[-1].is_one()


@given(scalars())
def test_json_round_trip(x):
    assert Scalar.from_json(x.to_json()) == x


@given(st.sampled_from([2, 3, 4, 6, 12]), st.data())
def test_roots_of_unity_closed_under_products(N, data):
    F = Field(N)
    roots = F.roots_of_unity()
    a = data.draw(st.sampled_from(roots))
    b = data.draw(st.sampled_from(roots))
    assert is_root_of_unity(a) and is_root_of_unity(b)
    assert is_root_of_unity(a * b)


@given(scalars())
def test_nonconstant_is_never_a_root_of_unity(x):
    assume(not x.is_zero())
    if not x.is_constant():
        assert not is_root_of_unity(x)
