"""Reference objects: group algebras, Taft algebras, their doubles, and
root data used by the Cartan-type checks.

Every Hopf algebra built here is run through its verifier before it is
returned, so a construction bug fails loudly at build time.
"""
from __future__ import annotations

from math import comb

from . import linalg as la
from .algebra import (AlgebraData, CoalgebraData, HopfData, Sparse, _tensor_mul, acc,
                      apply_matrix, to_dense, verify_hopf)
from .groups import AbelianGroup, Character, GroupElem
from .scalars import Field, Scalar, multiplicative_order


class CatalogError(ValueError):
    pass


def _checked(H: HopfData, verify: bool) -> HopfData:
    if verify:
        rep = verify_hopf(H)
        if not rep.ok:
            raise CatalogError(f"{H.name} failed verification: {rep.failures[:3]}")
    return H


def group_algebra(group: AbelianGroup, conductor: int = 1, verify: bool = True) -> HopfData:
    """The group algebra of a finite abelian group, basis = group elements."""
    elems = group.elements()
    index = {g.exps: i for i, g in enumerate(elems)}
    n = len(elems)
    one = Scalar.from_int(1, conductor)
    zero = Scalar.from_int(0, conductor)
    mult = [(i, j, index[(a * b).exps], one) for i, a in enumerate(elems) for j, b in enumerate(elems)]
    comult = [(i, i, i, one) for i in range(n)]
    S = [[zero] * n for _ in range(n)]
    for j, g in enumerate(elems):
        S[index[g.inverse().exps]][j] = one
    names = ["g^" + ".".join(map(str, g.exps)) for g in elems]
    alg = AlgebraData(n, mult, {index[group.identity().exps]: one}, conductor, names)
    coalg = CoalgebraData(n, comult, [one] * n, conductor)
    label = "k[" + "x".join(f"Z{t}" for t in group.torsion) + "]"
    return _checked(HopfData(alg, coalg, S, name=label), verify)


def taft_index(N: int, i: int, j: int) -> int:
    """Basis index of g^i x^j in the Taft algebra."""
    return (i % N) * N + j


def taft_algebra(N: int, q: Scalar | None = None, verify: bool = True) -> HopfData:
    """The Taft algebra of dimension N^2.

    Generated by a group-like g of order N and a (g, 1)-skew-primitive x
    with x^N = 0 and x g = q g x; Delta(x) = x (x) g + 1 (x) x.
    ``q`` must have multiplicative order exactly N (default zeta_N).
    """
    if N < 2:
        raise ValueError("Taft algebras need N >= 2")
    if q is None:
        q = Field(N).root_of_unity(N, 1)
    order = multiplicative_order(q) if q.is_root_of_unity() else 0
    if order != N:
        raise ValueError(f"q must have multiplicative order exactly {N}")
    cond = q.N
    one = Scalar.from_int(1, cond)
    qpow = [q ** k for k in range(N)]
    n = N * N
    mult = []
    for i in range(N):
        for j in range(N):
            for k in range(N):
                for l in range(N):
                    if j + l < N:
                        mult.append((taft_index(N, i, j), taft_index(N, k, l),
                                     taft_index(N, i + k, j + l), qpow[(j * k) % N]))
    names = [_taft_name(i, j) for i in range(N) for j in range(N)]
    alg = AlgebraData(n, mult, {0: one}, cond, names)
    g = {taft_index(N, 1, 0): one}
    x = {taft_index(N, 0, 1): one}
    dg = {(taft_index(N, 1, 0), taft_index(N, 1, 0)): one}
    dx = {(taft_index(N, 0, 1), taft_index(N, 1, 0)): one, (0, taft_index(N, 0, 1)): one}
    comult = []
    for i in range(N):
        for j in range(N):
            d: dict = {(0, 0): one}
            for _ in range(i):
                d = _tensor_mul(alg, d, dg)
            for _ in range(j):
                d = _tensor_mul(alg, d, dx)
            comult.extend((taft_index(N, i, j), a, b, c) for (a, b), c in d.items())
    counit = [one if j == 0 else Scalar.from_int(0, cond) for i in range(N) for j in range(N)]
    coalg = CoalgebraData(n, comult, counit, cond)
    # S(g) = g^{-1}, S(x) = -x g^{-1}; S is an anti-homomorphism
    ginv = {taft_index(N, N - 1, 0): one}
    s_g = ginv
    s_x = {k: -c for k, c in alg.mul(x, ginv).items()}
    cols = []
    for i in range(N):
        for j in range(N):
            img = dict(alg.unit)
            for _ in range(j):
                img = alg.mul(img, s_x)
            for _ in range(i):
                img = alg.mul(img, s_g)
            cols.append(to_dense(img, n, cond))
    S = la.transpose(cols)
    H = HopfData(alg, coalg, S, name=f"T{N}")
    return _checked(H, verify)


def _taft_name(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("g" if i == 1 else f"g^{i}")
    if j:
        parts.append("x" if j == 1 else f"x^{j}")
    return "".join(parts) or "1"


def sweedler(verify: bool = True) -> HopfData:
    """The four-dimensional Sweedler algebra (Taft algebra with N = 2)."""
    return taft_algebra(2, Field(2).root_of_unity(2, 1), verify)


# --------------------------------------------------------------------------
# doubles and small morphism examples

def double_taft(N: int, verify: bool = True):
    """The Drinfeld double of the Taft algebra T_N (dimension N^4)."""
    from .twist import drinfeld_double
    return drinfeld_double(taft_algebra(N, verify=verify), verify=verify)


def plain_tensor(U: HopfData, A: HopfData, verify: bool = True):
    """U (x) A with the trivial pairing: the ordinary tensor product."""
    from .twist import build_twisted, trivial_pairing
    return build_twisted(U, A, trivial_pairing(U, A), verify=verify, name=f"{U.name}(x){A.name}")


def cyclic_group_algebra(n: int, conductor: int | None = None, verify: bool = True) -> HopfData:
    return group_algebra(AbelianGroup(0, (n,)), conductor or n, verify)


def restricted_double_example(verify: bool = True):
    """H = T_2^{* cop} (x) kZ_2 paired by restricting evaluation to the group
    part, with the comparison map onto the double of kZ_2.

    Returns (H, f, g, Hbar): f = restriction T_2^* -> (kZ_2)^*, g = identity.
    """
    from .twist import Pairing, build_twisted, drinfeld_double
    from .algebra import dual_cop
    T2 = taft_algebra(2, verify=verify)
    K = cyclic_group_algebra(2, 2, verify)
    U = dual_cop(T2)
    incl = [taft_index(2, 0, 0), taft_index(2, 1, 0)]  # 1, g
    z, one = Scalar.from_int(0, 2), Scalar.from_int(1, 2)
    tau = [[one if incl[j] == i else z for j in range(2)] for i in range(4)]
    H = build_twisted(U, K, Pairing(U, K, tau), verify=verify, name="T2*cop(x)kZ2")
    D = drinfeld_double(K, verify=verify)
    f = [[tau[i][p] for i in range(4)] for p in range(2)]
    g = la.identity(2, 2)
    return H, f, g, D


def quotient_example(verify: bool = True):
    """T_2 (x) kZ_2 -> kZ_2 (x) kZ_2 (trivial pairings), induced by T_2 -> T_2/(x).

    Returns (H, f, g, Hbar).
    """
    T2 = taft_algebra(2, verify=verify)
    K = cyclic_group_algebra(2, 2, verify)
    H = plain_tensor(T2, K, verify)
    Hbar = plain_tensor(K, K, verify)
    z, one = Scalar.from_int(0, 2), Scalar.from_int(1, 2)
    f = [[z] * 4 for _ in range(2)]
    f[0][taft_index(2, 0, 0)] = one
    f[1][taft_index(2, 1, 0)] = one
    return H, f, la.identity(2, 2), Hbar


# --------------------------------------------------------------------------
# small representations and Cartan data

def example_simple_rep(N: int, q: Scalar | None = None):
    """g -> diag(1, q, ..., q^{N-1}), x -> cyclic shift m_i -> m_{i+1}; the
    A1 datum on Z_N with chi(g) = q.  Returns (representation, datum)."""
    from .cartan import CartanDatum
    from .modules import generated_rep
    if q is None:
        q = Field(N).root_of_unity(N, 1)
    if multiplicative_order(q) != N:
        raise ValueError(f"q must be a primitive {N}-th root of unity")
    cond = q.N
    z, one = Scalar.from_int(0, cond), Scalar.from_int(1, cond)
    g = [[q ** i if i == j else z for j in range(N)] for i in range(N)]
    x = [[one if i == (j + 1) % N else z for j in range(N)] for i in range(N)]
    rep = generated_rep({"g": g, "x": x}, cond, ["g"], ["x"], label=f"simple{N}")
    G = AbelianGroup(0, (N,))
    datum = CartanDatum(G, [G.generator(0)], [Character(G, [q])], [[2]], name=f"A1 at order {N}")
    return rep, datum


def counterexample_datum(conductor: int = 1):
    """Rank-two free group, Cartan matrix [[2,-2],[-2,2]], chi_j(g_i) = q^{a_ij}."""
    from .cartan import CartanDatum
    a = [[2, -2], [-2, 2]]
    q = Scalar.q(conductor)
    G = AbelianGroup(2, ())
    chis = [Character(G, [q ** a[i][j] for i in range(2)]) for j in range(2)]
    return CartanDatum(G, [G.generator(0), G.generator(1)], chis, a, name="affine A1(1)")


FINITE_TYPES = {
    "A1": ([[2]], [1]),
    "A2": ([[2, -1], [-1, 2]], [1, 1]),
    "B2": ([[2, -2], [-1, 2]], [1, 2]),
    "G2": ([[2, -1], [-3, 2]], [3, 1]),
}


def finite_type_datum(label: str, q: Scalar | None = None):
    """Free abelian group of rank theta, chi_j(g_i) = q^{d_i a_ij}."""
    from .cartan import CartanDatum
    if label not in FINITE_TYPES:
        raise ValueError(f"unknown type {label}; choose from {sorted(FINITE_TYPES)}")
    a, d = FINITE_TYPES[label]
    q = Scalar.q(1) if q is None else q
    n = len(a)
    G = AbelianGroup(n, ())
    chis = [Character(G, [q ** (d[i] * a[i][j]) for i in range(n)]) for j in range(n)]
    return CartanDatum(G, [G.generator(i) for i in range(n)], chis, [list(r) for r in a], name=label)


def bicharacter_pairing(U: HopfData, A: HopfData, values: dict[tuple[int, int], Scalar]):
    """A pairing between two group algebras given on basis pairs of group
    elements; values must form a bicharacter (checked by the axioms)."""
    from .twist import Pairing, verify_pairing_axioms
    z = Scalar.from_int(0, U.N)
    m = [[values.get((i, j), z) for j in range(A.dim)] for i in range(U.dim)]
    rep = verify_pairing_axioms(U, A, m)
    if not rep.ok:
        raise CatalogError(f"not a pairing: {rep.failures[:3]}")
    return Pairing(U, A, m)
