"""Pairings between bialgebras and the twisted tensor products they define.

A pairing is a form ``tau(u, a)`` on U x A, stored as a dim(U) x dim(A)
matrix.  Given a convolution-invertible pairing, U (x) A carries the product

    (u (x) a)(u' (x) a') = u tau(u'1, a1) u'2 (x) a2 tau^-1(u'3, a3) a'

with the tensor coalgebra.  The Drinfeld double is the case U = A^{* cop}
with the evaluation pairing, and :func:`drinfeld_double` builds it from an
independent formula and compares.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .algebra import (AlgebraData, CoalgebraData, HopfData, Report, Sparse, acc, apply_matrix,
                      dual_cop, dual_hopf, hopf_grouplikes, tensor_coalgebra, to_dense, to_sparse,
                      verify_bialgebra, verify_hopf, verify_morphism, algebra_generators)
from .scalars import Scalar


# --------------------------------------------------------------------------
# pairings

@dataclass
class Pairing:
    U: HopfData
    A: HopfData
    matrix: la.Matrix
    inverse_matrix: la.Matrix | None = None

    def __post_init__(self):
        if len(self.matrix) != self.U.dim or any(len(r) != self.A.dim for r in self.matrix):
            raise ValueError("pairing matrix has the wrong shape")
        if self.inverse_matrix is None:
            self.inverse_matrix = pairing_inverse(self.U, self.A, self.matrix)

    @property
    def N(self) -> int:
        return self.U.N

    def value(self, u: Sparse, a: Sparse) -> Scalar:
        return _form(self.matrix, u, a, self.N)

    def inverse_value(self, u: Sparse, a: Sparse) -> Scalar:
        return _form(self.inverse_matrix, u, a, self.N)

    def left(self, u: Sparse) -> Sparse:
        """tau_l(u) = tau(u, -) as a functional on A in the dual basis."""
        out: Sparse = {}
        for i, c in u.items():
            for j, t in enumerate(self.matrix[i]):
                if t.num:
                    acc(out, j, c * t)
        return out

    def right(self, a: Sparse) -> Sparse:
        """tau_r(a) = tau(-, a) as a functional on U in the dual basis."""
        out: Sparse = {}
        for j, c in a.items():
            for i in range(self.U.dim):
                t = self.matrix[i][j]
                if t.num:
                    acc(out, i, c * t)
        return out

    def to_json(self) -> dict:
        return {"U": self.U.name, "A": self.A.name,
                "matrix": [[x.to_json() for x in row] for row in self.matrix]}


def _form(m: la.Matrix, u: Sparse, a: Sparse, N: int) -> Scalar:
    out = Scalar.from_int(0, N)
    for i, c in u.items():
        row = m[i]
        for j, d in a.items():
            t = row[j]
            if t.num:
                out = out + c * d * t
    return out


def trivial_pairing(U: HopfData, A: HopfData) -> Pairing:
    m = [[cu * ca for ca in A.coalgebra.counit] for cu in U.coalgebra.counit]
    return Pairing(U, A, m)


def evaluation_pairing(A: HopfData, U: HopfData | None = None) -> Pairing:
    """tau(p, a) = p(a) between the dual basis of U = A^{* cop} and A."""
    U = dual_cop(A) if U is None else U
    return Pairing(U, A, la.identity(A.dim, A.N))


def verify_pairing_axioms(U: HopfData, A: HopfData, matrix: la.Matrix) -> Report:
    """Check the four compatibility axioms on all basis elements."""
    rep = Report("pairing")
    N = U.N
    one = Scalar.from_int(1, N)
    nU, nA = U.dim, A.dim
    tau = matrix
    # tau(u, a a') = tau(u2, a) tau(u1, a')
    for k in range(nU):
        cop = U.coalgebra.comult[k]
        for i in range(nA):
            for j in range(nA):
                lhs = Scalar.from_int(0, N)
                for m, c in A.algebra.mult[i][j]:
                    lhs = lhs + c * tau[k][m]
                rhs = Scalar.from_int(0, N)
                for s, t, c in cop:
                    x = tau[t][i]
                    if x.num:
                        rhs = rhs + c * x * tau[s][j]
                rep.checks += 1
                if lhs != rhs:
                    rep.fail(check="A1", index=(k, i, j))
    # tau(u u', a) = tau(u, a1) tau(u', a2)
    for i in range(nU):
        for j in range(nU):
            prod = U.algebra.mult[i][j]
            for k in range(nA):
                lhs = Scalar.from_int(0, N)
                for m, c in prod:
                    lhs = lhs + c * tau[m][k]
                rhs = Scalar.from_int(0, N)
                for s, t, c in A.coalgebra.comult[k]:
                    x = tau[i][s]
                    if x.num:
                        rhs = rhs + c * x * tau[j][t]
                rep.checks += 1
                if lhs != rhs:
                    rep.fail(check="A3", index=(i, j, k))
    for k in range(nA):
        rep.checks += 1
        if _form(tau, U.unit(), {k: one}, N) != A.coalgebra.counit[k]:
            rep.fail(check="A2", index=(k,))
    for k in range(nU):
        rep.checks += 1
        if _form(tau, {k: one}, A.unit(), N) != U.coalgebra.counit[k]:
            rep.fail(check="A4", index=(k,))
    return rep


def pairing_left_map_check(U: HopfData, A: HopfData, matrix: la.Matrix) -> Report:
    """The equivalent formulation: u -> tau(u, -) is a bialgebra map U -> A^{* cop}."""
    target = dual_cop(A)
    f = la.transpose(matrix)
    rep = verify_morphism(f, U, target)
    rep.name = "pairing as bialgebra map"
    return rep


def pairing_inverse(U: HopfData, A: HopfData, matrix: la.Matrix, via: str = "auto") -> la.Matrix:
    """Convolution inverse of a pairing.

    Uses tau(S(u), a) when U has an antipode, otherwise tau(u, T(a)) with T
    the antipode of A^op (the inverse of the antipode of A).
    """
    if via == "auto":
        via = "U" if U.antipode is not None else "A"
    if via == "U":
        if U.antipode is None:
            raise ValueError("no antipode available on U")
        return la.matmul(la.transpose(U.antipode), matrix)
    if via == "A":
        if A.antipode is None:
            raise ValueError("no antipode available on A")
        return la.matmul(matrix, A.antipode_inverse())
    raise ValueError(f"unknown route {via!r}")


def convolution_check(U: HopfData, A: HopfData, tau: la.Matrix, tau_inv: la.Matrix) -> Report:
    """tau * tau^-1 = eps (x) eps = tau^-1 * tau in the dual of the tensor coalgebra."""
    rep = Report("convolution inverse")
    N = U.N
    for i in range(U.dim):
        for j in range(A.dim):
            target = U.coalgebra.counit[i] * A.coalgebra.counit[j]
            left = Scalar.from_int(0, N)
            right = Scalar.from_int(0, N)
            for u1, u2, cu in U.coalgebra.comult[i]:
                for a1, a2, ca in A.coalgebra.comult[j]:
                    c = cu * ca
                    left = left + c * tau[u1][a1] * tau_inv[u2][a2]
                    right = right + c * tau_inv[u1][a1] * tau[u2][a2]
            rep.checks += 2
            if left != target:
                rep.fail(check="tau * tau^-1", index=(i, j))
            if right != target:
                rep.fail(check="tau^-1 * tau", index=(i, j))
    return rep


# --------------------------------------------------------------------------
# algebras on U (x) A

class FactorizedAlgebra:
    """An algebra on U (x) A (basis index i*dim(A) + j) in which U (x) 1 and
    1 (x) A are subalgebras and u (x) a = (u (x) 1)(1 (x) a)."""

    def __init__(self, Ualg: AlgebraData, Aalg: AlgebraData, algebra: AlgebraData, name: str = ""):
        self.Ualg = Ualg
        self.Aalg = Aalg
        self.algebra = algebra
        self.name = name
        self._gens: list[Sparse] | None = None

    @property
    def dimU(self) -> int:
        return self.Ualg.dim

    @property
    def dimA(self) -> int:
        return self.Aalg.dim

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def N(self) -> int:
        return self.algebra.N

    def index(self, i: int, j: int) -> int:
        return i * self.dimA + j

    def split(self, h: int) -> tuple[int, int]:
        return divmod(h, self.dimA)

    def pure(self, u: Sparse, a: Sparse) -> Sparse:
        out: Sparse = {}
        for i, c in u.items():
            for j, d in a.items():
                acc(out, self.index(i, j), c * d)
        return out

    def embed_U(self, u: Sparse) -> Sparse:
        return self.pure(u, self.Aalg.unit)

    def embed_A(self, a: Sparse) -> Sparse:
        return self.pure(self.Ualg.unit, a)

    def basis(self, h: int) -> Sparse:
        return {h: Scalar.from_int(1, self.N)}

    def mul(self, x: Sparse, y: Sparse) -> Sparse:
        return self.algebra.mul(x, y)

    def cross(self, j: int, k: int) -> Sparse:
        """(1 (x) a_j)(u_k (x) 1)."""
        one = Scalar.from_int(1, self.N)
        return self.mul(self.embed_A({j: one}), self.embed_U({k: one}))

    def generators(self) -> list[Sparse]:
        """Elements generating the algebra: generators of U (x) 1 and of 1 (x) A."""
        if self._gens is None:
            one = Scalar.from_int(1, self.N)
            gu = algebra_generators(self.Ualg)
            ga = algebra_generators(self.Aalg)
            self._gens = [self.embed_U({i: one}) for i in gu] + [self.embed_A({j: one}) for j in ga]
        return self._gens


def factorization_check(H: FactorizedAlgebra) -> Report:
    """(u (x) 1)(u' (x) a') = u u' (x) a' and (u (x) a)(1 (x) a') = u (x) a a' on all basis elements."""
    rep = Report("factorization")
    one = Scalar.from_int(1, H.N)
    for i in range(H.dimU):
        left = H.embed_U({i: one})
        for k in range(H.dimU):
            for l in range(H.dimA):
                got = H.mul(left, H.basis(H.index(k, l)))
                want = H.pure(H.Ualg.mul_basis(i, k), {l: one})
                rep.checks += 1
                if got != want:
                    rep.fail(check="(u(x)1)(u'(x)a')", index=(i, k, l))
    for i in range(H.dimU):
        for j in range(H.dimA):
            for l in range(H.dimA):
                got = H.mul(H.basis(H.index(i, j)), H.embed_A({l: one}))
                want = H.pure({i: one}, H.Aalg.mul_basis(j, l))
                rep.checks += 1
                if got != want:
                    rep.fail(check="(u(x)a)(1(x)a')", index=(i, j, l))
    return rep


class TwistedAlgebra(FactorizedAlgebra):
    """H = U (x) A with the pairing-twisted product and the tensor coalgebra."""

    def __init__(self, U: HopfData, A: HopfData, pairing: Pairing, hopf: HopfData, cross_terms, name: str = ""):
        super().__init__(U.algebra, A.algebra, hopf.algebra, name)
        self.U = U
        self.A = A
        self.pairing = pairing
        self.H = hopf
        self.cross_terms = cross_terms

    def cross(self, j: int, k: int) -> Sparse:
        return dict(self.cross_terms[j][k])

    def grouplikes(self) -> list[Sparse]:
        """Group-likes of the tensor coalgebra: products of those of U and A."""
        return [self.pure(u, a) for u in hopf_grouplikes(self.U) for a in hopf_grouplikes(self.A)]


def _assemble(Ualg: AlgebraData, Aalg: AlgebraData, cross) -> list:
    """Product table from cross terms via (u (x) 1) X (1 (x) a')."""
    nU, nA = Ualg.dim, Aalg.dim
    n = nU * nA
    table = [[None] * n for _ in range(n)]
    for i in range(nU):
        urow = Ualg.mult[i]
        for j in range(nA):
            h1 = i * nA + j
            for k in range(nU):
                X = cross[j][k]
                for l in range(nA):
                    cell: dict = {}
                    for st, c in X.items():
                        s, t = divmod(st, nA)
                        pa = Aalg.mult[t][l]
                        for m, c1 in urow[s]:
                            cc = c * c1
                            for r, c2 in pa:
                                acc(cell, m * nA + r, cc * c2)
                    table[h1][k * nA + l] = sorted(cell.items())
    return table


def _twisted_cross(U: HopfData, A: HopfData, tau: la.Matrix, tau_inv: la.Matrix):
    nU, nA = U.dim, A.dim
    cross = [[None] * nU for _ in range(nA)]
    for j in range(nA):
        da = A.coalgebra.delta2(j)
        for k in range(nU):
            out: dict = {}
            for u1, u2, u3, cu in U.coalgebra.delta2(k):
                t_row = tau[u1]
                ti_row = tau_inv[u3]
                for a1, a2, a3, ca in da:
                    t1 = t_row[a1]
                    if not t1.num:
                        continue
                    t3 = ti_row[a3]
                    if not t3.num:
                        continue
                    acc(out, u2 * nA + a2, cu * ca * t1 * t3)
            cross[j][k] = out
    return cross


def _twisted_antipode(Ualg, Aalg, table, U: HopfData, A: HopfData) -> la.Matrix | None:
    if U.antipode is None or A.antipode is None:
        return None
    nU, nA = U.dim, A.dim
    n = nU * nA
    N = U.N
    H = AlgebraData.from_table(n, table, {}, N)
    one = Scalar.from_int(1, N)
    cols = []
    for i in range(nU):
        su = apply_matrix(U.antipode, {i: one})
        left_u = {s * nA + t: c * d for s, c in su.items() for t, d in Aalg.unit.items()}
        for j in range(nA):
            sa = apply_matrix(A.antipode, {j: one})
            right_a = {s * nA + t: c * d for s, c in Ualg.unit.items() for t, d in sa.items()}
            cols.append(to_dense(H.mul(right_a, left_u), n, N))
    return la.transpose(cols)


def _finish_twisted(U, A, pairing, table, cross, name, verify) -> TwistedAlgebra:
    nU, nA = U.dim, A.dim
    N = U.N
    unit = {s * nA + t: c * d for s, c in U.algebra.unit.items() for t, d in A.algebra.unit.items()}
    names = [f"{a}|{b}" for a in U.names for b in A.names]
    alg = AlgebraData.from_table(nU * nA, table, unit, N, names)
    coalg = tensor_coalgebra(U.coalgebra, A.coalgebra)
    S = _twisted_antipode(U.algebra, A.algebra, table, U, A)
    hopf = HopfData(alg, coalg, S, name=name)
    tw = TwistedAlgebra(U, A, pairing, hopf, cross, name)
    if verify:
        rep = factorization_check(tw)
        rep.merge(verify_hopf(hopf) if S is not None else verify_bialgebra(hopf))
        if not rep.ok:
            raise ValueError(f"twisted algebra {name} failed verification: {rep.failures[:3]}")
    return tw


def build_twisted(U: HopfData, A: HopfData, pairing: Pairing | la.Matrix, verify: bool = True,
                  name: str = "") -> TwistedAlgebra:
    """The twisted product on U (x) A defined by a convolution-invertible pairing."""
    if not isinstance(pairing, Pairing):
        pairing = Pairing(U, A, pairing)
    rep = verify_pairing_axioms(U, A, pairing.matrix)
    if not rep.ok:
        raise ValueError(f"invalid pairing: {rep.failures[:3]}")
    cross = _twisted_cross(U, A, pairing.matrix, pairing.inverse_matrix)
    table = _assemble(U.algebra, A.algebra, cross)
    return _finish_twisted(U, A, pairing, table, cross, name or f"({U.name}(x){A.name})^tau", verify)


def drinfeld_double(A: HopfData, verify: bool = True, compare: bool = True) -> TwistedAlgebra:
    """The double of A on A^{* cop} (x) A, built from

        (p (x) a)(q (x) b) = p (a1 -> q <- S^-1(a3)) (x) a2 b,

    where (a -> q <- c)(x) = q(c x a).  With ``compare`` set, the result is
    checked entrywise against :func:`build_twisted` with the evaluation pairing.
    """
    U = dual_cop(A)
    n, N = A.dim, A.N
    sinv = A.antipode_inverse()
    one = Scalar.from_int(1, N)
    # bimodule coefficients: coeff of e_r in S^-1(e_c) e_x e_a
    sinv_cols = [apply_matrix(sinv, {c: one}) for c in range(n)]
    sandwich: dict = {}

    def sandwiched(c: int, a: int) -> list[Sparse]:
        key = (c, a)
        got = sandwich.get(key)
        if got is None:
            got = [A.algebra.mul(A.algebra.mul(sinv_cols[c], {x: one}), {a: one}) for x in range(n)]
            sandwich[key] = got
        return got

    cross = [[None] * n for _ in range(n)]
    for j in range(n):
        d2 = A.coalgebra.delta2(j)
        for r in range(n):
            out: dict = {}
            for a1, a2, a3, c in d2:
                rows = sandwiched(a3, a1)
                for x in range(n):
                    v = rows[x].get(r)
                    if v is not None:
                        acc(out, x * n + a2, c * v)
            cross[j][r] = out
    table = _assemble(U.algebra, A.algebra, cross)
    pairing = evaluation_pairing(A, U)
    tw = _finish_twisted(U, A, pairing, table, cross, f"D({A.name})", verify)
    if compare:
        other = build_twisted(U, A, pairing, verify=False)
        if other.algebra.mult != tw.algebra.mult:
            raise AssertionError("direct double formula disagrees with the twisted construction")
    return tw


def comparison_map(H: TwistedAlgebra, double: TwistedAlgebra | None = None) -> tuple[la.Matrix, TwistedAlgebra]:
    """The map u (x) a -> tau_l(u) (x) a into the double of A, as a matrix."""
    D = drinfeld_double(H.A, verify=False, compare=False) if double is None else double
    nA = H.dimA
    N = H.N
    z = Scalar.from_int(0, N)
    f = [[z] * H.dim for _ in range(D.dim)]
    for i in range(H.dimU):
        row = H.pairing.matrix[i]
        for j in range(nA):
            for p in range(nA):
                if row[p].num:
                    f[p * nA + j][i * nA + j] = row[p]
    return f, D


def central_grouplike_scan(H: TwistedAlgebra, candidates: list[Sparse] | None = None) -> list[tuple[Sparse, Sparse]]:
    """Pairs (u, g), g group-like in A, for which u (x) g is central in H."""
    us = hopf_grouplikes(H.U) if candidates is None else candidates
    gs = hopf_grouplikes(H.A)
    gens = H.generators()
    out = []
    for u in us:
        for g in gs:
            x = H.pure(u, g)
            if all(H.mul(x, y) == H.mul(y, x) for y in gens):
                out.append((u, g))
    return out


def is_central(H: FactorizedAlgebra, x: Sparse) -> bool:
    return all(H.mul(x, y) == H.mul(y, x) for y in H.generators())


# --------------------------------------------------------------------------
# the cocycle

def cocycle_value(H: TwistedAlgebra, x: int, y: int, inverse: bool = False) -> Scalar:
    """sigma(u (x) a, u' (x) a') = eps(u) tau(u', a) eps(a') on basis elements."""
    i, j = H.split(x)
    k, l = H.split(y)
    m = H.pairing.inverse_matrix if inverse else H.pairing.matrix
    return H.U.coalgebra.counit[i] * m[k][j] * H.A.coalgebra.counit[l]


def cocycle_check(H: TwistedAlgebra, max_dim: int = 16) -> Report:
    """The 2-cocycle identity for sigma on the untwisted tensor product, plus
    agreement of the sigma-twisted product with the product of H."""
    if H.dim > max_dim:
        raise ValueError(f"cocycle sweep limited to dimension {max_dim}")
    rep = Report("cocycle")
    n = H.dim
    N = H.N
    plain = _plain_tensor(H)
    C = H.H.coalgebra
    sig = [[cocycle_value(H, x, y) for y in range(n)] for x in range(n)]
    sinv = [[cocycle_value(H, x, y, True) for y in range(n)] for x in range(n)]
    zero = Scalar.from_int(0, N)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = zero
                for x1, x2, cx in C.comult[x]:
                    for y1, y2, cy in C.comult[y]:
                        s = sig[x1][y1]
                        if not s.num:
                            continue
                        for m, c in plain.mult[x2][y2]:
                            t = sig[m][z]
                            if t.num:
                                lhs = lhs + cx * cy * s * c * t
                rhs = zero
                for y1, y2, cy in C.comult[y]:
                    for z1, z2, cz in C.comult[z]:
                        s = sig[y1][z1]
                        if not s.num:
                            continue
                        for m, c in plain.mult[y2][z2]:
                            t = sig[x][m]
                            if t.num:
                                rhs = rhs + cy * cz * s * c * t
                rep.checks += 1
                if lhs != rhs:
                    rep.fail(check="cocycle identity", index=(x, y, z))
    for x in range(n):
        dx = _delta2_list(C, x)
        for y in range(n):
            dy = _delta2_list(C, y)
            out: dict = {}
            for x1, x2, x3, cx in dx:
                for y1, y2, y3, cy in dy:
                    s = sig[x1][y1]
                    if not s.num:
                        continue
                    t = sinv[x3][y3]
                    if not t.num:
                        continue
                    for m, c in plain.mult[x2][y2]:
                        acc(out, m, cx * cy * s * t * c)
            rep.checks += 1
            if out != dict(H.algebra.mult[x][y]):
                rep.fail(check="twisted product", index=(x, y))
    return rep


def _delta2_list(C: CoalgebraData, k: int):
    return C.delta2(k)


def _plain_tensor(H: TwistedAlgebra) -> AlgebraData:
    from .algebra import tensor_algebra
    return tensor_algebra(H.U.algebra, H.A.algebra)


# --------------------------------------------------------------------------
# the reversed factorization

def op_reversal(H: FactorizedAlgebra) -> FactorizedAlgebra:
    """A^op (x) U^op with the product making a (x) u -> u (x) a an
    anti-isomorphism onto H, so (a (x) u)(a' (x) u') corresponds to
    (u' (x) a')(u (x) a)."""
    from .algebra import op_variant
    nU, nA = H.dimU, H.dimA
    n = nU * nA

    def flip(h: int) -> int:
        i, j = divmod(h, nA)
        return j * nU + i

    table = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            prod = H.algebra.mult[flip_inv(y, nU, nA)][flip_inv(x, nU, nA)]
            table[x][y] = sorted((flip(k), c) for k, c in prod)
    unit = {flip(k): c for k, c in H.algebra.unit.items()}
    alg = AlgebraData.from_table(n, table, unit, H.N)
    return FactorizedAlgebra(op_variant(H.Aalg), op_variant(H.Ualg), alg, name=f"rev({H.name})")


def flip_inv(h: int, nU: int, nA: int) -> int:
    # index in A (x) U back to U (x) A
    j, i = divmod(h, nU)
    return i * nA + j


# --------------------------------------------------------------------------
# Yetter-Drinfeld structures and the double pullback

def _yd_action(B: HopfData, beta: list[Scalar], b: int, m: Sparse, T: la.Matrix | None) -> Sparse:
    """b > m = beta(b2) b3 m T(b1); with T None the T(b1) factor is dropped
    and b1 is fed to beta instead (a deliberately wrong action for tests)."""
    one = Scalar.from_int(1, B.N)
    out: Sparse = {}
    for b1, b2, b3, c in B.coalgebra.delta2(b):
        if T is None:
            w = beta[b1] * beta[b2]
            if w.num:
                for k, v in B.algebra.mul({b3: one}, m).items():
                    acc(out, k, c * w * v)
            continue
        if not beta[b2].num:
            continue
        left = B.algebra.mul({b3: one}, m)
        for k, v in B.algebra.mul(left, apply_matrix(T, {b1: one})).items():
            acc(out, k, c * beta[b2] * v)
    return out


def yd_compat_check(B: HopfData, beta: list[Scalar], T: la.Matrix | None = None,
                    broken: bool = False) -> Report:
    """B with b > m = (b2 <- beta) m T(b1) and coaction Delta is a Yetter-Drinfeld
    module; both the two-sided compatibility and its solved form are checked on
    all basis pairs.  T defaults to the antipode of B^op (inverse antipode)."""
    if T is None:
        T = B.antipode_inverse()
    act_T = None if broken else T
    rep = Report("Yetter-Drinfeld")
    n = B.dim
    one = Scalar.from_int(1, B.N)
    actions = [[_yd_action(B, beta, b, {m: one}, act_T) for m in range(n)] for b in range(n)]

    def act(b: int, m: Sparse) -> Sparse:
        out: Sparse = {}
        for k, c in m.items():
            for j, v in actions[b][k].items():
                acc(out, j, c * v)
        return out

    for b in range(n):
        d2 = B.coalgebra.delta2(b)
        for m in range(n):
            bm = act(b, {m: one})
            # solved form: delta(b > m) = b2 > m0 (x) b3 m1 T(b1)
            lhs = B.coalgebra.delta(bm)
            rhs: dict = {}
            for b1, b2, b3, c in d2:
                tb1 = apply_matrix(T, {b1: one})
                for m0, m1, d in B.coalgebra.comult[m]:
                    x = act(b2, {m0: one})
                    y = B.algebra.mul(B.algebra.mul({b3: one}, {m1: one}), tb1)
                    for i, xv in x.items():
                        for j, yv in y.items():
                            acc(rhs, (i, j), c * d * xv * yv)
            rep.checks += 1
            if lhs != rhs:
                rep.fail(check="solved compatibility", index=(b, m))
            # two-sided form: b1 > m0 (x) b2 m1 = (b2 > m)0 (x) (b2 > m)1 b1
            left: dict = {}
            right: dict = {}
            for b1, b2, c in B.coalgebra.comult[b]:
                for m0, m1, d in B.coalgebra.comult[m]:
                    x = act(b1, {m0: one})
                    y = B.algebra.mul({b2: one}, {m1: one})
                    for i, xv in x.items():
                        for j, yv in y.items():
                            acc(left, (i, j), c * d * xv * yv)
                for (i, j), v in B.coalgebra.delta(act(b2, {m: one})).items():
                    for k, w in B.algebra.mul({j: one}, {b1: one}).items():
                        acc(right, (i, k), c * v * w)
            rep.checks += 1
            if left != right:
                rep.fail(check="two-sided compatibility", index=(b, m))
    return rep


def _grouplike_for(H: "TwistedAlgebra", rho: list[Scalar]) -> Sparse | None:
    """A group-like g of A with rho(u) = tau(u, g) for every u, if one exists."""
    for g in hopf_grouplikes(H.A):
        vals = [_form(H.pairing.matrix, {i: Scalar.from_int(1, H.N)}, g, H.N) for i in range(H.dimU)]
        if vals == list(rho):
            return g
    return None


def double_pullback_check(H: "TwistedAlgebra", rho: list[Scalar], chi: list[Scalar],
                          g: Sparse | None = None) -> Report:
    """(u (x) a') ._rho p = f(u (x) a') . p for all basis u, a' and p in A*.

    The left side is the transpose of the right module A_rho; the right side
    is the double acting on A* through the Yetter-Drinfeld structure
    (A*, >_{i(g)}, Delta) pulled back along the comparison map f, where g is
    the group-like with rho = tau(-, g).  Also checks that the H-span of chi
    equals its U-span.
    """
    from .modules import induced_A_rho
    rep = Report("double pullback")
    if g is None:
        g = _grouplike_for(H, rho)
        if g is None:
            raise ValueError("rho is not of the form tau(-, g) for a group-like g")
    A = H.A
    n, N = A.dim, H.N
    one = Scalar.from_int(1, N)
    Bd = dual_hopf(A)
    beta = to_dense(g, n, N)  # i(g)(p) = p(g) in the dual basis
    T = Bd.antipode_inverse()
    Arho = induced_A_rho(H, rho, check=False)
    f, _ = comparison_map(H)
    # (i(b) -> m)(x) = m(x b)
    hit = [[None] * n for _ in range(n)]
    for b in range(n):
        for m in range(n):
            vec: Sparse = {}
            for x in range(n):
                c = A.algebra.mul({x: one}, {b: one}).get(m)
                if c is not None and c.num:
                    vec[x] = c
            hit[b][m] = vec
    yd = [[_yd_action(Bd, beta, P, {m: one}, T) for m in range(n)] for P in range(n)]

    def bullet(P: int, b: int, p: Sparse) -> Sparse:
        out: Sparse = {}
        for m, c in p.items():
            for x, v in hit[b][m].items():
                for k, w in yd[P][x].items():
                    acc(out, k, c * v * w)
        return out

    for h in range(H.dim):
        Nt = la.transpose(Arho.basis_actions[h])
        col = [f[r][h] for r in range(len(f))]
        for p in range(n):
            lhs = to_sparse(la.matvec(Nt, la.unit_vector(n, p, N)))
            rhs: Sparse = {}
            for idx, c in enumerate(col):
                if c.num:
                    P, b = divmod(idx, n)
                    for k, v in bullet(P, b, {p: one}).items():
                        acc(rhs, k, c * v)
            rep.checks += 1
            if lhs != rhs:
                rep.fail(check="pullback action", index=(h, p))
    chi_vec = list(chi)
    hspan = la.span([la.matvec(la.transpose(m), chi_vec) for m in Arho.basis_actions], n, N)
    uspan = la.span([la.matvec(la.transpose(Arho.action(H.embed_U({i: one}))), chi_vec)
                     for i in range(H.dimU)], n, N)
    rep.checks += 1
    if hspan != uspan:
        rep.fail(check="H-span of chi equals U-span")
    return rep
