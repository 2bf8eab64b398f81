"""The bilinear form Psi(a, u) = (rho (x) chi)((1 (x) a)(u (x) 1)) on A x U.

Stored as a dim(A) x dim(U) matrix P with P[j][i] = Psi(a_j, u_i).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg as la
from .algebra import Report, to_dense
from .modules import (Representation, TripleObject, build_L, build_R, induced_A_rho, induced_U_chi,
                      largest_submodule_within, kernel_of)
from .scalars import Scalar

Matrix = la.Matrix


@dataclass
class PairingForm:
    matrix: Matrix
    H: object
    rho: list[Scalar]
    chi: list[Scalar]
    report: Report = field(default_factory=lambda: Report("psi"))
    Uchi: Representation | None = None
    Arho: Representation | None = None

    @property
    def rank(self) -> int:
        return la.rank(self.matrix)

    def to_json(self) -> dict:
        return {"matrix": [[x.to_json() for x in r] for r in self.matrix], "rank": self.rank,
                "report": self.report.to_json()}


def _zero(N: int) -> Scalar:
    return Scalar.from_int(0, N)


def psi_definition(H, rho: list[Scalar], chi: list[Scalar]) -> Matrix:
    nU, nA, N = H.dimU, H.dimA, H.N
    P = la.zeros(nA, nU, N)
    for j in range(nA):
        for i in range(nU):
            acc = _zero(N)
            for idx, c in H.cross(j, i).items():
                s, t = divmod(idx, nA)
                if rho[s].num and chi[t].num:
                    acc = acc + c * rho[s] * chi[t]
            P[j][i] = acc
    return P


def balancedness(P: Matrix, Uchi: Representation, Arho: Representation) -> Report:
    """Psi(a . h, u) = Psi(a, h . u) for all basis h, i.e. N_h^T P = P M_h."""
    rep = Report("balanced")
    for h, (Mh, Nh) in enumerate(zip(Uchi.basis_actions, Arho.basis_actions)):
        lhs = la.matmul(la.transpose(Nh), P)
        rhs = la.matmul(P, Mh)
        for j in range(len(P)):
            for i in range(len(P[0])):
                rep.checks += 1
                if lhs[j][i] != rhs[j][i]:
                    rep.fail(check="balanced", h=h, a=j, u=i)
    return rep


def psi_form(H, rho: list[Scalar], chi: list[Scalar], Uchi: Representation | None = None,
             Arho: Representation | None = None) -> PairingForm:
    """Psi together with its two module-theoretic expressions and balancedness.

    Psi(a, u) = rho((1 (x) a) ._chi u) = chi(a ._rho (u (x) 1)).
    """
    Uchi = Uchi or induced_U_chi(H, chi)
    Arho = Arho or induced_A_rho(H, rho)
    nU, nA, N = H.dimU, H.dimA, H.N
    one = Scalar.from_int(1, N)
    P = psi_definition(H, rho, chi)
    rep = Report("psi")
    for j in range(nA):
        Mj = Uchi.action(H.embed_A({j: one}))
        for i in range(nU):
            via_u = _dot(rho, [Mj[s][i] for s in range(nU)])
            rep.checks += 1
            if via_u != P[j][i]:
                rep.fail(check="rho((1(x)a).u)", a=j, u=i)
    for i in range(nU):
        Ni = Arho.action(H.embed_U({i: one}))
        for j in range(nA):
            via_a = _dot(chi, [Ni[t][j] for t in range(nA)])
            rep.checks += 1
            if via_a != P[j][i]:
                rep.fail(check="chi(a.(u(x)1))", a=j, u=i)
    rep.merge(balancedness(P, Uchi, Arho))
    return PairingForm(P, H, rho, chi, rep, Uchi, Arho)


def _dot(u, v) -> Scalar:
    out = _zero(u[0].N)
    for a, b in zip(u, v):
        if a.num and b.num:
            out = out + a * b
    return out


def radicals(F: PairingForm) -> tuple[list, list]:
    """(left radical inside A, right radical inside U)."""
    P = F.matrix
    N = F.H.N
    left = la.span(la.nullspace(la.transpose(P), len(P), N), len(P), N)
    right = la.span(la.nullspace(P, len(P[0]), N), len(P[0]), N)
    return left, right


def radicals_check(F: PairingForm) -> Report:
    """The right radical is I(rho, chi) and the left radical is J(chi, rho),
    the latter two computed as largest submodules inside the character kernels."""
    rep = Report("radicals")
    left, right = radicals(F)
    N = F.H.N
    I = largest_submodule_within(F.Uchi, kernel_of(F.rho, N))
    J = largest_submodule_within(F.Arho, kernel_of(F.chi, N))
    rep.checks += 2
    if la.span(I, F.H.dimU, N) != right:
        rep.fail(check="U-side radical equals I", dims=(len(I), len(right)))
    if la.span(J, F.H.dimA, N) != left:
        rep.fail(check="A-side radical equals J", dims=(len(J), len(left)))
    return rep


@dataclass
class InducedForm:
    matrix: Matrix
    L: TripleObject
    R: TripleObject
    report: Report


def induced_form(F: PairingForm, L: TripleObject | None = None, R: TripleObject | None = None) -> InducedForm:
    """The form on R(chi, rho) x L(rho, chi) in the quotient bases."""
    H = F.H
    L = L or build_L(H, F.rho, F.chi, F.Uchi)
    R = R or build_R(H, F.chi, F.rho, F.Arho)
    if L.dim != R.dim:
        raise AssertionError(f"dim L = {L.dim} differs from dim R = {R.dim}")
    keepU, keepA = L.info["keep"], R.info["keep"]
    Q = [[F.matrix[j][i] for i in keepU] for j in keepA]
    rep = Report("induced form")
    rep.checks += 1
    if L.dim and not la.det(Q).num:
        rep.fail(check="non-singular")
    for h, (Mh, Nh) in enumerate(zip(L.M.basis_actions, R.M.basis_actions)):
        lhs = la.matmul(la.transpose(Nh), Q)
        rhs = la.matmul(Q, Mh)
        rep.checks += 1
        if lhs != rhs:
            rep.fail(check="balanced on quotients", h=h)
    return InducedForm(Q, L, R, rep)


def realize_L_in_dual(F: PairingForm) -> Report:
    """u + I -> Psi(-, u) embeds L(rho, chi) in the dual of A: its image has
    dimension rank(Psi) = dim L."""
    rep = Report("L in dual of A")
    H = F.H
    L = build_L(H, F.rho, F.chi, F.Uchi)
    cols = [[F.matrix[j][i] for j in range(H.dimA)] for i in L.info["keep"]]
    rep.checks += 2
    r = la.rank(cols) if cols else 0
    if r != L.dim:
        rep.fail(check="injective", rank=r, dim=L.dim)
    if r != F.rank:
        rep.fail(check="image dimension is rank", rank=r)
    return rep


# --------------------------------------------------------------------------
# bialgebra closed forms

def _conv(C, p: list[Scalar], q: list[Scalar], N: int) -> list[Scalar]:
    """Convolution product of functionals on a coalgebra C."""
    out = []
    for k in range(C.dim):
        acc = _zero(N)
        for i, j, c in C.comult[k]:
            if p[i].num and q[j].num:
                acc = acc + c * p[i] * q[j]
        out.append(acc)
    return out


def _compose(p: list[Scalar], m: Matrix) -> list[Scalar]:
    """p o m with m acting on coordinate columns."""
    n = len(m)
    return [_dot(p, [m[r][c] for r in range(n)]) for c in range(len(m[0]))]


def psi_conjugation(H, rho, chi) -> Matrix:
    """Psi(a, u) = tau(u1, a1) rho(u2) chi(a2) tau^-1(u3, a3)."""
    U, A, tau = H.U, H.A, H.pairing
    N = H.N
    P = la.zeros(H.dimA, H.dimU, N)
    for j in range(H.dimA):
        dA = A.coalgebra.delta2(j)
        for i in range(H.dimU):
            acc = _zero(N)
            for u1, u2, u3, cu in U.coalgebra.delta2(i):
                if not rho[u2].num:
                    continue
                for a1, a2, a3, ca in dA:
                    if not chi[a2].num:
                        continue
                    t = tau.matrix[u1][a1]
                    ti = tau.inverse_matrix[u3][a3]
                    if t.num and ti.num:
                        acc = acc + cu * ca * t * rho[u2] * chi[a2] * ti
            P[j][i] = acc
    return P


def psi_right_closed(H, rho, chi) -> Matrix:
    """Psi_r(u) = tau_l(rho -> u1) chi S^-1(tau_l(u2)) as functionals on A."""
    U, A, tau = H.U, H.A, H.pairing
    N = H.N
    if A.antipode is None:
        raise ValueError("missing antipode")
    sinvA = A.antipode_inverse()
    cols = []
    for i in range(H.dimU):
        total = [_zero(N)] * H.dimA
        for u1, u2, c in U.coalgebra.comult[i]:
            # rho -> u1 = u1_(1) rho(u1_(2))
            left = [_zero(N)] * H.dimA
            for x, y, d in U.coalgebra.comult[u1]:
                if rho[y].num:
                    left = la.vadd(left, la.vscale(d * rho[y], tau.matrix[x]))
            tl2 = tau.matrix[u2]
            # S^-1 on the dual of A is composition with the inverse antipode of A
            right = _compose(tl2, sinvA)
            term = _conv(A.coalgebra, _conv(A.coalgebra, left, chi, N), right, N)
            total = la.vadd(total, la.vscale(c, term))
        cols.append(total)
    return la.transpose(cols)


def psi_left_closed(H, rho, chi) -> Matrix:
    """Psi_l(a) = tau_r(a1) rho S(tau_r(a2 <- chi)) as functionals on U."""
    U, A, tau = H.U, H.A, H.pairing
    N = H.N
    if U.antipode is None:
        raise ValueError("missing antipode")
    SU = U.antipode_matrix()
    T = la.transpose(tau.matrix)  # T[a] = tau_r(a) as a functional on U
    rows = []
    for j in range(H.dimA):
        total = [_zero(N)] * H.dimU
        for a1, a2, c in A.coalgebra.comult[j]:
            # a2 <- chi = chi(a2_(1)) a2_(2)
            shifted = [_zero(N)] * H.dimU
            for x, y, d in A.coalgebra.comult[a2]:
                if chi[x].num:
                    shifted = la.vadd(shifted, la.vscale(d * chi[x], T[y]))
            right = _compose(shifted, SU)
            term = _conv(U.coalgebra, _conv(U.coalgebra, T[a1], rho, N), right, N)
            total = la.vadd(total, la.vscale(c, term))
        rows.append(total)
    return rows


def bialgebra_formula_crosscheck(H, rho, chi) -> Report:
    """Psi from the definition, the tau-conjugation formula, and both closed
    one-sided formulas agree entrywise."""
    rep = Report("psi closed forms")
    P = psi_definition(H, rho, chi)
    for label, Q in (("conjugation", psi_conjugation(H, rho, chi)),
                     ("right closed form", psi_right_closed(H, rho, chi)),
                     ("left closed form", psi_left_closed(H, rho, chi))):
        rep.checks += 1
        if Q != P:
            bad = [(j, i) for j in range(len(P)) for i in range(len(P[0])) if P[j][i] != Q[j][i]]
            rep.fail(check=label, entries=bad[:5])
    return rep


def unit_vector_form(H) -> Matrix:
    """eps (x) eps as a matrix, the form of the trivial character pair."""
    e_a = to_dense({k: v for k, v in enumerate(H.A.coalgebra.counit) if v.num}, H.dimA, H.N)
    e_u = to_dense({k: v for k, v in enumerate(H.U.coalgebra.counit) if v.num}, H.dimU, H.N)
    return [[x * y for y in e_u] for x in e_a]
