"""Modules given by action matrices.

A :class:`Representation` stores one matrix per named generator, acting on
column vectors.  For right modules the same convention is used, so the
matrix of ``g h`` is ``act(h) @ act(g)``; subspace questions (closure,
largest submodule, intertwiners) do not care about the side.

Modules over a factorized algebra H = U (x) A additionally keep the matrix
of every basis element of H, which makes arbitrary elements act.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product as iproduct
from typing import Any

from . import linalg as la
from .algebra import (Report, Sparse, algebra_characters, algebra_generators, check_character, evaluate,
                      hopf_grouplikes, to_dense, to_sparse)
from .scalars import Field, Scalar

Matrix = la.Matrix
Vector = la.Vector


class ModuleError(ValueError):
    pass


class UnsupportedModule(ModuleError):
    """Raised when a module falls outside the multiplicity-free setting."""


@dataclass
class Representation:
    dim: int
    N: int
    gens: dict[str, Matrix]
    side: str = "left"
    algebra: Any = None
    basis_actions: list[Matrix] | None = None
    torus: list[str] = field(default_factory=list)
    skew: list[str] = field(default_factory=list)
    label: str = ""

    def act(self, name: str) -> Matrix:
        return self.gens[name]

    def action(self, h: Sparse) -> Matrix:
        """Matrix of an arbitrary element of the algebra (needs basis actions)."""
        if self.basis_actions is None:
            raise ModuleError("this representation only knows its generators")
        out = la.zeros(self.dim, self.dim, self.N)
        for k, c in h.items():
            out = la.add(out, la.scale(c, self.basis_actions[k]))
        return out

    def _map(self, fn) -> tuple[dict[str, Matrix], list[Matrix] | None]:
        gens = {k: fn(m) for k, m in self.gens.items()}
        basis = [fn(m) for m in self.basis_actions] if self.basis_actions is not None else None
        return gens, basis

    def restrict(self, basis: list[Vector]) -> "Representation":
        """The submodule spanned by ``basis`` (which must be invariant), in that basis."""
        def fn(m: Matrix) -> Matrix:
            out = []
            for v in basis:
                c = la.coordinates(basis, la.matvec(m, v))
                if c is None:
                    raise ModuleError("subspace is not invariant")
                out.append(c)
            return la.transpose(out) if out else []

        gens, ba = self._map(fn)
        return Representation(len(basis), self.N, gens, self.side, self.algebra, ba,
                              list(self.torus), list(self.skew), self.label + "|sub")

    def quotient(self, sub: list[Vector]) -> tuple["Representation", "Quotient"]:
        q = Quotient(self.dim, self.N, la.span(sub, self.dim, self.N))

        def fn(m: Matrix) -> Matrix:
            cols = [q.project([m[r][c] for r in range(self.dim)]) for c in q.keep]
            return la.transpose(cols) if cols else []

        gens, ba = self._map(fn)
        rep = Representation(len(q.keep), self.N, gens, self.side, self.algebra, ba,
                             list(self.torus), list(self.skew), self.label + "/sub")
        return rep, q

    def to_json(self) -> dict:
        return {"dim": self.dim, "side": self.side,
                "generators": [{"name": k, "matrix": [[x.to_json() for x in r] for r in m]}
                               for k, m in self.gens.items()]}


@dataclass
class Quotient:
    """Projection onto V/W, the quotient basis being the images of the
    standard basis vectors outside the pivot columns of W."""

    dim: int
    N: int
    sub: list[Vector]

    def __post_init__(self):
        _, piv = la.rref(self.sub) if self.sub else ([], [])
        self.pivots = piv
        self.keep = [i for i in range(self.dim) if i not in set(piv)]

    def project(self, v: Vector) -> Vector:
        v = list(v)
        for row, p in zip(self.sub, self.pivots):
            c = v[p]
            if c.num:
                v = [x - c * y if y.num else x for x, y in zip(v, row)]
        return [v[i] for i in self.keep]

    def matrix(self) -> Matrix:
        cols = [self.project(la.unit_vector(self.dim, j, self.N)) for j in range(self.dim)]
        return la.transpose(cols)


# --------------------------------------------------------------------------
# modules over U (x) A

def hmodule(H, basis_actions: list[Matrix], side: str, label: str = "") -> Representation:
    """Wrap the basis action matrices of a factorized algebra as a representation.

    Generators are those of H; the group-likes of H (when H is twisted) form
    the torus used for weight decompositions.
    """
    dim = len(basis_actions[0]) if basis_actions else 0
    N = H.N
    rep = Representation(dim, N, {}, side, H, basis_actions, label=label)
    one = Scalar.from_int(1, N)
    for i in algebra_generators(H.Ualg):
        rep.gens[f"U:{H.Ualg.names[i]}"] = rep.action(H.embed_U({i: one}))
    for j in algebra_generators(H.Aalg):
        rep.gens[f"A:{H.Aalg.names[j]}"] = rep.action(H.embed_A({j: one}))
    if hasattr(H, "grouplikes"):
        for k, g in enumerate(H.grouplikes()):
            name = f"G:{k}"
            rep.gens.setdefault(name, rep.action(g))
            rep.torus.append(name)
    return rep


def _check_char(alg, chi: list[Scalar], what: str) -> None:
    rep = check_character(alg, chi)
    if not rep.ok:
        raise ModuleError(f"{what} is not an algebra character: {rep.failures[:2]}")


def induced_U_chi(H, chi: list[Scalar], check: bool = True) -> Representation:
    """U with (u (x) a) . u' = (id (x) chi)((u (x) a)(u' (x) 1))."""
    if check:
        _check_char(H.Aalg, chi, "chi")
    nU, nA, N = H.dimU, H.dimA, H.N
    one = Scalar.from_int(1, N)
    z = Scalar.from_int(0, N)
    mats = []
    for h in range(H.dim):
        m = [[z] * nU for _ in range(nU)]
        for k in range(nU):
            prod = H.mul({h: one}, H.embed_U({k: one}))
            for idx, c in prod.items():
                s, t = divmod(idx, nA)
                if chi[t].num:
                    m[s][k] = m[s][k] + c * chi[t]
        mats.append(m)
    return hmodule(H, mats, "left", "U_chi")


def induced_A_rho(H, rho: list[Scalar], check: bool = True) -> Representation:
    """A as a right module: a . (u (x) a') = (rho (x) id)((1 (x) a)(u (x) a'))."""
    if check:
        _check_char(H.Ualg, rho, "rho")
    nA, N = H.dimA, H.N
    one = Scalar.from_int(1, N)
    z = Scalar.from_int(0, N)
    mats = []
    for h in range(H.dim):
        m = [[z] * nA for _ in range(nA)]
        for j in range(nA):
            prod = H.mul(H.embed_A({j: one}), {h: one})
            for idx, c in prod.items():
                s, t = divmod(idx, nA)
                if rho[s].num:
                    m[t][j] = m[t][j] + c * rho[s]
        mats.append(m)
    return hmodule(H, mats, "right", "A_rho")


def induced_U_chi_formula(H, chi: list[Scalar]) -> list[Matrix]:
    """Basis actions of U_chi from the closed bialgebra formula

        (u (x) a) . u' = u tau(u'1, a1) u'2 chi(a2) tau^-1(u'3, a3).
    """
    U, A, tau = H.U, H.A, H.pairing
    nU, nA, N = H.dimU, H.dimA, H.N
    z = Scalar.from_int(0, N)
    # w[j][k] = tau(u'1,a1) u'2 chi(a2) tau^-1(u'3,a3) for a = a_j, u' = u_k
    w = [[{} for _ in range(nU)] for _ in range(nA)]
    for j in range(nA):
        dA = A.coalgebra.delta2(j)
        for k in range(nU):
            out: dict = {}
            for u1, u2, u3, cu in U.coalgebra.delta2(k):
                for a1, a2, a3, ca in dA:
                    t = tau.matrix[u1][a1]
                    if not t.num or not chi[a2].num:
                        continue
                    ti = tau.inverse_matrix[u3][a3]
                    if not ti.num:
                        continue
                    c = cu * ca * t * chi[a2] * ti
                    out[u2] = out.get(u2, z) + c
            w[j][k] = {i: c for i, c in out.items() if c.num}
    mats = []
    for h in range(H.dim):
        i, j = H.split(h)
        m = [[z] * nU for _ in range(nU)]
        for k in range(nU):
            for s, c in U.algebra.mul({i: Scalar.from_int(1, N)}, w[j][k]).items():
                m[s][k] = m[s][k] + c
        mats.append(m)
    return mats


def induced_A_rho_formula(H, rho: list[Scalar]) -> list[Matrix]:
    """Basis actions of A_rho from a . (u (x) a') = tau(u1,a1) rho(u2) a2 tau^-1(u3,a3) a'."""
    U, A, tau = H.U, H.A, H.pairing
    nA, N = H.dimA, H.N
    z = Scalar.from_int(0, N)
    one = Scalar.from_int(1, N)
    w = [[{} for _ in range(H.dimU)] for _ in range(nA)]
    for j in range(nA):
        dA = A.coalgebra.delta2(j)
        for i in range(H.dimU):
            out: dict = {}
            for u1, u2, u3, cu in U.coalgebra.delta2(i):
                if not rho[u2].num:
                    continue
                for a1, a2, a3, ca in dA:
                    t = tau.matrix[u1][a1]
                    ti = tau.inverse_matrix[u3][a3]
                    if t.num and ti.num:
                        out[a2] = out.get(a2, z) + cu * ca * t * rho[u2] * ti
            w[j][i] = {k: c for k, c in out.items() if c.num}
    mats = []
    for h in range(H.dim):
        i, l = H.split(h)
        m = [[z] * nA for _ in range(nA)]
        for j in range(nA):
            for t, c in A.algebra.mul(w[j][i], {l: one}).items():
                m[t][j] = m[t][j] + c
        mats.append(m)
    return mats


# --------------------------------------------------------------------------
# subspaces and submodules

def kernel_of(functional: list[Scalar], N: int) -> list[Vector]:
    return la.span(la.nullspace([list(functional)], len(functional), N), len(functional), N)


def _closure_gens(M: Representation) -> list[Matrix]:
    return list(M.gens.values())


def submodule_generated(M: Representation, v: Vector | list[Vector]) -> list[Vector]:
    """Echelon basis of the smallest invariant subspace containing v."""
    vecs = v if v and isinstance(v[0], list) else [v]
    basis = la.span([x for x in vecs if not la.is_zero_vector(x)], M.dim, M.N)
    frontier = list(basis)
    gens = _closure_gens(M)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = la.matvec(g, x)
                if not la.contains(basis, y):
                    basis = la.span(basis + [y], M.dim, M.N)
                    new.append(y)
        frontier = new
    return basis


def largest_submodule_within(M: Representation, W: list[Vector]) -> list[Vector]:
    """The largest invariant subspace contained in span(W), as a fixpoint of
    V -> {v in V : g v in V for every generator g}."""
    V = la.span(W, M.dim, M.N) if W else []
    gens = _closure_gens(M)
    while V:
        ann = la.annihilator(V, M.dim, M.N)
        if not ann:
            return V
        cols = la.transpose(V)
        rows = []
        for g in gens:
            gv = la.matmul(g, cols)
            rows.extend(la.matmul(ann, gv))
        sol = la.nullspace(rows, len(V), M.N)
        if len(sol) == len(V):
            return V
        V = la.span([la.matvec(cols, s) for s in sol], M.dim, M.N) if sol else []
    return []


def is_invariant(M: Representation, W: list[Vector]) -> bool:
    return all(la.contains(W, la.matvec(g, w)) for g in _closure_gens(M) for w in W)


# --------------------------------------------------------------------------
# L, R and the triple category

@dataclass
class TripleObject:
    M: Representation
    m: Vector
    N: list[Vector]
    rho: list[Scalar] | None = None
    chi: list[Scalar] | None = None
    side: str = "left"
    info: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.M.dim

    def to_json(self) -> dict:
        return {"dim": self.dim, "side": self.side,
                "m": [x.to_json() for x in self.m],
                "N": [[x.to_json() for x in v] for v in self.N],
                "module": self.M.to_json()}


def _parts(T: TripleObject, H):
    """Names of the generators acting as the 'one-dimensional' part and the
    'codimension one' part for the given side."""
    if T.side == "left":
        return "A", "U", T.chi, T.rho, H.Aalg, H.Ualg
    return "U", "A", T.rho, T.chi, H.Ualg, H.Aalg


def build_L(H, rho: list[Scalar], chi: list[Scalar], Uchi: Representation | None = None) -> TripleObject:
    """L(rho, chi) = U_chi / I with I the largest submodule inside Ker rho."""
    Uchi = Uchi or induced_U_chi(H, chi)
    _check_char(H.Ualg, rho, "rho")
    ker = kernel_of(rho, H.N)
    I = largest_submodule_within(Uchi, ker)
    L, q = Uchi.quotient(I)
    L.label = "L"
    unit = to_dense(H.Ualg.unit, H.dimU, H.N)
    m = q.project(unit)
    Nsub = la.span([q.project(v) for v in ker], L.dim, H.N)
    return TripleObject(L, m, Nsub, rho, chi, "left", {"I": I, "keep": q.keep, "quotient": q, "Uchi": Uchi})


def build_R(H, chi: list[Scalar], rho: list[Scalar], Arho: Representation | None = None) -> TripleObject:
    """R(chi, rho) = A_rho / J with J the largest submodule inside Ker chi."""
    Arho = Arho or induced_A_rho(H, rho)
    _check_char(H.Aalg, chi, "chi")
    ker = kernel_of(chi, H.N)
    J = largest_submodule_within(Arho, ker)
    R, q = Arho.quotient(J)
    R.label = "R"
    unit = to_dense(H.Aalg.unit, H.dimA, H.N)
    m = q.project(unit)
    Nsub = la.span([q.project(v) for v in ker], R.dim, H.N)
    return TripleObject(R, m, Nsub, rho, chi, "right", {"J": J, "keep": q.keep, "quotient": q, "Arho": Arho})


def verify_triple(T: TripleObject) -> Report:
    """Check the defining conditions of an object (M, km, N) of the triple category,
    together with the annihilator identities for its characters."""
    M = T.M
    H = M.algebra
    rep = Report(f"triple[{T.side}]")
    one_part, codim_part, lam, mu, alg1, alg2 = _parts(T, H)
    N = M.N
    one = Scalar.from_int(1, N)
    embed1 = H.embed_A if one_part == "A" else H.embed_U
    embed2 = H.embed_U if codim_part == "U" else H.embed_A
    rep.checks += 1
    if la.is_zero_vector(T.m):
        rep.fail(check="m nonzero")
    # k m is stable under the one-dimensional part, with eigenvalue lam
    for j in range(alg1.dim):
        g = M.action(embed1({j: one}))
        rep.checks += 1
        got = la.matvec(g, T.m)
        if lam is not None:
            if got != la.vscale(lam[j], T.m):
                rep.fail(check="ann(km) = Ker character", index=j)
        elif not la.contains([T.m], got):
            rep.fail(check="km stable", index=j)
    rep.checks += 1
    if len(la.span(submodule_generated(M, T.m), M.dim, N)) != M.dim:
        rep.fail(check="m generates M")
    rep.checks += 1
    if len(T.N) != M.dim - 1:
        rep.fail(check="N has codimension one", dim=len(T.N))
    # N stable under the codimension-one part, acting on M/N through mu
    for i in range(alg2.dim):
        g = M.action(embed2({i: one}))
        for v in T.N:
            rep.checks += 1
            if not la.contains(T.N, la.matvec(g, v)):
                rep.fail(check="N stable", index=i)
                break
        if mu is not None:
            rep.checks += 1
            x = _outside(T.N, M.dim, N)
            diff = la.vsub(la.matvec(g, x), la.vscale(mu[i], x))
            if not la.contains(T.N, diff):
                rep.fail(check="ann(M/N) = Ker character", index=i)
    rep.checks += 1
    if largest_submodule_within(M, T.N):
        rep.fail(check="no nonzero submodule inside N")
    return rep


def _outside(sub: list[Vector], dim: int, N: int) -> Vector:
    idx = la.complement_indices(sub, dim)
    return la.unit_vector(dim, idx[0], N)


def character_pairs(H) -> tuple[list[list[Scalar]], list[list[Scalar]]]:
    """(characters of U, characters of A), counits first when available."""
    U = getattr(H, "U", None) or H.Ualg
    A = getattr(H, "A", None) or H.Aalg
    return algebra_characters(U), algebra_characters(A)


def all_L(H) -> dict[tuple[int, int], TripleObject]:
    """L(rho_r, chi_c) for every pair, keyed by (rho index, chi index)."""
    rhos, chis = character_pairs(H)
    out = {}
    for c, chi in enumerate(chis):
        Uchi = induced_U_chi(H, chi)
        for r, rho in enumerate(rhos):
            out[(r, c)] = build_L(H, rho, chi, Uchi)
    return dict(sorted(out.items()))


def all_R(H) -> dict[tuple[int, int], TripleObject]:
    rhos, chis = character_pairs(H)
    out = {}
    for r, rho in enumerate(rhos):
        Arho = induced_A_rho(H, rho)
        for c, chi in enumerate(chis):
            out[(r, c)] = build_R(H, chi, rho, Arho)
    return dict(sorted(out.items()))


# --------------------------------------------------------------------------
# weights, simplicity, isomorphism

def _eigen_candidates(N: int, extra: list[Scalar] | None) -> list[Scalar]:
    F = Field(N)
    return F.roots_of_unity() + list(extra or [])


def _eigenspaces(m: Matrix, basis: list[Vector], N: int, cands: list[Scalar]):
    """Split span(basis) (invariant under m) into eigenspaces of m."""
    out = []
    if not basis:
        return out
    cols = la.transpose(basis)
    image = la.matmul(m, cols)
    for c in cands:
        shifted = [[image[r][t] - c * cols[r][t] for t in range(len(basis))] for r in range(len(cols))]
        sol = la.nullspace(shifted, len(basis), N)
        if sol:
            out.append((c, la.span([la.matvec(cols, s) for s in sol], len(cols), N)))
    return out


def _diagnose(m: Matrix, N: int, cands: list[Scalar]) -> str:
    n = len(m)
    # eigenvalues in the field but too few eigenvectors -> not diagonalizable
    total = 0
    for c in cands:
        shifted = la.sub(m, la.scale(c, la.identity(n, N)))
        p = shifted
        for _ in range(n - 1):
            p = la.matmul(p, shifted)
        total += len(la.nullspace(p, n, N))
    if total == n:
        return "action is not diagonalizable"
    p = m
    I = la.identity(n, N)
    for k in range(1, 4 * n * max(N, 2) + 1):
        if p == I:
            return f"eigenvalues include a primitive root of unity of order dividing {k} outside Q(zeta_{N})"
        p = la.matmul(p, m)
    return f"eigenvalues lie outside the session field Q(zeta_{N})(q)"


def weight_decomposition(M: Representation, torus: list[str] | None = None,
                         candidates: list[Scalar] | None = None) -> list[tuple[dict[str, Scalar], list[Vector]]]:
    """Joint eigenspaces of the commuting torus generators.

    Returns (weight, basis) pairs, the weight mapping generator names to
    eigenvalues.  Raises when the space does not split over the field.
    """
    names = M.torus if torus is None else torus
    N = M.N
    cands = _eigen_candidates(N, candidates)
    spaces: list[tuple[dict, list[Vector]]] = [({}, la.identity(M.dim, N))] if M.dim else []
    for name in names:
        m = M.gens[name]
        new = []
        for w, basis in spaces:
            parts = _eigenspaces(m, basis, N, cands)
            if sum(len(b) for _, b in parts) != len(basis):
                raise ModuleError(f"generator {name}: {_diagnose(m, N, cands)}")
            for c, b in parts:
                new.append(({**w, name: c}, b))
        spaces = new
    return spaces


def _weight_vectors(M: Representation, torus=None, candidates=None) -> list[Vector]:
    wd = weight_decomposition(M, torus, candidates)
    if any(len(b) > 1 for _, b in wd):
        raise UnsupportedModule("a weight space has dimension > 1; use randomized_cyclic_check")
    return [b[0] for _, b in wd]


def is_simple(M: Representation, torus: list[str] | None = None, candidates=None) -> bool:
    """Exact simplicity test for multiplicity-free weight modules: every
    submodule is spanned by weight vectors, so M is simple iff each weight
    vector generates M."""
    if M.dim == 0:
        return False
    return all(len(submodule_generated(M, v)) == M.dim for v in _weight_vectors(M, torus, candidates))


def randomized_cyclic_check(M: Representation, trials: int = 8, seed: int = 0) -> bool:
    """Non-certifying: True when every tried vector generates M."""
    import random
    rnd = random.Random(seed)
    for _ in range(trials):
        v = [Scalar.from_int(rnd.randint(-5, 5), M.N) for _ in range(M.dim)]
        if la.is_zero_vector(v):
            continue
        if len(submodule_generated(M, v)) < M.dim:
            return False
    return True


def submodule_lattice(M: Representation, torus=None, candidates=None) -> list[list[Vector]]:
    """All submodules of a multiplicity-free weight module: closures of the
    sets of weight vectors, deduplicated (brute force, small dimension)."""
    vecs = _weight_vectors(M, torus, candidates)
    found: dict[tuple, list[Vector]] = {(): []}
    for r in range(1, len(vecs) + 1):
        for subset in combinations(vecs, r):
            sub = submodule_generated(M, list(subset))
            found.setdefault(_space_key(sub), sub)
    return sorted(found.values(), key=len)


def _space_key(basis: list[Vector]) -> tuple:
    return tuple(tuple(x.key() for x in v) for v in basis)


def intertwiners(M1: Representation, M2: Representation) -> list[Matrix]:
    """Basis of {T : T act1(g) = act2(g) T for every generator g}."""
    if M1.side != M2.side or list(M1.gens) != list(M2.gens):
        raise ModuleError("modules have different generator families")
    n1, n2, N = M1.dim, M2.dim, M1.N
    nvar = n1 * n2
    z = Scalar.from_int(0, N)
    rows = []
    for name, a in M1.gens.items():
        b = M2.gens[name]
        # (T a - b T)[r][c] = sum_k T[r][k] a[k][c] - sum_k b[r][k] T[k][c]
        for r in range(n2):
            for c in range(n1):
                row = [z] * nvar
                for k in range(n1):
                    if a[k][c].num:
                        row[r * n1 + k] = row[r * n1 + k] + a[k][c]
                for k in range(n2):
                    if b[r][k].num:
                        row[k * n1 + c] = row[k * n1 + c] - b[r][k]
                if any(x.num for x in row):
                    rows.append(row)
    sol = la.nullspace(rows, nvar, N) if rows else [la.unit_vector(nvar, i, N) for i in range(nvar)]
    return [[s[r * n1:(r + 1) * n1] for r in range(n2)] for s in sol]


def module_iso(M1: Representation, M2: Representation, grid_limit: int = 200000) -> Matrix | None:
    """An invertible intertwiner, or None when the modules are not isomorphic.

    det(sum c_i T_i) is a polynomial of degree <= n in each c_i, so it is
    nonzero somewhere on the grid {0..n}^r unless it vanishes identically.
    """
    if M1.dim != M2.dim:
        return None
    n, N = M1.dim, M1.N
    if n == 0:
        return []
    Ts = intertwiners(M1, M2)
    if not Ts:
        return None
    for T in Ts:
        if la.det(T).num:
            return T
    r = len(Ts)
    if (n + 1) ** r > grid_limit:
        raise UnsupportedModule("intertwiner space too large for the exact invertibility search")
    for coeffs in sorted(iproduct(range(n + 1), repeat=r), key=lambda c: (sum(c), c)):
        if not any(coeffs):
            continue
        T = la.zeros(n, n, N)
        for c, Ti in zip(coeffs, Ts):
            if c:
                T = la.add(T, la.scale(Scalar.from_int(c, N), Ti))
        if la.det(T).num:
            return T
    return None


# --------------------------------------------------------------------------
# one-dimensional and codimension-one submodules

def _joint_eigen(mats: list[tuple[Matrix, Scalar]], n: int, N: int) -> list[Vector]:
    rows = []
    for m, c in mats:
        rows.extend(la.sub(m, la.scale(c, la.identity(n, N))))
    return la.nullspace(rows, n, N) if rows else la.identity(n, N)


def _part_algebra(M: Representation, part: str):
    H = M.algebra
    alg = H.Aalg if part == "A" else H.Ualg
    embed = H.embed_A if part == "A" else H.embed_U
    hopf = getattr(H, part, None)
    return alg, embed, hopf


def _part_generators(M: Representation, part: str, transpose: bool):
    alg, embed, hopf = _part_algebra(M, part)
    one = Scalar.from_int(1, M.N)
    gens = algebra_generators(alg)
    mats = [M.action(embed({i: one})) for i in gens]
    if transpose:
        mats = [la.transpose(m) for m in mats]
    chars = algebra_characters(hopf if hopf is not None else alg)
    return gens, mats, chars


def _one_dim(M: Representation, part: str, transpose: bool) -> list[tuple[list[Scalar], Vector]]:
    if M.algebra is None:
        raise ModuleError("needs a module over a factorized algebra; see find_annihilated_weight_vector")
    gens, mats, chars = _part_generators(M, part, transpose)
    out = []
    for chi in chars:
        sol = _joint_eigen([(m, chi[i]) for m, i in zip(mats, gens)], M.dim, M.N)
        if len(sol) > 1:
            raise UnsupportedModule(f"{part}-eigenspace of dimension {len(sol)}: infinitely many candidates")
        if sol:
            out.append((chi, sol[0]))
    return out


def find_one_dim_submodules(M: Representation, part: str = "A") -> list[tuple[list[Scalar], Vector]]:
    """One-dimensional submodules for the U- or A-part, with their characters."""
    return _one_dim(M, part, False)


def find_codim_one_submodules(M: Representation, part: str = "U") -> list[tuple[list[Scalar], list[Vector]]]:
    """Codimension-one submodules for the U- or A-part: kernels of common
    eigenvectors of the transposed action."""
    out = []
    for chi, p in _one_dim(M, part, True):
        out.append((chi, kernel_of(p, M.N)))
    return out


def find_one_dim_A_submodules(M: Representation) -> list[Vector]:
    if M.algebra is None:
        return [v for v in _annihilated_weight_vectors(M)]
    return [v for _, v in find_one_dim_submodules(M, "A")]


def find_codim_one_U_submodules(M: Representation) -> list[list[Vector]]:
    return [W for _, W in find_codim_one_submodules(M, "U")]


# --------------------------------------------------------------------------
# duality

def transpose_module(M: Representation) -> Representation:
    """M* with the transpose action; swaps sides."""
    side = "right" if M.side == "left" else "left"
    gens, ba = M._map(la.transpose)
    return Representation(M.dim, M.N, gens, side, M.algebra, ba, list(M.torus), list(M.skew), M.label + "*")


def duality_bullet(T: TripleObject) -> tuple[TripleObject, Report]:
    """(M, km, N) -> (M., km., N.) with m. vanishing on N and m.(m) = 1,
    M. = m.H inside M* and N. = M. intersected with the annihilator of m."""
    M, N = T.M, T.M.N
    rep = Report("duality")
    ann = la.annihilator(T.N, M.dim, N)
    if len(ann) != 1:
        raise ModuleError("N must have codimension one")
    p = ann[0]
    val = sum((a * b for a, b in zip(p, T.m)), Scalar.from_int(0, N))
    if not val.num:
        raise ModuleError("m lies in N")
    mdot = la.vscale(val.inverse(), p)
    Mstar = transpose_module(M)
    Mdot_basis = submodule_generated(Mstar, mdot)
    Mdot = Mstar.restrict(Mdot_basis)
    Mdot.label = "M."
    perp = [x for x in la.nullspace([list(T.m)], M.dim, N)]
    Ndot_basis = la.intersect(Mdot_basis, perp, M.dim, N)
    coords = lambda v: la.coordinates(Mdot_basis, v)  # noqa: E731
    out = TripleObject(Mdot, coords(mdot), [coords(v) for v in Ndot_basis], T.rho, T.chi,
                       "right" if T.side == "left" else "left",
                       {"ambient": Mdot_basis, "mdot": mdot})
    rep.merge(verify_triple(out))
    # the pairing beta(p, n) = p(n) is balanced
    for name, g in M.gens.items():
        for v in Mdot_basis:
            for j in range(M.dim):
                n = la.unit_vector(M.dim, j, N)
                rep.checks += 1
                lhs = _dot(la.matvec(Mstar.gens[name], v), n)
                rhs = _dot(v, la.matvec(g, n))
                if lhs != rhs:
                    rep.fail(check="beta balanced", gen=name)
    # the annihilator of M. inside M is the largest submodule in N, which is zero
    rep.checks += 1
    if la.nullspace(Mdot_basis, M.dim, N):
        rep.fail(check="M. separates points of M")
    return out, rep


def _dot(u: Vector, v: Vector) -> Scalar:
    out = Scalar.from_int(0, u[0].N) if u else Scalar.from_int(0, 1)
    for a, b in zip(u, v):
        if a.num and b.num:
            out = out + a * b
    return out


# --------------------------------------------------------------------------
# morphisms

def _kron_map(f: Matrix, g: Matrix) -> Matrix:
    from .algebra import kron
    return kron(f, g)


def lift_morphism_L(f: Matrix, g: Matrix, H, Hbar, rho_bar: list[Scalar], chi_bar: list[Scalar],
                    check_morphism: bool = True) -> tuple[Matrix, TripleObject, TripleObject, Report]:
    """The map L(rho, chi) -> L(rho_bar, chi_bar), u + I -> f(u) + I_bar, for
    F = f (x) g : H -> Hbar with rho = rho_bar f and chi = chi_bar g.

    Returns the matrix, both L objects, and a report covering the
    projection diagram, F-linearity, and invertibility when f is onto.
    """
    rep = Report("lift L(f)")
    N = H.N
    F = _kron_map(f, g)
    if check_morphism:
        from .algebra import verify_morphism
        rep.merge(verify_morphism(F, H.algebra, Hbar.algebra, coalgebra=False))
    rho = [_dot(rho_bar, [f[r][c] for r in range(len(f))]) for c in range(H.dimU)]
    chi = [_dot(chi_bar, [g[r][c] for r in range(len(g))]) for c in range(H.dimA)]
    L = build_L(H, rho, chi)
    Lb = build_L(Hbar, rho_bar, chi_bar)
    q, qb = L.info["quotient"], Lb.info["quotient"]
    cols = []
    for c in q.keep:
        cols.append(qb.project([f[r][c] for r in range(Hbar.dimU)]))
    Lf = la.transpose(cols) if cols else []
    # diagram: pi_bar(f(u)) = Lf(pi(u)) for every basis u
    for k in range(H.dimU):
        rep.checks += 1
        lhs = qb.project([f[r][k] for r in range(Hbar.dimU)])
        rhs = la.matvec(Lf, q.project(la.unit_vector(H.dimU, k, N))) if Lf else []
        if lhs != rhs:
            rep.fail(check="projection diagram", index=k)
    # F-linearity on the basis of H
    if Lf:
        for h in range(H.dim):
            img = to_sparse([F[r][h] for r in range(Hbar.dim)])
            rep.checks += 1
            if la.matmul(Lf, L.M.basis_actions[h]) != la.matmul(Lb.M.action(img), Lf):
                rep.fail(check="F-linear", index=h)
    if la.rank(f) == len(f):
        rep.checks += 1
        if Lf == [] and L.dim == Lb.dim == 0:
            pass
        elif L.dim != Lb.dim or not la.det(Lf).num:
            rep.fail(check="onto f gives an isomorphism")
    return Lf, L, Lb, rep


# --------------------------------------------------------------------------
# bialgebra-case identities

def grouplike_hypotheses_check(H, rho: list[Scalar], chi: list[Scalar]) -> Report:
    """(u (x) a) ._chi u' = chi(a) u u' for group-like u', and
    a' ._rho (u (x) a) = rho(u) a' a for group-like a'."""
    rep = Report("group-like actions")
    N = H.N
    Uchi = induced_U_chi(H, chi, check=False)
    Arho = induced_A_rho(H, rho, check=False)
    for gu in hopf_grouplikes(H.U):
        v = to_dense(gu, H.dimU, N)
        for h in range(H.dim):
            i, j = H.split(h)
            rep.checks += 1
            want = to_dense({k: chi[j] * c for k, c in H.Ualg.mul({i: Scalar.from_int(1, N)}, gu).items()}, H.dimU, N)
            if la.matvec(Uchi.basis_actions[h], v) != want:
                rep.fail(check="U' action", index=h)
    for ga in hopf_grouplikes(H.A):
        v = to_dense(ga, H.dimA, N)
        for h in range(H.dim):
            i, j = H.split(h)
            rep.checks += 1
            want = to_dense({k: rho[i] * c for k, c in H.Aalg.mul(ga, {j: Scalar.from_int(1, N)}).items()}, H.dimA, N)
            if la.matvec(Arho.basis_actions[h], v) != want:
                rep.fail(check="A' action", index=h)
    return rep


def lemma_modulo_check(H, u: Sparse, g: Sparse, rho: list[Scalar], chi: list[Scalar],
                       L: TripleObject | None = None) -> tuple[bool, bool]:
    """(u (x) g - 1 acts as zero on L(rho, chi), rho(u) chi(g) == 1)."""
    from .twist import is_central
    x = H.pure(u, g)
    if not is_central(H, x):
        raise ModuleError("u (x) g is not central")
    L = L or build_L(H, rho, chi)
    act = L.M.action(x) if L.dim else []
    zero_action = la.sub(act, la.identity(L.dim, H.N)) if L.dim else []
    acts_zero = la.is_zero_matrix(zero_action)
    scalar = evaluate(rho, u) * evaluate(chi, g)
    return acts_zero, scalar.is_one()


# --------------------------------------------------------------------------
# generator-family representations and condition (C)

def generated_rep(gens: dict[str, Matrix], N: int, group: list[str], skew: list[str],
                  label: str = "") -> Representation:
    dim = len(next(iter(gens.values()))) if gens else 0
    return Representation(dim, N, dict(gens), "left", None, None, list(group), list(skew), label)


def condition_C_check(M: Representation, chis: dict[str, dict[str, Scalar]],
                      group: list[str] | None = None, skew: list[str] | None = None) -> Report:
    """g a_i g^-1 = chi_i(g) a_i for group generators g; each chi_i nontrivial.

    ``chis[a][g]`` is the value of the character attached to a at g.
    """
    rep = Report("condition (C)")
    group = M.torus if group is None else group
    skew = M.skew if skew is None else skew
    for gname in group:
        gm = M.gens[gname]
        try:
            ginv = la.inverse(gm)
        except ZeroDivisionError:
            raise ModuleError(f"group generator {gname} acts singularly") from None
        for a in skew:
            rep.checks += 1
            lhs = la.matmul(la.matmul(gm, M.gens[a]), ginv)
            if lhs != la.scale(chis[a][gname], M.gens[a]):
                rep.fail(check="conjugation", group=gname, skew=a)
    for a in skew:
        rep.checks += 1
        if all(chis[a][g].is_one() for g in group):
            rep.fail(check="character nontrivial", skew=a)
    return rep


def _annihilated_weight_vectors(M: Representation, candidates=None) -> list[Vector]:
    rows = []
    for a in M.skew:
        rows.extend(M.gens[a])
    K = la.nullspace(rows, M.dim, M.N) if rows else la.identity(M.dim, M.N)
    if not K:
        return []
    sub = M.restrict(la.span(K, M.dim, M.N))
    basis = la.span(K, M.dim, M.N)
    out = []
    for _, b in weight_decomposition(sub, M.torus, candidates):
        if len(b) > 1:
            raise UnsupportedModule("weight space of dimension > 1 inside the joint kernel")
        out.append(la.matvec(la.transpose(basis), b[0]))
    return out


def find_annihilated_weight_vector(M: Representation, candidates=None) -> Vector | None:
    """A weight vector killed by every skew generator, or None.

    A found vector spans a one-dimensional submodule (checked).
    """
    rows = []
    for a in M.skew:
        rows.extend(M.gens[a])
    K = la.nullspace(rows, M.dim, M.N) if rows else la.identity(M.dim, M.N)
    if not K:
        return None
    basis = la.span(K, M.dim, M.N)
    sub = M.restrict(basis)
    wd = weight_decomposition(sub, M.torus, candidates)
    v = la.matvec(la.transpose(basis), wd[0][1][0])
    if not all(la.contains([v], la.matvec(g, v)) for g in M.gens.values()):
        raise ModuleError("annihilated weight vector does not span a submodule")
    return v


def direct_sum(M1: Representation, M2: Representation) -> Representation:
    if list(M1.gens) != list(M2.gens):
        raise ModuleError("generator families differ")
    N = M1.N
    n1, n2 = M1.dim, M2.dim

    def blk(a: Matrix, b: Matrix) -> Matrix:
        z = Scalar.from_int(0, N)
        top = [list(r) + [z] * n2 for r in a]
        bot = [[z] * n1 + list(r) for r in b]
        return top + bot

    gens = {k: blk(M1.gens[k], M2.gens[k]) for k in M1.gens}
    ba = None
    if M1.basis_actions is not None and M2.basis_actions is not None:
        ba = [blk(a, b) for a, b in zip(M1.basis_actions, M2.basis_actions)]
    return Representation(n1 + n2, N, gens, M1.side, M1.algebra, ba, list(M1.torus), list(M1.skew),
                          f"{M1.label}+{M2.label}")


def permute(M: Representation, perm: list[int]) -> tuple[Representation, Matrix]:
    """Conjugate by the permutation matrix P (e_i -> e_perm[i]); returns (P M P^-1, P)."""
    n, N = M.dim, M.N
    P = la.zeros(n, n, N)
    for i, j in enumerate(perm):
        P[j][i] = Scalar.from_int(1, N)
    Pinv = la.transpose(P)
    conj = lambda m: la.matmul(la.matmul(P, m), Pinv)  # noqa: E731
    gens, ba = M._map(conj)
    return Representation(n, N, gens, M.side, M.algebra, ba, list(M.torus), list(M.skew), M.label), P
