"""Finite-dimensional algebras, coalgebras and Hopf algebras as structure tensors.

Conventions
-----------
* ``mult[i][j]`` is a list of ``(k, c)`` with ``e_i e_j = sum c e_k``.
* ``comult[k]`` is a list of ``(i, j, c)`` with ``Delta e_k = sum c e_i (x) e_j``.
* The antipode matrix ``S`` has ``S(e_j) = sum_i S[i][j] e_i`` (columns are images).
* Elements are sparse dicts ``{index: Scalar}`` with no zero entries.

All verifiers return a :class:`Report` listing every failed instance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import linalg as la
from .scalars import Field, Scalar

Sparse = dict[int, Scalar]


# --------------------------------------------------------------------------
# sparse helpers

def acc(d: dict, key, val: Scalar) -> None:
    """d[key] += val, dropping zeros."""
    cur = d.get(key)
    if cur is None:
        if val.num:
            d[key] = val
    else:
        s = cur + val
        if s.num:
            d[key] = s
        else:
            del d[key]


def sparse_scale(c: Scalar, x: dict) -> dict:
    if not c.num:
        return {}
    return {k: c * v for k, v in x.items()}


def sparse_add(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        acc(out, k, v)
    return out


def sparse_sub(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        acc(out, k, -v)
    return out


def to_dense(x: dict, n: int, N: int) -> list[Scalar]:
    z = Scalar.from_int(0, N)
    return [x.get(i, z) for i in range(n)]


def to_sparse(v: list[Scalar]) -> Sparse:
    return {i: x for i, x in enumerate(v) if x.num}


@dataclass
class Report:
    """Outcome of a verification sweep."""

    name: str
    checks: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, **info) -> None:
        self.failures.append(info)

    def merge(self, other: "Report") -> "Report":
        self.checks += other.checks
        self.failures.extend(other.failures)
        return self

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checks": self.checks,
                "failures": [{k: _jsonable(v) for k, v in f.items()} for f in self.failures]}


def _jsonable(v):
    if isinstance(v, Scalar):
        return str(v)
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


# --------------------------------------------------------------------------
# data

class AlgebraData:
    """A unital algebra given by sparse structure constants."""

    def __init__(self, dim: int, mult: Iterable[tuple[int, int, int, Scalar]], unit, N: int,
                 names: list[str] | None = None):
        self.dim = dim
        self.N = N
        self.names = names or [f"e{i}" for i in range(dim)]
        table = [[[] for _ in range(dim)] for _ in range(dim)]
        tmp: dict = {}
        for i, j, k, c in mult:
            _bounds(dim, i, j, k)
            acc(tmp, (i, j, k), c)
        for (i, j, k), c in sorted(tmp.items()):
            table[i][j].append((k, c))
        self.mult = table
        self.unit = to_sparse(list(unit)) if isinstance(unit, list) else dict(unit)

    @classmethod
    def from_table(cls, dim: int, table, unit: Sparse, N: int, names=None) -> "AlgebraData":
        obj = cls.__new__(cls)
        obj.dim, obj.N, obj.mult, obj.unit = dim, N, table, unit
        obj.names = names or [f"e{i}" for i in range(dim)]
        return obj

    def entries(self) -> list[tuple[int, int, int, Scalar]]:
        return [(i, j, k, c) for i in range(self.dim) for j in range(self.dim) for k, c in self.mult[i][j]]

    def mul(self, x: Sparse, y: Sparse) -> Sparse:
        out: Sparse = {}
        for i, a in x.items():
            row = self.mult[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j]:
                    acc(out, k, ab * c)
        return out

    def mul_basis(self, i: int, j: int) -> Sparse:
        return {k: c for k, c in self.mult[i][j]}

    def left_matrix(self, x: Sparse) -> la.Matrix:
        """Matrix of y -> x y."""
        cols = [self.mul(x, {j: Scalar.from_int(1, self.N)}) for j in range(self.dim)]
        return la.transpose([to_dense(c, self.dim, self.N) for c in cols])

    def right_matrix(self, x: Sparse) -> la.Matrix:
        """Matrix of y -> y x."""
        cols = [self.mul({j: Scalar.from_int(1, self.N)}, x) for j in range(self.dim)]
        return la.transpose([to_dense(c, self.dim, self.N) for c in cols])

    def power(self, x: Sparse, k: int) -> Sparse:
        out = dict(self.unit)
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def nnz(self) -> int:
        return sum(len(c) for row in self.mult for c in row)


class CoalgebraData:
    """A counital coalgebra given by sparse structure constants."""

    def __init__(self, dim: int, comult: Iterable[tuple[int, int, int, Scalar]], counit, N: int):
        table = [[] for _ in range(dim)]
        tmp: dict = {}
        for k, i, j, c in comult:
            _bounds(dim, i, j, k)
            acc(tmp, (k, i, j), c)
        for (k, i, j), c in sorted(tmp.items()):
            table[k].append((i, j, c))
        self._setup(dim, table, counit, N)

    def _setup(self, dim, table, counit, N):
        if len(counit) != dim:
            raise ValueError("counit has the wrong length")
        self.dim = dim
        self.N = N
        self.comult = table
        self.counit = list(counit)
        self._d2: dict[int, list] = {}

    @classmethod
    def from_table(cls, dim: int, table, counit, N: int) -> "CoalgebraData":
        obj = cls.__new__(cls)
        obj._setup(dim, table, counit, N)
        return obj

    def entries(self) -> list[tuple[int, int, int, Scalar]]:
        return [(k, i, j, c) for k in range(self.dim) for i, j, c in self.comult[k]]

    def delta(self, x: Sparse) -> dict:
        out: dict = {}
        for k, a in x.items():
            for i, j, c in self.comult[k]:
                acc(out, (i, j), a * c)
        return out

    def delta2(self, k: int) -> list[tuple[int, int, int, Scalar]]:
        """Iterated coproduct (Delta (x) id) Delta e_k as (i, j, l, c)."""
        got = self._d2.get(k)
        if got is None:
            tmp: dict = {}
            for m, l, c in self.comult[k]:
                for i, j, c2 in self.comult[m]:
                    acc(tmp, (i, j, l), c * c2)
            got = [(i, j, l, c) for (i, j, l), c in sorted(tmp.items())]
            self._d2[k] = got
        return got

    def eps(self, x: Sparse) -> Scalar:
        out = Scalar.from_int(0, self.N)
        for k, a in x.items():
            if self.counit[k].num:
                out = out + a * self.counit[k]
        return out


class HopfData:
    """A bialgebra, optionally with antipode, over a common basis."""

    def __init__(self, algebra: AlgebraData, coalgebra: CoalgebraData,
                 antipode: la.Matrix | None = None, name: str = ""):
        if algebra.dim != coalgebra.dim:
            raise ValueError("algebra and coalgebra dimensions differ")
        if algebra.N != coalgebra.N:
            raise ValueError("conductor mismatch between algebra and coalgebra")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = antipode
        self.name = name
        self._sinv: la.Matrix | None = None

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def N(self) -> int:
        return self.algebra.N

    @property
    def names(self) -> list[str]:
        return self.algebra.names

    def mul(self, x, y):
        return self.algebra.mul(x, y)

    def delta(self, x):
        return self.coalgebra.delta(x)

    def eps(self, x):
        return self.coalgebra.eps(x)

    def unit(self) -> Sparse:
        return dict(self.algebra.unit)

    def S(self, x: Sparse) -> Sparse:
        return _apply(self.antipode_matrix(), x)

    def S_inv(self, x: Sparse) -> Sparse:
        return _apply(self.antipode_inverse(), x)

    def antipode_matrix(self) -> la.Matrix:
        if self.antipode is None:
            raise ValueError("no antipode supplied")
        return self.antipode

    def antipode_inverse(self) -> la.Matrix:
        if self._sinv is None:
            try:
                self._sinv = la.inverse(self.antipode_matrix())
            except ZeroDivisionError:
                raise ValueError("antipode is singular") from None
        return self._sinv

    def basis(self, i: int) -> Sparse:
        return {i: Scalar.from_int(1, self.N)}


def _apply(m: la.Matrix, x: Sparse) -> Sparse:
    out: Sparse = {}
    for j, a in x.items():
        for i in range(len(m)):
            c = m[i][j]
            if c.num:
                acc(out, i, c * a)
    return out


def apply_matrix(m: la.Matrix, x: Sparse) -> Sparse:
    return _apply(m, x)


def _bounds(dim, *idx):
    for t in idx:
        if not 0 <= t < dim:
            raise ValueError(f"index {t} out of range for dimension {dim}")


# --------------------------------------------------------------------------
# verifiers

def verify_algebra(A: AlgebraData) -> Report:
    rep = Report("algebra")
    n = A.dim
    mult = A.mult
    for i in range(n):
        row_i = mult[i]
        for j in range(n):
            left_ij = row_i[j]
            row_j = mult[j]
            for k in range(n):
                lhs: Sparse = {}
                for l, c in left_ij:
                    for m, c2 in mult[l][k]:
                        acc(lhs, m, c * c2)
                rhs: Sparse = {}
                for l, c in row_j[k]:
                    for m, c2 in row_i[l]:
                        acc(rhs, m, c * c2)
                rep.checks += 1
                if lhs != rhs:
                    rep.fail(check="associativity", index=(i, j, k))
    one = A.unit
    for i in range(n):
        e = {i: Scalar.from_int(1, A.N)}
        rep.checks += 2
        if A.mul(one, e) != e:
            rep.fail(check="left unit", index=(i,))
        if A.mul(e, one) != e:
            rep.fail(check="right unit", index=(i,))
    return rep


def verify_coalgebra(C: CoalgebraData) -> Report:
    rep = Report("coalgebra")
    N = C.N
    for k in range(C.dim):
        lhs: dict = {}
        for m, l, c in C.comult[k]:
            for i, j, c2 in C.comult[m]:
                acc(lhs, (i, j, l), c * c2)
        rhs: dict = {}
        for i, m, c in C.comult[k]:
            for j, l, c2 in C.comult[m]:
                acc(rhs, (i, j, l), c * c2)
        rep.checks += 1
        if lhs != rhs:
            rep.fail(check="coassociativity", index=(k,))
        left: Sparse = {}
        right: Sparse = {}
        for i, j, c in C.comult[k]:
            acc(left, j, C.counit[i] * c)
            acc(right, i, C.counit[j] * c)
        e = {k: Scalar.from_int(1, N)}
        rep.checks += 2
        if left != e:
            rep.fail(check="left counit", index=(k,))
        if right != e:
            rep.fail(check="right counit", index=(k,))
    return rep


def _tensor_mul(A: AlgebraData, x: dict, y: dict) -> dict:
    out: dict = {}
    for (a1, a2), s in x.items():
        for (b1, b2), t in y.items():
            st = s * t
            p1 = A.mult[a1][b1]
            p2 = A.mult[a2][b2]
            for k1, c1 in p1:
                sc = st * c1
                for k2, c2 in p2:
                    acc(out, (k1, k2), sc * c2)
    return out


def verify_bialgebra(H: HopfData) -> Report:
    rep = Report("bialgebra")
    rep.merge(verify_algebra(H.algebra))
    rep.merge(verify_coalgebra(H.coalgebra))
    A, C = H.algebra, H.coalgebra
    n = H.dim
    one = Scalar.from_int(1, H.N)
    deltas = [C.delta({i: one}) for i in range(n)]
    for i in range(n):
        for j in range(n):
            prod = {k: c for k, c in A.mult[i][j]}
            lhs = C.delta(prod)
            rhs = _tensor_mul(A, deltas[i], deltas[j])
            rep.checks += 1
            if lhs != rhs:
                rep.fail(check="comultiplication is multiplicative", index=(i, j))
            rep.checks += 1
            if C.eps(prod) != C.counit[i] * C.counit[j]:
                rep.fail(check="counit is multiplicative", index=(i, j))
    u = H.unit()
    rep.checks += 2
    if C.delta(u) != {(a, b): s * t for a, s in u.items() for b, t in u.items()}:
        rep.fail(check="Delta(1) = 1 (x) 1")
    if not C.eps(u).is_one():
        rep.fail(check="eps(1) = 1")
    return rep


def verify_antipode(H: HopfData) -> Report:
    rep = Report("antipode")
    S = H.antipode_matrix()
    A, C = H.algebra, H.coalgebra
    u = H.unit()
    for k in range(H.dim):
        left: Sparse = {}
        right: Sparse = {}
        for i, j, c in C.comult[k]:
            si = _apply(S, {i: c})
            sj = _apply(S, {j: c})
            for key, v in A.mul(si, {j: Scalar.from_int(1, H.N)}).items():
                acc(left, key, v)
            for key, v in A.mul({i: Scalar.from_int(1, H.N)}, sj).items():
                acc(right, key, v)
        target = sparse_scale(C.counit[k], u)
        rep.checks += 2
        if left != target:
            rep.fail(check="S(x1) x2 = eps(x) 1", index=(k,))
        if right != target:
            rep.fail(check="x1 S(x2) = eps(x) 1", index=(k,))
    return rep


def verify_hopf(H: HopfData) -> Report:
    rep = verify_bialgebra(H)
    rep.name = "hopf"
    return rep.merge(verify_antipode(H))


# --------------------------------------------------------------------------
# constructions

def dual_hopf(H: HopfData) -> HopfData:
    """The linear dual in the dual basis: product = transposed coproduct, etc."""
    n, N = H.dim, H.N
    mult = [[[] for _ in range(n)] for _ in range(n)]
    for x in range(n):
        for a, b, c in H.coalgebra.comult[x]:
            mult[a][b].append((x, c))
    for row in mult:
        for cell in row:
            cell.sort(key=lambda t: t[0])
    comult = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in H.algebra.mult[i][j]:
                comult[k].append((i, j, c))
    for cell in comult:
        cell.sort(key=lambda t: (t[0], t[1]))
    unit = to_sparse(list(H.coalgebra.counit))
    z = Scalar.from_int(0, N)
    counit = [H.algebra.unit.get(i, z) for i in range(n)]
    names = [f"d({s})" for s in H.names]
    alg = AlgebraData.from_table(n, mult, unit, N, names)
    coalg = CoalgebraData.from_table(n, comult, counit, N)
    S = la.transpose(H.antipode) if H.antipode is not None else None
    return HopfData(alg, coalg, S, name=f"dual({H.name})")


def op_variant(H):
    """Opposite multiplication.

    Accepts AlgebraData or HopfData; for Hopf data the antipode becomes the
    inverse antipode.
    """
    A = H.algebra if isinstance(H, HopfData) else H
    n = A.dim
    mult = [[list(A.mult[j][i]) for j in range(n)] for i in range(n)]
    alg = AlgebraData.from_table(n, mult, dict(A.unit), A.N, list(A.names))
    if not isinstance(H, HopfData):
        return alg
    S = H.antipode_inverse() if H.antipode is not None else None
    return HopfData(alg, H.coalgebra, S, name=f"op({H.name})")


def cop_variant(H):
    """Opposite comultiplication.

    Accepts CoalgebraData or HopfData; for Hopf data the antipode becomes
    the inverse antipode.
    """
    C = H.coalgebra if isinstance(H, HopfData) else H
    comult = [sorted(((j, i, c) for i, j, c in cell), key=lambda t: (t[0], t[1])) for cell in C.comult]
    coalg = CoalgebraData.from_table(C.dim, comult, list(C.counit), C.N)
    if not isinstance(H, HopfData):
        return coalg
    S = H.antipode_inverse() if H.antipode is not None else None
    return HopfData(H.algebra, coalg, S, name=f"cop({H.name})")


def dual_cop(H: HopfData) -> HopfData:
    """The Hopf algebra whose algebra is the dual of H and coproduct is reversed."""
    return cop_variant(dual_hopf(H))


def tensor_algebra(U: AlgebraData, A: AlgebraData) -> AlgebraData:
    """Plain tensor product algebra, basis index i*dim(A) + j."""
    nU, nA = U.dim, A.dim
    n = nU * nA
    table = [[None] * n for _ in range(n)]
    for i in range(nU):
        for j in range(nA):
            for k in range(nU):
                pu = U.mult[i][k]
                for l in range(nA):
                    pa = A.mult[j][l]
                    cell = [(s * nA + t, c1 * c2) for s, c1 in pu for t, c2 in pa]
                    table[i * nA + j][k * nA + l] = cell
    unit = {}
    for s, c1 in U.unit.items():
        for t, c2 in A.unit.items():
            unit[s * nA + t] = c1 * c2
    names = [f"{a}|{b}" for a in U.names for b in A.names]
    return AlgebraData.from_table(n, table, unit, U.N, names)


def tensor_coalgebra(U: CoalgebraData, A: CoalgebraData) -> CoalgebraData:
    nA = A.dim
    comult = []
    for i in range(U.dim):
        for j in range(A.dim):
            cell = []
            for a1, a2, c1 in U.comult[i]:
                for b1, b2, c2 in A.comult[j]:
                    cell.append((a1 * nA + b1, a2 * nA + b2, c1 * c2))
            cell.sort(key=lambda t: (t[0], t[1]))
            comult.append(cell)
    counit = [cu * ca for cu in U.counit for ca in A.counit]
    return CoalgebraData.from_table(U.dim * A.dim, comult, counit, U.N)


def tensor_hopf(U: HopfData, A: HopfData) -> HopfData:
    alg = tensor_algebra(U.algebra, A.algebra)
    coalg = tensor_coalgebra(U.coalgebra, A.coalgebra)
    S = None
    if U.antipode is not None and A.antipode is not None:
        S = kron(U.antipode, A.antipode)
    return HopfData(alg, coalg, S, name=f"{U.name}(x){A.name}")


def kron(a: la.Matrix, b: la.Matrix) -> la.Matrix:
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


# --------------------------------------------------------------------------
# group-likes and characters

def _eps_of(C: CoalgebraData, v: list[Scalar]) -> Scalar:
    out = Scalar.from_int(0, C.N)
    for x, e in zip(v, C.counit):
        if x.num and e.num:
            out = out + x * e
    return out


def is_grouplike(C: CoalgebraData, v: Sparse) -> bool:
    if not C.eps(v).is_one():
        return False
    target = {(i, j): a * b for i, a in v.items() for j, b in v.items()}
    return C.delta(v) == target


def grouplikes(C, candidates: list[Scalar] | None = None, cap: int = 100) -> list[Sparse]:
    """All group-like elements of a coalgebra (or Hopf algebra).

    A group-like g satisfies ``(f (x) id) Delta(g) = f(g) g`` for every
    functional f, so its coordinate vector is the joint eigenvalue of the
    operators ``v -> (delta_i (x) id) Delta(v)``.  Eigenvalues are searched
    among zero and the roots of unity of the field (override with
    ``candidates``), which covers every pointed example in the catalog.
    """
    if isinstance(C, HopfData):
        C = C.coalgebra
    n, N = C.dim, C.N
    if n > cap:
        raise ValueError(f"dimension {n} exceeds the group-like search cap {cap}")
    F = Field(N)
    if candidates is None:
        candidates = [F.zero] + F.roots_of_unity()
    z = F.zero
    ops = []
    for i in range(n):
        m = [[z] * n for _ in range(n)]
        for k in range(n):
            for a, b, c in C.comult[k]:
                if a == i:
                    m[b][k] = m[b][k] + c
        ops.append(m)
    found: list[Sparse] = []
    spaces = [la.identity(n, N)]
    for i in range(n):
        new_spaces = []
        for basis in spaces:
            cols = la.transpose(basis)
            image = la.matmul(ops[i], cols)
            for c in candidates:
                shifted = [[image[r][t] - c * cols[r][t] for t in range(len(basis))] for r in range(n)]
                sol = la.nullspace(shifted, len(basis), N)
                if not sol:
                    continue
                vecs = [la.matvec(cols, s) for s in sol]
                new_spaces.append(la.span(vecs, n, N))
        spaces = []
        for basis in new_spaces:
            if len(basis) == 1:
                v = basis[0]
                e = _eps_of(C, v)
                if e.num:
                    g = to_sparse(la.vscale(e.inverse(), v))
                    if is_grouplike(C, g) and g not in found:
                        found.append(g)
            else:
                spaces.append(basis)
        if not spaces:
            break
    for basis in spaces:
        for v in basis:
            e = _eps_of(C, v)
            if e.num:
                g = to_sparse(la.vscale(e.inverse(), v))
                if is_grouplike(C, g) and g not in found:
                    found.append(g)
    return _order_grouplikes(found, C)


def _order_grouplikes(found: list[Sparse], C: CoalgebraData) -> list[Sparse]:
    def key(g):
        return tuple((i, g[i].key()) for i in sorted(g))
    return sorted(found, key=key)


def hopf_grouplikes(H: HopfData, candidates: list[Scalar] | None = None) -> list[Sparse]:
    """Group-likes of a Hopf algebra with the unit listed first."""
    gl = grouplikes(H.coalgebra, candidates)
    one = H.unit()
    if one in gl:
        gl.remove(one)
        gl.insert(0, one)
    return gl


def dual_coalgebra(A: AlgebraData) -> CoalgebraData:
    comult = [[] for _ in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in A.mult[i][j]:
                comult[k].append((i, j, c))
    z = Scalar.from_int(0, A.N)
    counit = [A.unit.get(i, z) for i in range(A.dim)]
    return CoalgebraData.from_table(A.dim, comult, counit, A.N)


def algebra_characters(A, candidates: list[Scalar] | None = None) -> list[list[Scalar]]:
    """Algebra maps to the base field, as value vectors on the basis.

    When a Hopf algebra is given its counit is listed first.
    """
    counit = None
    if isinstance(A, HopfData):
        counit = list(A.coalgebra.counit)
        A = A.algebra
    gl = grouplikes(dual_coalgebra(A), candidates)
    chars = [to_dense(g, A.dim, A.N) for g in gl]
    if counit is not None and counit in chars:
        chars.remove(counit)
        chars.insert(0, counit)
    return chars


def check_character(A, chi: list[Scalar]) -> Report:
    if isinstance(A, HopfData):
        A = A.algebra
    rep = Report("character")
    if len(chi) != A.dim:
        raise ValueError("character has the wrong length")
    z = Scalar.from_int(0, A.N)

    def ev(x: Sparse) -> Scalar:
        out = z
        for k, a in x.items():
            if chi[k].num:
                out = out + a * chi[k]
        return out

    rep.checks += 1
    if not ev(A.unit).is_one():
        rep.fail(check="unit maps to 1")
    for i in range(A.dim):
        for j in range(A.dim):
            rep.checks += 1
            if ev(A.mul_basis(i, j)) != chi[i] * chi[j]:
                rep.fail(check="multiplicative", index=(i, j))
    return rep


def evaluate(chi: list[Scalar], x: Sparse) -> Scalar:
    out = Scalar.from_int(0, chi[0].N)
    for k, a in x.items():
        if chi[k].num:
            out = out + a * chi[k]
    return out


def subalgebra_closure(A: AlgebraData, gens: list[Sparse]) -> list[list[Scalar]]:
    """Echelon basis of the subalgebra generated by ``gens``."""
    n, N = A.dim, A.N
    basis = la.span([to_dense(A.unit, n, N)] + [to_dense(g, n, N) for g in gens], n, N)
    while True:
        vecs = [to_sparse(v) for v in basis]
        products = [to_dense(A.mul(x, to_sparse(g)), n, N) for x in vecs for g in [to_dense(h, n, N) for h in gens]]
        new = la.span(basis + products, n, N)
        if len(new) == len(basis):
            return new
        basis = new


def algebra_generators(A: AlgebraData) -> list[int]:
    """Greedy list of basis indices generating A as an algebra."""
    n, N = A.dim, A.N
    one = Scalar.from_int(1, N)
    chosen: list[int] = []
    closure = la.span([to_dense(A.unit, n, N)], n, N)
    for i in range(n):
        if la.contains(closure, la.unit_vector(n, i, N)):
            continue
        chosen.append(i)
        closure = subalgebra_closure(A, [{k: one} for k in chosen])
        if len(closure) == n:
            break
    return chosen


def verify_morphism(f: la.Matrix, H1, H2, coalgebra: bool = True) -> Report:
    """Check that the matrix f (columns = images of basis) is an algebra map,
    and a coalgebra map when ``coalgebra`` is set."""
    rep = Report("morphism")
    A1 = H1.algebra if isinstance(H1, HopfData) else H1
    A2 = H2.algebra if isinstance(H2, HopfData) else H2
    img = [_apply(f, {j: Scalar.from_int(1, A1.N)}) for j in range(A1.dim)]
    rep.checks += 1
    if _apply(f, A1.unit) != A2.unit:
        rep.fail(check="unit preserved")
    for i in range(A1.dim):
        for j in range(A1.dim):
            rep.checks += 1
            if _apply(f, A1.mul_basis(i, j)) != A2.mul(img[i], img[j]):
                rep.fail(check="multiplicative", index=(i, j))
    if coalgebra:
        C1, C2 = H1.coalgebra, H2.coalgebra
        for k in range(A1.dim):
            lhs = C2.delta(img[k])
            rhs: dict = {}
            for a, b, c in C1.comult[k]:
                for s, x in img[a].items():
                    for t, y in img[b].items():
                        acc(rhs, (s, t), c * x * y)
            rep.checks += 2
            if lhs != rhs:
                rep.fail(check="comultiplicative", index=(k,))
            if C2.eps(img[k]) != C1.counit[k]:
                rep.fail(check="counit preserved", index=(k,))
    return rep
