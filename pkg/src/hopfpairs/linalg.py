"""Exact dense linear algebra over Scalar entries.

Matrices are lists of rows; vectors are lists.  Subspaces are represented
by a list of basis vectors kept in reduced echelon form.
"""
from __future__ import annotations

from itertools import product as iproduct
from typing import Sequence

from .scalars import Scalar

Matrix = list[list[Scalar]]
Vector = list[Scalar]


def zero(N: int) -> Scalar:
    return Scalar.from_int(0, N)


def one(N: int) -> Scalar:
    return Scalar.from_int(1, N)


def zeros(rows: int, cols: int, N: int) -> Matrix:
    z = zero(N)
    return [[z] * cols for _ in range(rows)]


def identity(n: int, N: int) -> Matrix:
    z, o = zero(N), one(N)
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def unit_vector(n: int, i: int, N: int) -> Vector:
    z = zero(N)
    v = [z] * n
    v[i] = one(N)
    return v


def transpose(m: Matrix) -> Matrix:
    return [list(r) for r in zip(*m)] if m else []


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = list(zip(*b)) if b else []
    N = a[0][0].N if a[0] else b[0][0].N
    z = zero(N)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x.num]
        new = []
        for col in cols:
            acc = z
            for k, x in nz:
                y = col[k]
                if y.num:
                    acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def matvec(a: Matrix, v: Vector) -> Vector:
    if not a:
        return []
    N = a[0][0].N
    z = zero(N)
    nzv = [(k, x) for k, x in enumerate(v) if x.num]
    out = []
    for row in a:
        acc = z
        for k, x in nzv:
            y = row[k]
            if y.num:
                acc = acc + y * x
        out.append(acc)
    return out


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def scale(c: Scalar, a: Matrix) -> Matrix:
    return [[c * x for x in r] for r in a]


def vadd(u: Vector, v: Vector) -> Vector:
    return [x + y for x, y in zip(u, v)]


def vsub(u: Vector, v: Vector) -> Vector:
    return [x - y for x, y in zip(u, v)]


def vscale(c: Scalar, v: Vector) -> Vector:
    return [c * x for x in v]


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero() for r in a for x in r)


def is_zero_vector(v: Vector) -> bool:
    return all(x.is_zero() for x in v)


def rref(m: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; pivots are searched in the first ``ncols`` columns."""
    rows = [list(r) for r in m]
    if not rows:
        return rows, []
    width = len(rows[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for col in range(width):
        p = next((i for i in range(r, len(rows)) if rows[i][col].num), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][col].inverse()
        if not inv.is_one():
            rows[r] = [x * inv if x.num else x for x in rows[r]]
        pr = rows[r]
        nzp = [(k, x) for k, x in enumerate(pr) if x.num]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][col]
                if f.num:
                    ri = rows[i]
                    for k, x in nzp:
                        ri[k] = ri[k] - f * x
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r] + rows[r:], pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix, ncols: int | None = None, N: int | None = None) -> list[Vector]:
    """Basis of {x : m x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        if N is None:
            raise ValueError("empty matrix needs an explicit conductor")
        return [unit_vector(ncols, i, N) for i in range(ncols)]
    N = m[0][0].N if m[0] else N
    red, piv = rref(m)
    free = [c for c in range(ncols) if c not in set(piv)]
    z, o = zero(N), one(N)
    basis = []
    for f in free:
        v = [z] * ncols
        v[f] = o
        for i, pc in enumerate(piv):
            v[pc] = -red[i][f]
        basis.append(v)
    return basis


def solve(m: Matrix, b: Vector) -> Vector | None:
    """One solution of m x = b, or None when inconsistent."""
    ncols = len(m[0])
    aug = [list(r) + [bi] for r, bi in zip(m, b)]
    red, piv = rref(aug, ncols)
    N = b[0].N
    # inconsistent if some zero row has a nonzero right-hand side
    for i in range(len(piv), len(red)):
        if red[i][ncols].num:
            return None
    x = [zero(N)] * ncols
    for i, pc in enumerate(piv):
        x[pc] = red[i][ncols]
    return x


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    N = m[0][0].N
    aug = [list(r) + e for r, e in zip(m, identity(n, N))]
    red, piv = rref(aug, n)
    if len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return [r[n:] for r in red[:n]]


def det(m: Matrix) -> Scalar:
    n = len(m)
    N = m[0][0].N
    rows = [list(r) for r in m]
    result = one(N)
    for col in range(n):
        p = next((i for i in range(col, n) if rows[i][col].num), None)
        if p is None:
            return zero(N)
        if p != col:
            rows[col], rows[p] = rows[p], rows[col]
            result = -result
        pivot = rows[col][col]
        result = result * pivot
        inv = pivot.inverse()
        for i in range(col + 1, n):
            f = rows[i][col]
            if f.num:
                f = f * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return result


# --------------------------------------------------------------------------
# subspaces

def span(vectors: Sequence[Vector], dim: int, N: int) -> list[Vector]:
    """Echelon basis of the span of ``vectors`` inside a space of size ``dim``."""
    if not vectors:
        return []
    red, piv = rref([list(v) for v in vectors])
    return red[: len(piv)]


def contains(basis: list[Vector], v: Vector) -> bool:
    if is_zero_vector(v):
        return True
    if not basis:
        return False
    return rank(basis + [v]) == len(basis)


def coordinates(basis: list[Vector], v: Vector) -> Vector | None:
    """Coefficients c with sum c_i basis_i == v."""
    return solve(transpose(basis), v)


def intersect(a: list[Vector], b: list[Vector], dim: int, N: int) -> list[Vector]:
    if not a or not b:
        return []
    # solve sum x_i a_i - sum y_j b_j = 0
    cols = [list(v) for v in a] + [[-x for x in v] for v in b]
    sol = nullspace(transpose(cols), len(cols), N)
    vecs = []
    for s in sol:
        w = [zero(N)] * dim
        for coef, v in zip(s[: len(a)], a):
            if coef.num:
                w = vadd(w, vscale(coef, v))
        vecs.append(w)
    return span(vecs, dim, N)


def annihilator(basis: list[Vector], dim: int, N: int) -> list[Vector]:
    """Functionals (as vectors) vanishing on the span of ``basis``."""
    if not basis:
        return [unit_vector(dim, i, N) for i in range(dim)]
    return nullspace(basis, dim, N)


def complement_indices(basis: list[Vector], dim: int) -> list[int]:
    """Standard basis indices completing an echelon basis to the whole space."""
    _, piv = rref(basis) if basis else ([], [])
    return [i for i in range(dim) if i not in set(piv)]


def first_nonzero_combination(mats: list[Matrix], predicate, N: int, bound: int):
    """Search integer combinations sum c_i mats[i], |c_i| <= bound, for ``predicate``."""
    rng = range(-bound, bound + 1)
    for coeffs in iproduct(rng, repeat=len(mats)):
        if not any(coeffs):
            continue
        acc = zeros(len(mats[0]), len(mats[0][0]), N)
        for c, m in zip(coeffs, mats):
            if c:
                acc = add(acc, scale(Scalar.from_int(c, N), m))
        if predicate(acc):
            return acc
    return None
