"""Integer lattices: Smith normal form, integer kernels, and a nonnegative
orthant test for sublattices of Z^n.

Kept dependency-free: the matrices involved are a handful of rows, and
exact Fractions suffice for the linear-programming part.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

IntMatrix = list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for r in m:
        r[i], r[j] = r[j], r[i]


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """(U, S, V) with U A V = S diagonal, U and V unimodular, and each
    diagonal entry dividing the next."""
    m = len(A)
    n = len(A[0]) if m else 0
    S = [list(r) for r in A]
    U = identity(m)
    V = identity(n)
    t = 0
    while t < min(m, n):
        nz = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        _swap_rows(S, t, i)
        _swap_rows(U, t, i)
        _swap_cols(S, t, j)
        _swap_cols(V, t, j)
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                q = S[i][t] // S[t][t]
                if q:
                    S[i] = [a - q * b for a, b in zip(S[i], S[t])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[t])]
                if S[i][t]:
                    _swap_rows(S, t, i)
                    _swap_rows(U, t, i)
                    done = False
            for j in range(t + 1, n):
                q = S[t][j] // S[t][t]
                if q:
                    for r in S:
                        r[j] -= q * r[t]
                    for r in V:
                        r[j] -= q * r[t]
                if S[t][j]:
                    _swap_cols(S, t, j)
                    _swap_cols(V, t, j)
                    done = False
            if done:
                # divisibility: fold a non-divisible entry into row t
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if S[i][j] % S[t][t]), None)
                if bad is not None:
                    i, _ = bad
                    S[t] = [a + b for a, b in zip(S[t], S[i])]
                    U[t] = [a + b for a, b in zip(U[t], U[i])]
                    done = False
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, S, V


def integer_kernel(A: IntMatrix, ncols: int | None = None) -> IntMatrix:
    """Basis (as rows) of {x in Z^n : A x = 0}."""
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    if not A:
        return identity(n)
    _, S, V = smith_normal_form(A)
    rank = sum(1 for i in range(min(len(S), n)) if S[i][i])
    return hermite_basis([[V[r][c] for r in range(n)] for c in range(rank, n)])


def modular_kernel(A: IntMatrix, moduli: list[int], n: int) -> IntMatrix:
    """Basis of {x in Z^n : (A x)_r = 0 mod moduli[r]} (modulus 0 means exact)."""
    if not A:
        return identity(n)
    m = len(A)
    slack = [[moduli[r] if r == s else 0 for s in range(m)] for r in range(m)]
    aug = [list(A[r]) + slack[r] for r in range(m)]
    K = integer_kernel(aug, n + m)
    return hermite_basis([row[:n] for row in K])


def hermite_basis(vectors: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form basis of the lattice spanned by ``vectors``."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    out = []
    col = 0
    while rows and col < n:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        while len([r for r in rows if r[col]]) > 1:
            nz = sorted((r for r in rows if r[col]), key=lambda r: abs(r[col]))
            p = nz[0]
            for r in nz[1:]:
                q = r[col] // p[col]
                for k in range(n):
                    r[k] -= q * p[k]
            rows = [r for r in rows if any(r)]
        p = next(r for r in rows if r[col])
        if p[col] < 0:
            p[:] = [-x for x in p]
        rows.remove(p)
        for r in out:
            q = r[col] // p[col]
            if q:
                for k in range(n):
                    r[k] -= q * p[k]
        out.append(p)
        col += 1
    return out


def _solve(rows: list[list[Fraction]], rhs: list[Fraction], nvars: int) -> list[Fraction] | None:
    """Unique solution of a square-or-tall system, None if singular or inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv = []
    r = 0
    for c in range(nvars):
        p = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if p is None:
            return None
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
    if any(row[nvars] for row in aug[r:]):
        return None
    return [aug[i][nvars] for i in range(nvars)]


def has_nonneg_relation(basis: IntMatrix) -> list[int] | None:
    """A nonzero lattice vector with all coordinates >= 0, or None.

    Such a vector exists iff the rational span meets the orthant in a
    nonzero point (clear denominators of the coefficients).  The polytope
    {c : B^T c >= 0, sum(B^T c) = 1} is bounded when the basis is
    independent, so it is nonempty iff it has a vertex; vertices are
    enumerated exactly.
    """
    r = len(basis)
    if r == 0:
        return None
    n = len(basis[0])
    cols = [[Fraction(basis[i][k]) for i in range(r)] for k in range(n)]  # k_k = cols[k] . c
    total = [sum(cols[k][i] for k in range(n)) for i in range(r)]
    for active in combinations(range(n), r - 1):
        rows = [total] + [cols[k] for k in active]
        rhs = [Fraction(1)] + [Fraction(0)] * (r - 1)
        c = _solve(rows, rhs, r)
        if c is None:
            continue
        k = [sum(cols[j][i] * c[i] for i in range(r)) for j in range(n)]
        if all(x >= 0 for x in k):
            den = 1
            for x in c:
                den = den * x.denominator // gcd(den, x.denominator)
            ci = [int(x * den) for x in c]
            vec = [sum(basis[i][j] * ci[i] for i in range(r)) for j in range(n)]
            g = 0
            for x in ci:
                g = gcd(g, x)
            # ci / g still gives a lattice point; dividing keeps it primitive in c
            vec = [x // g for x in vec] if g > 1 else vec
            return vec
    return None


def det_int(m: list[list[int]]) -> Fraction:
    n = len(m)
    rows = [[Fraction(x) for x in r] for r in m]
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            out = -out
        out *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return out
