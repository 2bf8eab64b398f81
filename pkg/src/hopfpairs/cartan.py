"""Cartan matrices, data of Cartan type, symmetrizers, and the audit of the
hypotheses under which finite-dimensional simple modules are one-dimensional.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from . import lattice
from .algebra import Report
from .groups import AbelianGroup, Character, GroupElem, char_eval
from .scalars import Field, Scalar


class CartanError(ValueError):
    pass


# --------------------------------------------------------------------------
# matrices

def verify_cartan_matrix(a: list[list[int]]) -> Report:
    rep = Report("cartan matrix")
    n = len(a)
    if any(len(r) != n for r in a):
        rep.fail(check="square")
        return rep
    for i in range(n):
        rep.checks += 1
        if a[i][i] != 2:
            rep.fail(check="diagonal is 2", index=(i, i))
        for j in range(n):
            if i == j:
                continue
            rep.checks += 2
            if a[i][j] > 0:
                rep.fail(check="off-diagonal <= 0", index=(i, j))
            if (a[i][j] == 0) != (a[j][i] == 0):
                rep.fail(check="zero pattern symmetric", index=(i, j))
    return rep


def connected_components(a: list[list[int]]) -> list[list[int]]:
    n = len(a)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp, todo = [], [s]
        seen[s] = True
        while todo:
            i = todo.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and j != i and (a[i][j] or a[j][i]):
                    seen[j] = True
                    todo.append(j)
        out.append(sorted(comp))
    return out


def _bfs_tree(a: list[list[int]], root: int, allowed: set[int] | None = None) -> dict[int, int | None]:
    parent: dict[int, int | None] = {root: None}
    todo = deque([root])
    while todo:
        i = todo.popleft()
        for j in range(len(a)):
            if j not in parent and j != i and a[i][j] and (allowed is None or j in allowed):
                parent[j] = i
                todo.append(j)
    return parent


def rational_symmetrizer(a: list[list[int]]) -> list[Fraction] | None:
    """d with d_i a_ij = d_j a_ji, positive and normalized per component, or None."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for comp in connected_components(a):
        d[comp[0]] = Fraction(1)
        todo = deque([comp[0]])
        while todo:
            i = todo.popleft()
            for j in comp:
                if j != i and a[i][j] and d[j] is None:
                    d[j] = d[i] * Fraction(a[i][j], a[j][i])
                    todo.append(j)
    for i in range(n):
        for j in range(n):
            if d[i] * a[i][j] != d[j] * a[j][i]:
                return None
    return d  # type: ignore[return-value]


def integer_symmetrizer(a: list[list[int]]) -> list[int] | None:
    d = rational_symmetrizer(a)
    if d is None:
        return None
    den = lcm(1, *(x.denominator for x in d))
    ints = [int(x * den) for x in d]
    g = gcd(*ints)
    return [x // g for x in ints]


def is_finite_type(a: list[list[int]]) -> tuple[bool, dict]:
    """Symmetrizable with D a positive definite (all leading principal minors > 0)."""
    if not verify_cartan_matrix(a).ok:
        return False, {"reason": "not a generalized Cartan matrix"}
    d = integer_symmetrizer(a)
    if d is None:
        return False, {"reason": "not symmetrizable"}
    B = [[d[i] * a[i][j] for j in range(len(a))] for i in range(len(a))]
    for k in range(1, len(a) + 1):
        m = lattice.det_int([r[:k] for r in B[:k]])
        if m <= 0:
            return False, {"reason": "non-positive leading minor", "order": k, "minor": str(m), "d": d}
    return True, {"d": d}


def dynkin_label(a: list[list[int]]) -> str | None:
    """Type label for connected rank <= 2 matrices of finite type (convenience)."""
    ok, _ = is_finite_type(a)
    if not ok:
        return None
    if len(a) == 1:
        return "A1"
    if len(a) == 2:
        prod = a[0][1] * a[1][0]
        return {0: "A1xA1", 1: "A2", 2: "B2", 3: "G2"}.get(prod)
    return None


# --------------------------------------------------------------------------
# data of Cartan type

@dataclass
class CartanDatum:
    group: AbelianGroup
    g: list[GroupElem]
    chi: list[Character]
    a: list[list[int]]
    name: str = ""

    @property
    def rank(self) -> int:
        return len(self.a)

    @property
    def N(self) -> int:
        return self.chi[0].values[0].N

    def q(self, i: int, j: int) -> Scalar:
        """q_ij = chi_j(g_i)."""
        return char_eval(self.chi[j], self.g[i])

    def qi(self, i: int) -> Scalar:
        return self.q(i, i)

    def to_json(self) -> dict:
        return {"schema": 1, "kind": "datum", "field": {"conductor": self.N,
                                                    "q": any(not v.is_constant() for c in self.chi for v in c.values)},
                "name": self.name, "group": self.group.to_json(),
                "g": [list(x.exps) for x in self.g],
                "chi": [c.to_json() for c in self.chi], "cartan": self.a}

    @classmethod
    def from_json(cls, obj: dict) -> "CartanDatum":
        G = AbelianGroup.from_json(obj["group"])
        return cls(G, [G.element(e) for e in obj["g"]], [Character.from_json(G, c) for c in obj["chi"]],
                   [list(map(int, r)) for r in obj["cartan"]], obj.get("name", ""))


def verify_datum(D: CartanDatum) -> Report:
    """q_ij q_ji = q_ii^{a_ij}, q_ii != 1, and the consequence q_i^{a_ij} = q_j^{a_ji}."""
    rep = verify_cartan_matrix(D.a)
    rep.name = "datum"
    n = D.rank
    if len(D.g) != n or len(D.chi) != n:
        rep.fail(check="shapes")
        return rep
    for i in range(n):
        rep.checks += 1
        if D.qi(i).is_one():
            rep.fail(check="q_ii != 1", index=i)
        for j in range(n):
            rep.checks += 2
            if D.q(i, j) * D.q(j, i) != D.qi(i) ** D.a[i][j]:
                rep.fail(check="q_ij q_ji = q_ii^a_ij", index=(i, j))
            if D.qi(i) ** D.a[i][j] != D.qi(j) ** D.a[j][i]:
                rep.fail(check="q_i^a_ij = q_j^a_ji", index=(i, j))
    return rep


def path_exponents(a: list[list[int]], i: int, j: int, D: CartanDatum | None = None) -> tuple[int, int]:
    """Products of Cartan entries along a path i -> j, forwards and backwards.

    With a datum supplied, q_i^{a(i,j)} = q_j^{b(i,j)} is asserted.
    """
    parent = _bfs_tree(a, i)
    if j not in parent:
        raise CartanError(f"{i} and {j} are not connected")
    path = [j]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    x = y = 1
    for s, t in zip(path, path[1:]):
        x *= a[s][t]
        y *= a[t][s]
    if D is not None and D.qi(i) ** x != D.qi(j) ** y:
        raise AssertionError(f"path identity fails for ({i}, {j})")
    return x, y


@dataclass
class SymmetrizerResult:
    d: list[int]
    q_base: Scalar
    omegas: list[Scalar]
    exponents: list[int]
    report: Report = field(default_factory=lambda: Report("symmetrizers"))

    def to_json(self) -> dict:
        return {"d": self.d, "q_base": self.q_base.to_json(), "omegas": [w.to_json() for w in self.omegas],
                "exponents": self.exponents, "report": self.report.to_json()}


def _power_of(x: Scalar, base: Scalar) -> tuple[Scalar, int] | None:
    """(w, L) with x = w base^L and w a root of unity, for monomials in q."""
    mx, mb = x.monomial(), base.monomial()
    if mx is None or mb is None or mb[1] == 0:
        return None
    cx, ex = mx
    cb, eb = mb
    if ex % eb:
        return None
    L = ex // eb
    w = x / base ** L
    if not w.is_root_of_unity():
        return None
    return w, L


def q_power_decomposition(values: list[Scalar], witnesses: list[tuple[int, int, int]],
                          q_base: Scalar | None = None) -> tuple[Scalar, list[Scalar], list[int]]:
    """Write x_i = w_i q_base^{L_i} given relations x_p^m = x_i^n.

    ``witnesses[i-1] = (p, m, n)`` for i >= 1 names an earlier index p with
    x_p^m = x_i^n; a plain chain uses p = i - 1.  When ``q_base`` is omitted
    and x_0 is a monomial in the indeterminate, the base is q itself.
    """
    if not values:
        raise CartanError("no values")
    N = values[0].N
    for x in values:
        if x.is_zero() or x.is_root_of_unity():
            raise CartanError(f"{x} is zero or a root of unity")
    if q_base is None:
        mono = values[0].monomial()
        if mono is None or mono[1] == 0:
            raise CartanError(f"no root of {values[0]} in Q(zeta_{N})(q): supply q_base")
        q_base = Scalar.q(N)
    first = _power_of(values[0], q_base)
    if first is None:
        raise CartanError(f"{values[0]} is not a root of unity times a power of {q_base}")
    omegas, exps = [first[0]], [first[1]]
    for i in range(1, len(values)):
        p, m, n = witnesses[i - 1]
        if values[p] ** m != values[i] ** n:
            raise CartanError(f"witness x_{p}^{m} = x_{i}^{n} fails")
        got = _power_of(values[i], q_base)
        if got is None or got[1] * n != exps[p] * m:
            raise CartanError(f"x_{i} is not w q_base^(L_{p} {m}/{n}) in the session field")
        omegas.append(got[0])
        exps.append(got[1])
    for x, w, L in zip(values, omegas, exps):
        if x != w * q_base ** L:
            raise AssertionError("decomposition does not evaluate back")
    return q_base, omegas, exps


def symmetrizers(D: CartanDatum, q_base: Scalar | None = None) -> SymmetrizerResult:
    """Exponents d_i with q_i = w_i q_base^{d_i * scale}, d_i a_ij = d_j a_ji."""
    a = D.a
    if len(connected_components(a)) != 1:
        raise CartanError("datum is not connected")
    qs = [D.qi(i) for i in range(D.rank)]
    roots = [x.is_root_of_unity() for x in qs]
    if any(roots):
        raise CartanError("some q_i is a root of unity")
    parent = _bfs_tree(a, 0)
    order = list(parent)  # BFS order: parents precede children
    pos = {v: k for k, v in enumerate(order)}
    values = [qs[v] for v in order]
    wit = [(pos[parent[v]], a[parent[v]][v], a[v][parent[v]]) for v in order[1:]]
    base, om, ex = q_power_decomposition(values, wit, q_base)
    L = [0] * D.rank
    W = [None] * D.rank
    for k, v in enumerate(order):
        L[v] = ex[k]
        W[v] = om[k]
    g = gcd(*L)
    if L[0] < 0:
        g = -g
    d = [x // g for x in L]
    rep = Report("symmetrizers")
    for i in range(D.rank):
        rep.checks += 1
        if qs[i] != W[i] * base ** L[i]:
            rep.fail(check="q_i = w_i base^L_i", index=i)
        for j in range(D.rank):
            rep.checks += 1
            if d[i] * a[i][j] != d[j] * a[j][i]:
                rep.fail(check="d_i a_ij = d_j a_ji", index=(i, j))
    return SymmetrizerResult(d, base, W, L, rep)  # type: ignore[arg-type]


def quadratic_form_Q(d: list[int], a: list[list[int]], k: list[int]) -> int:
    n = len(a)
    return sum(k[i] * k[j] * d[i] * a[i][j] for i in range(n) for j in range(n))


def is_Q_positive_definite(d: list[int], a: list[list[int]]) -> bool:
    n = len(a)
    B = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    if any(B[i][j] != B[j][i] for i in range(n) for j in range(n)):
        raise CartanError("d does not symmetrize a")
    return all(lattice.det_int([r[:k] for r in B[:k]]) > 0 for k in range(1, n + 1))


# --------------------------------------------------------------------------
# relation lattices

def _exponent_coordinates(x: Scalar) -> tuple[int, int]:
    """(e, t) with x = w^t q^e, w the field's root-of-unity generator."""
    mono = x.monomial()
    if mono is None:
        raise CartanError(f"{x} is not a root of unity times a power of q")
    c, e = mono
    F = Field(x.N)
    return e, F.unity_exponent(Scalar.const(c))


def character_relation_lattice(chars: list[Character], group: AbelianGroup | None = None) -> list[list[int]]:
    """Basis of {k : chi_1^k_1 ... chi_n^k_n = 1}."""
    if not chars:
        return []
    group = group or chars[0].group
    N = chars[0].values[0].N
    L = Field(N).unity_order
    rows, mods = [], []
    for s in range(group.ngens):
        coords = [_exponent_coordinates(c.values[s]) for c in chars]
        rows.append([e for e, _ in coords])
        mods.append(0)
        rows.append([t for _, t in coords])
        mods.append(L)
    return lattice.modular_kernel(rows, mods, len(chars))


def element_relation_lattice(elems: list[GroupElem], group: AbelianGroup) -> list[list[int]]:
    """Basis of {k : g_1^k_1 ... g_n^k_n = 1}."""
    rows, mods = [], []
    r = group.free_rank
    for s in range(group.ngens):
        rows.append([g.exps[s] for g in elems])
        mods.append(0 if s < r else group.torsion[s - r])
    return lattice.modular_kernel(rows, mods, len(elems))


def has_nonneg_relation(basis: list[list[int]]) -> list[int] | None:
    return lattice.has_nonneg_relation(basis)


# --------------------------------------------------------------------------
# the audit

@dataclass
class Audit:
    verdicts: dict[str, bool] = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def hypotheses_hold(self) -> bool:
        return all(v for k, v in self.verdicts.items() if not k.startswith("conclusion"))

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> dict:
        return {"verdicts": dict(self.verdicts), "hypotheses_hold": self.hypotheses_hold,
                "witnesses": self.witnesses}


def thm_cartan_audit(D: CartanDatum, skew_pairs: set[tuple[int, int]] | None = None, rep=None) -> Audit:
    """Check the hypotheses that force simple finite-dimensional modules to be
    one-dimensional; optionally test the conclusion on a representation."""
    from .modules import find_annihilated_weight_vector, is_simple
    out = Audit()
    skew_pairs = {tuple(sorted(p)) for p in (skew_pairs or set())}
    vd = verify_datum(D)
    out.verdicts["datum of Cartan type"] = vd.ok
    if not vd.ok:
        out.witnesses["datum"] = vd.failures[:5]
    comps = connected_components(D.a)
    out.witnesses["components"] = comps
    finite = []
    for comp in comps:
        sub = [[D.a[i][j] for j in comp] for i in comp]
        ok, wit = is_finite_type(sub)
        finite.append(ok)
        out.witnesses.setdefault("finite type", []).append({"component": comp, **wit})
    out.verdicts["finite type"] = all(finite)
    roots = [i for i in range(D.rank) if D.qi(i).is_root_of_unity()]
    out.verdicts["no q_i root of unity"] = not roots
    if roots:
        out.witnesses["roots of unity"] = roots
    missing = []
    for x in range(len(comps)):
        for y in range(x + 1, len(comps)):
            for i in comps[x]:
                for j in comps[y]:
                    if (min(i, j), max(i, j)) not in skew_pairs:
                        missing.append((i, j))
    out.verdicts["cross-component skew commutation"] = not missing
    if missing:
        out.witnesses["undeclared pairs"] = missing
    try:
        lat = character_relation_lattice(D.chi, D.group)
        nonneg = has_nonneg_relation(lat)
        out.witnesses["relation lattice"] = lat
        out.witnesses["nonneg relation"] = nonneg
    except CartanError as e:
        out.witnesses["relation lattice"] = str(e)
    if rep is not None:
        v = find_annihilated_weight_vector(rep)
        out.verdicts["conclusion: one-dimensional submodule"] = v is not None
        try:
            simple = is_simple(rep)
        except ValueError as e:
            simple = None
            out.witnesses["simplicity"] = str(e)
        if simple:
            out.verdicts["conclusion: simple implies dim 1"] = rep.dim == 1
        out.witnesses["rep dim"] = rep.dim
        out.witnesses["counterexample"] = (not out.hypotheses_hold) and not all(
            v for k, v in out.verdicts.items() if k.startswith("conclusion"))
    return out
