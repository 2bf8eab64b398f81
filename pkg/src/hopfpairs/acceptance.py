"""The ten acceptance criteria, each an exact check with a time budget.

``run()`` prints one PASS/FAIL line per criterion and returns the results.
Objects shared between criteria (the doubles, their modules) are cached.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from . import catalog as cat
from . import linalg as la
from .algebra import Report, dual_cop, verify_hopf
from .cartan import (character_relation_lattice, connected_components, has_nonneg_relation,
                     is_finite_type, is_Q_positive_definite, q_power_decomposition, quadratic_form_Q,
                     symmetrizers, thm_cartan_audit, verify_datum)
from .forms import (bialgebra_formula_crosscheck, induced_form, psi_form, radicals_check)
from .modules import (ModuleError, build_R, character_pairs, condition_C_check, duality_bullet,
                      find_codim_one_U_submodules, find_one_dim_A_submodules, induced_A_rho,
                      induced_A_rho_formula, induced_U_chi, induced_U_chi_formula, is_simple,
                      kernel_of, largest_submodule_within, lemma_modulo_check, module_iso,
                      submodule_lattice, verify_triple, weight_decomposition, build_L)
from .scalars import Scalar
from .twist import (build_twisted, central_grouplike_scan, double_pullback_check, evaluation_pairing,
                    factorization_check, yd_compat_check)


@dataclass
class Outcome:
    number: int
    title: str
    report: Report
    seconds: float
    budget: float
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.report.ok and self.seconds < self.budget

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        extra = f"; {'; '.join(self.notes)}" if self.notes else ""
        over = "" if self.seconds < self.budget else f"; over budget {self.budget:.0f}s"
        return (f"criterion {self.number:2d} {verdict}: {self.title} "
                f"({self.report.checks} checks, {len(self.report.failures)} failures, "
                f"{self.seconds:.1f}s{over}){extra}")

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "ok": self.ok,
                "report": self.report.to_json(), "notes": self.notes}


# --------------------------------------------------------------------------
# shared objects

@lru_cache(maxsize=None)
def taft(N: int):
    return cat.taft_algebra(N)


@lru_cache(maxsize=None)
def double(N: int):
    return cat.double_taft(N)


@lru_cache(maxsize=None)
def pairs(N: int):
    return character_pairs(double(N))


@lru_cache(maxsize=None)
def l_objects(N: int) -> dict:
    H = double(N)
    rhos, chis = pairs(N)
    out = {}
    for c, chi in enumerate(chis):
        Uchi = induced_U_chi(H, chi)
        for r, rho in enumerate(rhos):
            out[(r, c)] = build_L(H, rho, chi, Uchi)
    return dict(sorted(out.items()))


@lru_cache(maxsize=None)
def r_objects(N: int) -> dict:
    H = double(N)
    rhos, chis = pairs(N)
    out = {}
    for r, rho in enumerate(rhos):
        Arho = induced_A_rho(H, rho)
        for c, chi in enumerate(chis):
            out[(r, c)] = build_R(H, chi, rho, Arho)
    return dict(sorted(out.items()))


def _entrywise_equal(X, Y) -> list[str]:
    bad = []
    if X.algebra.mult != Y.algebra.mult:
        bad.append("product")
    if X.algebra.unit != Y.algebra.unit:
        bad.append("unit")
    if X.H.coalgebra.comult != Y.H.coalgebra.comult or X.H.coalgebra.counit != Y.H.coalgebra.counit:
        bad.append("coalgebra")
    if X.H.antipode != Y.H.antipode:
        bad.append("antipode")
    return bad


# --------------------------------------------------------------------------
# criteria

def criterion_1() -> Report:
    rep = Report("twist equals double")
    for N in (2, 3):
        A = taft(N)
        U = dual_cop(A)
        tw = build_twisted(U, A, evaluation_pairing(A, U))
        D = double(N)
        rep.checks += 2
        if D.dim != N ** 4:
            rep.fail(N=N, check="dimension", dim=D.dim)
        bad = _entrywise_equal(tw, D)
        if bad:
            rep.fail(N=N, check="entrywise", parts=bad)
        rep.merge(verify_hopf(D.H))
    return rep


def criterion_2() -> Report:
    rep = Report("factorization sweep")
    K2 = cat.cyclic_group_algebra(2, 2)
    for H in (double(2), double(3), cat.plain_tensor(K2, K2), cat.plain_tensor(taft(2), K2)):
        rep.merge(factorization_check(H))
    return rep


def criterion_3() -> Report:
    rep = Report("balanced form suite")
    for N in (2, 3):
        H = double(N)
        rhos, chis = pairs(N)
        Ls, Rs = l_objects(N), r_objects(N)
        for (r, c), L in Ls.items():
            R = Rs[(r, c)]
            F = psi_form(H, rhos[r], chis[c], L.info.get("Uchi"), R.info.get("Arho"))
            rep.merge(F.report)
            rep.merge(radicals_check(F))
            form = induced_form(F, L, R)
            rep.merge(form.report)
            rep.checks += 2
            if not (len(form.matrix) == L.dim == R.dim and all(len(x) == L.dim for x in form.matrix)):
                rep.fail(N=N, pair=(r, c), check="square of size dim L = dim R")
            if F.rank != L.dim:
                rep.fail(N=N, pair=(r, c), check="rank of Psi is dim L")
    return rep


def criterion_4() -> Report:
    rep = Report("L is injective up to isomorphism")
    for N in (2, 3):
        Ls, Rs = l_objects(N), r_objects(N)
        keys = list(Ls)
        for i, k1 in enumerate(keys):
            for k2 in keys[i:]:
                iso = module_iso(Ls[k1].M, Ls[k2].M)
                rep.checks += 1
                if (iso is not None) != (k1 == k2):
                    rep.fail(N=N, pair=(k1, k2), check="isomorphic iff same pair")
        # classification: a triple built by dualizing R is isomorphic to L
        for k, R in Rs.items():
            T, drep = duality_bullet(R)
            rep.merge(drep)
            rep.merge(verify_triple(T))
            rep.checks += 1
            if module_iso(T.M, Ls[k].M) is None:
                rep.fail(N=N, pair=k, check="dual of R is isomorphic to L")
    return rep


def criterion_5() -> Report:
    rep = Report("unique one-dimensional and codimension-one submodules")
    for N in (2, 3):
        for k, L in l_objects(N).items():
            ones = find_one_dim_A_submodules(L.M)
            codims = find_codim_one_U_submodules(L.M)
            rep.checks += 4
            if len(ones) != 1:
                rep.fail(N=N, pair=k, check="one 1-dim A-submodule", found=len(ones))
            elif la.span(ones, L.dim, L.M.N) != la.span([L.m], L.dim, L.M.N):
                rep.fail(N=N, pair=k, check="it is km")
            if len(codims) != 1:
                rep.fail(N=N, pair=k, check="one codim-1 U-submodule", found=len(codims))
            elif la.span(codims[0], L.dim, L.M.N) != la.span(L.N, L.dim, L.M.N):
                rep.fail(N=N, pair=k, check="it is N")
    return rep


def criterion_6() -> Report:
    rep = Report("duality on D(T2)")
    Ls, Rs = l_objects(2), r_objects(2)
    for k, L in Ls.items():
        T, drep = duality_bullet(L)
        rep.merge(drep)
        rep.merge(verify_triple(T))
        rep.checks += 2
        if T.dim != Rs[k].dim:
            rep.fail(pair=k, check="dim matches R", dims=(T.dim, Rs[k].dim))
        elif module_iso(T.M, Rs[k].M) is None:
            rep.fail(pair=k, check="isomorphic to R")
    return rep


def criterion_7() -> Report:
    rep = Report("central group-likes act by scalars")
    H = double(2)
    rhos, chis = pairs(2)
    cands = central_grouplike_scan(H)
    rep.checks += 1
    if not cands:
        rep.fail(check="some central group-like candidate")
    for u, g in cands:
        for r, rho in enumerate(rhos):
            for c, chi in enumerate(chis):
                zero, trivial = lemma_modulo_check(H, u, g, rho, chi, l_objects(2)[(r, c)])
                rep.checks += 1
                if zero != trivial:
                    rep.fail(pair=(r, c), check="acts as zero iff rho(u)chi(g) = 1")
    return rep


def criterion_8() -> Report:
    rep = Report("cross-checks of the specialized formulas")
    H = double(2)
    rhos, chis = pairs(2)
    for c, chi in enumerate(chis):
        rep.checks += 1
        if induced_U_chi_formula(H, chi) != induced_U_chi(H, chi).basis_actions:
            rep.fail(chi=c, check="U_chi formula")
    for r, rho in enumerate(rhos):
        rep.checks += 1
        if induced_A_rho_formula(H, rho) != induced_A_rho(H, rho).basis_actions:
            rep.fail(rho=r, check="A_rho formula")
    for rho in rhos:
        for chi in chis:
            rep.merge(bialgebra_formula_crosscheck(H, rho, chi))
            rep.merge(double_pullback_check(H, rho, chi))
    T2 = taft(2)
    rep.merge(yd_compat_check(T2, list(T2.coalgebra.counit)))
    return rep


def criterion_9() -> Report:
    rep = Report("Cartan-type suite")
    # (i) the affine counterexample
    D = cat.counterexample_datum()
    rep.merge(verify_datum(D))
    lat = character_relation_lattice(D.chi, D.group)
    rep.checks += 5
    if len(connected_components(D.a)) != 1:
        rep.fail(part="i", check="connected")
    if is_finite_type(D.a)[0]:
        rep.fail(part="i", check="not finite type")
    if lat != [[1, 1]]:
        rep.fail(part="i", check="relation lattice", got=lat)
    if has_nonneg_relation(lat) != [1, 1]:
        rep.fail(part="i", check="nonnegative relation (1, 1)")
    if quadratic_form_Q([1, 1], D.a, [1, 1]) != 0:
        rep.fail(part="i", check="Q(1, 1) = 0")
    # (ii) the root-of-unity counterexample
    for N in (2, 3, 4):
        M, datum = cat.example_simple_rep(N)
        chis = {"x": {"g": datum.chi[0].values[0]}}
        rep.merge(condition_C_check(M, chis))
        audit = thm_cartan_audit(datum, rep=M)
        rep.checks += 4
        if M.dim != N or not is_simple(M):
            rep.fail(part="ii", N=N, check="simple of dimension N")
        if audit.verdicts.get("no q_i root of unity", True):
            rep.fail(part="ii", N=N, check="root-of-unity hypothesis flagged")
        if not audit.witnesses.get("counterexample"):
            rep.fail(part="ii", N=N, check="counterexample confirmed")
        if not audit.verdicts["datum of Cartan type"] or not audit.verdicts["finite type"]:
            rep.fail(part="ii", N=N, check="only the root-of-unity hypothesis fails")
    # (iii) finite types with transcendental q
    for label in ("A2", "B2", "G2"):
        D = cat.finite_type_datum(label)
        a, d = cat.FINITE_TYPES[label]
        rep.merge(verify_datum(D))
        sym = symmetrizers(D)
        rep.merge(sym.report)
        rep.checks += 4
        if not is_finite_type(D.a)[0]:
            rep.fail(part="iii", type=label, check="finite type")
        if sym.d != d:
            rep.fail(part="iii", type=label, check="symmetrizer", got=sym.d)
        if not is_Q_positive_definite(sym.d, D.a):
            rep.fail(part="iii", type=label, check="Q positive definite")
        if character_relation_lattice(D.chi, D.group):
            rep.fail(part="iii", type=label, check="trivial relation lattice")
    # (iv) power factorization on q^2, q^3
    q = Scalar.q(1)
    base, omegas, exps = q_power_decomposition([q ** 2, q ** 3], [(0, 3, 2)])
    rep.checks += 1
    if (base, exps) != (q, [2, 3]) or not all(w.is_one() for w in omegas):
        rep.fail(part="iv", check="q^2, q^3 = q^2, q^3")
    return rep


def _multiplicity_free(M) -> bool:
    try:
        return all(len(b) == 1 for _, b in weight_decomposition(M))
    except ModuleError:
        return False


def oracle_modules() -> list:
    """Every multiplicity-free module of dimension <= 6 built by the suite."""
    mods = []
    for N in (2, 3):
        H = double(N)
        rhos, chis = pairs(N)
        mods += [L.M for L in l_objects(N).values()] + [R.M for R in r_objects(N).values()]
        mods += [induced_U_chi(H, chi) for chi in chis] + [induced_A_rho(H, rho) for rho in rhos]
    for N in (2, 3, 4):
        mods.append(cat.example_simple_rep(N)[0])
    return [M for M in mods if M.dim <= 6 and _multiplicity_free(M)]


def _test_subspaces(M, rnd: random.Random) -> list[list]:
    n, N = M.dim, M.N
    out = [[], la.identity(n, N)]
    for i in range(n):
        out.append(kernel_of(la.unit_vector(n, i, N), N))
    for _ in range(6):
        k = rnd.randint(1, max(1, n - 1))
        out.append([[Scalar.from_int(rnd.randint(-2, 2), N) for _ in range(n)] for _ in range(k)])
    return out


def criterion_10() -> Report:
    rep = Report("fixpoint agrees with brute-force submodules")
    rnd = random.Random(20261018)
    mods = oracle_modules()
    rep.checks += 1
    if not mods:
        rep.fail(check="nonempty module family")
    for idx, M in enumerate(mods):
        lattice_ = submodule_lattice(M)
        n, N = M.dim, M.N
        for W in _test_subspaces(M, rnd):
            Wspan = la.span(W, n, N) if W else []
            inside = [S for S in lattice_ if all(la.contains(Wspan, v) for v in S)]
            want = max(inside, key=len)
            got = largest_submodule_within(M, W)
            rep.checks += 1
            if la.span(got, n, N) != la.span(want, n, N):
                rep.fail(module=idx, label=M.label, check="largest submodule", dims=(len(got), len(want)))
    return rep


CRITERIA: list[tuple[int, str, Callable[[], Report], float]] = [
    (1, "twisted product equals the double for T2 and T3", criterion_1, 60),
    (2, "factorization identities on four products", criterion_2, 30),
    (3, "balanced form, radicals and induced form", criterion_3, 300),
    (4, "L(rho, chi) pairwise non-isomorphic; dual triples isomorphic to L", criterion_4, 300),
    (5, "unique 1-dim A-submodule and codim-1 U-submodule", criterion_5, 120),
    (6, "duality matches R on D(T2)", criterion_6, 60),
    (7, "central group-likes on D(T2)", criterion_7, 60),
    (8, "formula cross-checks, pullback and YD compatibility", criterion_8, 120),
    (9, "Cartan-type suite", criterion_9, 60),
    (10, "largest submodule oracle", criterion_10, 60),
]


def run_one(number: int) -> Outcome:
    for k, title, fn, budget in CRITERIA:
        if k == number:
            t0 = time.perf_counter()
            try:
                rep = fn()
            except Exception as e:  # a crash is a failed criterion, reported as such
                rep = Report(title)
                rep.fail(check="raised", error=f"{type(e).__name__}: {e}")
            return Outcome(k, title, rep, time.perf_counter() - t0, budget)
    raise ValueError(f"no criterion {number}")


def run(numbers: list[int] | None = None, echo: Callable[[str], None] | None = print) -> list[Outcome]:
    out = []
    for k, *_ in CRITERIA:
        if numbers and k not in numbers:
            continue
        res = run_one(k)
        if echo:
            echo(res.line())
        out.append(res)
    return out
