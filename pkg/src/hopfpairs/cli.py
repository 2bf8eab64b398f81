"""Command-line interface.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for bad
input or usage.  Reports are deterministic; timing goes to stderr only.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Callable

from . import catalog as cat
from .algebra import Report, verify_bialgebra, verify_hopf
from .cartan import CartanError, thm_cartan_audit, verify_datum
from .forms import psi_form
from .modules import (ModuleError, build_L, build_R, character_pairs, condition_C_check, is_simple,
                      module_iso, verify_triple)
from .serialize import (InputError, build_from_parts, datum_to_json, dumps, hopf_to_json, load,
                        load_twisted, rep_characters, rep_to_json, twisted_to_json)
from .twist import drinfeld_double, factorization_check, verify_pairing_axioms

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field(N: int, q: bool | None = None) -> dict:
    out: dict[str, Any] = {"conductor": N}
    if q is not None:
        out["q"] = q
    return out


def _report(command: list[str], field: dict, ok: bool, checks: dict, data: dict | None = None) -> dict:
    return {"schema": 1, "command": command, "field": field, "ok": ok,
            "checks": checks, "data": data or {}}


# --------------------------------------------------------------------------
# verify

def _verify_hopf_payload(H) -> dict[str, Report]:
    if H.antipode is None:
        return {"bialgebra": verify_bialgebra(H)}
    return {"hopf": verify_hopf(H)}


def cmd_verify(args) -> dict:
    kind, payload = load(args.input)
    checks: dict[str, Report] = {}
    if kind == "hopf":
        checks.update(_verify_hopf_payload(payload))
        N = payload.N
    elif kind == "twisted":
        U, A, P, name = payload
        N = U.N
        checks["U"] = _verify_hopf_payload(U).popitem()[1]
        checks["A"] = _verify_hopf_payload(A).popitem()[1]
        checks["pairing"] = verify_pairing_axioms(U, A, P)
        if all(r.ok for r in checks.values()):
            H = build_from_parts(U, A, P, name)
            checks["factorization"] = factorization_check(H)
            checks["twisted"] = verify_hopf(H.H) if H.H.antipode is not None else verify_bialgebra(H.H)
    elif kind == "rep":
        N = payload.N
        checks["torus"] = _torus_check(payload)
    else:
        D, rep, _ = payload
        N = D.N
        checks["datum"] = verify_datum(D)
        if rep is not None:
            checks["condition (C)"] = condition_C_check(rep, rep_characters(D, rep))
    ok = all(r.ok for r in checks.values())
    return _report(args.argv, _field(N), ok, {k: r.to_json() for k, r in checks.items()}, {"kind": kind})


def _torus_check(rep) -> Report:
    """Group generators act invertibly and commute."""
    from . import linalg as la
    out = Report("torus")
    mats = [rep.gens[t] for t in rep.torus]
    for i, a in enumerate(mats):
        out.checks += 1
        if not la.det(a).num:
            out.fail(check="invertible", generator=rep.torus[i])
        for j in range(i + 1, len(mats)):
            out.checks += 1
            if la.matmul(a, mats[j]) != la.matmul(mats[j], a):
                out.fail(check="commute", generators=(rep.torus[i], rep.torus[j]))
    return out


# --------------------------------------------------------------------------
# catalog

def _cat_group(n):
    return hopf_to_json(cat.cyclic_group_algebra(n or 2))


def _cat_taft(n):
    return hopf_to_json(cat.taft_algebra(n or 2))


def _cat_double(n):
    return twisted_to_json(cat.double_taft(n or 2))


def _cat_tensor(n):
    K = cat.cyclic_group_algebra(n or 2)
    return twisted_to_json(cat.plain_tensor(K, K))


def _cat_simple(n):
    rep, D = cat.example_simple_rep(n or 2)
    return datum_to_json(D, rep)


def _cat_finite(label):
    return lambda n: datum_to_json(cat.finite_type_datum(label))


CATALOG: dict[str, Callable[[int | None], dict]] = {
    "group": _cat_group,
    "taft": _cat_taft,
    "double-taft": _cat_double,
    "group-tensor": _cat_tensor,
    "simple-rep": _cat_simple,
    "simple-module": lambda n: rep_to_json(cat.example_simple_rep(n or 2)[0]),
    "counterexample": lambda n: datum_to_json(cat.counterexample_datum()),
    **{f"datum-{t.lower()}": _cat_finite(t) for t in cat.FINITE_TYPES},
}


def cmd_catalog_build(args) -> dict:
    if args.name not in CATALOG:
        raise UsageError(f"unknown catalog entry {args.name!r}; choose from {', '.join(sorted(CATALOG))}")
    try:
        return CATALOG[args.name](args.N)
    except ValueError as e:
        raise UsageError(str(e)) from None


# --------------------------------------------------------------------------
# modules

def _pick(items: list, idx: int, what: str):
    if not 0 <= idx < len(items):
        raise UsageError(f"{what} index {idx} out of range 0..{len(items) - 1}")
    return items[idx]


def _triple_data(T) -> dict:
    out = T.to_json()
    out["simple"] = is_simple(T.M)
    return out


def _iso_table(objs: dict) -> tuple[list[list[int]], bool]:
    keys = list(objs)
    mat = [[0] * len(keys) for _ in keys]
    for i, a in enumerate(keys):
        for j in range(i, len(keys)):
            iso = module_iso(objs[a].M, objs[keys[j]].M) is not None
            mat[i][j] = mat[j][i] = int(iso)
    distinct = all(mat[i][j] == int(i == j) for i in range(len(keys)) for j in range(len(keys)))
    return mat, distinct


def _module_cmd(args, side: str) -> dict:
    H = load_twisted(args.input)
    rhos, chis = character_pairs(H)
    build = (lambda r, c: build_L(H, r, c)) if side == "L" else (lambda r, c: build_R(H, c, r))
    if args.all_pairs:
        objs = {(r, c): build(rho, chi) for r, rho in enumerate(rhos) for c, chi in enumerate(chis)}
        checks = {f"{r},{c}": verify_triple(T).to_json() for (r, c), T in objs.items()}
        mat, distinct = _iso_table(objs)
        ok = all(v["ok"] for v in checks.values()) and distinct
        data = {"pairs": [[r, c] for r, c in objs], "dims": [T.dim for T in objs.values()],
                "iso": mat, "pairwise_distinct": distinct}
        return _report(args.argv, _field(H.N), ok, checks, data)
    rho = _pick(rhos, args.rho, "rho")
    chi = _pick(chis, args.chi, "chi")
    T = build(rho, chi)
    check = verify_triple(T)
    data = _triple_data(T)
    return _report(args.argv, _field(H.N), check.ok and data["simple"], {"triple": check.to_json()}, data)


def cmd_lmodule(args) -> dict:
    return _module_cmd(args, "L")


def cmd_rmodule(args) -> dict:
    return _module_cmd(args, "R")


def cmd_table(args) -> dict:
    H = load_twisted(args.input)
    rhos, chis = character_pairs(H)
    rows, Ls, checks = [], {}, {}
    for r, rho in enumerate(rhos):
        for c, chi in enumerate(chis):
            L = build_L(H, rho, chi)
            R = build_R(H, chi, rho)
            F = psi_form(H, rho, chi, L.info["Uchi"], R.info["Arho"])
            Ls[(r, c)] = L
            checks[f"{r},{c}"] = F.report.to_json()
            rows.append({"rho": r, "chi": c, "dim_L": L.dim, "dim_R": R.dim, "psi_rank": F.rank,
                         "simple": is_simple(L.M)})
    mat, distinct = _iso_table(Ls)
    ok = (distinct and all(v["ok"] for v in checks.values())
          and all(x["dim_L"] == x["dim_R"] == x["psi_rank"] for x in rows))
    return _report(args.argv, _field(H.N), ok, checks,
                   {"rows": rows, "iso": mat, "bijective_on_pairs": distinct})


def cmd_double(args) -> dict:
    kind, A = load(args.input)
    if kind != "hopf":
        raise UsageError("double expects a Hopf algebra file")
    pre = verify_hopf(A)
    if not pre.ok:
        return _report(args.argv, _field(A.N), False, {"input": pre.to_json()})
    try:
        D = drinfeld_double(A, verify=False)
    except (ValueError, AssertionError) as e:
        return _report(args.argv, _field(A.N), False, {"construction": {"ok": False, "error": str(e)}})
    checks = {"factorization": factorization_check(D).to_json(), "hopf": verify_hopf(D.H).to_json()}
    ok = all(v["ok"] for v in checks.values())
    if args.save:
        Path(args.save).write_text(dumps(twisted_to_json(D)))
    return _report(args.argv, _field(A.N), ok, checks, {"dim": D.dim, "name": D.name})


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i,j but got {text!r}") from None
    return (min(i, j), max(i, j))


def cmd_cartan_audit(args) -> dict:
    kind, payload = load(args.input)
    if kind != "datum":
        raise UsageError("cartan audit expects a datum file")
    D, rep, pairs = payload
    pairs = pairs | set(args.skew_pair or [])
    if args.rep:
        rkind, rep = load(args.rep)
        if rkind != "rep":
            raise UsageError("--rep expects a representation file")
        if rep.N != D.N:
            raise UsageError("representation and datum declare different conductors")
    elif args.no_rep:
        rep = None
    checks = {}
    if rep is not None:
        checks["condition (C)"] = condition_C_check(rep, rep_characters(D, rep)).to_json()
    audit = thm_cartan_audit(D, pairs, rep)
    data = audit.to_json()
    data["witnesses"] = _plain(data["witnesses"])
    ok = audit.ok and all(v["ok"] for v in checks.values())
    return _report(args.argv, _field(D.N), ok, checks, data)


def _plain(x):
    """JSON-safe copy with tuples as lists and scalars encoded."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


def cmd_selftest(args) -> dict:
    from . import acceptance
    numbers = [int(x) for x in args.only.split(",")] if args.only else None
    echo = None if args.quiet else (lambda s: print(s, file=sys.stderr))
    results = acceptance.run(numbers, echo=echo)
    return _report(args.argv, {}, all(r.ok for r in results), {str(r.number): r.to_json() for r in results})


# --------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfpairs", description="Exact computations with twisted tensor products.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, parent=sub):
        sp = parent.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--out", help="write the report JSON here")
        return sp

    sp = add("verify", cmd_verify, "verify an algebra, twisted product or datum file")
    sp.add_argument("--input", required=True)

    cp = sub.add_parser("catalog", help="catalog objects")
    csub = cp.add_subparsers(dest="catalog_command", required=True)
    sp = add("build", cmd_catalog_build, "emit a catalog object as JSON", csub)
    sp.add_argument("name", help=", ".join(sorted(CATALOG)))
    sp.add_argument("--N", type=int, default=None)

    for name, fn in (("lmodule", cmd_lmodule), ("rmodule", cmd_rmodule)):
        sp = add(name, fn, f"build the {'left' if name == 'lmodule' else 'right'} module of a character pair")
        sp.add_argument("--input", required=True)
        sp.add_argument("--rho", type=int, default=0)
        sp.add_argument("--chi", type=int, default=0)
        sp.add_argument("--all-pairs", action="store_true")

    sp = add("table", cmd_table, "all character pairs with dimensions, form ranks and isomorphisms")
    sp.add_argument("--input", required=True)

    sp = add("double", cmd_double, "Drinfeld double of a Hopf algebra file")
    sp.add_argument("--input", required=True)
    sp.add_argument("--save", help="write the double as a twisted-product file")

    kp = sub.add_parser("cartan", help="Cartan data")
    ksub = kp.add_subparsers(dest="cartan_command", required=True)
    sp = add("audit", cmd_cartan_audit, "audit the hypotheses forcing one-dimensional simples", ksub)
    sp.add_argument("--input", "--datum", dest="input", required=True)
    sp.add_argument("--rep", help="representation file to test the conclusion on")
    sp.add_argument("--skew-pair", "--skew", dest="skew_pair", type=_parse_pair, action="append",
                    help="i,j: declare that a_i and a_j skew-commute (repeatable)")
    sp.add_argument("--no-rep", action="store_true", help="ignore a representation stored in the file")

    sp = add("selftest", cmd_selftest, "run the acceptance suite")
    sp.add_argument("--only", help="comma-separated criterion numbers")
    sp.add_argument("--quiet", action="store_true")
    return p


def _summary(report: dict) -> str:
    lines = [f"{' '.join(report['command'])}: {'PASS' if report['ok'] else 'FAIL'}"]
    for name, chk in report["checks"].items():
        ok = chk.get("ok")
        lines.append(f"  {name}: {'ok' if ok else 'FAILED'}")
    data = report.get("data") or {}
    for key in ("dim", "simple", "dims", "pairwise_distinct", "bijective_on_pairs", "verdicts"):
        if key in data:
            lines.append(f"  {key}: {data[key]}")
    for row in data.get("rows", []):
        lines.append("  rho={rho} chi={chi} dim L={dim_L} dim R={dim_R} rank={psi_rank} simple={simple}".format(**row))
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    args.argv = argv
    t0 = time.perf_counter()
    try:
        report = args.func(args)
    except (InputError, UsageError, CartanError, ModuleError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.perf_counter() - t0
    if args.command == "catalog":
        text = dumps(report)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    if args.out:
        Path(args.out).write_text(dumps(report))
    print(_summary(report))
    print(f"elapsed {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report["ok"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
