"""JSON files for Hopf algebras, twisted products and Cartan data.

Every file carries ``"schema": 1``, a ``"kind"`` and a field header
``{"conductor": N, "q": bool}``; scalars that disagree with the header
are rejected instead of being coerced.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable

from . import linalg as la
from .algebra import AlgebraData, CoalgebraData, HopfData, to_dense
from .cartan import CartanDatum
from .groups import AbelianGroup, Character
from .modules import Representation, generated_rep
from .scalars import Scalar

SCHEMA = 1
KINDS = ("hopf", "twisted", "datum", "rep")


class InputError(ValueError):
    """Malformed input or a header that does not match the content."""


# --------------------------------------------------------------------------
# headers

def field_header(N: int, scalars: Iterable[Scalar]) -> dict:
    return {"conductor": N, "q": any(not s.is_constant() for s in scalars)}


def _read_header(obj: Any, kinds: tuple[str, ...] = KINDS) -> dict:
    if not isinstance(obj, dict):
        raise InputError("top level must be a JSON object")
    if obj.get("schema") != SCHEMA:
        raise InputError(f"unsupported schema {obj.get('schema')!r}; expected {SCHEMA}")
    if obj.get("kind") not in kinds:
        raise InputError(f"kind must be one of {list(kinds)}, got {obj.get('kind')!r}")
    hdr = obj.get("field")
    if not isinstance(hdr, dict) or "conductor" not in hdr or "q" not in hdr:
        raise InputError("missing field header {conductor, q}")
    if not isinstance(hdr["conductor"], int) or hdr["conductor"] < 1:
        raise InputError("conductor must be a positive integer")
    return hdr


class _Decoder:
    def __init__(self, hdr: dict):
        self.N = hdr["conductor"]
        self.q = bool(hdr["q"])

    def scalar(self, obj) -> Scalar:
        try:
            s = Scalar.from_json(obj)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise InputError(f"bad scalar {obj!r}: {e}") from None
        if s.N != self.N:
            raise InputError(f"scalar of conductor {s.N} in a conductor-{self.N} file")
        if not self.q and not s.is_constant():
            raise InputError("scalar depends on q but the header declares q off")
        return s

    def vector(self, obj) -> list[Scalar]:
        return [self.scalar(x) for x in obj]

    def matrix(self, obj) -> la.Matrix:
        return [self.vector(r) for r in obj]


def _mat(m: la.Matrix) -> list:
    return [[x.to_json() for x in r] for r in m]


# --------------------------------------------------------------------------
# Hopf algebras

def _hopf_scalars(H: HopfData) -> list[Scalar]:
    out = [c for *_, c in H.algebra.entries()] + [c for *_, c in H.coalgebra.entries()]
    out += list(H.coalgebra.counit) + list(H.algebra.unit.values())
    if H.antipode is not None:
        out += [x for r in H.antipode for x in r]
    return out


def hopf_body(H: HopfData) -> dict:
    """``comult`` rows are [i, j, k, c]: c is the coefficient of e_i (x) e_j in Delta(e_k)."""
    return {
        "name": H.name,
        "dim": H.dim,
        "names": list(H.names),
        "unit": [x.to_json() for x in to_dense(H.algebra.unit, H.dim, H.N)],
        "mult": [[i, j, k, c.to_json()] for i, j, k, c in H.algebra.entries()],
        "comult": [[i, j, k, c.to_json()] for k, i, j, c in H.coalgebra.entries()],
        "counit": [x.to_json() for x in H.coalgebra.counit],
        "antipode": None if H.antipode is None else _mat(H.antipode),
    }


def hopf_to_json(H: HopfData) -> dict:
    return {"schema": SCHEMA, "kind": "hopf", "field": field_header(H.N, _hopf_scalars(H)), **hopf_body(H)}


def _index(x, dim: int) -> int:
    if not isinstance(x, int) or not 0 <= x < dim:
        raise InputError(f"index {x!r} out of range for dimension {dim}")
    return x


def hopf_from_body(obj: dict, dec: _Decoder) -> HopfData:
    try:
        n = obj["dim"]
        if not isinstance(n, int) or n < 1:
            raise InputError("dim must be a positive integer")
        mult = [(_index(i, n), _index(j, n), _index(k, n), dec.scalar(c)) for i, j, k, c in obj["mult"]]
        comult = [(_index(k, n), _index(i, n), _index(j, n), dec.scalar(c)) for i, j, k, c in obj["comult"]]
        unit = dec.vector(obj["unit"])
        counit = dec.vector(obj["counit"])
        if len(unit) != n or len(counit) != n:
            raise InputError("unit and counit must have length dim")
        S = obj.get("antipode")
        S = None if S is None else dec.matrix(S)
        if S is not None and (len(S) != n or any(len(r) != n for r in S)):
            raise InputError("antipode must be dim x dim")
        names = obj.get("names")
        alg = AlgebraData(n, mult, unit, dec.N, names)
        coalg = CoalgebraData(n, comult, counit, dec.N)
    except (KeyError, TypeError) as e:
        raise InputError(f"malformed algebra: {e}") from None
    return HopfData(alg, coalg, S, name=obj.get("name", ""))


# --------------------------------------------------------------------------
# twisted products

def twisted_to_json(H) -> dict:
    scal = _hopf_scalars(H.U) + _hopf_scalars(H.A) + [x for r in H.pairing.matrix for x in r]
    return {"schema": SCHEMA, "kind": "twisted", "field": field_header(H.N, scal), "name": H.name,
            "U": hopf_body(H.U), "A": hopf_body(H.A), "pairing": _mat(H.pairing.matrix)}


def twisted_parts(obj: dict, dec: _Decoder) -> tuple[HopfData, HopfData, la.Matrix]:
    try:
        U = hopf_from_body(obj["U"], dec)
        A = hopf_from_body(obj["A"], dec)
        P = dec.matrix(obj["pairing"])
    except KeyError as e:
        raise InputError(f"missing key {e}") from None
    if len(P) != U.dim or any(len(r) != A.dim for r in P):
        raise InputError("pairing must be dim(U) x dim(A)")
    return U, A, P


def build_from_parts(U: HopfData, A: HopfData, P: la.Matrix, name: str = ""):
    """Assemble the twisted product, raising InputError if the pairing is unusable."""
    from .twist import build_twisted
    try:
        return build_twisted(U, A, P, verify=False, name=name)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"cannot assemble twisted product: {e}") from None


# --------------------------------------------------------------------------
# Cartan data with an optional representation

def datum_to_json(D: CartanDatum, rep: Representation | None = None,
                  skew_pairs: Iterable[tuple[int, int]] = ()) -> dict:
    scal = [v for c in D.chi for v in c.values]
    if rep is not None:
        scal += [x for m in rep.gens.values() for r in m for x in r]
    obj = D.to_json()
    obj["field"] = field_header(D.N, scal)
    obj["skew_pairs"] = [list(p) for p in skew_pairs]
    if rep is not None:
        obj["rep"] = rep_body(rep)
    return obj


def rep_body(rep: Representation) -> dict:
    return {"dim": rep.dim, "side": rep.side, "torus": list(rep.torus), "skew": list(rep.skew),
            "generators": [{"name": k, "matrix": _mat(m)} for k, m in rep.gens.items()]}


def rep_to_json(rep: Representation) -> dict:
    scal = [x for m in rep.gens.values() for r in m for x in r]
    return {"schema": SCHEMA, "kind": "rep", "field": field_header(rep.N, scal), **rep_body(rep)}


def rep_from_body(r: dict, dec: _Decoder, label: str = "") -> Representation:
    try:
        gens = {x["name"]: dec.matrix(x["matrix"]) for x in r["generators"]}
        dim = int(r["dim"])
        torus, skew = list(r.get("torus", [])), list(r.get("skew", []))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, InputError):
            raise
        raise InputError(f"malformed representation: {e}") from None
    if any(len(m) != dim or any(len(row) != dim for row in m) for m in gens.values()):
        raise InputError("representation matrices must be dim x dim")
    if any(k not in gens for k in torus + skew):
        raise InputError("torus/skew names must be generator names")
    return generated_rep(gens, dec.N, torus, skew, label=label)


def datum_from_json(obj: dict, dec: _Decoder) -> tuple[CartanDatum, Representation | None, set]:
    try:
        G = AbelianGroup.from_json(obj["group"])
        g = [G.element(e) for e in obj["g"]]
        chi = [Character(G, dec.vector(c["values"])) for c in obj["chi"]]
        a = [[int(x) for x in r] for r in obj["cartan"]]
        D = CartanDatum(G, g, chi, a, obj.get("name", ""))
        pairs = {tuple(sorted((int(i), int(j)))) for i, j in obj.get("skew_pairs", [])}
        rep = None
        if obj.get("rep") is not None:
            rep = rep_from_body(obj["rep"], dec, D.name)
    except (KeyError, TypeError) as e:
        raise InputError(f"malformed datum: {e}") from None
    except ValueError as e:
        if isinstance(e, InputError):
            raise
        raise InputError(f"malformed datum: {e}") from None
    return D, rep, pairs


def rep_characters(D: CartanDatum, rep: Representation) -> dict[str, dict[str, Scalar]]:
    """chis[skew_i][torus_k] = chi_i(k-th group generator), matching names by position."""
    if len(rep.skew) != D.rank or len(rep.torus) != D.group.ngens:
        raise InputError("representation generators do not match the datum")
    return {a: {t: c.values[k] for k, t in enumerate(rep.torus)} for a, c in zip(rep.skew, D.chi)}


# --------------------------------------------------------------------------
# files

def load(path: str | Path) -> tuple[str, Any]:
    """Read a file and return (kind, payload).

    hopf -> HopfData; twisted -> (U, A, pairing matrix, name);
    datum -> (CartanDatum, Representation or None, skew pairs);
    rep -> Representation.
    """
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None
    hdr = _read_header(obj)
    dec = _Decoder(hdr)
    kind = obj["kind"]
    if kind == "hopf":
        return kind, hopf_from_body(obj, dec)
    if kind == "twisted":
        U, A, P = twisted_parts(obj, dec)
        return kind, (U, A, P, obj.get("name", ""))
    if kind == "rep":
        return kind, rep_from_body(obj, dec)
    return kind, datum_from_json(obj, dec)


def load_twisted(path: str | Path):
    kind, payload = load(path)
    if kind != "twisted":
        raise InputError(f"expected a twisted-product file, got kind {kind!r}")
    U, A, P, name = payload
    return build_from_parts(U, A, P, name)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"
