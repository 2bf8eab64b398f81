import json

import pytest
from hypothesis import given, settings, strategies as st

from hopfpairs import catalog as cat
from hopfpairs.groups import AbelianGroup
from hopfpairs.serialize import (InputError, _Decoder, datum_to_json, dumps, hopf_from_body, hopf_to_json, load,
                                 load_twisted, rep_characters, rep_to_json, twisted_to_json)


def _write(tmp_path, obj, name="f.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return p


@pytest.mark.parametrize("build", [lambda: cat.taft_algebra(3), lambda: cat.cyclic_group_algebra(4)])
def test_hopf_round_trip(tmp_path, build):
    H = build()
    kind, H2 = load(_write(tmp_path, hopf_to_json(H)))
    assert kind == "hopf"
    assert H2.algebra.mult == H.algebra.mult
    assert H2.coalgebra.comult == H.coalgebra.comult
    assert H2.coalgebra.counit == H.coalgebra.counit
    assert H2.antipode == H.antipode
    assert H2.names == H.names


def test_twisted_round_trip(tmp_path):
    D = cat.double_taft(2)
    D2 = load_twisted(_write(tmp_path, twisted_to_json(D)))
    assert D2.algebra.mult == D.algebra.mult
    assert D2.pairing.matrix == D.pairing.matrix


def test_datum_round_trip_with_rep(tmp_path):
    rep, D = cat.example_simple_rep(3)
    kind, (D2, rep2, pairs) = load(_write(tmp_path, datum_to_json(D, rep, [(1, 0)])))
    assert kind == "datum"
    assert D2.a == D.a and [c.values for c in D2.chi] == [c.values for c in D.chi]
    assert rep2.gens == rep.gens and rep2.torus == ["g"] and rep2.skew == ["x"]
    assert pairs == {(0, 1)}
    assert rep_characters(D2, rep2) == {"x": {"g": D.chi[0].values[0]}}


def test_rep_round_trip(tmp_path):
    rep, _ = cat.example_simple_rep(2)
    kind, rep2 = load(_write(tmp_path, rep_to_json(rep)))
    assert kind == "rep" and rep2.gens == rep.gens


def test_q_flag_follows_content():
    assert hopf_to_json(cat.taft_algebra(2))["field"] == {"conductor": 2, "q": False}
    assert datum_to_json(cat.finite_type_datum("A2"))["field"] == {"conductor": 1, "q": True}


def test_dumps_is_deterministic():
    obj = hopf_to_json(cat.taft_algebra(2))
    assert dumps(obj) == dumps(json.loads(dumps(obj)))


def test_conductor_mismatch(tmp_path):
    obj = hopf_to_json(cat.taft_algebra(2))
    obj["field"]["conductor"] = 3
    with pytest.raises(InputError, match="conductor"):
        load(_write(tmp_path, obj))


def test_q_dependence_with_q_off(tmp_path):
    obj = datum_to_json(cat.finite_type_datum("A2"))
    obj["field"]["q"] = False
    with pytest.raises(InputError, match="depends on q"):
        load(_write(tmp_path, obj))


@pytest.mark.parametrize("patch,msg", [
    ({"schema": 2}, "schema"),
    ({"kind": "bogus"}, "kind"),
    ({"field": {"conductor": 2}}, "field header"),
    ({"field": {"conductor": 0, "q": False}}, "positive"),
    ({"dim": 0}, "dim"),
])
def test_header_and_shape_errors(tmp_path, patch, msg):
    obj = {**hopf_to_json(cat.taft_algebra(2)), **patch}
    with pytest.raises(InputError, match=msg):
        load(_write(tmp_path, obj))


def test_index_out_of_range(tmp_path):
    obj = hopf_to_json(cat.taft_algebra(2))
    obj["mult"][0][2] = 9
    with pytest.raises(InputError, match="out of range"):
        load(_write(tmp_path, obj))


def test_bad_scalar(tmp_path):
    obj = hopf_to_json(cat.taft_algebra(2))
    obj["counit"][0] = {"conductor": 2, "num": [["x"]], "den": [["1/1"]]}
    with pytest.raises(InputError, match="bad scalar"):
        load(_write(tmp_path, obj))


def test_not_json_and_missing_file(tmp_path):
    with pytest.raises(InputError, match="not valid JSON"):
        load(_write(tmp_path, "{nope"))
    with pytest.raises(InputError, match="cannot read"):
        load(tmp_path / "absent.json")


def test_pairing_shape(tmp_path):
    obj = twisted_to_json(cat.double_taft(2))
    obj["pairing"] = obj["pairing"][:2]
    with pytest.raises(InputError, match="pairing"):
        load(_write(tmp_path, obj))


def test_load_twisted_rejects_other_kinds(tmp_path):
    with pytest.raises(InputError, match="expected a twisted"):
        load_twisted(_write(tmp_path, hopf_to_json(cat.taft_algebra(2))))


def test_rep_generators_must_match_datum():
    rep, _ = cat.example_simple_rep(2)
    with pytest.raises(InputError):
        rep_characters(cat.finite_type_datum("A2"), rep)


@settings(deadline=None, max_examples=25)
@given(st.lists(st.integers(2, 4), min_size=1, max_size=2))
def test_group_algebra_round_trip_property(torsion):
    G = AbelianGroup(0, tuple(torsion))
    H = cat.group_algebra(G, conductor=max(torsion))
    obj = json.loads(dumps(hopf_to_json(H)))
    H2 = hopf_from_body(obj, _Decoder(obj["field"]))
    assert H2.algebra.mult == H.algebra.mult
    assert H2.antipode == H.antipode
