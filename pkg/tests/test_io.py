import json

import pytest

from dualquasi import Check, DocumentError, Report, hhat, validate_dqb
from dualquasi.io import (dump_antipode, dump_bicomodule, dump_dqb,
                          dump_preantipode, load_antipode, load_bicomodule,
                          load_dqb, load_preantipode, serialize_report)

from helpers import bundled_examples, control_bialgebra


def test_dqb_round_trip_bit_exact():
    for ex in bundled_examples() + [type("C", (), {"dqb": control_bialgebra()})]:
        H = ex.dqb
        text = dump_dqb(H)
        H2 = load_dqb(text)
        assert dump_dqb(H2) == text
        assert H2.delta == H.delta and H2.mul == H.mul
        assert H2.omega == H.omega and H2.omega_inv == H.omega_inv
        assert H2.counit == H.counit and H2.unit == H.unit
        assert validate_dqb(H2).ok


def test_module_round_trip_bit_exact():
    for ex in bundled_examples():
        M = hhat(ex.dqb)
        text = dump_bicomodule(M)
        M2 = load_bicomodule(text, ex.dqb)
        assert dump_bicomodule(M2) == text
        assert M2.rho_l == M.rho_l and M2.rho_r == M.rho_r and M2.act == M.act


def test_antipode_and_preantipode_round_trip():
    for ex in bundled_examples():
        text = dump_antipode(ex.antipode)
        data = load_antipode(text, ex.dqb)
        assert dump_antipode(data) == text
        text_s = dump_preantipode(ex.preantipode)
        assert load_preantipode(text_s, ex.dqb) == ex.preantipode


def test_omega_inverse_inserted_on_serialization():
    # a document without omega_inv gains a computed one after one round trip
    ex = bundled_examples()[1]
    doc = json.loads(dump_dqb(ex.dqb))
    del doc["omega_inv"]
    H = load_dqb(json.dumps(doc))
    assert H.omega_inv == ex.dqb.omega_inv
    assert "omega_inv" in json.loads(dump_dqb(H))


def test_sparse_entries_are_sorted_canonically():
    ex = bundled_examples()[1]
    doc = json.loads(dump_dqb(ex.dqb))
    for key in ("delta", "mul", "omega", "omega_inv"):
        idx = [tuple(e[:-1]) for e in doc[key]]
        assert idx == sorted(idx)


def test_index_out_of_range_reports_location():
    good = json.loads(dump_dqb(bundled_examples()[0].dqb))
    good["delta"].append([2, 0, 0, "1"])
    with pytest.raises(DocumentError) as err:
        load_dqb(json.dumps(good))
    assert "index out of range" in str(err.value)
    assert "delta" in err.value.location


def test_malformed_scalar_reports_location():
    good = json.loads(dump_dqb(bundled_examples()[0].dqb))
    good["counit"][1] = "3//4"
    with pytest.raises(DocumentError) as err:
        load_dqb(json.dumps(good))
    assert "malformed scalar" in str(err.value)
    assert err.value.location == "dqb.counit[1]"


def test_json_syntax_error_reports_line_and_column():
    with pytest.raises(DocumentError) as err:
        load_dqb("{\n  broken")
    assert err.value.location.startswith("line 2")


def test_unknown_field_kind_rejected():
    with pytest.raises(DocumentError) as err:
        load_dqb('{"version":1,"field":{"kind":"real"},"dim":1,"delta":[],'
                 '"counit":["1"],"mul":[],"unit":["1"],"omega":[]}')
    assert "unknown field kind" in str(err.value)


def test_version_checked():
    with pytest.raises(DocumentError):
        load_dqb('{"version": 2}')


def test_duplicate_omega_entry_rejected():
    good = json.loads(dump_dqb(bundled_examples()[0].dqb))
    good["omega"].append(good["omega"][0])
    with pytest.raises(DocumentError) as err:
        load_dqb(json.dumps(good))
    assert "duplicate" in str(err.value)


def test_wrong_dimension_antipode_rejected():
    ex2, ex3 = bundled_examples()[1], bundled_examples()[2]
    text = dump_antipode(ex2.antipode)
    with pytest.raises(DocumentError):
        load_antipode(text, ex3.dqb)


def test_report_serialization_text():
    report = Report((Check("alpha", True), Check("beta", False, (0, 1), "1", "2")))
    text = serialize_report(report, "text")
    lines = text.splitlines()
    assert lines[0] == "PASS alpha"
    assert lines[1].startswith("FAIL beta")
    assert "witness=(0, 1)" in lines[1]
    assert lines[-1] == "FAIL (1 of 2 axioms)"


def test_report_serialization_all_pass_and_empty():
    report = Report((Check("alpha", True),))
    assert serialize_report(report).splitlines()[-1] == "OK (1 axioms)"
    assert serialize_report(Report(())) == "OK (0 axioms)"


def test_report_serialization_json_lines():
    report = Report((Check("alpha", True), Check("beta", False, (3,), "x", "y")))
    lines = serialize_report(report, "json-lines").splitlines()
    records = [json.loads(line) for line in lines]
    assert records[0] == {"axiom": "alpha", "pass": True, "witness": None,
                          "lhs": None, "rhs": None}
    assert records[1] == {"axiom": "beta", "pass": False, "witness": [3],
                          "lhs": "x", "rhs": "y"}
