from __future__ import annotations

import json

import pytest

from dihedral_codes import ideal_enumeration as IE
from dihedral_codes.cli import main
from dihedral_codes.setting import make_setting


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def ok(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def fail(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    return json.loads(err.strip().splitlines()[-1])


def test_counts(capsys):
    base = ["--p", "2", "--m", "1", "--n", "15"]
    assert ok(capsys, "count", *base) == {"count": "1070685"}
    assert ok(capsys, "count", *base, "--self-dual") == {"count": "33"}
    assert ok(capsys, "count", *base, "--self-orthogonal") == {"count": "5355"}


def test_factor_trivial(capsys):
    js = ok(capsys, "factor", "--p", "2", "--m", "1", "--n", "1")
    assert [f["f"] for f in js["factors"]] == [[3, 1]]


def test_idempotents(capsys):
    js = ok(capsys, "idempotents", "--p", "2", "--n", "15")
    assert js["eps"][1] == [2, 1, 1] * 5
    assert js["pair_eps"]["3"] == [[2, 2, 3, 1, 2, 1, 0, 3], [3, 2, 1, 3, 2, 3, 0, 1]]


def test_validation_errors(capsys):
    assert fail(capsys, "count", "--p", "4", "--n", "3")["error"] == "NonPrime"
    assert fail(capsys, "count", "--p", "3", "--n", "6")["error"] == "NotCoprime"
    assert fail(capsys, "count", "--p", "2", "--m", "2", "--n", "3", "--modulus", "1,0,1")["error"] \
        == "NotBasicIrreducible"
    assert fail(capsys, "enumerate", "--p", "2", "--n", "15", "--component", "9")["error"] == "UsageError"
    assert fail(capsys, "frobnicate")["error"] == "UsageError"


def test_modulus_flag(capsys):
    a = ok(capsys, "count", "--p", "2", "--m", "2", "--n", "5", "--modulus", "1,1,1")
    b = ok(capsys, "count", "--p", "2", "--m", "2", "--n", "5")
    assert a == b == {"count": "9801"}


def test_enumerate_paging(capsys):
    base = ["enumerate", "--p", "2", "--n", "15", "--component", "3"]
    whole = ok(capsys, *base)["items"]
    assert len(whole) == 309
    pages = []
    for off in range(0, 309, 50):
        pages += ok(capsys, *base, "--offset", str(off), "--limit", "50")["items"]
    assert pages == whole
    assert ok(capsys, *base, "--offset", "400")["items"] == []


def _write(tmp_path, obj, name="sel.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture()
def pair_family_file(tmp_path):
    s = make_setting(2, 1, 15)
    c1, c2 = s.comps[1], s.comps[2]
    s1, s2 = IE.component_sets(c1), IE.component_sets(c2)
    mk = IE.IdealDescriptor.make
    sel = [mk(0, IE.ZERO), mk(1, IE.W_THETA_PLUS_Y, w=s1.W[0], theta=s1.V[0]),
           mk(2, IE.W_THETA_PLUS_Y, w=s2.W[0], theta=s2.V[2]), mk(3, IE.ZERO)]
    obj = {"p": 2, "m": 1, "n": 15, "selection": [d.to_json(s.comps[d.component_index]) for d in sel]}
    return _write(tmp_path, obj)


def test_build_dual_classify_distance(capsys, pair_family_file, tmp_path):
    base = ["--p", "2", "--m", "1", "--n", "15", "--selection", pair_family_file]
    code = ok(capsys, "build", *base)
    assert code["cardinality"] == "4096" and len(code["rows"]) == 6
    dual = ok(capsys, "dual", *base)
    assert dual["cardinality"] == str(4 ** 24)
    cls = ok(capsys, "classify", *base)
    assert cls["self_dual"] is False and cls["self_orthogonal"] is False
    dist = ok(capsys, "distance", *base, "--lee")
    assert dist["d_hamming"] == 12 and dist["d_lee"] == 20 and dist["words_scanned"] == 4096
    out = tmp_path / "code.json"
    assert run(capsys, "build", *base, "--out", str(out))[0] == 0
    assert json.loads(out.read_text()) == code


def test_selection_round_trip_is_byte_identical(capsys, pair_family_file, tmp_path):
    base = ["--p", "2", "--m", "1", "--n", "15"]
    first = ok(capsys, "build", *base, "--selection", pair_family_file)
    again = _write(tmp_path, {"p": 2, "m": 1, "n": 15, "selection": first["selection"]}, "again.json")
    second = ok(capsys, "build", *base, "--selection", again)
    assert json.dumps(second["selection"]) == json.dumps(first["selection"])
    # a LinearCode document is itself accepted as a selection file
    whole = _write(tmp_path, first, "whole.json")
    assert ok(capsys, "build", *base, "--selection", whole) == first


def test_selection_schema_errors(capsys, pair_family_file, tmp_path):
    base = ["build", "--p", "2", "--m", "1", "--n", "15", "--selection"]
    obj = json.loads(open(pair_family_file).read())
    obj["selection"][1]["case"] = "Nonsense"
    err = fail(capsys, *base, _write(tmp_path, obj, "a.json"))
    assert err["error"] == "SchemaError" and err["pointer"] == "/selection/1/case"
    obj = json.loads(open(pair_family_file).read())
    obj["selection"][2]["params"]["w"] = [1, 1, 1]
    err = fail(capsys, *base, _write(tmp_path, obj, "b.json"))
    assert err["pointer"] == "/selection/2/params" and "[1, 1, 1]" in err["detail"]
    obj = json.loads(open(pair_family_file).read())
    obj["selection"] = obj["selection"][:3]
    assert fail(capsys, *base, _write(tmp_path, obj, "c.json"))["error"] == "SchemaError"
    assert fail(capsys, "build", "--p", "2", "--n", "15")["error"] == "UsageError"


def test_lee_undefined_for_extension_rings(capsys, tmp_path):
    s = make_setting(2, 2, 5)
    sel = [IE.IdealDescriptor.make(c.index, IE.ZERO).to_json(c) for c in s.comps]
    path = _write(tmp_path, sel)
    err = fail(capsys, "distance", "--p", "2", "--m", "2", "--n", "5", "--selection", path, "--lee")
    assert err["error"] == "LeeUndefined"


def test_verify_reference_example(capsys):
    js = ok(capsys, "verify-paper-example")
    assert js["passed"] is True and len(js["checks"]) == 6
