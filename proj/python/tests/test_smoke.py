import json
import os
from pathlib import Path

import pytest

import kvcohom

DATA = Path(os.environ.get("KVCOHOM_DATA", Path(__file__).resolve().parents[2] / "data"))


def test_fixtures_and_verbs():
    assert "aff" in kvcohom.fixtures()
    assert "flat-model" in kvcohom.fixtures()
    assert {"verify", "cohomology", "geodesic", "proptest"} <= set(kvcohom.verbs())


def test_is_kv_and_cohomology_on_aff():
    aff = kvcohom.fixture("aff")
    assert kvcohom.is_kv(aff)
    dims = kvcohom.cohomology_dims(aff, 2)
    assert len(dims) == 3
    assert dims[0] == 0


def test_not_kv_file():
    text = (DATA / "not_kv.json").read_text()
    assert not kvcohom.is_kv(text)
    r = kvcohom.run("verify", str(DATA / "not_kv.json"))
    assert r.exit_code == 1
    assert r.doc["verdict"] == "fail"


def test_report_matches_cli_shape():
    r = kvcohom.run("cohomology", "fixture:aff", q_max=2)
    assert r.ok
    assert r.doc["format_version"] == 1
    assert r.doc["verb"] == "cohomology"
    assert r.text == json.dumps(r.doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def test_deterministic_bytes():
    a = kvcohom.run("proptest", seed=3, count=3)
    b = kvcohom.run("proptest", seed=3, count=3)
    assert a.ok
    assert a.text == b.text


def test_exit_codes():
    assert kvcohom.run("frobnicate").exit_code == 2
    assert kvcohom.run("cohomology", "fixture:aff", budget=10).exit_code == 3
    assert kvcohom.run("proptest", count=20, mutant=True).exit_code == 1


def test_geodesic_csv():
    r = kvcohom.run("geodesic", alpha=2, t1=-5)
    assert r.doc["result"]["termination"] == "blow-up"
    assert abs(r.doc["result"]["t_star"] + 1) < 1e-6
    assert r.csv.splitlines()[0] == "t,x,y,vx,vy"


def test_errors_are_typed():
    with pytest.raises(kvcohom.InputError):
        kvcohom.is_kv('{"dim": 2, "product": [1]}')
    assert issubclass(kvcohom.Rejected, kvcohom.Error)
