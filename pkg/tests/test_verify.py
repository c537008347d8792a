import json

import pytest

from hankelcalc.errors import ParameterError
from hankelcalc.verify import (
    CATALOG_ORDER,
    CheckReport,
    CheckSpec,
    ParamSet,
    catalog,
    list_checks,
    run_check,
)

EXPECTED_IDS = [
    "T1.1", "T1.2", "T1.3", "T1.4", "P2.3", "P2.4", "P2.5", "P2.6", "T2.7",
    "P3.1", "P3.2", "T3.3", "T3.4", "T3.5", "P3.6", "P3.7", "P3.8",
    "L4.1", "E4.7", "REMARK-M4", "SCAN-P2.5R",
]


def test_catalog_ids_exact():
    assert list(CATALOG_ORDER) == EXPECTED_IDS
    assert [s.id for s in list_checks()] == EXPECTED_IDS
    assert [e.id for e in catalog()] == EXPECTED_IDS


def test_default_orders():
    assert all(s.order >= 32 for s in list_checks())


def test_env_override(monkeypatch):
    monkeypatch.setenv("HF_DEFAULT_ORDER", "40")
    assert {s.order for s in list_checks()} == {40}
    assert run_check("T1.2").order == 40
    monkeypatch.setenv("HF_DEFAULT_ORDER", "nope")
    with pytest.raises(ParameterError):
        list_checks()


def test_report_json_roundtrip():
    r = run_check("T1.2", order=40)
    back = CheckReport.from_json(r.to_json())
    assert back.to_dict() == r.to_dict()
    assert json.loads(r.to_json(timing=False))["elapsed_ms"] is None


def test_catalog_roundtrips_through_json():
    for spec in list_checks():
        rep = CheckReport(spec.id, spec.params, spec.order, "pass", {"note": "template"})
        assert CheckReport.from_json(rep.to_json()).to_dict() == rep.to_dict()


def test_fail_report_needs_index():
    with pytest.raises(ValueError):
        CheckReport("T1.1", {}, 10, "fail", {})


def test_determinism():
    a = run_check("T1.3", order=60).to_dict(timing=False)
    b = run_check("T1.3", order=60).to_dict(timing=False)
    assert a == b


def test_quick_catalog_pass():
    for i in ("T1.1", "T1.2", "T1.3", "P2.3", "P2.6", "T2.7", "P3.7", "L4.1", "E4.7"):
        assert run_check(i, order=40).status == "pass", i


def test_negative_control_fails_with_index():
    # the product over powers of 3 has no vanishing Hankel determinant in range
    r = run_check("REMARK-M4", order=20, m=3)
    assert r.status == "fail"
    assert isinstance(r.witness["index"], int)


def test_remark_m4_witness():
    r = run_check("REMARK-M4", order=20)
    assert r.status == "pass" and r.witness["first_zero_n"] == 7


def test_scan_is_conjectural():
    assert run_check("SCAN-P2.5R", order=24).status == "conjectural"


def test_t13_sign_flag():
    w = run_check("T1.3", order=40).witness
    assert w["sign_as_printed_holds"] is False


def test_unknown_inputs():
    with pytest.raises(ParameterError):
        run_check("T9.9")
    with pytest.raises(ParameterError):
        run_check(CheckSpec("T1.1", {"bogus": 1}, 10))
    with pytest.raises(ParameterError):
        run_check("T1.1", order=0)


def test_paramset():
    p = ParamSet(t=2, z=1)
    assert p.y == 2 + 1 / p.t
    for bad in (0, 1, -1):
        with pytest.raises(ParameterError):
            ParamSet(t=bad)
    with pytest.raises(ParameterError):
        ParamSet()
