"""Identity-check registry and suite runner: determinism, schema, statuses."""

import json

import mpmath
import pytest

from qelliptic.numerics import UnknownSelector
from qelliptic.verify import (
    DISCREPANCY_ALLOWED,
    NORMATIVE,
    register_builtin_checks,
    run_suite,
)


def test_registry_shape():
    checks = register_builtin_checks()
    assert len(checks) >= 50
    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids)), "check ids must be unique"
    assert ids == sorted(ids), "registry is sorted by id"
    for c in checks:
        assert c.severity in (NORMATIVE, DISCREPANCY_ALLOWED)
        assert c.description
        assert c.formula
        assert isinstance(c.covers, tuple) and c.covers
        assert c.min_digits >= 10


def test_tolerance_exponent_default_and_override():
    checks = register_builtin_checks()
    by_id = {c.id: c for c in checks}
    # default: -digits + 15
    assert by_id["lemma1.k"].tolerance_exponent(60) == -45
    # overridden models shrink strictly as digits grow
    for cid in ("thm7.eq67", "app3.eq43"):
        c = by_id[cid]
        assert c.tolerance_exponent(60) < c.tolerance_exponent(40) < 0


def test_unknown_selector():
    with pytest.raises(UnknownSelector):
        run_suite("nosuchprefix", digits=40)


def test_prefix_selection():
    rep = run_suite("lemma1", digits=40)
    assert all(c.id.startswith("lemma1") for c in rep.checks)
    assert len(rep.checks) >= 2
    # exact id also works
    rep = run_suite("lemma1.K", digits=40)
    assert [c.id for c in rep.checks] == ["lemma1.K"]


def test_json_schema_and_zeroed_seconds():
    rep = run_suite("rr", digits=40)
    obj = json.loads(rep.to_json())
    assert set(obj) == {"suite", "digits", "seed", "checks"}
    assert obj["suite"] == "rr"
    assert obj["digits"] == 40
    assert obj["seed"] == 42
    for entry in obj["checks"]:
        assert set(entry) == {"id", "status", "max_abs_error", "samples", "seconds"}
        assert entry["seconds"] == 0.0
        assert entry["status"] in ("pass", "fail", "discrepancy", "skip")
        assert entry["samples"] >= 0


def test_byte_identical_reruns_and_parallelism():
    a = run_suite("thm1", digits=40, seed=42).to_json()
    b = run_suite("thm1", digits=40, seed=42).to_json()
    assert a == b
    c = run_suite("thm1", digits=40, seed=42, parallelism=4).to_json()
    assert a == c


def test_seed_changes_samples_not_verdicts():
    a = run_suite("thm1", digits=40, seed=1)
    b = run_suite("thm1", digits=40, seed=2)
    assert [c.status for c in a.checks] == [c.status for c in b.checks]
    assert all(c.status == "pass" for c in a.checks)


def test_recognition_checks_skip_below_min_digits():
    rep = run_suite("obs1", digits=60)
    assert {c.status for c in rep.checks} == {"skip"}
    for c in rep.checks:
        assert c.samples == 0


def test_text_report_format():
    rep = run_suite("lemma1", digits=40)
    text = rep.to_text()
    assert "suite: lemma1   digits: 40   seed: 42" in text
    assert "-> PASS" in text
    assert "max_abs_error" in text


def test_counts_and_ok():
    rep = run_suite("lemma1", digits=40)
    n = rep.counts
    assert sum(n.values()) == len(rep.checks)
    assert n["fail"] == 0
    assert rep.ok


def test_discrepancy_statuses_do_not_fail_suite():
    rep = run_suite("h", digits=40)
    by_id = {c.id: c for c in rep.checks}
    assert by_id["h.eq27-printed"].status == "discrepancy"
    assert rep.ok


def test_escalation_on_sample_suites():
    # a passing check's reported error must drop by >= 1e10 going 40 -> 60
    for prefix in ("lemma1", "rr"):
        lo = {c.id: c for c in run_suite(prefix, digits=40).checks}
        hi = {c.id: c for c in run_suite(prefix, digits=60).checks}
        for cid, c40 in lo.items():
            if c40.status != "pass":
                continue
            c60 = hi[cid]
            assert c60.status == "pass", cid
            e40 = mpmath.mpf(c40.max_abs_error)
            e60 = mpmath.mpf(c60.max_abs_error)
            assert e60 <= e40 * mpmath.mpf(10) ** (-10), cid
