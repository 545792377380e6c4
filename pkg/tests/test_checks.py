import fnmatch

import pytest

from wittlift.cases import case_ids
from wittlift.checks import catalog, check_ids, run_checks
from wittlift.errors import UnknownCheckId


def test_catalog_ids_unique_and_sorted():
    ids = check_ids()
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))
    assert len(ids) == 50


def test_catalog_covers_every_case():
    ids = set(check_ids())
    for cid in case_ids():
        assert f"C-case-{cid}" in ids


def test_every_spec_has_anchor_and_fn():
    for spec in catalog():
        assert spec.id.startswith("C-")
        assert spec.anchor
        assert callable(spec.fn)


def test_unknown_filter_raises():
    with pytest.raises(UnknownCheckId):
        run_checks(filter_glob="no-such-check-*")


def test_heavy_checks_skip_by_default():
    reports = run_checks(filter_glob="C-class-census")
    assert [r.status for r in reports] == ["skipped"]
    assert reports[0].evidence == {}
    assert reports[0].ms == 0.0


def test_filter_glob_selects_subset():
    reports = run_checks(filter_glob="C-witt-laws-*")
    assert {r.id for r in reports} == {
        cid for cid in check_ids() if fnmatch.fnmatch(cid, "C-witt-laws-*")
    }
    assert all(r.status == "pass" for r in reports)


def test_report_records_have_schema():
    (rep,) = run_checks(filter_glob="C-witt-frobenius-relation")
    rec = rep.as_dict()
    assert set(rec) == {"id", "anchor", "status", "evidence", "ms"}
    assert rec["status"] == "pass"
    assert rec["ms"] >= 0


def test_structural_checks_pass():
    reports = run_checks(filter_glob="C-lift-*")
    assert all(r.status == "pass" for r in reports)
    assert len(reports) == 6
