"""Registry integrity and the verification machinery itself."""

import pytest

from qdissect.identities import (
    Congruence,
    DissectionRelation,
    IdentityRecord,
    SeriesEquality,
    SignPattern,
    VanishingProgression,
    get_record,
    load_records,
    registry,
    verify,
    verify_all,
)
from qdissect.qexpr import evaluate_text


# --- registry shape -----------------------------------------------------------


def test_registry_size_and_unique_ids():
    records = registry()
    assert len(records) >= 60
    ids = [r.id for r in records]
    assert len(ids) == len(set(ids))


def test_registry_known_records_present():
    vanish = get_record("T1.G3")
    assert isinstance(vanish.kind, VanishingProgression)
    assert (vanish.kind.k, vanish.kind.l) == (5, 3)
    diff = get_record("T4.i3")
    assert isinstance(diff.kind, SeriesEquality)
    assert get_record("R5.cong").kind == Congruence(
        "(q^2,q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf", 5, 3, 2)


def test_registry_prefix_counts():
    t3 = [r for r in registry() if r.id.startswith("T3.")]
    t4 = [r for r in registry() if r.id.startswith("T4.")]
    assert len(t3) == 8
    assert len(t4) == 4


def test_get_record_unknown():
    with pytest.raises(KeyError):
        get_record("NO.SUCH")


def test_every_record_has_citation_and_order():
    for r in registry():
        assert r.citation.strip()
        assert r.default_order >= 1


# --- verification machinery ----------------------------------------------------


def test_verify_all_sorted_and_filtered():
    reports = verify_all(order=60, id_filter="T4.")
    assert [r.id for r in reports] == ["T4.i1", "T4.i2", "T4.i3", "T4.i4"]
    assert all(r.status == "pass" for r in reports)
    assert verify_all(order=60, id_filter="ZZZ") == []


def test_corrupted_equality_reports_first_failure():
    bad = IdentityRecord(
        "bad.eq", "test", SeriesEquality("phi(q)", "psi(q)"), 40)
    report = verify(bad)
    assert report.status == "fail"
    assert report.first_failure == (1, 2, 1)
    assert report.checked_order == 40


def test_corrupted_dissection_reports_sign():
    bad = IdentityRecord(
        "bad.diss", "test",
        DissectionRelation("phi(q)", 1, 0, "phi(q)", 1, 0, -1), 20)
    report = verify(bad)
    assert report.status == "fail"
    assert report.first_failure == (0, 1, -1)


def test_vanishing_failure_locates_compressed_index():
    bad = IdentityRecord(
        "bad.vanish", "test", VanishingProgression("psi(q)", 2, 1), 30)
    report = verify(bad)
    assert report.status == "fail"
    assert report.first_failure == (0, 1, 0)


def test_congruence_failure():
    bad = IdentityRecord(
        "bad.cong", "test", Congruence("phi(q)", 1, 0, 2), 30)
    report = verify(bad)
    assert report.status == "fail"
    assert report.first_failure == (0, 1, 0)
    assert "mod 2" in report.detail


def test_sign_pattern_exception_values_reported():
    report = verify(get_record("C.signs.h1.4"), order=120)
    assert report.status == "pass"
    assert "n=1: value 0" in report.detail


def test_sign_pattern_violation():
    bad = IdentityRecord(
        "bad.sign", "test", SignPattern("1 - q", 1, 0, 1), 10)
    report = verify(bad)
    assert report.status == "fail"
    assert report.first_failure == (1, -1, 1)


def test_error_status_for_unevaluable_expression():
    broken = IdentityRecord(
        "bad.eval", "test", SeriesEquality("f(1,1)", "phi(q)"), 20)
    report = verify(broken)
    assert report.status == "error"
    assert report.first_failure is None
    assert "InvalidThetaArgument" in report.detail


def test_alternate_reading_retried():
    rec = IdentityRecord(
        "alt.demo", "test",
        SeriesEquality("phi(q)", "psi(q)"), 30,
        alternates=(SeriesEquality("phi(q)", "phi(q^4) + 2*q*psi(q^8)"),),
    )
    report = verify(rec)
    assert report.status == "pass"
    assert "alternate reading verified" in report.detail


def test_ambiguous_family_records_verify_via_primary():
    for rid in ("R5.m7a", "R5.m7b", "R5.m11a", "R5.m11b"):
        record = get_record(rid)
        assert record.alternates  # the other product shape is retried
        report = verify(record, order=150)
        assert report.status == "pass"
        assert "alternate" not in report.detail  # primary reading held


def test_verdicts_stable_between_orders():
    for rid in ("T1.G0", "T2.H4", "L3.S1", "L4.PQ5", "CT.i2"):
        low = verify(get_record(rid), order=50)
        high = verify(get_record(rid), order=300)
        assert low.status == high.status == "pass"


def test_report_serialization():
    report = verify(get_record("T1.G0"), order=40)
    d = report.to_dict()
    assert list(d.keys()) == ["id", "status", "checkedOrder", "elapsed"]
    bad = verify(IdentityRecord(
        "bad.eq2", "test", SeriesEquality("phi(q)", "psi(q)"), 40))
    d2 = bad.to_dict()
    assert d2["firstFailure"] == {"index": 1, "lhs": "2", "rhs": "1"}


# --- cross-checks against raw coefficients --------------------------------------


def test_dissection_relation_matches_raw_walk():
    rec = get_record("T3.r1")
    assert isinstance(rec.kind, DissectionRelation)
    lhs = evaluate_text(rec.kind.lhs, 200)
    rhs = evaluate_text(rec.kind.rhs, 200)
    for n in range(40):
        i, j = 5 * n + rec.kind.l1, 5 * n + rec.kind.l2
        assert lhs[i] == rec.kind.sign_factor * rhs[j]


def test_sum_identities_difference_is_zero_series():
    for rid in ("T4.i1", "CT.i1"):
        rec = get_record(rid)
        diff = evaluate_text(f"({rec.kind.lhs}) - ({rec.kind.rhs})", 200)
        assert diff.is_zero()


# --- file load path --------------------------------------------------------------


RECORD_FILE = """
# comment lines and blanks are skipped

u.eq | equality | | phi(q) | phi(q^4) + 2*q*psi(q^8)
u.diss | dissection | k1=5,l1=4,k2=5,l2=4,sign=- | {g1} | {h1}
u.vanish | vanishing | k=5,l=3 | {g1} |
u.cong | congruence | k=5,l=3,mod=2 | (q^2,q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf |
u.sign | sign | k=5,l=4,sign=-,except=1 | {h1} |
u.low | equality | order=25 | psi(q) | psi(q)
""".format(
    g1="(-q,-q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf",
    h1="(-q^2,-q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf",
)


def test_load_records_round_trip(tmp_path):
    path = tmp_path / "records.txt"
    path.write_text(RECORD_FILE, encoding="utf-8")
    records = load_records(str(path))
    assert [r.id for r in records] == [
        "u.eq", "u.diss", "u.vanish", "u.cong", "u.sign", "u.low"]
    assert records[1].kind == DissectionRelation(
        "(-q,-q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf", 5, 4,
        "(-q^2,-q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf", 5, 4, -1)
    assert records[5].default_order == 25
    reports = verify_all(order=100, records=records)
    assert all(r.status == "pass" for r in reports)


def test_load_records_rejects_malformed(tmp_path):
    for line in (
        "too | few | fields",
        "x | equality | nonsense | phi(q) | phi(q)",
        "x | wat | | phi(q) | phi(q)",
        "x | dissection | k1=1,l1=0 | phi(q) | phi(q)",
        "x | sign | k=5,l=0,sign=? | phi(q) |",
    ):
        path = tmp_path / "bad.txt"
        path.write_text(line + "\n", encoding="utf-8")
        with pytest.raises((ValueError, KeyError)):
            load_records(str(path))
