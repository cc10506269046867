import json
from fractions import Fraction

import pytest

import ballq


def test_report_statuses():
    results = ballq.run_report()
    assert len(results) == len(ballq.check_ids())
    statuses = {r["check_id"]: r["status"] for r in results}
    assert "MISMATCH" not in statuses.values()
    flagged = sorted(k for k, v in statuses.items() if v == "FLAGGED")
    assert flagged == ["sec5_3.proper_transform", "sec5_5.eq14_integrality"]


def test_json_matches_dicts():
    doc = json.loads(ballq.report_json("appendix2"))
    assert [d["check_id"] for d in doc] == [r["check_id"] for r in ballq.run_report("appendix2")]


def test_alias_and_errors():
    assert ballq.run_check("appII.57")["computed"] == "57"
    with pytest.raises(KeyError):
        ballq.run_check("no.such.check")
    with pytest.raises(ValueError):
        ballq.run_report("nowhere")


def test_hj_and_discrepancies():
    assert ballq.hj_expand(7, 3) == [3, 2, 2]
    assert ballq.discrepancies(7, 3, reversed=True) == [Fraction(1, 7), Fraction(2, 7), Fraction(3, 7)]


def test_reider_and_covering():
    cases = ballq.enumerate_destabilizations(9, 2)
    assert [(c["case"], c["d1"], c["d2"]) for c in cases] == [("CaseI", 7, 2), ("CaseII", 6, 3)]
    assert ballq.riemann_hurwitz_solutions(3, 3, {2}, 3) == [(1, [2, 2])]


def test_registry():
    assert len(ballq.registry()) == 50
    assert len(ballq.registry("min")) == 4
