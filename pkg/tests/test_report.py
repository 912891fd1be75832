import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from localmodels.report import SCHEMA_VERSION, Case, VerificationReport, encode_value, toolchain_stamp


def test_encode_value_uses_decimal_strings():
    assert encode_value(12) == "12"
    assert encode_value(10 ** 40) == "1" + "0" * 40
    assert encode_value(Fraction(3, 4)) == "3/4"
    assert encode_value(True) is True
    assert encode_value({"a": [1, (2, 3)]}) == {"a": ["1", ["2", "3"]]}
    with pytest.raises(TypeError):
        encode_value(object())


def test_case_validates_provenance():
    with pytest.raises(ValueError):
        Case("x", {}, 1, "GUESS", 1, True)


def test_report_status_is_conjunction():
    report = VerificationReport("demo")
    report.add(Case("b", {"r": 2}, 1, "TRIVIAL", 1, True))
    assert report.passed
    report.add(Case("a", {"r": 3}, 2, "DERIVED", 3, False))
    assert not report.passed
    assert [c.name for c in report.failures()] == ["a"]
    assert [c.name for c in report.sorted().cases] == ["a", "b"]
    lines = report.summary_lines()
    assert any(line.startswith("FAIL") for line in lines)


def test_report_json_layout():
    report = VerificationReport("demo", budgets={"max_pairs": 5})
    report.add(Case("c", {"r": 2}, 6, "PAPER", 6, True, note="ok"))
    data = json.loads(report.to_json())
    assert data["schema"] == SCHEMA_VERSION
    assert data["passed"] is True
    assert data["budgets"] == {"max_pairs": "5"}
    case = data["cases"][0]
    assert case["expected"] == {"value": "6", "provenance": "PAPER"}
    assert case["computed"] == "6"
    assert "elapsed_ms" not in case
    assert report.to_json().endswith("\n")
    assert set(toolchain_stamp()) >= {"package", "version", "python"}


def test_from_dict_rejects_bad_input():
    report = VerificationReport("demo")
    report.add(Case("c", {}, 1, "TRIVIAL", 1, True))
    data = report.to_dict()
    bad = dict(data, schema=99)
    with pytest.raises(ValueError):
        VerificationReport.from_dict(bad)
    inconsistent = dict(data, passed=False)
    with pytest.raises(ValueError):
        VerificationReport.from_dict(inconsistent)


values = st.recursive(
    st.integers(-10 ** 30, 10 ** 30) | st.fractions() | st.booleans() | st.text(max_size=5),
    lambda inner: st.lists(inner, max_size=3) | st.dictionaries(st.text(max_size=3), inner, max_size=3),
    max_leaves=8,
)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.text(min_size=1, max_size=6), values, values, st.booleans(),
                          st.sampled_from(["PAPER", "TRIVIAL", "DERIVED"])), max_size=5))
def test_json_round_trip(rows):
    report = VerificationReport("prop", budgets={"max_flags": 7})
    for name, expected, computed, ok, tag in rows:
        report.add(Case(name, {"k": expected}, expected, tag, computed, ok, elapsed_ms=3))
    text = report.to_json()
    again = VerificationReport.from_json(text)
    assert again.to_json() == text
    assert again.passed == report.passed
