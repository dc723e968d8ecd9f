import json
from fractions import Fraction

import pytest

from kiselman.reports import BoundReport, format_value, reports_to_csv, reports_to_json


def test_format_value():
    assert format_value(12345678901234567890) == "12345678901234567890"
    assert format_value(Fraction(355, 113)) == "355/113"
    assert format_value(1.5) == "1.5"
    assert format_value(None) == ""
    with pytest.raises(TypeError):
        format_value(True)
    with pytest.raises(TypeError):
        format_value("18")


def test_json_emission():
    reports = [BoundReport("demo", 3, 2**70, 2**71, True, "big values")]
    parsed = json.loads(reports_to_json(reports))
    assert parsed == [
        {
            "name": "demo",
            "n_or_k": 3,
            "lhs": str(2**70),
            "rhs": str(2**71),
            "holds": True,
            "note": "big values",
        }
    ]


def test_json_roundtrip_is_byte_identical():
    reports = [
        BoundReport("a", 1, 4, 10, True),
        BoundReport("b", 2, Fraction(1, 3), 1, True, "rational"),
    ]
    text = reports_to_json(reports)
    rebuilt = json.dumps(json.loads(text), indent=2) + "\n"
    assert rebuilt == text


def test_csv_emission():
    reports = [
        BoundReport("plain", 1, 4, 10, True),
        BoundReport("noted", 2, None, None, False, 'has "quotes", and commas'),
    ]
    lines = reports_to_csv(reports).splitlines()
    assert lines[0] == "name,n_or_k,lhs,rhs,holds,note"
    assert lines[1] == "plain,1,4,10,true,"
    assert lines[2] == 'noted,2,,,false,"has ""quotes"", and commas"'
