import json

import pytest

from kiselman.oracle import (
    certify_reducer,
    congruence_closure,
    verify_reducer_against_oracle,
)
from kiselman.words import ResourceGuardError


def test_single_letter_classes():
    # idempotency alone: {""} and {1, 11, 111}
    classes = congruence_closure(1, 3)
    members = sorted(tuple(c.members) for c in classes)
    assert members == [((),), ((1,), (1, 1), (1, 1, 1))]


def test_class_of_212():
    classes = congruence_closure(2, 4)
    holder = next(c for c in classes if (2, 1, 2) in c.members)
    assert {(1, 2), (1, 2, 1), (2, 1, 2)} <= set(holder.members)
    assert holder.canonical_member == (1, 2)


def test_classes_count_rank_2():
    # five elements: "", 1, 2, 12, 21
    classes = congruence_closure(2, 6)
    assert len(classes) == 5
    assert all(c.canonical_member is not None for c in classes)


def test_certification_small_gates():
    for n, max_len in ((1, 6), (2, 7)):
        cert = certify_reducer(n, max_len)
        assert cert.holds, cert.violations
        assert cert.classes == cert.canonical_words


def test_certification_retries_on_split_classes():
    # at rank 3 the cap-7 closure leaves classes whose canonical member is
    # only reachable through longer words; the raised-cap retry heals them
    cert = certify_reducer(3, 7)
    assert cert.retried
    assert cert.holds
    assert cert.classes == cert.canonical_words == 18


def test_report_form():
    report = verify_reducer_against_oracle(2, 6)
    assert report.holds
    assert report.lhs == report.rhs == 5
    assert report.name == "congruence-classes-equal-canonical-words"


def test_certification_json_fields():
    cert = certify_reducer(2, 5)
    payload = json.loads(cert.to_json())
    assert list(payload) == ["rank", "max_len", "classes", "violations"]
    assert payload["classes"] == 5
    assert payload["violations"] == []


def test_universe_guard():
    with pytest.raises(ResourceGuardError):
        congruence_closure(4, 12)
    # explicit budget override is honored
    with pytest.raises(ResourceGuardError):
        congruence_closure(2, 6, max_words=10)
