import pytest

from kiselman import verify


def test_reducer_suite_respects_max_n():
    reports = verify.reducer_suite(max_n=2)
    assert [r.n_or_k for r in reports] == [1, 2]
    assert all(r.holds for r in reports)


def test_bounds_suite_holds():
    reports = verify.bounds_suite(max_n=4)
    assert reports and all(r.holds for r in reports)
    names = {r.name for r in reports}
    assert "lower-bound-below-count" in names
    assert "doubled-count-square-below-next" in names
    assert "count-monotone-in-rank" in names


def test_identities_suite_holds():
    reports = verify.identities_suite(max_n=3)
    assert all(r.holds for r in reports)
    # fixed coverage regardless of max_n: k = 1..8 and N = 1..64 * 3 parts
    assert sum(r.name == "multiset-multinomial-equals-binomial-product" for r in reports) == 8
    assert sum(r.name.startswith("binomial-estimate") for r in reports) == 192


def test_structure_suite_warns_without_failing():
    reports = verify.structure_suite(max_n=4)
    assert all(r.holds for r in reports)
    warnings = [r for r in reports if r.note.startswith("WARN")]
    assert [w.n_or_k for w in warnings] == [3]
    counter = next(r for r in reports if r.name == "even-rank-counterexample-word")
    assert counter.holds


def test_run_suite_dispatch():
    assert verify.run_suite("reducer", max_n=1)[0].holds
    with pytest.raises(ValueError):
        verify.run_suite("nonsense")


def test_failing_and_all_hold():
    reports = verify.identities_suite(max_n=2)
    assert verify.all_hold(reports)
    assert verify.failing(reports) == []
