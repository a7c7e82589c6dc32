"""Verifier reports at small scale; acceptance runs the full scales."""

import pytest

from signedchrom.chromatic import chromatic_pair
from signedchrom.errors import BudgetExceededError
from signedchrom.graphs import all_positive, complete_graph, fixture
from signedchrom.poly import pair_to_json
from signedchrom.verify import (
    non_switching_isomorphism_certificate,
    search_cochromatic,
    verify_conj_cochromatic_complete,
    verify_conj_complete_bivariate,
    verify_conj_threshold,
    _exact_threshold_scan,
    _fingerprint_threshold_scan,
)


def test_search_cochromatic_gem():
    gem = all_positive(fixture("G1"))
    report = search_cochromatic(gem)
    assert report.passed
    groups = report.details["cochromatic_groups"]
    assert len(groups) == 1
    group = groups[0]
    assert len(group["classes"]) == 2
    assert group["pair"] == pair_to_json(chromatic_pair(fixture("G1")))
    cert = group["non_switching_isomorphism"][0]
    assert cert["isomorphism_found"] is False
    assert cert["switchings_tried"] == 16  # 2^(5-1)


def test_search_cochromatic_k4_free():
    report = search_cochromatic(complete_graph(4, 1))
    assert report.passed
    assert report.details["cochromatic_groups"] == []


def test_search_cochromatic_petersen_free():
    report = search_cochromatic(fixture("petersen"))
    assert report.passed
    assert report.details["class_count"] == 6
    assert report.details["cochromatic_groups"] == []


def test_certificate_reports_witness_when_equivalent():
    cert = non_switching_isomorphism_certificate(
        complete_graph(2, -1), complete_graph(2, 1)
    )
    assert cert["isomorphism_found"] is True
    assert "witness" in cert


def test_conjecture_cochromatic_small():
    report = verify_conj_cochromatic_complete(4)
    assert report.passed
    assert report.details["classes_checked"] == {"0": 1, "1": 1, "2": 1, "3": 2, "4": 3}
    with pytest.raises(BudgetExceededError):
        verify_conj_cochromatic_complete(8)


def test_conjecture_threshold_small():
    report = verify_conj_threshold(3)
    assert report.passed
    assert report.details["codes_checked"]["3"] == 27
    with pytest.raises(BudgetExceededError):
        verify_conj_threshold(13)


def test_threshold_fingerprint_agrees_with_exact():
    # fingerprint route run over the fully exact range must also be collision-free
    assert _exact_threshold_scan(5) is None
    assert _fingerprint_threshold_scan(5, 0) is None


def test_fingerprint_fold_matches_exact_evaluation():
    """The numeric grid recursion is the even recursion, point for point."""
    import random

    from signedchrom.chromatic import threshold_even_step
    from signedchrom.poly import BiPoly
    from signedchrom.verify import _FP_MOD, _FP_X0, _FP_Y0, _fp_base_grid, _fp_child_grid

    rng = random.Random(77)
    for _ in range(20):
        length = rng.randrange(7)
        code = tuple(rng.choice((-1, 0, 1)) for _ in range(length))
        vals = _fp_base_grid(length)
        exact = BiPoly.x()
        for i, entry in enumerate(code):
            vals = _fp_child_grid(entry, vals, length - i - 1)
            exact = threshold_even_step(entry, exact)
        assert vals[(0, 0)] == exact.evaluate(_FP_X0, _FP_Y0) % _FP_MOD, code


def test_conjecture_bivariate_small():
    report = verify_conj_complete_bivariate(4)
    assert report.passed
    assert report.details["class_counts"] == {"0": 1, "1": 1, "2": 2, "3": 4, "4": 11}
    assert report.details["class_counts"] == report.details["expected_class_counts"]
    with pytest.raises(BudgetExceededError):
        verify_conj_complete_bivariate(8)


def test_report_shape():
    report = verify_conj_threshold(2)
    d = report.to_dict()
    assert set(d) == {"target", "scale", "status", "details"}
    d2 = report.to_dict(include_elapsed=True)
    assert "elapsed" in d2
    assert "PASS" in report.summary()


def test_budget_exceeded_status_inside_search():
    report = search_cochromatic(complete_graph(7, 1), max_edges=5)
    assert report.status == "budget_exceeded"
