import pytest

from fracmeasure import SUITE_NAMES, run_suite
from fracmeasure.errors import SuiteUnknown


def test_suite_names_complete():
    assert set(SUITE_NAMES) == {
        "wh-order",
        "subadd",
        "product-w",
        "sandwich",
        "zero-infinite",
        "noncentered",
        "hxh",
        "density",
        "vitali",
        "besicovitch",
        "lemma-8c",
        "example-zero",
    }


def test_unknown_suite_raises():
    with pytest.raises(SuiteUnknown):
        run_suite("no-such-suite")


@pytest.mark.parametrize(
    "name",
    [n for n in SUITE_NAMES if n != "example-zero"],
)
def test_suites_pass_small(name):
    report = run_suite(name, count=8, seed=11)
    assert report.passed, report.violations
    assert report.cases > 0


def test_suite_reports_are_deterministic():
    a = run_suite("wh-order", count=5, seed=3)
    b = run_suite("wh-order", count=5, seed=3)
    assert a.cases == b.cases
    assert a.violations == b.violations
