"""Test checks and verification reports."""

# pylint: disable=import-error
import math
from solminimal.report import Check, VerificationReport


def test_check_verdict():
    """A check passes when its finite residual is within tolerance."""
    assert Check("a", 1e-9, 1e-8).passed
    assert not Check("a", 1e-7, 1e-8).passed
    assert not Check("a", math.nan, 1.0).passed
    assert Check("count", 0, 0).passed


def test_check_text():
    """Residual and tolerance are written with 17 significant digits."""
    assert Check("harmonic", 0.1, 1e-9, "z=0").to_text() == \
        "harmonic 0.10000000000000001 1.0000000000000001e-09 FAIL z=0"
    assert Check("count", 0, 0).to_text() == "count 0 0 PASS"


def test_empty_report_passes():
    """No checks, no failures."""
    report = VerificationReport("empty")
    assert report.passed
    assert len(report) == 0
    assert report.to_text() == "# empty PASS 0/0 failed\n"


def test_add_max_keeps_worst():
    """Only the largest residual is kept, with its location."""
    report = VerificationReport("worst")
    check = report.add_max("r", [1e-3, 5e-3, 2e-3], 1e-2, ["a", "b", "c"])
    assert check.residual == 5e-3
    assert check.location == "b"
    nan_check = report.add_max("s", [1.0, math.nan, 0.0], 10.0, ["a", "b", "c"])
    assert nan_check.location == "b"
    assert not report.passed
    assert [c.name for c in report.failures] == ["s"]


def test_scaling_and_overrides():
    """Tolerances scale and can be replaced by name."""
    report = VerificationReport("t")
    report.add("a", 1e-6, 1e-5)
    report.add("b", 1e-6, 1e-5)
    assert not report.scaled(1e-30).passed
    overridden = report.with_tolerances({"b": 1e-7})
    assert overridden["a"].passed
    assert not overridden["b"].passed
    assert report.passed


def test_sorted_and_lookup():
    """Sorting by name and location, then lookup by name."""
    report = VerificationReport("t")
    report.add("z", 0, 1, "2")
    report.add("a", 0, 1)
    report.add("z", 0, 1, "1")
    assert [(c.name, c.location) for c in report.sorted().checks] == \
        [("a", ""), ("z", "1"), ("z", "2")]
    assert "a" in report
    assert "b" not in report
    assert report["z"].location == "2"


def test_extend_and_str():
    """Extending appends the checks of another report."""
    first, second = VerificationReport("first"), VerificationReport("second")
    first.add("a", 0, 1)
    second.add("b", 2, 1)
    first.extend(second)
    assert len(first) == 2
    assert str(first) == "VerificationReport(first: 2 checks, 1 failed)"
    assert first.to_text().splitlines()[0] == "# first FAIL 1/2 failed"
