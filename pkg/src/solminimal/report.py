"""Named residuals with tolerances and pass/fail verdicts."""

from __future__ import annotations
import logging
import math
from dataclasses import dataclass, replace
from typing import Iterable, List, Mapping

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    """One residual compared against its tolerance at a sample location."""

    name: str
    residual: float
    tolerance: float
    location: str = ""

    @property
    def passed(self) -> bool:
        return math.isfinite(self.residual) and self.residual <= self.tolerance

    def to_text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.name} {self.residual:.17g} {self.tolerance:.17g} {verdict} {self.location}".rstrip()


class VerificationReport:
    """An ordered collection of checks.

    The report passes when every check passes. An empty report passes.
    """

    title: str
    checks: List[Check]

    def __init__(self, title: str, checks: Iterable[Check] = ()):
        self.title = title
        self.checks = list(checks)

    def add(self, name: str, residual: float, tolerance: float, location: str = "") -> Check:
        """Record a residual and return the resulting check."""
        check = Check(name, float(residual), float(tolerance), location)
        self.checks.append(check)
        if not check.passed:
            logger.warning("%s: %s failed with residual %.3e > %.3e %s",
                           self.title, name, check.residual, tolerance, location)
        return check

    def add_max(self, name: str, residuals: Iterable[float], tolerance: float,
                locations: Iterable[str]) -> Check:
        """Record only the worst of several residuals, with its location.

        A non-finite residual is always the worst. No residuals at all count as zero.
        """
        worst, where = 0.0, ""
        for residual, location in zip(residuals, locations):
            if not math.isfinite(residual):
                worst, where = math.nan, location
                break
            if residual >= worst:
                worst, where = residual, location
        return self.add(name, worst, tolerance, where)

    def extend(self, other: VerificationReport) -> VerificationReport:
        """Append all checks of another report."""
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def scaled(self, factor: float) -> VerificationReport:
        """Copy with every tolerance multiplied by factor."""
        return VerificationReport(self.title, [replace(check, tolerance=check.tolerance * factor)
                                               for check in self.checks])

    def with_tolerances(self, overrides: Mapping[str, float]) -> VerificationReport:
        """Copy with the tolerance of every check named in overrides replaced."""
        return VerificationReport(self.title, [replace(check, tolerance=float(overrides[check.name]))
                                               if check.name in overrides else check
                                               for check in self.checks])

    def sorted(self) -> VerificationReport:
        """Copy ordered by check name, then location."""
        return VerificationReport(self.title, sorted(self.checks,
                                                     key=lambda c: (c.name, c.location)))

    def __getitem__(self, name: str) -> Check:
        """The first check with the given name."""
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(check.name == name for check in self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def to_text(self) -> str:
        """One line per check, preceded by the title and overall verdict."""
        verdict = "PASS" if self.passed else "FAIL"
        lines = [f"# {self.title} {verdict} {len(self.failures)}/{len(self.checks)} failed"]
        lines.extend(check.to_text() for check in self.checks)
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return f"VerificationReport({self.title}: {len(self.checks)} checks, " + \
            f"{len(self.failures)} failed)"

"""
The MIT License (MIT)

Copyright (c) 2021 The solminimal developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
