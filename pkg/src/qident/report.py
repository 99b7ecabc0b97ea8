"""Machine-readable pass/fail reporting shared by all verification suites.

Every failed check carries the first-failure locus (an exponent or an n)
plus the exact expected and actual values as strings; rationals serialise
as "p/q", never as decimals.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    status: str                  # "pass" | "fail"
    locus: int | None = None
    expected: str = ""
    actual: str = ""

    @classmethod
    def ok(cls, name: str) -> "Check":
        return cls(name, "pass")

    @classmethod
    def fail(cls, name: str, locus, expected, actual) -> "Check":
        return cls(name, "fail", None if locus is None else int(locus),
                   str(expected), str(actual))

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "locus": self.locus,
                "expected": self.expected, "actual": self.actual}

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        return cls(d["name"], d["status"], d["locus"], d["expected"], d["actual"])


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"suite": self.suite,
                "parameters": dict(self.parameters),
                "checks": [c.to_dict() for c in self.checks]}

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(d["suite"], dict(d["parameters"]),
                   [Check.from_dict(c) for c in d["checks"]])


def series_check(name: str, lhs, rhs, order: int) -> Check:
    """Compare two QSeries coefficient-exactly below ``order``."""
    from .series import series_eq

    bad = series_eq(lhs, rhs, order)
    if bad is None:
        return Check.ok(name)
    return Check.fail(name, bad, rhs.coeff(bad), lhs.coeff(bad))


def value_check(name: str, locus, expected, actual) -> Check:
    """Exact equality of two scalars (ints or Fractions)."""
    if expected == actual:
        return Check.ok(name)
    return Check.fail(name, locus, expected, actual)


def sweep_check(name: str, pairs) -> Check:
    """First failure over an iterable of ``(locus, expected, actual)``."""
    for locus, expected, actual in pairs:
        if expected != actual:
            return Check.fail(name, locus, expected, actual)
    return Check.ok(name)
