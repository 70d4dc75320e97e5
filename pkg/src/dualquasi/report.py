"""Pass/fail reports for axiom suites, with first-failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    """Outcome of one named identity.

    A failing check records the first offending basis tuple in lexicographic
    order together with the two unequal values, rendered canonically.
    """

    axiom: str
    passed: bool
    witness: tuple[int, ...] | None = None
    lhs: str | None = None
    rhs: str | None = None


@dataclass(frozen=True)
class Report:
    """An ordered collection of checks; the verdict is their conjunction."""

    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __iter__(self):
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def __add__(self, other: "Report") -> "Report":
        return Report(self.checks + other.checks)


def clean_terms(terms: dict) -> dict:
    """Drop exact zeros from an accumulated sparse vector."""
    return {k: v for k, v in terms.items() if v}


def terms_equal(lhs: dict, rhs: dict) -> bool:
    return clean_terms(lhs) == clean_terms(rhs)


def format_terms(terms: dict) -> str:
    """Deterministic rendering of a sparse vector keyed by basis multi-indices."""
    nonzero = sorted(clean_terms(terms).items())
    if not nonzero:
        return "0"
    parts = []
    for key, value in nonzero:
        idx = ",".join(str(k) for k in key)
        parts.append(f"{value}*e({idx})")
    return " + ".join(parts)
