"""Verification report shared by every sweep.

A report records what was swept, how many points were checked, which
points failed, and which failing points were expected going in. A sweep
passes exactly when its failures are contained in the expected set.
Reports are deterministic: failure and observation lists are sorted, so
identical inputs produce byte-identical serializations regardless of how
many workers ran the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    lemma_id: str
    range_descr: str
    points_checked: int
    failures: list[tuple]
    expected_exceptions: list[tuple]
    # verdicts recorded at exceptional or otherwise notable points
    observations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return set(self.failures) <= set(self.expected_exceptions)

    def to_json_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "range_descr": self.range_descr,
            "points_checked": self.points_checked,
            "failures": [list(f) for f in self.failures],
            "expected_exceptions": [list(e) for e in self.expected_exceptions],
            "observations": self.observations,
            "passed": self.passed,
        }
