"""Witness-bearing verification reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

CONFIRMED = "confirmed"
COUNTEREXAMPLE = "counterexample"
SKIPPED = "skipped"
OUTCOMES = (CONFIRMED, COUNTEREXAMPLE, SKIPPED)

INFORMATIONAL = "informational"


@dataclass
class VerificationReport:
    check_id: str
    instances_checked: int = 0
    outcome: str = CONFIRMED
    witness: dict[str, Any] | None = None
    notes: str = ""

    def __post_init__(self) -> None:
        if self.outcome not in OUTCOMES:
            raise ValueError(f"unknown outcome {self.outcome!r}")
        if self.outcome == COUNTEREXAMPLE and self.witness is None:
            raise ValueError("a counterexample report must carry a witness")

    @property
    def informational(self) -> bool:
        return self.notes.startswith(INFORMATIONAL)

    @property
    def failed(self) -> bool:
        """True for a counterexample that counts against the exit code."""
        return self.outcome == COUNTEREXAMPLE and not self.informational

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "VerificationReport":
        return cls(**json.loads(line))


def merge(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    """Aggregate per-instance reports into one report per check id.

    Instance counts are summed and the first counterexample witness is kept.
    A check is skipped only if every instance was skipped.  Output is sorted
    by check id so the result does not depend on dispatch order.
    """
    by_id: dict[str, list[VerificationReport]] = {}
    for r in reports:
        by_id.setdefault(r.check_id, []).append(r)
    merged = []
    for check_id in sorted(by_id):
        group = by_id[check_id]
        checked = sum(r.instances_checked for r in group)
        bad = [r for r in group if r.outcome == COUNTEREXAMPLE]
        done = [r for r in group if r.outcome != SKIPPED]
        skipped = [r for r in group if r.outcome == SKIPPED]
        notes = _merge_notes(done or group)
        if done and skipped:
            reasons = _merge_notes([r for r in skipped if not r.informational])
            extra = f"{len(skipped)} skipped" + (f" ({reasons})" if reasons else "")
            notes = _with_count(notes, extra)
        if bad:
            merged.append(VerificationReport(
                check_id, checked, COUNTEREXAMPLE, bad[0].witness,
                _with_count(notes, f"{len(bad)} violating instance(s)")))
        elif done:
            merged.append(VerificationReport(check_id, checked, CONFIRMED, None, notes))
        else:
            merged.append(VerificationReport(check_id, 0, SKIPPED, None, notes))
    return merged


def _merge_notes(group: list[VerificationReport]) -> str:
    seen: list[str] = []
    for r in group:
        for part in r.notes.split("; "):
            if part and part not in seen:
                seen.append(part)
    # informational marker has to stay in front
    seen.sort(key=lambda s: not s.startswith(INFORMATIONAL))
    return "; ".join(seen[:4]) + ("; ..." if len(seen) > 4 else "")


def _with_count(notes: str, extra: str) -> str:
    return f"{notes}; {extra}" if notes else extra
