"""Machine-readable pass/fail ledger produced by the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass

#: Anchor strings a check may cite; each names a table, claim, conjecture,
#: lemma, example, equation block or section of the verified development.
KNOWN_ANCHORS = frozenset(
    {
        "table 1",
        "table 2",
        "tables 3-4",
        "eq 1-2",
        "eq 3",
        "eq 4",
        "eq 6",
        "section 2.2",
        "section 2 genus",
        "section 3.4 class count",
        "claim 2.1.1",
        "claim 2.2.1",
        "claim 2.2.2",
        "claim 2.3.1",
        "claim 2.3.2",
        "claim 3.1.1",
        "claim 3.1.2",
        "note 3.1.3",
        "claim 3.2.1",
        "conjecture 3.3.1",
        "conjecture 3.3.2",
        "conjecture 3.3.3",
        "lemma 3.4.1",
        "example 3.4.2",
        "example 3.4.3",
        "conjecture 3.4.5",
        "guess 3.4.6",
        "figures 2-6",
    }
)


@dataclass(frozen=True)
class CheckResult:
    id: str
    claim_ref: str
    status: str  # pass | fail | skipped
    details: str
    elapsed_ms: int

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "claim_ref": self.claim_ref,
            "status": self.status,
            "details": self.details,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    version: str
    config: dict
    results: tuple[CheckResult, ...]

    def __post_init__(self):
        ids = [r.id for r in self.results]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate check ids in report")
        object.__setattr__(
            self, "results", tuple(sorted(self.results, key=lambda r: r.id))
        )

    @property
    def overall(self) -> str:
        return "fail" if any(r.status == "fail" for r in self.results) else "pass"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "version": self.version,
            "overall": self.overall,
            "config": self.config,
            "checks": [r.to_json() for r in self.results],
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, ensure_ascii=True) + "\n"
        if fmt == "text":
            lines = [f"suite {self.suite} (version {self.version})"]
            for r in self.results:
                lines.append(
                    f"  {r.id} [{r.claim_ref}]: {r.status}"
                    + (f" - {r.details}" if r.details else "")
                    + f" ({r.elapsed_ms} ms)"
                )
            lines.append(f"overall: {self.overall}")
            return "\n".join(lines) + "\n"
        raise ValueError(f"unknown format {fmt!r}")
