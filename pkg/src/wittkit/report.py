"""Check records and suite reports.

Every lemma-level checker returns a Report: an ordered list of records, one
per verified statement, each carrying a stable id, a human-readable claim,
the verdict, and a witness on failure.  Reports serialize to canonical JSON
(sorted keys, records sorted by id) so reruns are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    id: str
    statement: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"id": self.id, "statement": self.statement, "pass": self.passed}
        if self.witness:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    name: str
    params: dict = field(default_factory=dict)
    records: list = field(default_factory=list)

    def check(self, id: str, statement: str, passed: bool, **witness) -> bool:
        self.records.append(CheckRecord(id, statement, bool(passed), dict(witness)))
        return bool(passed)

    def extend(self, other: "Report"):
        self.records.extend(other.records)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_json(self) -> dict:
        return {
            "schema": "wittkit-report/1",
            "suite": self.name,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "pass": self.passed,
            "checks": [r.to_json() for r in sorted(self.records, key=lambda r: r.id)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")) + "\n"

    def to_markdown(self) -> str:
        lines = [f"# suite {self.name}", ""]
        if self.params:
            lines.append("params: " + ", ".join(f"{k}={self.params[k]}" for k in sorted(self.params)))
            lines.append("")
        for r in sorted(self.records, key=lambda r: r.id):
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"- [{mark}] {r.id}: {r.statement}")
            if r.witness and not r.passed:
                lines.append(f"  witness: {json.dumps(r.witness, sort_keys=True)}")
        lines.append("")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"
