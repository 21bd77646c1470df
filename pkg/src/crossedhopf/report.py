"""Verification reports: one entry per checked axiom instance."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass(frozen=True)
class Entry:
    check: str
    index: tuple
    passed: bool
    witness: tuple = ()

    def sort_key(self) -> tuple:
        return (self.check, tuple(str(i) for i in self.index), self.index)

    def as_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "index": [_plain(i) for i in self.index],
            "passed": self.passed,
            "witness": [_plain(w) for w in self.witness],
        }


def _plain(x: Any) -> Any:
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, (tuple, list)):
        return [_plain(i) for i in x]
    return str(x)


@dataclass
class Report:
    title: str = ""
    entries: list[Entry] = field(default_factory=list)

    def add(self, check: str, index: Iterable[Any], passed: bool, witness: Iterable[Any] = ()) -> bool:
        self.entries.append(Entry(check, tuple(index), bool(passed), tuple(witness)))
        return bool(passed)

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for e in other.entries:
            self.entries.append(Entry(prefix + e.check, e.index, e.passed, e.witness))
        return self

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.passed]

    @property
    def clean(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.clean

    def failed_checks(self) -> set[str]:
        return {e.check for e in self.failures}

    def passed(self, check: str) -> bool:
        """True when every entry whose id equals or starts with ``check`` passed."""
        rel = [e for e in self.entries if e.check == check or e.check.startswith(check + ".")]
        if not rel:
            raise KeyError(f"no entries for {check!r}")
        return all(e.passed for e in rel)

    def summary(self) -> dict[str, int]:
        n_fail = len(self.failures)
        return {"total": len(self.entries), "passed": len(self.entries) - n_fail, "failed": n_fail}

    def sorted_entries(self) -> list[Entry]:
        return sorted(self.entries, key=Entry.sort_key)

    def to_json(self) -> str:
        doc = {
            "title": self.title,
            "clean": self.clean,
            "summary": self.summary(),
            "entries": [e.as_dict() for e in self.sorted_entries()],
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_text(self, verbose: bool = False) -> str:
        s = self.summary()
        head = f"{self.title or 'report'}: {'CLEAN' if self.clean else 'FAILED'} ({s['passed']}/{s['total']} passed)"
        lines = [head]
        for e in self.sorted_entries():
            if e.passed and not verbose:
                continue
            tag = "ok  " if e.passed else "FAIL"
            idx = ",".join(str(i) for i in e.index)
            line = f"  {tag} {e.check}[{idx}]"
            if e.witness:
                line += " " + " ".join(str(_plain(w)) for w in e.witness)
            lines.append(line)
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()
