"""Located validation results.

A report counts every axiom instance it evaluated (per check id) and keeps a
witness for each instance that failed. ``report.ok`` means no failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True, order=True)
class Failure:
    check: str
    witness: tuple
    detail: str = ""

    def line(self) -> str:
        wit = " ".join(str(w) for w in self.witness)
        text = f"CHECK {self.check} FAIL"
        if wit:
            text += f" {wit}"
        if self.detail:
            text += f"  # {self.detail}"
        return text


@dataclass
class ValidationReport:
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    malformed: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.malformed

    def record(self, check: str, passed: bool, witness=(), detail: str = "") -> bool:
        self.checks[check] = self.checks.get(check, 0) + 1
        if not passed:
            self.failures.append(Failure(check, tuple(witness), detail))
        return passed

    def touch(self, check: str):
        """Register a check id that ran with no instances."""
        self.checks.setdefault(check, 0)

    def note(self, text: str):
        self.notes.append(text)

    def extend(self, other: "ValidationReport", prefix: str = ""):
        for k, n in other.checks.items():
            key = prefix + k
            self.checks[key] = self.checks.get(key, 0) + n
        for f in other.failures:
            self.failures.append(Failure(prefix + f.check, f.witness, f.detail))
        self.notes.extend(other.notes)
        self.malformed.extend(other.malformed)
        return self

    def failed_checks(self) -> list:
        return sorted({f.check for f in self.failures})

    def first_failure(self, prefix: str = ""):
        """Earliest recorded failure whose check id starts with ``prefix``."""
        return next((f for f in self.failures if f.check.startswith(prefix)), None)

    def lines(self) -> list:
        out = []
        failed = {}
        for f in sorted(self.failures):
            failed.setdefault(f.check, []).append(f)
        for m in self.malformed:
            out.append(f"MALFORMED {m}")
        for check in sorted(self.checks):
            if check in failed:
                out.extend(f.line() for f in failed[check])
            else:
                out.append(f"CHECK {check} PASS {self.checks[check]}")
        for n in self.notes:
            out.append(f"NOTE {n}")
        return out

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": {k: self.checks[k] for k in sorted(self.checks)},
            "failures": [
                {"check": f.check, "witness": [str(w) for w in f.witness], "detail": f.detail}
                for f in sorted(self.failures)
            ],
            "malformed": list(self.malformed),
            "notes": list(self.notes),
        }

    def __str__(self):
        return "\n".join(self.lines())
