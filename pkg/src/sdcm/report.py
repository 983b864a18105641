"""Pass/fail report structures shared by the validators and theorem checkers."""

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one named check; witnesses describe failures (or, for a
    passing check, any noteworthy findings)."""

    check: str
    passed: bool
    witnesses: list = field(default_factory=list)

    def to_json_dict(self):
        return {"check": self.check, "pass": self.passed,
                "witnesses": [str(w) for w in self.witnesses]}

    def __str__(self):
        head = "PASS" if self.passed else "FAIL"
        lines = [f"{head} {self.check}"]
        lines.extend(f"    {w}" for w in self.witnesses)
        return "\n".join(lines)


@dataclass
class ValidationReport:
    """One entry per model invariant; the model is valid iff all pass."""

    model: str
    entries: list = field(default_factory=list)

    @property
    def valid(self):
        return all(e.passed for e in self.entries)

    def add(self, check, passed, witnesses=()):
        self.entries.append(CheckReport(check, passed, list(witnesses)))

    def to_json_dict(self):
        return {"model": self.model, "valid": self.valid,
                "checks": [e.to_json_dict() for e in self.entries]}

    def __str__(self):
        status = "valid" if self.valid else "INVALID"
        lines = [f"model {self.model}: {status}"]
        lines.extend(str(e) for e in self.entries)
        return "\n".join(lines)
