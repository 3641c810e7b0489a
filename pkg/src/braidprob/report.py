"""Pass/fail records shared by the law checks and the check suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Law:
    name: str
    passed: bool
    witness: object = None  # a failing input, JSON-serializable
    cases: int = 1

    def __str__(self):
        mark = "pass" if self.passed else "FAIL"
        count = f" [{self.cases} cases]" if self.cases != 1 else ""
        extra = "" if self.passed or self.witness is None else f" (witness: {self.witness})"
        return f"{mark}  {self.name}{count}{extra}"

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "cases": self.cases}
        if not self.passed:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    laws: list[Law] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    def failures(self) -> list[Law]:
        return [law for law in self.laws if not law.passed]

    def add(self, name: str, passed: bool, witness=None, cases: int = 1) -> Law:
        law = Law(name, bool(passed), witness, cases)
        self.laws.append(law)
        return law

    def extend(self, other: Report, prefix: str = "") -> Report:
        for law in other.laws:
            self.laws.append(Law(prefix + law.name, law.passed, law.witness, law.cases))
        return self

    def __str__(self):
        return "\n".join(map(str, self.laws))
