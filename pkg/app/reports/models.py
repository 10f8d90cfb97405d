import hashlib
import json
from typing import Any

from pydantic import BaseModel, Field

from app.fincat.types import LawReport

REPORT_SCHEMA_VERSION = 1


def jsonable(value: Any) -> Any:
    """Tuples to lists, sets to sorted lists, everything else left as is or stringified."""
    if isinstance(value, (tuple, list)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=repr)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


class Verdict(BaseModel):
    check: str
    passed: bool
    instance: str = ""
    details: dict[str, Any] = Field(default_factory=dict)
    witness: Any = None

    @classmethod
    def of_law_report(cls, check: str, report: LawReport, instance: str = "") -> "Verdict":
        witness = None
        if report.violations:
            v = report.violations[0]
            witness = jsonable([v.law, *v.witness])
        details: dict[str, Any] = {"laws_failed": report.laws_failed()}
        for s in report.supplementary:
            details[s.subject] = "pass" if s.passed else jsonable(s.laws_failed())
        return cls(check=check, passed=report.passed, instance=instance, details=details, witness=witness)


class RunReport(BaseModel):
    schema_version: int = REPORT_SCHEMA_VERSION
    command: str
    input_digest: str
    seed: int | None = None
    verdicts: list[Verdict] = Field(default_factory=list)
    wall_time: float | None = Field(default=None, exclude=True)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def sorted(self) -> "RunReport":
        verdicts = sorted(self.verdicts, key=lambda v: (v.instance, v.check))
        return self.model_copy(update={"verdicts": verdicts})


def digest(payload: Any) -> str:
    canonical = json.dumps(jsonable(payload), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canonical.encode()).hexdigest()
