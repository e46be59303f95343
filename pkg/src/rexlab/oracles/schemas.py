"""
Record schemas for property reports and traces
"""

from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, List

from rexlab.config import settings
from rexlab.constants.calculi import is_named
from rexlab.engine.trace import Trace
from rexlab.syntax.parser import parse_term


class ReportStatus(str, Enum):
    """Report statuses, mildest first"""

    PASS = "pass"
    BOUND_EXCEEDED = "bound-exceeded"
    FAIL = "fail"


_SEVERITY = {ReportStatus.PASS: 0, ReportStatus.BOUND_EXCEEDED: 1, ReportStatus.FAIL: 2}


@dataclass
class PropertyReport:
    """Outcome of one property suite run"""

    property_id: str
    universe: int = 0
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0
    status: ReportStatus = ReportStatus.PASS

    # Counterexamples beyond the kept ones are only counted
    failures: int = 0
    findings: List[Dict[str, Any]] = field(default_factory=list)
    config: Dict[str, Any] = field(default_factory=dict)
    created_at: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds")
    )

    @property
    def passed(self) -> bool:
        return self.status is ReportStatus.PASS

    def record_failure(self, counterexample: Dict[str, Any]) -> None:
        self.failures += 1
        self.status = ReportStatus.FAIL
        if len(self.counterexamples) < settings.MAX_COUNTEREXAMPLES:
            self.counterexamples.append(counterexample)

    def record_bound(self, counterexample: Dict[str, Any]) -> None:
        if self.status is ReportStatus.PASS:
            self.status = ReportStatus.BOUND_EXCEEDED
        if len(self.counterexamples) < settings.MAX_COUNTEREXAMPLES:
            self.counterexamples.append(counterexample)

    def merge(self, other: "PropertyReport") -> "PropertyReport":
        """Combine the reports of two shards of one universe"""
        status = max(self.status, other.status, key=_SEVERITY.__getitem__)
        return PropertyReport(
            property_id=self.property_id,
            universe=self.universe + other.universe,
            counterexamples=(self.counterexamples + other.counterexamples)[
                : settings.MAX_COUNTEREXAMPLES
            ],
            elapsed=self.elapsed + other.elapsed,
            status=status,
            failures=self.failures + other.failures,
            findings=self.findings + other.findings,
            config=self.config,
            created_at=min(self.created_at, other.created_at),
        )

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["status"] = self.status.value
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PropertyReport":
        data = dict(data)
        if "status" in data:
            data["status"] = ReportStatus(data["status"])
        return cls(**data)

    def validate(self) -> List[str]:
        """Validate report data and return list of errors"""
        errors = []

        if not self.property_id:
            errors.append("property_id is required")

        if self.universe < 0:
            errors.append("universe must be non-negative")

        if self.status is ReportStatus.FAIL and not self.counterexamples:
            errors.append("A failing report needs at least one counterexample")

        return errors


class SchemaValidator:
    """Utility class for schema validation"""

    @staticmethod
    def validate_report(data: Dict[str, Any]) -> tuple[bool, List[str]]:
        try:
            errors = PropertyReport.from_dict(data).validate()
            return len(errors) == 0, errors
        except Exception as e:
            return False, [f"Schema validation error: {str(e)}"]

    @staticmethod
    def validate_trace(data: Dict[str, Any]) -> tuple[bool, List[str]]:
        try:
            trace = Trace.from_dict(data)
            errors = trace.validate()
            world = "named" if is_named(trace.calculus) else "indexed"
            if "result" in data and parse_term(data["result"], world) != trace.result:
                errors.append("Recorded result differs from the last step")
            return len(errors) == 0, errors
        except Exception as e:
            return False, [f"Schema validation error: {str(e)}"]


VALIDATORS = {
    "reports": SchemaValidator.validate_report,
    "traces": SchemaValidator.validate_trace,
}
