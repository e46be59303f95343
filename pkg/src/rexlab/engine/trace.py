"""
Reduction steps and traces, with their JSON record form
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple, Union

from rexlab.constants.calculi import CalculusId, RuleId, is_named
from rexlab.engine.equations import EquationMove
from rexlab.syntax.parser import parse_term
from rexlab.syntax.printer import print_term
from rexlab.terms.indexed import Term
from rexlab.terms.named import NamedTerm
from rexlab.terms.positions import Position, as_position, position_labels

AnyTerm = Union[Term, NamedTerm]


class TraceStatus(str, Enum):
    NORMAL_FORM = "normal-form"
    BOUND_EXCEEDED = "bound-exceeded"
    IN_PROGRESS = "in-progress"


@dataclass(frozen=True, slots=True)
class Step:
    """
    One rewrite step. For calculi working modulo an equation, `equations`
    lists the moves turning `before` into the class member the rule was
    applied to.
    """

    rule: RuleId
    position: Position
    before: AnyTerm
    after: AnyTerm
    equations: Tuple[EquationMove, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "rule": self.rule.value,
            "position": position_labels(self.position),
            "after": print_term(self.after),
        }
        if self.equations:
            data["equations"] = [
                {"rule": move.rule.value, "position": position_labels(move.position)}
                for move in self.equations
            ]
        return data


@dataclass
class Trace:
    """Reduction trace schema"""

    calculus: CalculusId
    initial: AnyTerm
    steps: List[Step] = field(default_factory=list)
    status: TraceStatus = TraceStatus.IN_PROGRESS

    @property
    def result(self) -> AnyTerm:
        return self.steps[-1].after if self.steps else self.initial

    def __len__(self) -> int:
        return len(self.steps)

    def append(self, step: Step) -> None:
        self.steps.append(step)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "calculus": self.calculus.value,
            "initial": print_term(self.initial),
            "steps": [step.to_dict() for step in self.steps],
            "result": print_term(self.result),
            "status": self.status.value,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Trace":
        calculus = CalculusId(data["calculus"])
        world = "named" if is_named(calculus) else "indexed"
        initial = parse_term(data["initial"], world)
        trace = cls(calculus, initial, status=TraceStatus(data.get("status", "in-progress")))
        before = initial
        for raw in data.get("steps", []):
            after = parse_term(raw["after"], world)
            equations = tuple(
                EquationMove(RuleId(move["rule"]), as_position(move["position"]))
                for move in raw.get("equations", [])
            )
            trace.append(
                Step(RuleId(raw["rule"]), as_position(raw["position"]), before, after, equations)
            )
            before = after
        return trace

    def validate(self) -> List[str]:
        """Validate trace data and return list of errors"""
        errors = []
        previous = self.initial
        for i, step in enumerate(self.steps):
            if step.before != previous:
                errors.append(f"Step {i} does not start from the previous result")
            previous = step.after
        return errors
