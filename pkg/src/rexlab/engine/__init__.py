from .equations import (
    EquationMove,
    c_class,
    canonical,
    class_key,
    d_class,
    eqc_apply,
    eqd_apply,
)
from .reduction import (
    is_normal,
    modulo_steps,
    normalize,
    reachable,
    replay,
    step_modulo,
    step_redexes,
)
from .rules import apply_rule_at_root
from .trace import Step, Trace, TraceStatus

__all__ = [
    "EquationMove",
    "Step",
    "Trace",
    "TraceStatus",
    "apply_rule_at_root",
    "c_class",
    "canonical",
    "class_key",
    "d_class",
    "eqc_apply",
    "eqd_apply",
    "is_normal",
    "modulo_steps",
    "normalize",
    "reachable",
    "replay",
    "step_modulo",
    "step_redexes",
]
