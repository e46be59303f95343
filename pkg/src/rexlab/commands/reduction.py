"""
Reduction commands: reduce (alias normalize) and replay
"""

import logging
from typing import BinaryIO, Optional, TextIO

import click
import orjson

from rexlab.commands.common import fail, handle_errors, input_file, output_format, read_source
from rexlab.config import settings
from rexlab.constants.calculi import STRATEGY_ALIASES, CalculusId, Strategy, is_named
from rexlab.engine.reduction import normalize, replay
from rexlab.engine.trace import Step, Trace
from rexlab.errors import BoundExceeded
from rexlab.oracles.schemas import VALIDATORS
from rexlab.syntax.parser import World, parse_term
from rexlab.syntax.printer import print_term
from rexlab.terms.positions import position_labels
from rexlab.utils.output import emit
from rexlab.utils.responses import EXIT_BOUND, create_error_response, create_success_response

logger = logging.getLogger(__name__)


def step_line(step: Step) -> str:
    """rule @ position : after"""
    position = ".".join(position_labels(step.position)) or "root"
    return f"{step.rule.value} @ {position} : {print_term(step.after)}"


def _trace_lines(trace: Trace) -> list[str]:
    return [step_line(step) for step in trace.steps]


@click.command("reduce")
@click.argument("term", required=False)
@input_file
@click.option(
    "--calculus",
    type=click.Choice([c.value for c in CalculusId]),
    required=True,
    help="Calculus to reduce in; the term syntax follows it",
)
@click.option(
    "--strategy",
    type=click.Choice([s.value for s in Strategy] + list(STRATEGY_ALIASES)),
    default=Strategy.LEFTMOST_OUTERMOST.value,
    show_default=True,
)
@click.option(
    "--max-steps",
    type=click.IntRange(min=0),
    default=None,
    help="Step bound (default: REXLAB_MAX_STEPS)",
)
@click.option("--trace", "show_trace", is_flag=True, help="Print every step")
@output_format
@handle_errors
def reduce_command(
    term: Optional[str],
    source_file: Optional[TextIO],
    calculus: str,
    strategy: str,
    max_steps: Optional[int],
    show_trace: bool,
    fmt: str,
) -> None:
    """Reduce TERM to normal form"""
    source = read_source(term, source_file)
    if source is None:
        fail(fmt, "missing_input")
    calc = CalculusId(calculus)
    world = World.NAMED if is_named(calc) else World.INDEXED
    parsed = parse_term(source, world)
    bound = settings.MAX_STEPS if max_steps is None else max_steps

    try:
        result, trace = normalize(calc, strategy, parsed, bound)
    except BoundExceeded as e:
        response, code = create_error_response("bound_exceeded", EXIT_BOUND, max_steps=bound)
        response["result"] = print_term(e.trace.result)
        if show_trace or fmt == "json":
            response["trace"] = e.trace.to_dict()
        lines = _trace_lines(e.trace) if show_trace else []
        emit(response, fmt, lines + [print_term(e.trace.result)])
        click.get_current_context().exit(code)

    data = {
        "calculus": calc.value,
        "result": print_term(result),
        "status": trace.status.value,
        "steps": len(trace),
    }
    if show_trace or fmt == "json":
        data["trace"] = trace.to_dict()
    response, code = create_success_response("normal_form", data, steps=len(trace))
    lines = _trace_lines(trace) if show_trace else []
    emit(response, fmt, lines + [print_term(result)])
    click.get_current_context().exit(code)


normalize_command = click.Command(
    "normalize",
    callback=reduce_command.callback,
    params=reduce_command.params,
    help="Alias of reduce",
)


@click.command("replay")
@click.argument("trace_file", type=click.File("rb"))
@output_format
@handle_errors
def replay_command(trace_file: BinaryIO, fmt: str) -> None:
    """Re-execute a JSON trace (or a reduce --format json envelope) and check every step"""
    try:
        data = orjson.loads(trace_file.read())
        payload = data.get("trace", data)
    except (orjson.JSONDecodeError, AttributeError) as e:
        fail(fmt, "invalid_trace", reason=repr(e))
    ok, errors = VALIDATORS["traces"](payload)
    if not ok:
        fail(fmt, "invalid_trace", reason="; ".join(errors))
    trace = Trace.from_dict(payload)
    logger.debug(f"Replaying {len(trace)} steps of {trace.calculus.value}")
    result = replay(trace)
    response, code = create_success_response(
        "replayed", {"result": print_term(result), "steps": len(trace)}, steps=len(trace)
    )
    emit(response, fmt, [print_term(result)])
    click.get_current_context().exit(code)
