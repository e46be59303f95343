"""
Evaluation of index meta-operators and meta-substitutions on indexed terms
"""

from typing import Callable, Dict, List

import click

from rexlab.commands.common import fail, handle_errors, output_format
from rexlab.meta.operators import (
    decrement,
    increment,
    stacked_increment,
    stacked_swap,
    swap,
    update,
)
from rexlab.meta.substitution import db_subst, r_subst
from rexlab.modules.validators import META_SIGNATURES, check_meta_args
from rexlab.syntax.parser import parse_indexed
from rexlab.syntax.printer import print_term
from rexlab.terms.indexed import Term
from rexlab.utils.output import emit
from rexlab.utils.responses import create_success_response

# Arguments arrive in META_SIGNATURES order
OPERATIONS: Dict[str, Callable[..., Term]] = {
    "update": update,
    "increment": increment,
    "swap": swap,
    "decrement": decrement,
    "stacked-swap": stacked_swap,
    "stacked-increment": stacked_increment,
    "db-subst": db_subst,
    "r-subst": r_subst,
}


@click.command("meta")
@click.argument("operation", type=click.Choice(list(META_SIGNATURES)))
@click.argument("args", nargs=-1, required=True)
@output_format
@handle_errors
def meta_command(operation: str, args: List[str], fmt: str) -> None:
    """
    Apply a meta-operator, e.g. `meta swap 1 "1 2"` or `meta db-subst "1 2" 1 "3"`

    \b
    update K I TERM            stacked-swap I J TERM
    increment I TERM           stacked-increment I TERM
    swap I TERM                db-subst TERM N TERM
    decrement I TERM           r-subst TERM TERM
    """
    args = list(args)
    validation_result = check_meta_args(operation, args)
    if not validation_result["result"]:
        fail(
            fmt,
            "invalid_arguments",
            operation=operation,
            reason=validation_result["reason"],
        )

    values = [
        int(arg) if kind == "int" else parse_indexed(arg)
        for kind, arg in zip(META_SIGNATURES[operation], args)
    ]
    result = OPERATIONS[operation](*values)
    printed = print_term(result)
    response, code = create_success_response(
        "evaluated", {"operation": operation, "term": printed}, operation=operation
    )
    emit(response, fmt, [printed])
    click.get_current_context().exit(code)
