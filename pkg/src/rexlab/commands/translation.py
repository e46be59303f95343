"""
Translation command between the named and indexed syntaxes
"""

from typing import Optional, TextIO

import click

from rexlab.commands.common import fail, handle_errors, input_file, output_format, read_source
from rexlab.modules.validators import check_var_list
from rexlab.syntax.parser import World, parse_indexed, parse_named
from rexlab.syntax.printer import print_term
from rexlab.translate.translation import u_list, u_uniform, w_list, w_uniform
from rexlab.utils.output import emit
from rexlab.utils.responses import create_success_response


@click.command("translate")
@click.argument("term", required=False)
@input_file
@click.option(
    "--to",
    "target",
    type=click.Choice([world.value for world in World]),
    required=True,
    help="Target syntax; the input is read in the other one",
)
@click.option(
    "--vars",
    "variables",
    default=None,
    help="Comma-separated variable list (default: the uniform enumeration x1, x2, ...)",
)
@output_format
@handle_errors
def translate_command(
    term: Optional[str],
    source_file: Optional[TextIO],
    target: str,
    variables: Optional[str],
    fmt: str,
) -> None:
    """Translate TERM with u (indexed to named) or w (named to indexed)"""
    source = read_source(term, source_file)
    if source is None:
        fail(fmt, "missing_input")
    validation_result = check_var_list(variables)
    if not validation_result["result"]:
        fail(fmt, "invalid_var_list", reason=validation_result["reason"])
    xs = validation_result["variables"]

    if World(target) is World.NAMED:
        indexed = parse_indexed(source)
        result = u_uniform(indexed) if xs is None else u_list(tuple(xs), indexed)
    else:
        named = parse_named(source)
        result = w_uniform(named) if xs is None else w_list(tuple(xs), named)

    printed = print_term(result)
    response, code = create_success_response(
        "translated", {"world": target, "term": printed}, world=target
    )
    emit(response, fmt, [printed])
    click.get_current_context().exit(code)
