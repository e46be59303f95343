"""
Term commands: parse, fv, enumerate
"""

import logging
import random
from typing import Optional, TextIO

import click

from rexlab.commands.common import (
    fail,
    handle_errors,
    input_file,
    output_format,
    read_source,
    world_option,
)
from rexlab.config import settings
from rexlab.oracles.enumeration import EnumSpec, count_terms, enumerate_terms, random_term
from rexlab.syntax.parser import World, parse_term
from rexlab.syntax.printer import print_term
from rexlab.terms.indexed import fv_indexed, size
from rexlab.terms.named import fv_named, named_size
from rexlab.utils.output import emit
from rexlab.utils.responses import create_success_response

logger = logging.getLogger(__name__)


@click.command("parse")
@click.argument("term", required=False)
@input_file
@world_option
@output_format
@handle_errors
def parse_command(
    term: Optional[str], source_file: Optional[TextIO], world: str, fmt: str
) -> None:
    """Parse TERM and print it back in normal concrete syntax"""
    source = read_source(term, source_file)
    if source is None:
        fail(fmt, "missing_input")
    parsed = parse_term(source, world)
    printed = print_term(parsed)
    term_size = size(parsed) if World(world) is World.INDEXED else named_size(parsed)
    response, code = create_success_response(
        "parsed", {"world": world, "term": printed, "size": term_size}
    )
    emit(response, fmt, [printed])
    click.get_current_context().exit(code)


@click.command("fv")
@click.argument("term", required=False)
@input_file
@world_option
@output_format
@handle_errors
def fv_command(term: Optional[str], source_file: Optional[TextIO], world: str, fmt: str) -> None:
    """Print the free indices or free variable names of TERM"""
    source = read_source(term, source_file)
    if source is None:
        fail(fmt, "missing_input")
    parsed = parse_term(source, world)
    if World(world) is World.INDEXED:
        free = list(fv_indexed(parsed))
    else:
        free = sorted(fv_named(parsed))
    response, code = create_success_response("free_variables", {"world": world, "free": free})
    emit(response, fmt, ["{" + ",".join(str(v) for v in free) + "}"])
    click.get_current_context().exit(code)


@click.command("enumerate")
@world_option
@click.option("--max-size", type=click.IntRange(min=0), default=3, show_default=True)
@click.option("--min-size", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--fv-bound", type=click.IntRange(min=0), default=2, show_default=True)
@click.option("--closures/--no-closures", default=True, show_default=True)
@click.option("--metavars/--no-metavars", default=False, show_default=True)
@click.option("--max-delta", type=click.IntRange(min=0), default=2, show_default=True)
@click.option("--count", "count_only", is_flag=True, help="Print only the number of terms")
@click.option(
    "--random",
    "random_cases",
    type=click.IntRange(min=0),
    default=0,
    help="Draw this many seeded random terms instead of enumerating",
)
@click.option("--seed", type=int, default=None, help="Random seed (default: REXLAB_SEED)")
@output_format
@handle_errors
def enumerate_command(
    world: str,
    max_size: int,
    min_size: int,
    fv_bound: int,
    closures: bool,
    metavars: bool,
    max_delta: int,
    count_only: bool,
    random_cases: int,
    seed: Optional[int],
    fmt: str,
) -> None:
    """Enumerate a bounded term universe, smallest terms first"""
    spec = EnumSpec(
        world=World(world),
        max_size=max_size,
        min_size=min_size,
        fv_bound=fv_bound,
        allow_closures=closures,
        allow_metavars=metavars,
        max_delta=max_delta,
    )
    if count_only:
        total = count_terms(spec)
        response, code = create_success_response("enumerated", {"count": total}, count=total)
        emit(response, fmt, [str(total)])
        click.get_current_context().exit(code)

    if random_cases:
        rng = random.Random(settings.DEFAULT_SEED if seed is None else seed)
        terms = [random_term(rng, spec) for _ in range(random_cases)]
    else:
        terms = list(enumerate_terms(spec))
    logger.info(f"Produced {len(terms)} terms")
    printed = [print_term(t) for t in terms]
    response, code = create_success_response(
        "enumerated", {"count": len(printed), "terms": printed}, count=len(printed)
    )
    emit(response, fmt, printed)
    click.get_current_context().exit(code)
