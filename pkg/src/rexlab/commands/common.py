"""
Options, input handling and error mapping shared by the commands
"""

import functools
import logging
from typing import Any, Callable, Dict, Optional, TextIO

import click
from pydantic import ValidationError

from rexlab.errors import (
    BoundExceeded,
    ClassCapExceeded,
    DecrementUndefined,
    ParseError,
    PreconditionError,
    ReplayMismatch,
    TranslationError,
)
from rexlab.syntax.parser import World
from rexlab.terms.positions import position_labels
from rexlab.utils.output import emit
from rexlab.utils.responses import EXIT_BOUND, EXIT_USAGE, create_error_response

logger = logging.getLogger(__name__)

output_format = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Output format",
)
input_file = click.option(
    "--file",
    "source_file",
    type=click.File("r", encoding="utf-8"),
    help="Read the term from a file instead of the argument",
)
world_option = click.option(
    "--world",
    type=click.Choice([world.value for world in World]),
    default=World.INDEXED.value,
    show_default=True,
    help="Syntax of the input term",
)


def read_source(term: Optional[str], source_file: Optional[TextIO]) -> Optional[str]:
    """The term text from the argument, the file, or a piped stdin"""
    if term is not None:
        return term
    if source_file is not None:
        return source_file.read()
    stream = click.get_text_stream("stdin")
    if not stream.isatty():
        text = stream.read()
        return text if text.strip() else None
    return None


def fail(fmt: str, error_key: str, exit_code: int = EXIT_USAGE, **kwargs: Any) -> None:
    response, code = create_error_response(error_key, exit_code, **kwargs)
    emit(response, fmt)
    click.get_current_context().exit(code)


def _error_response(error: Exception) -> tuple[Dict[str, Any], int]:
    match error:
        case ParseError():
            return create_error_response(
                "parse_error", line=error.line, column=error.column, reason=error.reason
            )
        case DecrementUndefined():
            return create_error_response(
                "decrement_undefined",
                index=error.index,
                position=position_labels(error.position),
            )
        case TranslationError():
            return create_error_response("translation_error", reason=str(error))
        case PreconditionError():
            return create_error_response("precondition", reason=str(error))
        case ClassCapExceeded():
            return create_error_response("class_cap_exceeded", EXIT_BOUND, cap=error.cap)
        case BoundExceeded():
            return create_error_response("bound_exceeded", EXIT_BOUND, max_steps=error.max_steps)
        case ReplayMismatch():
            return create_error_response("replay_mismatch", reason=str(error))
        case ValidationError():
            reasons = "; ".join(e["msg"] for e in error.errors())
            return create_error_response("invalid_config", reason=reasons)
    return create_error_response("internal_error", reason=str(error))


def handle_errors(function: Callable[..., None]) -> Callable[..., None]:
    """Report library errors as error envelopes with their exit codes"""

    @functools.wraps(function)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            function(*args, **kwargs)
        except (
            ParseError,
            DecrementUndefined,
            TranslationError,
            PreconditionError,
            ClassCapExceeded,
            BoundExceeded,
            ReplayMismatch,
            ValidationError,
        ) as e:
            logger.debug(f"{function.__name__} failed: {e!r}")
            response, code = _error_response(e)
            emit(response, kwargs.get("fmt", "text"))
            click.get_current_context().exit(code)

    return wrapper

