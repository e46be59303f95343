import logging
import sys
from typing import Any, Optional

import click

from rexlab import __version__
from rexlab.commands.check import check_command
from rexlab.commands.meta import meta_command
from rexlab.commands.reduction import normalize_command, reduce_command, replay_command
from rexlab.commands.terms import enumerate_command, fv_command, parse_command
from rexlab.commands.translation import translate_command
from rexlab.config import settings
from rexlab.utils.responses import EXIT_USAGE

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class RexlabGroup(click.Group):
    """Command group whose usage errors exit with status 1"""

    def main(  # type: ignore[override]
        self,
        args: Optional[Any] = None,
        prog_name: Optional[str] = None,
        complete_var: Optional[str] = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.ClickException as e:
            if not standalone_mode:
                raise
            e.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            if not standalone_mode:
                raise
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        if not standalone_mode:
            return rv
        sys.exit(rv if isinstance(rv, int) else 0)


def _set_log_level(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> None:
    if value is not None:
        logging.getLogger().setLevel(value)


@click.group(cls=RexlabGroup)
@click.version_option(__version__, prog_name="rexlab")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    callback=_set_log_level,
    expose_value=False,
    is_eager=True,
    help=f"Logging level on stderr (default: {settings.LOG_LEVEL})",
)
def cli() -> None:
    """Explicit substitution calculi with de Bruijn indices and names"""


# Register the commands
cli.add_command(parse_command)
cli.add_command(fv_command)
cli.add_command(enumerate_command)
cli.add_command(reduce_command)
cli.add_command(normalize_command)
cli.add_command(replay_command)
cli.add_command(translate_command)
cli.add_command(meta_command)
cli.add_command(check_command)
