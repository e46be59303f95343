"""
Property suite command
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import click

from rexlab.commands.common import fail, handle_errors, output_format
from rexlab.config.paths import REPORT_DIR
from rexlab.constants.calculi import STRATEGY_ALIASES, Strategy
from rexlab.engine.reduction import resolve_strategy
from rexlab.modules.validators import check_shard
from rexlab.oracles.schemas import ReportStatus
from rexlab.oracles.suites import SUITES, SuiteConfig, run_suite
from rexlab.utils.output import emit, print_report_table, write_report
from rexlab.utils.responses import (
    EXIT_BOUND,
    EXIT_OK,
    EXIT_SUITE_FAILED,
    create_success_response,
)

logger = logging.getLogger(__name__)

_EXIT_CODES = {
    ReportStatus.PASS: EXIT_OK,
    ReportStatus.BOUND_EXCEEDED: EXIT_BOUND,
    ReportStatus.FAIL: EXIT_SUITE_FAILED,
}


@click.command("check")
@click.argument("suite", type=click.Choice(list(SUITES) + ["all"]))
@click.option("--size", type=click.IntRange(min=0), default=None, help="Indexed universe size")
@click.option("--named-size", type=click.IntRange(min=0), default=None, help="Named universe size")
@click.option("--subst-size", type=click.IntRange(min=0), default=4, show_default=True)
@click.option("--fv-bound", type=click.IntRange(min=0), default=None)
@click.option("--metavars/--no-metavars", "with_metavars", default=None)
@click.option("--n", "n", type=click.IntRange(min=1), default=None, help="Fix the index n of thm1")
@click.option(
    "--strategy",
    "strategies",
    type=click.Choice([s.value for s in Strategy] + list(STRATEGY_ALIASES)),
    multiple=True,
    help="Strategies for the normalization suites (repeatable, default: all)",
)
@click.option("--max-steps", type=click.IntRange(min=0), default=None)
@click.option("--join-depth", type=click.IntRange(min=0), default=None)
@click.option("--class-cap", type=click.IntRange(min=1), default=None)
@click.option(
    "--random",
    "random_cases",
    type=click.IntRange(min=0),
    default=0,
    help="Check this many seeded random cases instead of the enumerated universe",
)
@click.option("--seed", type=int, default=None, help="Random seed (default: REXLAB_SEED)")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--shard", default=None, help="Check only shard INDEX/COUNT of the universe")
@click.option(
    "--report-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Directory for the JSON reports (default: REXLAB_REPORT_DIR)",
)
@output_format
@handle_errors
def check_command(
    suite: str,
    size: Optional[int],
    named_size: Optional[int],
    subst_size: int,
    fv_bound: Optional[int],
    with_metavars: Optional[bool],
    n: Optional[int],
    strategies: Tuple[str, ...],
    max_steps: Optional[int],
    join_depth: Optional[int],
    class_cap: Optional[int],
    random_cases: int,
    seed: Optional[int],
    workers: int,
    shard: Optional[str],
    report_dir: Optional[Path],
    fmt: str,
) -> None:
    """Run a property suite, or all of them, and write JSON reports"""
    validation_result = check_shard(shard)
    if not validation_result["result"]:
        fail(fmt, "invalid_shard", value=shard)

    options: Dict[str, Any] = {
        "size": size,
        "named_size": named_size,
        "subst_size": subst_size,
        "fv_bound": fv_bound,
        "with_metavars": with_metavars,
        "n": n,
        "max_steps": max_steps,
        "join_depth": join_depth,
        "class_cap": class_cap,
        "seed": seed,
    }
    # Unset options keep the model defaults
    options = {key: value for key, value in options.items() if value is not None}
    if strategies:
        options["strategies"] = tuple(dict.fromkeys(resolve_strategy(s) for s in strategies))
    config = SuiteConfig(
        random_cases=random_cases,
        workers=workers,
        shard=validation_result["shard"],
        **options,
    )

    suite_ids = list(SUITES) if suite == "all" else [suite]
    reports = []
    entries = []
    for suite_id in suite_ids:
        report = run_suite(suite_id, config)
        path = write_report(report, report_dir or REPORT_DIR)
        logger.info(f"Report for {suite_id} written to {path}")
        reports.append(report)
        entries.append(
            {
                "suite": suite_id,
                "status": report.status.value,
                "universe": report.universe,
                "failures": report.failures,
                "report": str(path),
            }
        )

    code = max(_EXIT_CODES[report.status] for report in reports)
    message_key = {
        EXIT_OK: "suite_passed",
        EXIT_BOUND: "suite_bounded",
        EXIT_SUITE_FAILED: "suite_failed",
    }[code]
    response, code = create_success_response(
        message_key,
        {"reports": entries},
        exit_code=code,
        suite=suite,
        universe=sum(report.universe for report in reports),
        failures=sum(report.failures for report in reports),
    )
    if fmt == "json":
        emit(response, fmt)
    else:
        print_report_table(reports)
        emit(response, fmt, [entry["report"] for entry in entries])
    click.get_current_context().exit(code)
