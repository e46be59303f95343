"""
Rendering of command results: sorted-key JSON for machines, plain lines and
rich tables for people
"""

from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import click
import orjson
from rich.console import Console
from rich.table import Table

from rexlab.config.paths import REPORT_DIR
from rexlab.oracles.schemas import VALIDATORS, PropertyReport, ReportStatus

_STATUS_STYLES = {
    ReportStatus.PASS: "green",
    ReportStatus.BOUND_EXCEEDED: "yellow",
    ReportStatus.FAIL: "bold red",
}


def dumps(data: Any) -> str:
    return orjson.dumps(data, option=orjson.OPT_SORT_KEYS).decode()


def emit(response: Dict[str, Any], fmt: str, lines: Optional[List[str]] = None) -> None:
    """Print a response envelope as JSON, or its text lines"""
    if fmt == "json":
        click.echo(dumps(response))
        return
    if not response.get("success", True) and "error" in response:
        click.echo(response["error"], err=True)
    for line in lines or []:
        click.echo(line)


def write_report(report: PropertyReport, directory: Path = REPORT_DIR) -> Path:
    """Write a report as <suite>-<timestamp>.json and return its path"""
    data = report.to_dict()
    ok, errors = VALIDATORS["reports"](data)
    if not ok:
        raise ValueError(f"Invalid report for {report.property_id}: {'; '.join(errors)}")
    directory.mkdir(parents=True, exist_ok=True)
    stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S%f")
    path = directory / f"{report.property_id}-{stamp}.json"
    path.write_bytes(
        orjson.dumps(data, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2)
    )
    return path


def report_table(reports: Iterable[PropertyReport]) -> Table:
    table = Table(title="Property suites")
    table.add_column("Suite", style="cyan")
    table.add_column("Status")
    table.add_column("Cases", justify="right")
    table.add_column("Failures", justify="right")
    table.add_column("Findings", justify="right")
    table.add_column("Elapsed", justify="right")
    for report in reports:
        style = _STATUS_STYLES[report.status]
        table.add_row(
            report.property_id,
            f"[{style}]{report.status.value}[/{style}]",
            str(report.universe),
            str(report.failures),
            str(len(report.findings)),
            f"{report.elapsed:.2f}s",
        )
    return table


def print_report_table(reports: Iterable[PropertyReport]) -> None:
    Console(soft_wrap=True).print(report_table(reports))
