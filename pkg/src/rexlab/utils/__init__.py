from .output import dumps, emit, print_report_table, report_table, write_report
from .responses import (
    EXIT_BOUND,
    EXIT_OK,
    EXIT_SUITE_FAILED,
    EXIT_USAGE,
    create_error_response,
    create_success_response,
    get_error_message,
)

__all__ = [
    "EXIT_BOUND",
    "EXIT_OK",
    "EXIT_SUITE_FAILED",
    "EXIT_USAGE",
    "create_error_response",
    "create_success_response",
    "dumps",
    "emit",
    "get_error_message",
    "print_report_table",
    "report_table",
    "write_report",
]
