"""
Response envelopes for command results and error messages
"""

from typing import Any, Dict, Optional

# Exit statuses of the command line
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BOUND = 2
EXIT_SUITE_FAILED = 3

ERROR_MESSAGES = {
    # Input errors
    "parse_error": "Parse error at line {line}, column {column}: {reason}",
    "missing_input": "No term given: pass it as an argument, with --file, or on stdin",
    "invalid_shard": "Shard must be INDEX/COUNT with 0 <= INDEX < COUNT, got {value}",
    "invalid_var_list": "Invalid variable list: {reason}",
    "invalid_arguments": "Invalid arguments for {operation}: {reason}",
    "invalid_config": "Invalid configuration: {reason}",
    # Evaluation errors
    "precondition": "{reason}",
    "decrement_undefined": "Decrement undefined: index {index} is free at {position}",
    "translation_error": "Translation failed: {reason}",
    "bound_exceeded": "No normal form within {max_steps} steps",
    "class_cap_exceeded": "Equivalence class exceeds {cap} members",
    "replay_mismatch": "{reason}",
    "invalid_trace": "Not a reduction trace: {reason}",
    # Generic errors
    "internal_error": "Internal error: {reason}",
}

SUCCESS_MESSAGES = {
    "parsed": "Parsed",
    "normal_form": "Normal form reached in {steps} steps",
    "translated": "Translated to {world}",
    "evaluated": "{operation} evaluated",
    "free_variables": "Free variables",
    "enumerated": "{count} terms",
    "suite_passed": "Suite {suite} passed on {universe} cases",
    "suite_bounded": "Suite {suite} hit a bound on some cases",
    "suite_failed": "Suite {suite} failed with {failures} counterexamples",
    "replayed": "Trace replayed: {steps} steps reproduced",
}


def get_error_message(error_key: str, **kwargs: Any) -> str:
    """
    Get the message for an error key, with kwargs interpolated

    Unknown keys and failed interpolations fall back to the raw template.
    """
    message_template = ERROR_MESSAGES.get(error_key, f"Unknown error: {error_key}")
    if kwargs:
        try:
            return message_template.format(**kwargs)
        except KeyError:
            return message_template
    return message_template


def get_success_message(message_key: str, **kwargs: Any) -> str:
    message_template = SUCCESS_MESSAGES.get(message_key, message_key)
    if kwargs:
        try:
            return message_template.format(**kwargs)
        except KeyError:
            return message_template
    return message_template


def create_error_response(
    error_key: str, exit_code: int = EXIT_USAGE, **kwargs: Any
) -> tuple[Dict[str, Any], int]:
    """
    Create a standardized error response

    Args:
        error_key: Key identifying the specific error message
        exit_code: Process exit status for the response
        **kwargs: Variables to interpolate into the message

    Returns:
        Tuple of (response_dict, exit_code)
    """
    response = {
        "success": False,
        "error": get_error_message(error_key, **kwargs),
        "error_key": error_key,
    }
    return response, exit_code


def create_success_response(
    message_key: str,
    data: Optional[Dict[str, Any]] = None,
    exit_code: int = EXIT_OK,
    **kwargs: Any,
) -> tuple[Dict[str, Any], int]:
    """
    Create a standardized success response

    Args:
        message_key: Key identifying the specific success message
        data: Additional data to include in the response
        exit_code: Process exit status for the response
        **kwargs: Variables to interpolate into the message

    Returns:
        Tuple of (response_dict, exit_code)
    """
    response: Dict[str, Any] = {
        "success": exit_code == EXIT_OK,
        "message": get_success_message(message_key, **kwargs),
    }
    if data:
        response.update(data)
    return response, exit_code
