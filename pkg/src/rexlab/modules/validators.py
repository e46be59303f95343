from typing import Dict, List, Optional, Tuple

from typing_extensions import NotRequired, TypedDict

from rexlab.terms.named import IDENTIFIER_RE


class ValidationResult(TypedDict):
    result: bool
    error: NotRequired[str]
    reason: NotRequired[str]
    value: NotRequired[str]
    operation: NotRequired[str]
    shard: NotRequired[Optional[Tuple[int, int]]]
    variables: NotRequired[Optional[List[str]]]


# Argument kinds of each meta-operation, in command-line order
META_SIGNATURES: Dict[str, Tuple[str, ...]] = {
    "update": ("int", "int", "term"),
    "increment": ("int", "term"),
    "swap": ("int", "term"),
    "decrement": ("int", "term"),
    "stacked-swap": ("int", "int", "term"),
    "stacked-increment": ("int", "term"),
    "db-subst": ("term", "int", "term"),
    "r-subst": ("term", "term"),
}


def check_shard(value: Optional[str]) -> ValidationResult:
    if value is None:
        return {"result": True, "shard": None}
    index, _, count = value.partition("/")
    try:
        shard = (int(index), int(count))
    except ValueError:
        return {"result": False, "error": "invalid_shard", "value": value}
    if not 0 <= shard[0] < shard[1]:
        return {"result": False, "error": "invalid_shard", "value": value}
    return {"result": True, "shard": shard}


def check_var_list(value: Optional[str]) -> ValidationResult:
    """A comma-separated list of distinct identifiers; empty means the empty list"""
    if value is None:
        return {"result": True, "variables": None}
    names = [name.strip() for name in value.split(",") if name.strip()]
    invalid = [name for name in names if not IDENTIFIER_RE.match(name)]
    if invalid:
        return {
            "result": False,
            "error": "invalid_var_list",
            "reason": f"not identifiers: {', '.join(invalid)}",
        }
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates:
        return {
            "result": False,
            "error": "invalid_var_list",
            "reason": f"repeated: {', '.join(duplicates)}",
        }
    return {"result": True, "variables": names}


def check_meta_args(operation: str, args: List[str]) -> ValidationResult:
    signature = META_SIGNATURES[operation]
    if len(args) != len(signature):
        return {
            "result": False,
            "error": "invalid_arguments",
            "operation": operation,
            "reason": f"expected {' '.join(signature).upper()}, got {len(args)} arguments",
        }
    for kind, arg in zip(signature, args):
        if kind == "int" and not arg.strip().isdigit():
            return {
                "result": False,
                "error": "invalid_arguments",
                "operation": operation,
                "reason": f"'{arg}' is not a natural number",
            }
    return {"result": True}
