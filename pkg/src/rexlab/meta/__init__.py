from .operators import (
    decrement,
    increment,
    stacked_increment,
    stacked_swap,
    stacked_swap_unrolled,
    swap,
    update,
)
from .substitution import db_subst, fresh_name, named_subst, r_subst, rename_binders

__all__ = [
    "db_subst",
    "decrement",
    "fresh_name",
    "increment",
    "named_subst",
    "r_subst",
    "rename_binders",
    "stacked_increment",
    "stacked_swap",
    "stacked_swap_unrolled",
    "swap",
    "update",
]
