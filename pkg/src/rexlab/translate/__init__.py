from .translation import (
    DEFAULT_ENUMERATION,
    VarEnumeration,
    u_list,
    u_uniform,
    uniform_length,
    w_list,
    w_uniform,
)

__all__ = [
    "DEFAULT_ENUMERATION",
    "VarEnumeration",
    "u_list",
    "u_uniform",
    "uniform_length",
    "w_list",
    "w_uniform",
]
