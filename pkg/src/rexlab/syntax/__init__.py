from .parser import World, parse_indexed, parse_named, parse_term
from .printer import print_indexed, print_named, print_term

__all__ = [
    "World",
    "parse_indexed",
    "parse_named",
    "parse_term",
    "print_indexed",
    "print_named",
    "print_term",
]
