"""
Positions: paths from the root of a term to one of its subterms.

A position is a tuple of child labels. Application nodes have `left` and
`right`, abstractions `body`, closures and explicit substitutions `body` and
`subst`. The same labels serve both the indexed and the named world.
"""

from enum import Enum
from typing import Any, Iterator, Sequence, Tuple, TypeVar

from rexlab.errors import InvalidPosition


class Child(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    BODY = "body"
    SUBST = "subst"


# Left-to-right rank of each label among its siblings
CHILD_RANK = {Child.LEFT: 0, Child.BODY: 0, Child.RIGHT: 1, Child.SUBST: 1}

Position = Tuple[Child, ...]
ROOT: Position = ()

T = TypeVar("T")


def as_position(labels: Sequence[Any]) -> Position:
    try:
        return tuple(Child(label) for label in labels)
    except ValueError as e:
        raise InvalidPosition(tuple(str(label) for label in labels), str(e)) from e


def position_labels(position: Position) -> list[str]:
    return [child.value for child in position]


def subterm_at(term: T, position: Sequence[Child]) -> T:
    node: Any = term
    for depth, child in enumerate(position):
        for label, sub in node.children():
            if label == child:
                node = sub
                break
        else:
            raise InvalidPosition(tuple(position), f"no '{child}' child at depth {depth}")
    return node


def replace_at(term: T, position: Sequence[Child], replacement: T) -> T:
    if not position:
        return replacement
    node: Any = term
    head, rest = position[0], position[1:]
    for label, sub in node.children():
        if label == head:
            return node.with_child(head, replace_at(sub, rest, replacement))
    raise InvalidPosition(tuple(position), f"no '{head}' child")


def iter_positions(term: Any, prefix: Position = ROOT) -> Iterator[Position]:
    """Preorder: a node before its children, children left to right"""
    yield prefix
    for label, sub in term.children():
        yield from iter_positions(sub, prefix + (label,))


def iter_subterms(term: T, prefix: Position = ROOT) -> Iterator[Tuple[Position, T]]:
    yield prefix, term
    node: Any = term
    for label, sub in node.children():
        yield from iter_subterms(sub, prefix + (label,))


def rank_key(position: Position) -> Tuple[int, ...]:
    return tuple(CHILD_RANK[child] for child in position)
