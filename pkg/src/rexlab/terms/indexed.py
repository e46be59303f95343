"""
Indexed terms: de Bruijn indices, application, abstraction, closures a[b]
and decorated metavariables.

Pure terms (no closure) form the de Bruijn lambda calculus, terms without
metavariables form the explicit substitution language.
"""

from dataclasses import dataclass, field
from typing import Tuple, Union

from rexlab.terms.natset import NatSet
from rexlab.terms.positions import Child


@dataclass(frozen=True, slots=True)
class Index:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"de Bruijn indices start at 1, got {self.n}")

    def children(self) -> Tuple[()]:
        return ()

    def with_child(self, child: Child, term: "Term") -> "Term":
        raise ValueError("an index has no children")


@dataclass(frozen=True, slots=True)
class App:
    left: "Term"
    right: "Term"

    def children(self) -> Tuple[Tuple[Child, "Term"], ...]:
        return ((Child.LEFT, self.left), (Child.RIGHT, self.right))

    def with_child(self, child: Child, term: "Term") -> "Term":
        if child is Child.LEFT:
            return App(term, self.right)
        if child is Child.RIGHT:
            return App(self.left, term)
        raise ValueError(f"an application has no '{child.value}' child")


@dataclass(frozen=True, slots=True)
class Abs:
    body: "Term"

    def children(self) -> Tuple[Tuple[Child, "Term"], ...]:
        return ((Child.BODY, self.body),)

    def with_child(self, child: Child, term: "Term") -> "Term":
        if child is Child.BODY:
            return Abs(term)
        raise ValueError(f"an abstraction has no '{child.value}' child")


@dataclass(frozen=True, slots=True)
class Clos:
    """The closure a[b]: b substituted for index 1 of a"""

    body: "Term"
    subst: "Term"

    def children(self) -> Tuple[Tuple[Child, "Term"], ...]:
        return ((Child.BODY, self.body), (Child.SUBST, self.subst))

    def with_child(self, child: Child, term: "Term") -> "Term":
        if child is Child.BODY:
            return Clos(term, self.subst)
        if child is Child.SUBST:
            return Clos(self.body, term)
        raise ValueError(f"a closure has no '{child.value}' child")


@dataclass(frozen=True, slots=True)
class Meta:
    """Metavariable X decorated with its available free indices"""

    name: str
    delta: NatSet = field(default_factory=NatSet)

    def children(self) -> Tuple[()]:
        return ()

    def with_child(self, child: Child, term: "Term") -> "Term":
        raise ValueError("a metavariable has no children")


Term = Union[Index, App, Abs, Clos, Meta]


def fv_indexed(term: Term) -> NatSet:
    match term:
        case Index(n):
            return NatSet((n,))
        case App(left, right):
            return fv_indexed(left) | fv_indexed(right)
        case Abs(body):
            return fv_indexed(body).shift_down(1)
        case Clos(body, subst):
            return fv_indexed(body).shift_down(1) | fv_indexed(subst)
        case Meta(_, delta):
            return delta
    raise TypeError(f"not an indexed term: {term!r}")


def is_free(n: int, term: Term) -> bool:
    return n in fv_indexed(term)


def is_pure(term: Term) -> bool:
    """No closure anywhere (metavariables allowed)"""
    match term:
        case Index() | Meta():
            return True
        case App(left, right):
            return is_pure(left) and is_pure(right)
        case Abs(body):
            return is_pure(body)
        case Clos():
            return False
    raise TypeError(f"not an indexed term: {term!r}")


def is_closed_signature(term: Term) -> bool:
    """No metavariable anywhere"""
    match term:
        case Index():
            return True
        case Meta():
            return False
        case App(left, right) | Clos(left, right):
            return is_closed_signature(left) and is_closed_signature(right)
        case Abs(body):
            return is_closed_signature(body)
    raise TypeError(f"not an indexed term: {term!r}")


def is_lambda_db(term: Term) -> bool:
    return is_pure(term) and is_closed_signature(term)


def size(term: Term) -> int:
    match term:
        case Index() | Meta():
            return 1
        case App(left, right) | Clos(left, right):
            return 1 + size(left) + size(right)
        case Abs(body):
            return 1 + size(body)
    raise TypeError(f"not an indexed term: {term!r}")


def term_sort_key(term: Term) -> tuple:
    """
    Key of the fixed total order on indexed terms: constructor tag first,
    then children left to right, indices numerically, names lexicographically
    """
    match term:
        case Index(n):
            return (0, n)
        case Meta(name, delta):
            return (1, name, len(delta), delta.elements)
        case Abs(body):
            return (2, term_sort_key(body))
        case App(left, right):
            return (3, term_sort_key(left), term_sort_key(right))
        case Clos(body, subst):
            return (4, term_sort_key(body), term_sort_key(subst))
    raise TypeError(f"not an indexed term: {term!r}")


INDEXED_NODES = (Index, App, Abs, Clos, Meta)


def is_indexed_term(term: object) -> bool:
    return isinstance(term, INDEXED_NODES)
