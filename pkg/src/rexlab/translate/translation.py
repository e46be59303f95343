"""
Translations between named and indexed terms.

w maps a named term to an indexed one relative to a list of variables,
u goes back, drawing binder names from a variable enumeration. The uniform
variants use a prefix of the enumeration as the list.
"""

import re
from collections import Counter
from dataclasses import dataclass
from typing import AbstractSet, Iterator, Optional, Sequence

from rexlab.errors import DuplicateVariableList, FreeIndexOutOfRange, FreeVariableNotInList
from rexlab.terms.indexed import Abs, App, Clos, Index, Meta, Term, fv_indexed
from rexlab.terms.named import (
    ExSub,
    NAbs,
    NApp,
    NamedTerm,
    NMeta,
    Var,
    VarList,
    check_identifier,
    fv_named,
)
from rexlab.terms.natset import NatSet


@dataclass(frozen=True)
class VarEnumeration:
    """The infinite stream prefix1, prefix2, ... of distinct variable names"""

    prefix: str = "x"

    def __post_init__(self) -> None:
        check_identifier(self.prefix)
        if self.prefix[-1].isdigit():
            raise ValueError(f"an enumeration prefix must not end with a digit: {self.prefix!r}")

    def name(self, j: int) -> str:
        if j < 1:
            raise ValueError(f"enumeration positions start at 1, got {j}")
        return f"{self.prefix}{j}"

    def __iter__(self) -> Iterator[str]:
        j = 1
        while True:
            yield self.name(j)
            j += 1

    def take(self, n: int) -> VarList:
        return tuple(self.name(j) for j in range(1, n + 1))

    def index_of(self, name: str) -> Optional[int]:
        match = re.fullmatch(re.escape(self.prefix) + r"([1-9][0-9]*)", name)
        return int(match.group(1)) if match else None

    def fresh(self, avoid: AbstractSet[str]) -> str:
        return next(name for name in self if name not in avoid)


DEFAULT_ENUMERATION = VarEnumeration()


def w_list(xs: Sequence[str], t: NamedTerm) -> Term:
    """Named to indexed: a variable becomes its first position in `xs`"""
    xs = tuple(xs)
    match t:
        case Var(name):
            return Index(_position(xs, name))
        case NApp(left, right):
            return App(w_list(xs, left), w_list(xs, right))
        case NAbs(binder, body):
            return Abs(w_list((binder,) + xs, body))
        case ExSub(body, binder, subst):
            return Clos(w_list((binder,) + xs, body), w_list(xs, subst))
        case NMeta(name, delta):
            return Meta(name, NatSet.of(_position(xs, x) for x in delta))
    raise TypeError(f"not a named term: {t!r}")


def _position(xs: VarList, name: str) -> int:
    try:
        return xs.index(name) + 1
    except ValueError:
        raise FreeVariableNotInList(name, xs) from None


def u_list(
    xs: Sequence[str], a: Term, enumeration: VarEnumeration = DEFAULT_ENUMERATION
) -> NamedTerm:
    """
    Indexed to named relative to a duplicate-free list. Abstraction and
    closure binders take the first enumeration name not in the current list.
    """
    xs = tuple(xs)
    duplicates = tuple(sorted(name for name, count in Counter(xs).items() if count > 1))
    if duplicates:
        raise DuplicateVariableList(duplicates)
    return _u(xs, a, enumeration)


def _u(xs: VarList, a: Term, enumeration: VarEnumeration) -> NamedTerm:
    match a:
        case Index(n):
            return Var(_variable(xs, n))
        case App(left, right):
            return NApp(_u(xs, left, enumeration), _u(xs, right, enumeration))
        case Abs(body):
            x = enumeration.fresh(set(xs))
            return NAbs(x, _u((x,) + xs, body, enumeration))
        case Clos(body, subst):
            x = enumeration.fresh(set(xs))
            return ExSub(_u((x,) + xs, body, enumeration), x, _u(xs, subst, enumeration))
        case Meta(name, delta):
            return NMeta(name, frozenset(_variable(xs, j) for j in delta))
    raise TypeError(f"not an indexed term: {a!r}")


def _variable(xs: VarList, n: int) -> str:
    if n > len(xs):
        raise FreeIndexOutOfRange(n, len(xs))
    return xs[n - 1]


def uniform_length(t: NamedTerm, enumeration: VarEnumeration = DEFAULT_ENUMERATION) -> int:
    """Least n with the free variables of `t` among the first n enumeration names"""
    n = 0
    for name in fv_named(t):
        j = enumeration.index_of(name)
        if j is None:
            raise FreeVariableNotInList(name, None)
        n = max(n, j)
    return n


def w_uniform(t: NamedTerm, enumeration: VarEnumeration = DEFAULT_ENUMERATION) -> Term:
    return w_list(enumeration.take(uniform_length(t, enumeration)), t)


def u_uniform(a: Term, enumeration: VarEnumeration = DEFAULT_ENUMERATION) -> NamedTerm:
    return _u(enumeration.take(fv_indexed(a).maximum), a, enumeration)
