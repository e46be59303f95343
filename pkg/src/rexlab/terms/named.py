"""
Named terms: variables, application, abstraction, explicit substitutions
t[x:=u] and metavariables decorated with their available variables.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple, Union

from rexlab.terms.positions import Child

VarSet = FrozenSet[str]
VarList = Tuple[str, ...]

IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


def check_identifier(name: str) -> str:
    if not isinstance(name, str) or not IDENTIFIER_RE.match(name):
        raise ValueError(f"Invalid variable name: {name!r}")
    return name


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __post_init__(self) -> None:
        check_identifier(self.name)

    def children(self) -> Tuple[()]:
        return ()

    def with_child(self, child: Child, term: "NamedTerm") -> "NamedTerm":
        raise ValueError("a variable has no children")


@dataclass(frozen=True, slots=True)
class NApp:
    left: "NamedTerm"
    right: "NamedTerm"

    def children(self) -> Tuple[Tuple[Child, "NamedTerm"], ...]:
        return ((Child.LEFT, self.left), (Child.RIGHT, self.right))

    def with_child(self, child: Child, term: "NamedTerm") -> "NamedTerm":
        if child is Child.LEFT:
            return NApp(term, self.right)
        if child is Child.RIGHT:
            return NApp(self.left, term)
        raise ValueError(f"an application has no '{child.value}' child")


@dataclass(frozen=True, slots=True)
class NAbs:
    binder: str
    body: "NamedTerm"

    def __post_init__(self) -> None:
        check_identifier(self.binder)

    def children(self) -> Tuple[Tuple[Child, "NamedTerm"], ...]:
        return ((Child.BODY, self.body),)

    def with_child(self, child: Child, term: "NamedTerm") -> "NamedTerm":
        if child is Child.BODY:
            return NAbs(self.binder, term)
        raise ValueError(f"an abstraction has no '{child.value}' child")


@dataclass(frozen=True, slots=True)
class ExSub:
    """The explicit substitution t[x:=u]"""

    body: "NamedTerm"
    binder: str
    subst: "NamedTerm"

    def __post_init__(self) -> None:
        check_identifier(self.binder)

    def children(self) -> Tuple[Tuple[Child, "NamedTerm"], ...]:
        return ((Child.BODY, self.body), (Child.SUBST, self.subst))

    def with_child(self, child: Child, term: "NamedTerm") -> "NamedTerm":
        if child is Child.BODY:
            return ExSub(term, self.binder, self.subst)
        if child is Child.SUBST:
            return ExSub(self.body, self.binder, term)
        raise ValueError(f"an explicit substitution has no '{child.value}' child")


@dataclass(frozen=True, slots=True)
class NMeta:
    name: str
    delta: VarSet = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for variable in self.delta:
            check_identifier(variable)

    def children(self) -> Tuple[()]:
        return ()

    def with_child(self, child: Child, term: "NamedTerm") -> "NamedTerm":
        raise ValueError("a metavariable has no children")


NamedTerm = Union[Var, NApp, NAbs, ExSub, NMeta]


def fv_named(term: NamedTerm) -> VarSet:
    match term:
        case Var(name):
            return frozenset({name})
        case NApp(left, right):
            return fv_named(left) | fv_named(right)
        case NAbs(binder, body):
            return fv_named(body) - {binder}
        case ExSub(body, binder, subst):
            return (fv_named(body) - {binder}) | fv_named(subst)
        case NMeta(_, delta):
            return frozenset(delta)
    raise TypeError(f"not a named term: {term!r}")


def all_names(term: NamedTerm) -> VarSet:
    """Every name occurring in the term, free, bound or binding"""
    match term:
        case Var(name):
            return frozenset({name})
        case NApp(left, right):
            return all_names(left) | all_names(right)
        case NAbs(binder, body):
            return all_names(body) | {binder}
        case ExSub(body, binder, subst):
            return all_names(body) | all_names(subst) | {binder}
        case NMeta(_, delta):
            return frozenset(delta)
    raise TypeError(f"not a named term: {term!r}")


def named_size(term: NamedTerm) -> int:
    match term:
        case Var() | NMeta():
            return 1
        case NApp(left, right) | ExSub(left, _, right):
            return 1 + named_size(left) + named_size(right)
        case NAbs(_, body):
            return 1 + named_size(body)
    raise TypeError(f"not a named term: {term!r}")


# ------------------------------------------------------------------ #
#                          ALPHA-EQUIVALENCE                          #
# ------------------------------------------------------------------ #


def _resolve(name: str, env: Dict[str, int]) -> Tuple[str, object]:
    depth = env.get(name)
    return ("free", name) if depth is None else ("bound", depth)


def alpha_eq(
    t: NamedTerm,
    u: NamedTerm,
    left_env: Optional[Dict[str, int]] = None,
    right_env: Optional[Dict[str, int]] = None,
    depth: int = 0,
) -> bool:
    """
    Alpha-equivalence by a simultaneous traversal: each binder is mapped to
    its binding depth on both sides and variables are compared through
    those maps. Abstractions and explicit substitutions both bind.
    """
    left_env = left_env or {}
    right_env = right_env or {}
    match t, u:
        case Var(x), Var(y):
            return _resolve(x, left_env) == _resolve(y, right_env)
        case NApp(t1, t2), NApp(u1, u2):
            return alpha_eq(t1, u1, left_env, right_env, depth) and alpha_eq(
                t2, u2, left_env, right_env, depth
            )
        case NAbs(x, body_t), NAbs(y, body_u):
            return alpha_eq(
                body_t, body_u, left_env | {x: depth}, right_env | {y: depth}, depth + 1
            )
        case ExSub(body_t, x, sub_t), ExSub(body_u, y, sub_u):
            return alpha_eq(sub_t, sub_u, left_env, right_env, depth) and alpha_eq(
                body_t, body_u, left_env | {x: depth}, right_env | {y: depth}, depth + 1
            )
        case NMeta(x, delta_t), NMeta(y, delta_u):
            return x == y and {_resolve(v, left_env) for v in delta_t} == {
                _resolve(v, right_env) for v in delta_u
            }
        case _:
            return False


def alpha_key(term: NamedTerm, env: Optional[Dict[str, int]] = None, depth: int = 0) -> tuple:
    """
    Hashable key equal for exactly the alpha-equivalent terms. Bound
    occurrences are replaced by binder depths, free names are kept.
    """
    env = env or {}
    match term:
        case Var(name):
            return ("v", _resolve(name, env))
        case NApp(left, right):
            return ("@", alpha_key(left, env, depth), alpha_key(right, env, depth))
        case NAbs(binder, body):
            return ("\\", alpha_key(body, env | {binder: depth}, depth + 1))
        case ExSub(body, binder, subst):
            return (
                "[]",
                alpha_key(body, env | {binder: depth}, depth + 1),
                alpha_key(subst, env, depth),
            )
        case NMeta(name, delta):
            resolved = sorted((_resolve(v, env) for v in delta), key=repr)
            return ("?", name, tuple(resolved))
    raise TypeError(f"not a named term: {term!r}")
