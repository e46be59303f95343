"""
Exhaustive enumeration, independent counting and seeded random generation
of indexed and named terms.
"""

import random
from functools import cache
from itertools import combinations
from math import comb
from typing import Iterator, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from rexlab.syntax.parser import World
from rexlab.terms.indexed import Abs, App, Clos, Index, Meta, Term
from rexlab.terms.named import ExSub, NAbs, NApp, NamedTerm, NMeta, Var
from rexlab.terms.natset import NatSet
from rexlab.translate.translation import VarEnumeration

AnyTerm = Union[Term, NamedTerm]


class EnumSpec(BaseModel):
    """
    A bounded term universe. Sizes count nodes. The free-variable bound k
    admits indices 1..k (indexed) or the first k enumeration names (named);
    named binders range over the first k + 1 names.
    """

    model_config = ConfigDict(frozen=True)

    world: World = World.INDEXED
    max_size: int = Field(default=5, ge=0)
    min_size: int = Field(default=1, ge=1)
    fv_bound: int = Field(default=3, ge=0)
    allow_closures: bool = True
    allow_metavars: bool = False
    max_delta: int = Field(default=2, ge=0)
    meta_names: Tuple[str, ...] = ("X",)
    enumeration_prefix: str = "x"

    @model_validator(mode="after")
    def _check_names(self) -> "EnumSpec":
        if self.allow_metavars and not self.meta_names:
            raise ValueError("metavariables are allowed but no metavariable name is given")
        VarEnumeration(self.enumeration_prefix)
        return self

    @property
    def enumeration(self) -> VarEnumeration:
        return VarEnumeration(self.enumeration_prefix)

    def free_names(self) -> Tuple[str, ...]:
        return self.enumeration.take(self.fv_bound)

    def binder_names(self) -> Tuple[str, ...]:
        return self.enumeration.take(self.fv_bound + 1)


# ------------------------------------------------------------------ #
#                            ENUMERATION                              #
# ------------------------------------------------------------------ #


def enumerate_terms(spec: EnumSpec) -> Iterator[AnyTerm]:
    """All terms of the universe, by increasing size, each exactly once"""
    for s in range(spec.min_size, spec.max_size + 1):
        if spec.world is World.NAMED:
            yield from _named_of_size(spec, s, frozenset(spec.free_names()))
        else:
            yield from _indexed_of_size(spec, s, spec.fv_bound)


def terms_list(spec: EnumSpec) -> List[AnyTerm]:
    return list(_cached_terms(spec))


@cache
def _cached_terms(spec: EnumSpec) -> Tuple[AnyTerm, ...]:
    return tuple(enumerate_terms(spec))


def _subsets(values: Tuple, max_size: int) -> Iterator[Tuple]:
    for k in range(min(max_size, len(values)) + 1):
        yield from combinations(values, k)


@cache
def _indexed_of_size(spec: EnumSpec, s: int, available: int) -> Tuple[Term, ...]:
    if s == 1:
        atoms: List[Term] = [Index(n) for n in range(1, available + 1)]
        if spec.allow_metavars:
            indices = tuple(range(1, available + 1))
            atoms.extend(
                Meta(name, NatSet(delta))
                for name in spec.meta_names
                for delta in _subsets(indices, spec.max_delta)
            )
        return tuple(atoms)
    terms: List[Term] = [Abs(body) for body in _indexed_of_size(spec, s - 1, available + 1)]
    for left_size in range(1, s - 1):
        for left in _indexed_of_size(spec, left_size, available):
            for right in _indexed_of_size(spec, s - 1 - left_size, available):
                terms.append(App(left, right))
    if spec.allow_closures:
        for body_size in range(1, s - 1):
            for body in _indexed_of_size(spec, body_size, available + 1):
                for subst in _indexed_of_size(spec, s - 1 - body_size, available):
                    terms.append(Clos(body, subst))
    return tuple(terms)


@cache
def _named_of_size(spec: EnumSpec, s: int, scope: frozenset) -> Tuple[NamedTerm, ...]:
    names = tuple(sorted(scope))
    if s == 1:
        atoms: List[NamedTerm] = [Var(name) for name in names]
        if spec.allow_metavars:
            atoms.extend(
                NMeta(name, frozenset(delta))
                for name in spec.meta_names
                for delta in _subsets(names, spec.max_delta)
            )
        return tuple(atoms)
    terms: List[NamedTerm] = [
        NAbs(binder, body)
        for binder in spec.binder_names()
        for body in _named_of_size(spec, s - 1, scope | {binder})
    ]
    for left_size in range(1, s - 1):
        for left in _named_of_size(spec, left_size, scope):
            for right in _named_of_size(spec, s - 1 - left_size, scope):
                terms.append(NApp(left, right))
    if spec.allow_closures:
        for body_size in range(1, s - 1):
            for binder in spec.binder_names():
                for body in _named_of_size(spec, body_size, scope | {binder}):
                    for subst in _named_of_size(spec, s - 1 - body_size, scope):
                        terms.append(ExSub(body, binder, subst))
    return tuple(terms)


# ------------------------------------------------------------------ #
#                              COUNTING                               #
# ------------------------------------------------------------------ #


def count_terms(spec: EnumSpec) -> int:
    """Size of the universe by recurrence, without building any term"""
    if spec.world is World.NAMED:
        return sum(_count_named(spec, s, spec.fv_bound) for s in range(spec.min_size, spec.max_size + 1))
    return sum(_count_indexed(spec, s, spec.fv_bound) for s in range(spec.min_size, spec.max_size + 1))


def _count_metas(spec: EnumSpec, available: int) -> int:
    if not spec.allow_metavars:
        return 0
    decorations = sum(comb(available, k) for k in range(min(spec.max_delta, available) + 1))
    return len(spec.meta_names) * decorations


@cache
def _count_indexed(spec: EnumSpec, s: int, available: int) -> int:
    if s == 1:
        return available + _count_metas(spec, available)
    total = _count_indexed(spec, s - 1, available + 1)
    for left in range(1, s - 1):
        total += _count_indexed(spec, left, available) * _count_indexed(spec, s - 1 - left, available)
        if spec.allow_closures:
            total += _count_indexed(spec, left, available + 1) * _count_indexed(
                spec, s - 1 - left, available
            )
    return total


@cache
def _count_named(spec: EnumSpec, s: int, scope_size: int) -> int:
    # The scope is always the free names plus possibly the one extra binder name
    if s == 1:
        return scope_size + _count_metas(spec, scope_size)
    binders = spec.fv_bound + 1
    inside = min(scope_size, binders)
    outside = binders - inside

    def under_binder(size: int) -> int:
        return inside * _count_named(spec, size, scope_size) + outside * _count_named(
            spec, size, scope_size + 1
        )

    total = under_binder(s - 1)
    for left in range(1, s - 1):
        right = s - 1 - left
        total += _count_named(spec, left, scope_size) * _count_named(spec, right, scope_size)
        if spec.allow_closures:
            total += under_binder(left) * _count_named(spec, right, scope_size)
    return total


# ------------------------------------------------------------------ #
#                          RANDOM GENERATION                          #
# ------------------------------------------------------------------ #


def random_term(
    seed: Union[int, random.Random], spec: EnumSpec, size: Optional[int] = None
) -> AnyTerm:
    """
    A term of the universe, deterministic for a fixed seed and spec. The size
    is drawn from [min_size, max_size] unless given.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if size is None:
        size = rng.randint(spec.min_size, max(spec.min_size, spec.max_size))
    if spec.world is World.NAMED:
        return _random_named(rng, spec, size, spec.free_names())
    return _random_indexed(rng, spec, size, spec.fv_bound)


def _random_delta(rng: random.Random, values: Tuple, spec: EnumSpec) -> Tuple:
    k = rng.randint(0, min(spec.max_delta, len(values)))
    return tuple(sorted(rng.sample(values, k)))


def _constructor(rng: random.Random, spec: EnumSpec, size: int, has_atoms: bool) -> str:
    if size == 1:
        return "atom"
    if size == 2 or not has_atoms:
        return "abs"
    choices = ["abs", "app"] + (["clos"] if spec.allow_closures else [])
    return rng.choice(choices)


def _random_indexed(rng: random.Random, spec: EnumSpec, size: int, available: int) -> Term:
    has_atoms = available > 0 or spec.allow_metavars
    kind = _constructor(rng, spec, size, has_atoms)
    if kind == "atom":
        indices = tuple(range(1, available + 1))
        if spec.allow_metavars and (not indices or rng.random() < 0.25):
            return Meta(rng.choice(spec.meta_names), NatSet(_random_delta(rng, indices, spec)))
        if not indices:
            raise ValueError("no closed term of size 1 exists without metavariables")
        return Index(rng.choice(indices))
    if kind == "abs":
        return Abs(_random_indexed(rng, spec, size - 1, available + 1))
    left_size = rng.randint(1, size - 2)
    if kind == "app":
        return App(
            _random_indexed(rng, spec, left_size, available),
            _random_indexed(rng, spec, size - 1 - left_size, available),
        )
    return Clos(
        _random_indexed(rng, spec, left_size, available + 1),
        _random_indexed(rng, spec, size - 1 - left_size, available),
    )


def _random_named(rng: random.Random, spec: EnumSpec, size: int, scope: Tuple[str, ...]) -> NamedTerm:
    has_atoms = bool(scope) or spec.allow_metavars
    kind = _constructor(rng, spec, size, has_atoms)
    if kind == "atom":
        if spec.allow_metavars and (not scope or rng.random() < 0.25):
            return NMeta(rng.choice(spec.meta_names), frozenset(_random_delta(rng, scope, spec)))
        if not scope:
            raise ValueError("no closed term of size 1 exists without metavariables")
        return Var(rng.choice(scope))
    if kind == "abs":
        binder = rng.choice(spec.binder_names())
        return NAbs(binder, _random_named(rng, spec, size - 1, _extend(scope, binder)))
    left_size = rng.randint(1, size - 2)
    if kind == "app":
        return NApp(
            _random_named(rng, spec, left_size, scope),
            _random_named(rng, spec, size - 1 - left_size, scope),
        )
    binder = rng.choice(spec.binder_names())
    return ExSub(
        _random_named(rng, spec, left_size, _extend(scope, binder)),
        binder,
        _random_named(rng, spec, size - 1 - left_size, scope),
    )


def _extend(scope: Tuple[str, ...], name: str) -> Tuple[str, ...]:
    return scope if name in scope else tuple(sorted(scope + (name,)))
