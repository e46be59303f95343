"""
The D equation on indexed terms and the C equation on named terms, their
equivalence classes and the canonical class representatives.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterator, Optional, Tuple, Union

from rexlab.config import settings
from rexlab.constants.calculi import RuleId
from rexlab.errors import ClassCapExceeded
from rexlab.meta.operators import decrement, increment, swap
from rexlab.meta.substitution import fresh_name, named_subst
from rexlab.terms.indexed import Clos, Term, is_free, is_indexed_term, term_sort_key
from rexlab.terms.named import (
    ExSub,
    NamedTerm,
    Var,
    alpha_key,
    all_names,
    fv_named,
)
from rexlab.terms.positions import Position, iter_positions, replace_at, subterm_at

logger = logging.getLogger(__name__)

AnyTerm = Union[Term, NamedTerm]


@dataclass(frozen=True, slots=True)
class EquationMove:
    """One application of an equation at a position"""

    rule: RuleId
    position: Position


ClassMember = Tuple[AnyTerm, Tuple[EquationMove, ...]]


def eqd_at_root(a: Term) -> Optional[Term]:
    match a:
        case Clos(Clos(x, y), z) if not is_free(1, y):
            return Clos(Clos(swap(1, x), increment(0, z)), decrement(1, y))
    return None


def eqd_apply(a: Term, position: Position) -> Optional[Term]:
    """a[b][c] = (swap_1 a)[⊕_0 c][⊖_1 b] at `position`, when 1 is not free in b"""
    result = eqd_at_root(subterm_at(a, position))
    return None if result is None else replace_at(a, position, result)


def eqc_at_root(t: NamedTerm, rename: bool = False) -> Optional[NamedTerm]:
    match t:
        case ExSub(ExSub(body, x, u), y, v) if y not in fv_named(u):
            if x == y or x in fv_named(v):
                if not rename:
                    return None
                z = fresh_name(x, all_names(body) | all_names(u) | all_names(v) | {y})
                body = named_subst(body, x, Var(z))
                x = z
            return ExSub(ExSub(body, y, v), x, u)
    return None


def eqc_apply(t: NamedTerm, position: Position, rename: bool = False) -> Optional[NamedTerm]:
    """
    (t[x:=u])[y:=v] = (t[y:=v])[x:=u] at `position`, when x != y, y is not
    free in u and x is not free in v. With rename=True a clashing inner
    binder is first renamed freshly, so only y in fv(u) blocks the move.
    """
    result = eqc_at_root(subterm_at(t, position), rename)
    return None if result is None else replace_at(t, position, result)


def equation_moves(term: AnyTerm) -> Iterator[Tuple[EquationMove, AnyTerm]]:
    """Every single equation move available in `term`, positions in preorder"""
    indexed = is_indexed_term(term)
    for position in iter_positions(term):
        if indexed:
            result = eqd_apply(term, position)
            if result is not None:
                label = (
                    RuleId.EQD_LR
                    if term_sort_key(result) < term_sort_key(term)
                    else RuleId.EQD_RL
                )
                yield EquationMove(label, position), result
        else:
            result = eqc_apply(term, position, rename=True)
            if result is not None:
                yield EquationMove(RuleId.EQC, position), result


def _closure(
    start: AnyTerm, key: Callable[[AnyTerm], Hashable], cap: int
) -> Tuple[ClassMember, ...]:
    seen = {key(start)}
    members: list[ClassMember] = [(start, ())]
    queue = deque(members)
    while queue:
        term, path = queue.popleft()
        for move, result in equation_moves(term):
            k = key(result)
            if k in seen:
                continue
            seen.add(k)
            member = (result, path + (move,))
            members.append(member)
            if len(members) > cap:
                logger.warning(f"Equivalence class of {start} exceeded {cap} members")
                raise ClassCapExceeded(cap, len(members))
            queue.append(member)
    return tuple(members)


def _identity(term: AnyTerm) -> Hashable:
    return term


@lru_cache(maxsize=65536)
def class_members(term: AnyTerm, cap: Optional[int] = None) -> Tuple[ClassMember, ...]:
    """
    Breadth-first closure of {term} under the equation of its world, each
    member paired with the equation moves leading to it from `term`.
    Named members are deduplicated modulo alpha.
    """
    cap = settings.CLASS_CAP if cap is None else cap
    key = _identity if is_indexed_term(term) else alpha_key
    return _closure(term, key, cap)


def d_class(a: Term, cap: Optional[int] = None) -> frozenset:
    return frozenset(member for member, _ in class_members(a, cap))


def c_class(t: NamedTerm, cap: Optional[int] = None) -> Tuple[NamedTerm, ...]:
    """C-class members, one per alpha-equivalence class"""
    return tuple(member for member, _ in class_members(t, cap))


def order_key(term: AnyTerm) -> tuple:
    return term_sort_key(term) if is_indexed_term(term) else alpha_key(term)


@lru_cache(maxsize=65536)
def canonical(term: AnyTerm, cap: Optional[int] = None) -> AnyTerm:
    """Least member of the class of `term` under the fixed term order"""
    return min((member for member, _ in class_members(term, cap)), key=order_key)


def class_key(term: AnyTerm, cap: Optional[int] = None) -> Hashable:
    """Equal for exactly the terms of one equivalence class (modulo alpha when named)"""
    representative = canonical(term, cap)
    return representative if is_indexed_term(representative) else alpha_key(representative)
