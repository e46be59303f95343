"""
Redex enumeration, rewriting modulo equations, strategies and normal forms
"""

import logging
from collections import deque
from functools import lru_cache
from typing import Dict, Hashable, List, Optional, Tuple, Union

from rexlab.config import settings
from rexlab.constants.calculi import (
    RULE_TABLE,
    STRATEGY_ALIASES,
    CalculusId,
    Strategy,
    is_modulo,
    is_named,
)
from rexlab.engine.equations import (
    canonical,
    class_key,
    class_members,
    eqc_apply,
    eqd_apply,
)
from rexlab.engine.rules import apply_rule_at_root
from rexlab.engine.trace import Step, Trace, TraceStatus
from rexlab.errors import (
    BoundExceeded,
    ClassCapExceeded,
    InvalidPosition,
    PreconditionError,
    ReplayMismatch,
)
from rexlab.terms.indexed import Term, is_indexed_term
from rexlab.terms.named import NamedTerm, alpha_key
from rexlab.terms.positions import iter_subterms, rank_key, replace_at, subterm_at

logger = logging.getLogger(__name__)

AnyTerm = Union[Term, NamedTerm]


def resolve_strategy(strategy: Union[Strategy, str]) -> Strategy:
    if isinstance(strategy, str) and strategy in STRATEGY_ALIASES:
        return STRATEGY_ALIASES[strategy]
    return Strategy(strategy)


def check_world(calculus: CalculusId, term: AnyTerm) -> None:
    if is_named(calculus) == is_indexed_term(term):
        world = "named" if is_named(calculus) else "indexed"
        raise PreconditionError(f"calculus {calculus.value} works on {world} terms")


@lru_cache(maxsize=65536)
def _redexes(calculus: CalculusId, term: AnyTerm) -> Tuple[Step, ...]:
    steps = []
    rules = RULE_TABLE[calculus]
    for position, sub in iter_subterms(term):
        for rule in rules:
            contractum = apply_rule_at_root(rule, sub, calculus)
            if contractum is not None:
                steps.append(Step(rule, position, term, replace_at(term, position, contractum)))
    return tuple(steps)


def step_redexes(calculus: Union[CalculusId, str], term: AnyTerm) -> List[Step]:
    """
    Every rule application anywhere in `term`: positions in preorder and,
    at one position, rules in rule-table order. Equation moves are not steps.
    """
    calculus = CalculusId(calculus)
    check_world(calculus, term)
    return list(_redexes(calculus, term))


def modulo_steps(
    calculus: Union[CalculusId, str], term: AnyTerm, cap: Optional[int] = None
) -> List[Step]:
    """
    Steps available from any member of the class of `term`, members in
    breadth-first order. Each step records the equation moves reaching its
    member. Outside the modulo calculi this is step_redexes.
    """
    calculus = CalculusId(calculus)
    check_world(calculus, term)
    if not is_modulo(calculus):
        return list(_redexes(calculus, term))
    steps = []
    for member, path in class_members(term, cap):
        for step in _redexes(calculus, member):
            steps.append(Step(step.rule, step.position, term, step.after, path))
    return steps


def node_key(calculus: CalculusId, term: AnyTerm, cap: Optional[int] = None) -> Hashable:
    """Identity of a vertex of the reduction graph of `calculus`"""
    if is_modulo(calculus):
        return class_key(term, cap)
    return term if is_indexed_term(term) else alpha_key(term)


def step_modulo(
    calculus: Union[CalculusId, str], term: AnyTerm, cap: Optional[int] = None
) -> frozenset:
    """One-step reducts of the class of `term`, as canonical representatives"""
    calculus = CalculusId(calculus)
    reducts: Dict[Hashable, AnyTerm] = {}
    for step in modulo_steps(calculus, term, cap):
        key = node_key(calculus, step.after, cap)
        if key not in reducts:
            reducts[key] = canonical(step.after, cap) if is_modulo(calculus) else step.after
    return frozenset(reducts.values())


def is_normal(calculus: Union[CalculusId, str], term: AnyTerm, cap: Optional[int] = None) -> bool:
    calculus = CalculusId(calculus)
    check_world(calculus, term)
    if not is_modulo(calculus):
        return not _redexes(calculus, term)
    return not any(_redexes(calculus, member) for member, _ in class_members(term, cap))


def _select(strategy: Strategy, steps: List[Step]) -> Step:
    if strategy is Strategy.LEFTMOST_OUTERMOST:
        return min(steps, key=lambda step: rank_key(step.position))
    return max(steps, key=lambda step: rank_key(step.position))


def normalize(
    calculus: Union[CalculusId, str],
    strategy: Union[Strategy, str],
    term: AnyTerm,
    max_steps: Optional[int] = None,
    cap: Optional[int] = None,
) -> Tuple[AnyTerm, Trace]:
    """
    Reduce `term` to a normal form of `calculus`, following `strategy`.

    Raises BoundExceeded (carrying the partial trace) when no normal form is
    reached within `max_steps` steps. Breadth-first search raises
    ClassCapExceeded once it has visited more than `cap` vertices.
    """
    calculus = CalculusId(calculus)
    strategy = resolve_strategy(strategy)
    max_steps = settings.MAX_STEPS if max_steps is None else max_steps
    check_world(calculus, term)
    if strategy is Strategy.FULL_BFS:
        return _normalize_bfs(calculus, term, max_steps, cap)

    trace = Trace(calculus, term)
    current = term
    while True:
        steps = modulo_steps(calculus, current, cap)
        if not steps:
            trace.status = TraceStatus.NORMAL_FORM
            logger.info(f"Normal form reached in {len(trace)} steps ({calculus.value})")
            return current, trace
        if len(trace) >= max_steps:
            trace.status = TraceStatus.BOUND_EXCEEDED
            logger.warning(f"Step bound {max_steps} hit while normalizing in {calculus.value}")
            raise BoundExceeded(max_steps, trace)
        step = _select(strategy, steps)
        logger.debug(f"{step.rule.value} at {list(step.position)}")
        trace.append(step)
        current = step.after


def _normalize_bfs(
    calculus: CalculusId, term: AnyTerm, max_steps: int, cap: Optional[int]
) -> Tuple[AnyTerm, Trace]:
    """Shortest reduction path to a normal form, by breadth-first search"""
    node_cap = settings.CLASS_CAP if cap is None else cap
    seen = {node_key(calculus, term, cap)}
    queue: deque = deque([(term, ())])
    deepest: Tuple[Step, ...] = ()
    while queue:
        current, path = queue.popleft()
        deepest = path
        steps = modulo_steps(calculus, current, cap)
        if not steps:
            trace = Trace(calculus, term, list(path), TraceStatus.NORMAL_FORM)
            logger.info(f"Shortest path to normal form has {len(path)} steps")
            return current, trace
        if len(path) >= max_steps:
            continue
        for step in steps:
            key = node_key(calculus, step.after, cap)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > node_cap:
                logger.warning(f"Breadth-first search exceeded {node_cap} vertices")
                raise ClassCapExceeded(node_cap, len(seen))
            queue.append((step.after, path + (step,)))
    trace = Trace(calculus, term, list(deepest), TraceStatus.BOUND_EXCEEDED)
    logger.warning(f"No normal form found by breadth-first search within {max_steps} steps")
    raise BoundExceeded(max_steps, trace)


def replay(trace: Trace, cap: Optional[int] = None) -> AnyTerm:
    """Re-execute every step of `trace`; raises ReplayMismatch on the first divergence"""
    current = trace.initial
    rules = RULE_TABLE[trace.calculus]
    for i, step in enumerate(trace.steps):
        if step.rule not in rules:
            raise ReplayMismatch(i, f"{step.rule.value} is not a rule of {trace.calculus.value}")
        try:
            for move in step.equations:
                if is_indexed_term(current):
                    moved = eqd_apply(current, move.position)
                else:
                    moved = eqc_apply(current, move.position, rename=True)
                if moved is None:
                    raise ReplayMismatch(i, f"equation does not apply at {list(move.position)}")
                current = moved
            contractum = apply_rule_at_root(step.rule, subterm_at(current, step.position), trace.calculus)
        except InvalidPosition as e:
            raise ReplayMismatch(i, str(e)) from e
        if contractum is None:
            raise ReplayMismatch(i, f"{step.rule.value} does not apply at {list(step.position)}")
        current = replace_at(current, step.position, contractum)
        if current != step.after:
            raise ReplayMismatch(i, "recorded result differs")
    return current


def reachable(
    calculus: Union[CalculusId, str], term: AnyTerm, depth: int, cap: Optional[int] = None
) -> Dict[Hashable, Tuple[AnyTerm, int]]:
    """Vertices of the reduction graph within `depth` steps, with their distance"""
    calculus = CalculusId(calculus)
    found = {node_key(calculus, term, cap): (term, 0)}
    frontier = [term]
    for distance in range(1, depth + 1):
        next_frontier = []
        for current in frontier:
            for step in modulo_steps(calculus, current, cap):
                key = node_key(calculus, step.after, cap)
                if key not in found:
                    found[key] = (step.after, distance)
                    next_frontier.append(step.after)
        if not next_frontier:
            break
        frontier = next_frontier
    return found
