"""
Joinability of reducts by breadth-first search of the reduction graph
"""

import logging
from typing import Hashable, Iterator, List, Optional, Set, Tuple, Union

from rexlab.config import settings
from rexlab.constants.calculi import CalculusId
from rexlab.engine.reduction import modulo_steps, node_key
from rexlab.terms.indexed import Term
from rexlab.terms.named import NamedTerm

logger = logging.getLogger(__name__)

AnyTerm = Union[Term, NamedTerm]


class _Frontier:
    """Breadth-first exploration from one term, one level at a time"""

    def __init__(self, calculus: CalculusId, term: AnyTerm, cap: Optional[int]):
        self.calculus = calculus
        self.cap = cap
        self.seen: Set[Hashable] = {node_key(calculus, term, cap)}
        self.level: List[AnyTerm] = [term]

    def expand(self) -> Set[Hashable]:
        added = set()
        next_level = []
        for current in self.level:
            for step in modulo_steps(self.calculus, current, self.cap):
                key = node_key(self.calculus, step.after, self.cap)
                if key not in self.seen:
                    self.seen.add(key)
                    added.add(key)
                    next_level.append(step.after)
        self.level = next_level
        return added


def joinable(
    calculus: Union[CalculusId, str],
    t1: AnyTerm,
    t2: AnyTerm,
    depth: Optional[int] = None,
    cap: Optional[int] = None,
) -> bool:
    """
    True iff some term (class, for the modulo calculi) is reachable from
    both t1 and t2 within `depth` steps each. Levels are expanded on both
    sides alternately and the search stops at the first common vertex.
    """
    calculus = CalculusId(calculus)
    depth = settings.JOIN_DEPTH if depth is None else depth
    left = _Frontier(calculus, t1, cap)
    right = _Frontier(calculus, t2, cap)
    if left.seen & right.seen:
        return True
    for _ in range(depth):
        if left.level:
            left.expand()
            if left.seen & right.seen:
                return True
        if right.level:
            right.expand()
            if left.seen & right.seen:
                return True
        if not left.level and not right.level:
            break
    logger.debug(f"No common reduct within depth {depth} ({calculus.value})")
    return False


def peaks(
    calculus: Union[CalculusId, str], term: AnyTerm, cap: Optional[int] = None
) -> Iterator[Tuple[AnyTerm, AnyTerm]]:
    """Unordered pairs of distinct one-step reducts of `term`"""
    calculus = CalculusId(calculus)
    reducts = {}
    for step in modulo_steps(calculus, term, cap):
        reducts.setdefault(node_key(calculus, step.after, cap), step.after)
    values = list(reducts.values())
    for i, first in enumerate(values):
        for second in values[i + 1 :]:
            yield first, second
