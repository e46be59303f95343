"""
Finite sets of positive naturals: free-index sets and metavariable decorations
"""

import operator
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator, Tuple


class Comparison(str, Enum):
    EQ = "="
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="

    @property
    def function(self) -> Callable[[int, int], bool]:
        return _COMPARATORS[self]

    @classmethod
    def parse(cls, symbol: str) -> "Comparison":
        aliases = {"≤": "<=", "≥": ">=", "==": "="}
        return cls(aliases.get(symbol, symbol))


_COMPARATORS = {
    Comparison.EQ: operator.eq,
    Comparison.LT: operator.lt,
    Comparison.LE: operator.le,
    Comparison.GT: operator.gt,
    Comparison.GE: operator.ge,
}


@dataclass(frozen=True, slots=True)
class NatSet:
    """Ascending, duplicate-free tuple of naturals >= 1"""

    elements: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(n < 1 for n in self.elements):
            raise ValueError(f"NatSet elements must be >= 1, got {self.elements}")
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError(f"NatSet elements must be sorted and unique: {self.elements}")

    @classmethod
    def of(cls, values: Iterable[int] = ()) -> "NatSet":
        return cls(tuple(sorted(set(values))))

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, n: object) -> bool:
        return n in self.elements

    def __or__(self, other: "NatSet") -> "NatSet":
        return self.union(other)

    def __str__(self) -> str:
        return "{" + ",".join(str(n) for n in self.elements) + "}"

    def union(self, *others: "NatSet") -> "NatSet":
        values = set(self.elements)
        for other in others:
            values.update(other.elements)
        return NatSet.of(values)

    def shift_up(self, k: int) -> "NatSet":
        return NatSet(tuple(n + k for n in self.elements))

    def shift_down(self, k: int) -> "NatSet":
        return NatSet(tuple(n - k for n in self.elements if n > k))

    def filter(self, comparison: Comparison, k: int) -> "NatSet":
        keep = comparison.function
        return NatSet(tuple(n for n in self.elements if keep(n, k)))

    def is_subset(self, other: "NatSet") -> bool:
        return set(self.elements) <= set(other.elements)

    @property
    def maximum(self) -> int:
        """Largest element, 0 for the empty set"""
        return self.elements[-1] if self.elements else 0


EMPTY = NatSet()


def natset_shift_up(values: NatSet, k: int) -> NatSet:
    return values.shift_up(k)


def natset_shift_down(values: NatSet, k: int) -> NatSet:
    return values.shift_down(k)


def natset_filter(values: NatSet, comparison: Comparison, k: int) -> NatSet:
    return values.filter(comparison, k)
