"""
Index meta-operators: update, increment, swap, decrement and their stacked
forms. Increment, swap and decrement are extended to closures and
metavariables; update is only defined on pure de Bruijn terms.
"""

from functools import reduce

from rexlab.errors import DecrementUndefined, PreconditionError
from rexlab.terms.indexed import Abs, App, Clos, Index, Meta, Term
from rexlab.terms.natset import Comparison, NatSet
from rexlab.terms.positions import Child, Position, ROOT


def update(k: int, i: int, term: Term) -> Term:
    """U_k^i: indices above k are raised by i - 1"""
    if k < 0 or i < 1:
        raise PreconditionError(f"update needs k >= 0 and i >= 1, got k={k}, i={i}")
    match term:
        case Index(n):
            return term if n <= k else Index(n + i - 1)
        case App(left, right):
            return App(update(k, i, left), update(k, i, right))
        case Abs(body):
            return Abs(update(k + 1, i, body))
        case Clos() | Meta():
            raise PreconditionError("update is only defined on pure de Bruijn terms")
    raise TypeError(f"not an indexed term: {term!r}")


def _increment_delta(i: int, delta: NatSet) -> NatSet:
    return delta.filter(Comparison.LE, i) | delta.filter(Comparison.GT, i).shift_up(1)


def increment(i: int, term: Term) -> Term:
    """⊕_i: indices above i are raised by one"""
    match term:
        case Index(n):
            return term if n <= i else Index(n + 1)
        case App(left, right):
            return App(increment(i, left), increment(i, right))
        case Abs(body):
            return Abs(increment(i + 1, body))
        case Clos(body, subst):
            return Clos(increment(i + 1, body), increment(i, subst))
        case Meta(name, delta):
            return Meta(name, _increment_delta(i, delta))
    raise TypeError(f"not an indexed term: {term!r}")


def _swap_delta(i: int, delta: NatSet) -> NatSet:
    return (
        delta.filter(Comparison.LT, i)
        | delta.filter(Comparison.GT, i + 1)
        | delta.filter(Comparison.EQ, i).shift_up(1)
        | delta.filter(Comparison.EQ, i + 1).shift_down(1)
    )


def swap(i: int, term: Term) -> Term:
    """swap_i: exchanges free indices i and i + 1"""
    if i < 1:
        raise PreconditionError(f"swap needs i >= 1, got {i}")
    match term:
        case Index(n):
            if n == i:
                return Index(i + 1)
            if n == i + 1:
                return Index(i)
            return term
        case App(left, right):
            return App(swap(i, left), swap(i, right))
        case Abs(body):
            return Abs(swap(i + 1, body))
        case Clos(body, subst):
            return Clos(swap(i + 1, body), swap(i, subst))
        case Meta(name, delta):
            return Meta(name, _swap_delta(i, delta))
    raise TypeError(f"not an indexed term: {term!r}")


def decrement(i: int, term: Term, position: Position = ROOT) -> Term:
    """
    ⊖_i: indices above i are lowered by one. Defined iff i is not free in
    the term; otherwise raises DecrementUndefined at the offending leaf.
    """
    if i < 1:
        raise PreconditionError(f"decrement needs i >= 1, got {i}")
    match term:
        case Index(n):
            if n == i:
                raise DecrementUndefined(i, position)
            return term if n < i else Index(n - 1)
        case App(left, right):
            return App(
                decrement(i, left, position + (Child.LEFT,)),
                decrement(i, right, position + (Child.RIGHT,)),
            )
        case Abs(body):
            return Abs(decrement(i + 1, body, position + (Child.BODY,)))
        case Clos(body, subst):
            return Clos(
                decrement(i + 1, body, position + (Child.BODY,)),
                decrement(i, subst, position + (Child.SUBST,)),
            )
        case Meta(name, delta):
            if i in delta:
                raise DecrementUndefined(i, position)
            return Meta(
                name,
                delta.filter(Comparison.LT, i) | delta.filter(Comparison.GT, i).shift_down(1),
            )
    raise TypeError(f"not an indexed term: {term!r}")


def stacked_swap(i: int, j: int, term: Term) -> Term:
    """S_i^j by its recursion: S_i^0(a) = a, S_i^j(a) = S_i^(j-1)(swap_(i+j-1)(a))"""
    if j < 0:
        raise PreconditionError(f"stacked swap needs j >= 0, got {j}")
    while j > 0:
        term = swap(i + j - 1, term)
        j -= 1
    return term


def stacked_swap_unrolled(i: int, j: int, term: Term) -> Term:
    """swap_i(swap_(i+1)(... swap_(i+j-1)(a) ...)), composed right to left"""
    return reduce(lambda acc, k: swap(k, acc), reversed(range(i, i + j)), term)


def stacked_increment(i: int, term: Term) -> Term:
    """⊕^i: i applications of ⊕_0"""
    if i < 0:
        raise PreconditionError(f"stacked increment needs i >= 0, got {i}")
    for _ in range(i):
        term = increment(0, term)
    return term
