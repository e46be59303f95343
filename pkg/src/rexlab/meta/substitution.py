"""
Meta-substitutions: the de Bruijn one a{{n:=c}} (via update), the swap-based
one a{{c}}, and capture-avoiding substitution on named terms.
"""

from typing import AbstractSet

from rexlab.errors import PreconditionError
from rexlab.meta.operators import increment, swap, update
from rexlab.terms.indexed import Abs, App, Index, Term, is_lambda_db
from rexlab.terms.named import (
    ExSub,
    NAbs,
    NApp,
    NamedTerm,
    NMeta,
    Var,
    all_names,
    fv_named,
)


def _require_lambda_db(operation: str, *terms: Term) -> None:
    for term in terms:
        if not is_lambda_db(term):
            raise PreconditionError(
                f"{operation} is only defined on terms without closures or metavariables"
            )


def db_subst(a: Term, n: int, c: Term) -> Term:
    """a{{n:=c}}: substitution for index n, shifting c with U_0^n"""
    if n < 1:
        raise PreconditionError(f"substituted index must be >= 1, got {n}")
    _require_lambda_db("db_subst", a, c)
    return _db_subst(a, n, c)


def _db_subst(a: Term, n: int, c: Term) -> Term:
    match a:
        case Index(m):
            if m < n:
                return a
            if m == n:
                return update(0, n, c)
            return Index(m - 1)
        case App(left, right):
            return App(_db_subst(left, n, c), _db_subst(right, n, c))
        case Abs(body):
            return Abs(_db_subst(body, n + 1, c))
    raise TypeError(f"not a de Bruijn term: {a!r}")


def r_subst(a: Term, c: Term) -> Term:
    """a{{c}}: substitution for index 1, pushed under binders with swap_1 and ⊕_0"""
    _require_lambda_db("r_subst", a, c)
    return _r_subst(a, c)


def _r_subst(a: Term, c: Term) -> Term:
    match a:
        case Index(1):
            return c
        case Index(n):
            return Index(n - 1)
        case App(left, right):
            return App(_r_subst(left, c), _r_subst(right, c))
        case Abs(body):
            return Abs(_r_subst(swap(1, body), increment(0, c)))
    raise TypeError(f"not a de Bruijn term: {a!r}")


def fresh_name(base: str, avoid: AbstractSet[str]) -> str:
    """Smallest of base', base'', ... outside `avoid`"""
    candidate = base + "'"
    while candidate in avoid:
        candidate += "'"
    return candidate


def named_subst(
    t: NamedTerm, x: str, u: NamedTerm, capture_avoiding: bool = True
) -> NamedTerm:
    """
    t{x:=u}. Binders that would capture a free variable of u are renamed
    with fresh_name; with capture_avoiding=False binders are never renamed
    (raw renaming, meant for substituting a variable known to be fresh).

    On a metavariable ?X_Δ with x in Δ only a variable may be substituted:
    the decoration is renamed. Any other substituent raises PreconditionError.
    """
    match t:
        case Var(y):
            return u if y == x else t
        case NApp(left, right):
            return NApp(
                named_subst(left, x, u, capture_avoiding),
                named_subst(right, x, u, capture_avoiding),
            )
        case NAbs(y, body):
            binder, new_body = _subst_under_binder(y, body, x, u, capture_avoiding)
            return NAbs(binder, new_body)
        case ExSub(body, y, subst):
            new_subst = named_subst(subst, x, u, capture_avoiding)
            binder, new_body = _subst_under_binder(y, body, x, u, capture_avoiding)
            return ExSub(new_body, binder, new_subst)
        case NMeta(name, delta):
            if x not in delta:
                return t
            if isinstance(u, Var):
                return NMeta(name, (delta - {x}) | {u.name})
            raise PreconditionError(
                f"cannot substitute a non-variable for '{x}' in metavariable ?{name}"
            )
    raise TypeError(f"not a named term: {t!r}")


def _subst_under_binder(
    y: str, body: NamedTerm, x: str, u: NamedTerm, capture_avoiding: bool
) -> tuple[str, NamedTerm]:
    if y == x:
        return y, body
    body_fv = fv_named(body)
    if capture_avoiding and y in fv_named(u) and x in body_fv:
        z = fresh_name(y, fv_named(u) | body_fv | {x})
        body = named_subst(body, y, Var(z), capture_avoiding)
        y = z
    return y, named_subst(body, x, u, capture_avoiding)


def rename_binders(t: NamedTerm, prefix: str = "z") -> NamedTerm:
    """
    An alpha-variant of `t` whose binders are all renamed to names
    prefix1, prefix2, ... that occur nowhere in `t`
    """
    avoid = set(all_names(t))
    counter = 0

    def fresh() -> str:
        nonlocal counter
        while True:
            counter += 1
            name = f"{prefix}{counter}"
            if name not in avoid:
                avoid.add(name)
                return name

    def go(term: NamedTerm) -> NamedTerm:
        match term:
            case Var() | NMeta():
                return term
            case NApp(left, right):
                return NApp(go(left), go(right))
            case NAbs(x, body):
                z = fresh()
                return NAbs(z, named_subst(go(body), x, Var(z), capture_avoiding=False))
            case ExSub(body, x, subst):
                z = fresh()
                return ExSub(
                    named_subst(go(body), x, Var(z), capture_avoiding=False), z, go(subst)
                )
        raise TypeError(f"not a named term: {term!r}")

    return go(t)
