"""
Root-level rule application for the indexed and the named calculi
"""

from typing import Callable, Dict, Optional, Union

from rexlab.constants.calculi import CalculusId, RuleId
from rexlab.meta.operators import decrement, increment, swap
from rexlab.meta.substitution import db_subst, fresh_name, named_subst, r_subst
from rexlab.terms.indexed import Abs, App, Clos, Index, Term, is_free
from rexlab.terms.named import (
    ExSub,
    NAbs,
    NApp,
    NamedTerm,
    Var,
    all_names,
    fv_named,
)

AnyTerm = Union[Term, NamedTerm]


# ------------------------------------------------------------------ #
#                          INDEXED RULES                              #
# ------------------------------------------------------------------ #


def _beta(a: Term, calculus: Optional[CalculusId]) -> Optional[Term]:
    match a:
        case App(Abs(body), arg):
            if calculus is CalculusId.DB:
                return db_subst(body, 1, arg)
            if calculus is CalculusId.R:
                return r_subst(body, arg)
            return Clos(body, arg)
    return None


def _app(a: Term, calculus: Optional[CalculusId]) -> Optional[Term]:
    match a:
        case Clos(App(left, right), c):
            return App(Clos(left, c), Clos(right, c))
    return None


def _lamb(a: Term, calculus: Optional[CalculusId]) -> Optional[Term]:
    match a:
        case Clos(Abs(body), c):
            return Abs(Clos(swap(1, body), increment(0, c)))
    return None


def _var(a: Term, calculus: Optional[CalculusId]) -> Optional[Term]:
    match a:
        case Clos(Index(1), c):
            return c
    return None


def _var_r(a: Term, calculus: Optional[CalculusId]) -> Optional[Term]:
    match a:
        case Clos(Index(n), _) if n > 1:
            return Index(n - 1)
    return None


def _gc(a: Term, calculus: Optional[CalculusId]) -> Optional[Term]:
    match a:
        case Clos(body, _) if not is_free(1, body):
            return decrement(1, body)
    return None


def _comp(a: Term, calculus: Optional[CalculusId]) -> Optional[Term]:
    match a:
        case Clos(Clos(body, b), c) if is_free(1, b):
            return Clos(Clos(swap(1, body), increment(0, c)), Clos(b, c))
    return None


# ------------------------------------------------------------------ #
#                           NAMED RULES                               #
# ------------------------------------------------------------------ #


def _nbeta(t: NamedTerm, calculus: Optional[CalculusId]) -> Optional[NamedTerm]:
    match t:
        case NApp(NAbs(x, body), u):
            return ExSub(body, x, u)
    return None


def _napp(t: NamedTerm, calculus: Optional[CalculusId]) -> Optional[NamedTerm]:
    match t:
        case ExSub(NApp(left, right), x, u):
            return NApp(ExSub(left, x, u), ExSub(right, x, u))
    return None


def _nlamb(t: NamedTerm, calculus: Optional[CalculusId]) -> Optional[NamedTerm]:
    match t:
        case ExSub(NAbs(y, body), x, u):
            if y == x or y in fv_named(u):
                z = fresh_name(y, all_names(body) | fv_named(u) | {x})
                body = named_subst(body, y, Var(z))
                y = z
            return NAbs(y, ExSub(body, x, u))
    return None


def _nvar(t: NamedTerm, calculus: Optional[CalculusId]) -> Optional[NamedTerm]:
    match t:
        case ExSub(Var(y), x, u) if y == x:
            return u
    return None


def _nvar_gc(t: NamedTerm, calculus: Optional[CalculusId]) -> Optional[NamedTerm]:
    match t:
        case ExSub(Var(y), x, _) if y != x:
            return Var(y)
    return None


def _ngc(t: NamedTerm, calculus: Optional[CalculusId]) -> Optional[NamedTerm]:
    match t:
        case ExSub(body, x, _) if x not in fv_named(body):
            return body
    return None


def _ncomp(t: NamedTerm, calculus: Optional[CalculusId]) -> Optional[NamedTerm]:
    match t:
        case ExSub(ExSub(body, x, u), y, v) if y in fv_named(u):
            if x == y or x in fv_named(v):
                z = fresh_name(x, all_names(body) | all_names(u) | fv_named(v) | {y})
                body = named_subst(body, x, Var(z))
                x = z
            return ExSub(ExSub(body, y, v), x, ExSub(u, y, v))
    return None


_RULES: Dict[RuleId, Callable[..., Optional[AnyTerm]]] = {
    RuleId.BETA: _beta,
    RuleId.APP: _app,
    RuleId.LAMB: _lamb,
    RuleId.VAR: _var,
    RuleId.VARR: _var_r,
    RuleId.GC: _gc,
    RuleId.COMP: _comp,
    RuleId.NBETA: _nbeta,
    RuleId.NAPP: _napp,
    RuleId.NLAMB: _nlamb,
    RuleId.NVAR: _nvar,
    RuleId.NVARGC: _nvar_gc,
    RuleId.NGC: _ngc,
    RuleId.NCOMP: _ncomp,
}


def apply_rule_at_root(
    rule: RuleId, term: AnyTerm, calculus: Optional[CalculusId] = None
) -> Optional[AnyTerm]:
    """
    Contractum of `rule` applied at the root of `term`, or None when the
    pattern or side condition does not match. The calculus only matters for
    Beta, whose contractum is a meta-substitution in dB and r and a closure
    everywhere else. Equations are not rules: see rexlab.engine.equations.
    """
    try:
        contract = _RULES[RuleId(rule)]
    except KeyError:
        raise ValueError(f"{rule} is an equation, not a rewrite rule") from None
    return contract(term, calculus)
