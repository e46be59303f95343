"""
Printing of indexed and named terms in the concrete syntax read by
rexlab.syntax.parser. Printed forms are parser fixpoints.
"""

from typing import Union

from rexlab.terms.indexed import Abs, App, Clos, Index, Meta, Term
from rexlab.terms.named import ExSub, NAbs, NApp, NamedTerm, NMeta, Var


def print_indexed(term: Term) -> str:
    match term:
        case Index(n):
            return str(n)
        case Meta(name, delta):
            return f"?{name}{delta}"
        case Abs(body):
            return "\\ " + print_indexed(body)
        case App(left, right):
            left_text = print_indexed(left)
            right_text = print_indexed(right)
            if isinstance(left, Abs):
                left_text = f"({left_text})"
            if isinstance(right, (App, Abs)):
                right_text = f"({right_text})"
            return f"{left_text} {right_text}"
        case Clos(body, subst):
            body_text = print_indexed(body)
            if isinstance(body, (App, Abs)):
                body_text = f"({body_text})"
            return f"{body_text}[{print_indexed(subst)}]"
    raise TypeError(f"not an indexed term: {term!r}")


def print_named(term: NamedTerm) -> str:
    match term:
        case Var(name):
            return name
        case NMeta(name, delta):
            return f"?{name}{{{','.join(sorted(delta))}}}"
        case NAbs(binder, body):
            return f"\\{binder}. {print_named(body)}"
        case NApp(left, right):
            left_text = print_named(left)
            right_text = print_named(right)
            if isinstance(left, NAbs):
                left_text = f"({left_text})"
            if isinstance(right, (NApp, NAbs)):
                right_text = f"({right_text})"
            return f"{left_text} {right_text}"
        case ExSub(body, binder, subst):
            body_text = print_named(body)
            if isinstance(body, (NApp, NAbs)):
                body_text = f"({body_text})"
            return f"{body_text}[{binder}:={print_named(subst)}]"
    raise TypeError(f"not a named term: {term!r}")


def print_term(term: Union[Term, NamedTerm]) -> str:
    if isinstance(term, (Var, NApp, NAbs, ExSub, NMeta)):
        return print_named(term)
    return print_indexed(term)
