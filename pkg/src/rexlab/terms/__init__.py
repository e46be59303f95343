"""
Term representations for the indexed and the named world
"""

from .indexed import (
    Abs,
    App,
    Clos,
    Index,
    Meta,
    Term,
    fv_indexed,
    is_closed_signature,
    is_free,
    is_indexed_term,
    is_lambda_db,
    is_pure,
    size,
    term_sort_key,
)
from .named import (
    ExSub,
    NAbs,
    NApp,
    NamedTerm,
    NMeta,
    Var,
    VarList,
    VarSet,
    alpha_eq,
    alpha_key,
    fv_named,
    named_size,
)
from .natset import (
    EMPTY,
    Comparison,
    NatSet,
    natset_filter,
    natset_shift_down,
    natset_shift_up,
)
from .positions import (
    ROOT,
    Child,
    Position,
    as_position,
    iter_positions,
    iter_subterms,
    position_labels,
    replace_at,
    subterm_at,
)

__all__ = [
    "Abs",
    "App",
    "Child",
    "Clos",
    "Comparison",
    "EMPTY",
    "ExSub",
    "Index",
    "Meta",
    "NAbs",
    "NApp",
    "NMeta",
    "NamedTerm",
    "NatSet",
    "Position",
    "ROOT",
    "Term",
    "Var",
    "VarList",
    "VarSet",
    "alpha_eq",
    "alpha_key",
    "as_position",
    "fv_indexed",
    "fv_named",
    "is_closed_signature",
    "is_free",
    "is_indexed_term",
    "is_lambda_db",
    "is_pure",
    "iter_positions",
    "iter_subterms",
    "named_size",
    "natset_filter",
    "natset_shift_down",
    "natset_shift_up",
    "position_labels",
    "replace_at",
    "size",
    "subterm_at",
    "term_sort_key",
]
