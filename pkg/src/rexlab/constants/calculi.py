from enum import Enum


class CalculusId(str, Enum):
    """Calculi and substitution-only sub-relations"""

    DB = "dB"
    R = "r"
    RE = "re"
    REGC = "regc"
    REX = "rex"
    X = "x"
    XGC = "xgc"
    EX = "ex"
    RE_SUB = "re_sub"
    REGC_SUB = "regc_sub"
    REX_SUB = "rex_sub"


class RuleId(str, Enum):
    BETA = "Beta"
    APP = "App"
    LAMB = "Lamb"
    VAR = "Var"
    VARR = "VarR"
    GC = "GC"
    COMP = "Comp"
    EQD_LR = "EqD-LR"
    EQD_RL = "EqD-RL"
    NBETA = "NBeta"
    NAPP = "NApp"
    NLAMB = "NLamb"
    NVAR = "NVar"
    NVARGC = "NVarGC"
    NGC = "NGc"
    NCOMP = "NComp"
    EQC = "EqC"


class Strategy(str, Enum):
    LEFTMOST_OUTERMOST = "leftmost-outermost"
    RIGHTMOST_INNERMOST = "rightmost-innermost"
    FULL_BFS = "full-bfs"


STRATEGY_ALIASES = {
    "lo": Strategy.LEFTMOST_OUTERMOST,
    "ri": Strategy.RIGHTMOST_INNERMOST,
    "bfs": Strategy.FULL_BFS,
}

# Rule availability, in the order redexes are tried at a given position
RULE_TABLE: dict[CalculusId, tuple[RuleId, ...]] = {
    CalculusId.DB: (RuleId.BETA,),
    CalculusId.R: (RuleId.BETA,),
    CalculusId.RE: (RuleId.BETA, RuleId.APP, RuleId.LAMB, RuleId.VAR, RuleId.VARR),
    CalculusId.REGC: (
        RuleId.BETA,
        RuleId.APP,
        RuleId.LAMB,
        RuleId.VAR,
        RuleId.VARR,
        RuleId.GC,
    ),
    CalculusId.REX: (
        RuleId.BETA,
        RuleId.APP,
        RuleId.LAMB,
        RuleId.VAR,
        RuleId.GC,
        RuleId.COMP,
    ),
    CalculusId.RE_SUB: (RuleId.APP, RuleId.LAMB, RuleId.VAR, RuleId.VARR),
    CalculusId.REGC_SUB: (RuleId.APP, RuleId.LAMB, RuleId.VAR, RuleId.VARR, RuleId.GC),
    CalculusId.REX_SUB: (RuleId.APP, RuleId.LAMB, RuleId.VAR, RuleId.GC, RuleId.COMP),
    CalculusId.X: (
        RuleId.NBETA,
        RuleId.NAPP,
        RuleId.NLAMB,
        RuleId.NVAR,
        RuleId.NVARGC,
    ),
    CalculusId.XGC: (
        RuleId.NBETA,
        RuleId.NAPP,
        RuleId.NLAMB,
        RuleId.NVAR,
        RuleId.NVARGC,
        RuleId.NGC,
    ),
    CalculusId.EX: (
        RuleId.NBETA,
        RuleId.NAPP,
        RuleId.NLAMB,
        RuleId.NVAR,
        RuleId.NGC,
        RuleId.NCOMP,
    ),
}

NAMED_CALCULI = frozenset({CalculusId.X, CalculusId.XGC, CalculusId.EX})
META_SUBST_CALCULI = frozenset({CalculusId.DB, CalculusId.R})

# Calculi whose reduction is defined on equivalence classes
MODULO_CALCULI = frozenset({CalculusId.REX, CalculusId.REX_SUB, CalculusId.EX})

EQUATION_RULES = frozenset({RuleId.EQD_LR, RuleId.EQD_RL, RuleId.EQC})

# Isomorphic pairs (indexed, named)
ISOMORPHIC_PAIRS = (
    (CalculusId.RE, CalculusId.X),
    (CalculusId.REGC, CalculusId.XGC),
    (CalculusId.REX, CalculusId.EX),
)


def is_named(calculus: CalculusId) -> bool:
    return calculus in NAMED_CALCULI


def is_modulo(calculus: CalculusId) -> bool:
    return calculus in MODULO_CALCULI
