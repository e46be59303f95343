"""
Property suites: the substitution correspondences, the meta-operator laws,
the translation laws, the isomorphism between indexed and named calculi,
and bounded evidence for termination and confluence.

A suite is a stream of tagged cases plus the checks registered for the
tags. Every case is checked independently, so a universe can be split into
shards and the shard reports merged.
"""

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from itertools import product
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from rexlab.config import settings
from rexlab.constants.calculi import ISOMORPHIC_PAIRS, CalculusId, Strategy
from rexlab.engine.equations import d_class, eqc_apply, eqd_apply
from rexlab.engine.reduction import (
    modulo_steps,
    node_key,
    normalize,
    reachable,
    step_redexes,
)
from rexlab.errors import BoundExceeded, ClassCapExceeded, DecrementUndefined
from rexlab.meta.operators import (
    decrement,
    increment,
    stacked_increment,
    stacked_swap,
    stacked_swap_unrolled,
    swap,
    update,
)
from rexlab.meta.substitution import db_subst, named_subst, r_subst, rename_binders
from rexlab.oracles.enumeration import (
    EnumSpec,
    count_terms,
    enumerate_terms,
    random_term,
    terms_list,
)
from rexlab.oracles.joinability import joinable, peaks
from rexlab.oracles.schemas import PropertyReport
from rexlab.syntax.parser import World
from rexlab.syntax.printer import print_term
from rexlab.terms.indexed import Abs, App, Clos, Index, fv_indexed, size
from rexlab.terms.named import Var, alpha_eq, alpha_key, fv_named
from rexlab.terms.natset import Comparison, NatSet
from rexlab.terms.positions import iter_positions, position_labels
from rexlab.translate.translation import (
    DEFAULT_ENUMERATION,
    VarEnumeration,
    u_list,
    u_uniform,
    uniform_length,
    w_list,
    w_uniform,
)

logger = logging.getLogger(__name__)

_FRESH = "y"
_EXTRA = ("y1", "y2")


class SuiteConfig(BaseModel):
    """
    Parameters of a suite run. Universe fields left at None take the
    defaults of the suite being run.
    """

    model_config = ConfigDict(frozen=True)

    size: Optional[int] = Field(default=None, ge=0)
    named_size: Optional[int] = Field(default=None, ge=0)
    subst_size: int = Field(default=4, ge=0)
    pair_size: int = Field(default=3, ge=0)
    fv_bound: Optional[int] = Field(default=None, ge=0)
    with_metavars: Optional[bool] = None
    max_delta: int = Field(default=2, ge=0)
    max_index: int = Field(default=4, ge=1)
    n: Optional[int] = Field(default=None, ge=1)
    strategies: Tuple[Strategy, ...] = tuple(Strategy)
    max_steps: int = Field(default_factory=lambda: settings.MAX_STEPS, ge=0)
    join_depth: int = Field(default_factory=lambda: settings.JOIN_DEPTH, ge=0)
    class_cap: int = Field(default_factory=lambda: settings.CLASS_CAP, ge=1)
    random_cases: int = Field(default=0, ge=0)
    random_min_size: int = Field(default=8, ge=1)
    random_max_size: int = Field(default=12, ge=1)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    shard: Optional[Tuple[int, int]] = None
    workers: int = Field(default=1, ge=1)

    @field_validator("shard")
    @classmethod
    def _check_shard(cls, value: Optional[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
        if value is not None and not 0 <= value[0] < value[1]:
            raise ValueError(f"shard index must lie in [0, count), got {value}")
        return value

    def resolve(self, defaults: Dict[str, Any]) -> "SuiteConfig":
        missing = {key: value for key, value in defaults.items() if getattr(self, key) is None}
        return self.model_copy(update=missing)


class Verdict(str, Enum):
    FAIL = "fail"
    BOUND = "bound-exceeded"
    FINDING = "finding"


Outcome = Optional[Tuple[Verdict, Dict[str, Any]]]
Case = Tuple[Any, ...]


@dataclass(frozen=True)
class Suite:
    suite_id: str
    description: str
    cases: Callable[[SuiteConfig], Iterable[Case]]
    defaults: Dict[str, Any] = field(default_factory=dict)


SUITES: Dict[str, Suite] = {}
CHECKS: Dict[str, Callable[[Case, SuiteConfig], Outcome]] = {}


def suite(suite_id: str, description: str, **defaults: Any):
    def register(cases: Callable[[SuiteConfig], Iterable[Case]]):
        SUITES[suite_id] = Suite(suite_id, description, cases, defaults)
        return cases

    return register


def check(tag: str):
    def register(function: Callable[[Case, SuiteConfig], Outcome]):
        CHECKS[tag] = function
        return function

    return register


def _show(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (tuple, list)) and all(isinstance(v, str) for v in value):
        return list(value)
    try:
        return print_term(value)
    except TypeError:
        return repr(value)


def _outcome(verdict: Verdict, law: str, **inputs: Any) -> Outcome:
    return verdict, {"law": law, **{key: _show(value) for key, value in inputs.items()}}


def _fail(law: str, **inputs: Any) -> Outcome:
    return _outcome(Verdict.FAIL, law, **inputs)


# ------------------------------------------------------------------ #
#                             UNIVERSES                               #
# ------------------------------------------------------------------ #


def _indexed_spec(
    cfg: SuiteConfig,
    *,
    closures: bool = True,
    max_size: Optional[int] = None,
    metavars: Optional[bool] = None,
) -> EnumSpec:
    return EnumSpec(
        world=World.INDEXED,
        max_size=cfg.size if max_size is None else max_size,
        fv_bound=cfg.fv_bound,
        allow_closures=closures,
        allow_metavars=bool(cfg.with_metavars) if metavars is None else metavars,
        max_delta=cfg.max_delta,
    )


def _named_spec(cfg: SuiteConfig, *, max_size: Optional[int] = None) -> EnumSpec:
    return EnumSpec(
        world=World.NAMED,
        max_size=cfg.named_size if max_size is None else max_size,
        fv_bound=cfg.fv_bound,
        allow_closures=True,
        allow_metavars=bool(cfg.with_metavars),
        max_delta=cfg.max_delta,
    )


def _universe(cfg: SuiteConfig, spec: EnumSpec, stream: str = "") -> Iterator[Any]:
    """The enumerated universe, or random_cases seeded random terms of it"""
    if not cfg.random_cases:
        yield from terms_list(spec)
        return
    rng = random.Random(f"{cfg.seed}:{stream}")
    sized = spec.model_copy(
        update={"min_size": cfg.random_min_size, "max_size": max(cfg.random_min_size, cfg.random_max_size)}
    )
    for _ in range(cfg.random_cases):
        yield random_term(rng, sized)


def _pairs(cfg: SuiteConfig, first: EnumSpec, second: EnumSpec) -> Iterator[Tuple[Any, Any]]:
    if cfg.random_cases:
        yield from zip(_universe(cfg, first, "first"), _universe(cfg, second, "second"))
    else:
        yield from product(terms_list(first), terms_list(second))


def _pure_pairs(cfg: SuiteConfig) -> Iterator[Tuple[Any, Any]]:
    return _pairs(
        cfg,
        _indexed_spec(cfg, closures=False, metavars=False),
        _indexed_spec(cfg, closures=False, metavars=False, max_size=cfg.subst_size),
    )


def _indices(cfg: SuiteConfig) -> range:
    return range(1, cfg.max_index + 1)


# ------------------------------------------------------------------ #
#                  META-SUBSTITUTION CORRESPONDENCE                   #
# ------------------------------------------------------------------ #


@suite("cor1", "db_subst(a, 1, b) = r_subst(a, b), and equal one-step beta reducts", size=6, fv_bound=4)
def _cor1_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a, b in _pure_pairs(cfg):
        yield ("cor1", a, b)
    for a in _universe(cfg, _indexed_spec(cfg, closures=False, metavars=False), "beta"):
        yield ("beta-db-r", a)


@check("cor1")
def _check_cor1(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a, b = case
    if db_subst(a, 1, b) != r_subst(a, b):
        return _fail("substitution-for-index-1", a=a, b=b)
    return None


@check("beta-db-r")
def _check_beta_db_r(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    db_reducts = {step.after for step in step_redexes(CalculusId.DB, a)}
    r_reducts = {step.after for step in step_redexes(CalculusId.R, a)}
    if db_reducts != r_reducts:
        return _fail("same-beta-reducts", a=a)
    return None


@suite("thm1", "db_subst(a, n, b) = r_subst(S_1^(n-1) a, ⊕^(n-1) b)", size=6, fv_bound=4)
def _thm1_cases(cfg: SuiteConfig) -> Iterator[Case]:
    ns = [cfg.n] if cfg.n is not None else list(_indices(cfg))
    for a, b in _pure_pairs(cfg):
        for n in ns:
            yield ("thm1", a, b, n)


@check("thm1")
def _check_thm1(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a, b, n = case
    if db_subst(a, n, b) != r_subst(stacked_swap(1, n - 1, a), stacked_increment(n - 1, b)):
        return _fail("substitution-for-index-n", a=a, b=b, n=n)
    return None


@suite("lemA", "stacked increment and stacked swap laws", size=6, fv_bound=4)
def _lem_a_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a in _universe(cfg, _indexed_spec(cfg, closures=False, metavars=False), "terms"):
        yield ("stack-term", a)
    for i, n in product(_indices(cfg), range(cfg.max_index + 1)):
        for m in range(1, n + i + 3):
            yield ("stack-index", m, i, n)
    for a, b in _pure_pairs(cfg):
        yield ("stack-subst", a, b)


@check("stack-term")
def _check_stack_term(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    for n in _indices(cfg):
        if stacked_increment(n - 1, a) != update(0, n, a):
            return _fail("stacked-increment-is-update", a=a, n=n)
    for i, n in product(_indices(cfg), range(cfg.max_index + 1)):
        stacked = stacked_swap(i, n, a)
        if stacked != stacked_swap_unrolled(i, n, a):
            return _fail("stacked-swap-unrolls", a=a, i=i, n=n)
        match a:
            case App(left, right):
                if stacked != App(stacked_swap(i, n, left), stacked_swap(i, n, right)):
                    return _fail("stacked-swap-application", a=a, i=i, n=n)
            case Abs(body):
                if stacked != Abs(stacked_swap(i + 1, n, body)):
                    return _fail("stacked-swap-abstraction", a=a, i=i, n=n)
    return None


@check("stack-index")
def _check_stack_index(case: Case, cfg: SuiteConfig) -> Outcome:
    _, m, i, n = case
    result = stacked_swap(i, n, Index(m))
    if m < i or m > n + i:
        expected = Index(m)
    elif i <= m < n + i:
        expected = Index(m + 1)
    else:
        expected = Index(i)
    if result != expected:
        return _fail("stacked-swap-index", m=m, i=i, n=n)
    return None


@check("stack-subst")
def _check_stack_subst(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a, b = case
    for n in range(cfg.max_index):
        left = r_subst(Abs(stacked_swap(2, n, a)), stacked_increment(n, b))
        right = Abs(r_subst(stacked_swap(1, n + 1, a), stacked_increment(n + 1, b)))
        if left != right:
            return _fail("stacked-swap-under-substitution", a=a, b=b, n=n)
    return None


# ------------------------------------------------------------------ #
#                        META-OPERATOR LAWS                           #
# ------------------------------------------------------------------ #


@suite(
    "lemB",
    "commutation of swap, increment and decrement, and their distribution over r_subst",
    size=6,
    fv_bound=4,
)
def _lem_b_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a in _universe(cfg, _indexed_spec(cfg, closures=False, metavars=False), "terms"):
        yield ("operator-laws", a)
    for a, b in _pure_pairs(cfg):
        yield ("subst-laws", a, b)


@check("operator-laws")
def _check_operator_laws(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    free = fv_indexed(a)
    top = cfg.max_index
    for i in _indices(cfg):
        for k in range(i):
            if swap(i + 1, increment(k, a)) != increment(k, swap(i, a)):
                return _fail("swap-after-increment", a=a, i=i, k=k)
        for j in range(2, top + 1):
            if swap(i + j, swap(i, a)) != swap(i, swap(i + j, a)):
                return _fail("distant-swaps-commute", a=a, i=i, j=j)
            if i + j not in free and decrement(i + j, swap(i, a)) != swap(i, decrement(i + j, a)):
                return _fail("decrement-after-swap", a=a, i=i, j=j)
    for j in range(top + 1):
        for i in range(j + 2, j + 2 + top):
            if i - 1 in free:
                continue
            if decrement(i, increment(j, a)) != increment(j, decrement(i - 1, a)):
                return _fail("decrement-after-increment", a=a, i=i, j=j)
    return None


@check("subst-laws")
def _check_subst_laws(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a, b = case
    substituted = r_subst(a, b)
    fv_a, fv_b = fv_indexed(a), fv_indexed(b)
    for i in _indices(cfg):
        if swap(i, substituted) != r_subst(swap(i + 1, a), swap(i, b)):
            return _fail("swap-over-substitution", a=a, b=b, i=i)
        if i + 1 not in fv_a and i not in fv_b:
            if decrement(i, substituted) != r_subst(decrement(i + 1, a), decrement(i, b)):
                return _fail("decrement-over-substitution", a=a, b=b, i=i)
    for i in range(cfg.max_index + 1):
        if increment(i, substituted) != r_subst(increment(i + 1, a), increment(i, b)):
            return _fail("increment-over-substitution", a=a, b=b, i=i)
    return None


@suite(
    "meta-inv",
    "swap involution and increment/decrement cancellation",
    size=6,
    fv_bound=3,
    with_metavars=True,
)
def _meta_inv_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a in _universe(cfg, _indexed_spec(cfg), "terms"):
        yield ("meta-inv", a)


@check("meta-inv")
def _check_meta_inv(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    free = fv_indexed(a)
    if decrement(1, increment(0, a)) != a:
        return _fail("decrement-cancels-increment", a=a)
    for i in _indices(cfg):
        if swap(i, swap(i, a)) != a:
            return _fail("swap-involution", a=a, i=i)
        try:
            decrement(i, a)
            defined = True
        except DecrementUndefined:
            defined = False
        if defined == (i in free):
            return _fail("decrement-defined-iff-not-free", a=a, i=i)
        for j in range(cfg.max_index + 1):
            if stacked_swap(i, j, a) != stacked_swap_unrolled(i, j, a):
                return _fail("stacked-swap-unrolls", a=a, i=i, j=j)
    return None


@suite(
    "term-core",
    "free-variable laws of swap and increment, alpha-equivalence laws",
    size=5,
    named_size=4,
    fv_bound=3,
    with_metavars=True,
)
def _term_core_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a in _universe(cfg, _indexed_spec(cfg), "indexed"):
        yield ("fv-indexed", a)
    for t in _universe(cfg, _named_spec(cfg), "named"):
        yield ("alpha-variant", t)
    small = _named_spec(cfg, max_size=cfg.pair_size)
    for t, u in _pairs(cfg, small, small):
        yield ("alpha-pair", t, u)


@check("fv-indexed")
def _check_fv_indexed(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    free = fv_indexed(a)
    for i in _indices(cfg):
        exchanged = NatSet.of({i: i + 1, i + 1: i}.get(n, n) for n in free)
        if fv_indexed(swap(i, a)) != exchanged:
            return _fail("swap-exchanges-free-indices", a=a, i=i)
    for i in range(cfg.max_index + 1):
        expected = free.filter(Comparison.LE, i) | free.filter(Comparison.GT, i).shift_up(1)
        if fv_indexed(increment(i, a)) != expected:
            return _fail("increment-shifts-free-indices", a=a, i=i)
    return None


@check("alpha-variant")
def _check_alpha_variant(case: Case, cfg: SuiteConfig) -> Outcome:
    _, t = case
    variant = rename_binders(t)
    if not alpha_eq(t, t):
        return _fail("alpha-reflexive", t=t)
    if not alpha_eq(t, variant) or alpha_key(t) != alpha_key(variant):
        return _fail("binder-renaming-is-alpha", t=t, variant=variant)
    if fv_named(t) != fv_named(variant):
        return _fail("alpha-preserves-free-variables", t=t, variant=variant)
    return None


@check("alpha-pair")
def _check_alpha_pair(case: Case, cfg: SuiteConfig) -> Outcome:
    _, t, u = case
    equal = alpha_eq(t, u)
    # Agreement with the key makes alpha_eq an equivalence relation
    if equal != (alpha_key(t) == alpha_key(u)):
        return _fail("alpha-agrees-with-key", t=t, u=u)
    if equal != alpha_eq(u, t):
        return _fail("alpha-symmetric", t=t, u=u)
    if equal and fv_named(t) != fv_named(u):
        return _fail("alpha-preserves-free-variables", t=t, u=u)
    return None


# ------------------------------------------------------------------ #
#                         TRANSLATION LAWS                            #
# ------------------------------------------------------------------ #


@suite(
    "lemC",
    "translation laws: free variables, swaps, increments, garbage, renaming, list extension",
    size=5,
    named_size=4,
    fv_bound=3,
    with_metavars=True,
)
def _lem_c_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for t in _universe(cfg, _named_spec(cfg), "named"):
        yield ("w-laws", t)
    for a in _universe(cfg, _indexed_spec(cfg), "indexed"):
        yield ("u-laws", a)


def _insert(xs: Tuple[str, ...], m: int, name: str) -> Tuple[str, ...]:
    """The list with `name` inserted after its first m elements"""
    return xs[:m] + (name,) + xs[m:]


def _exchange(xs: Tuple[str, ...], i: int) -> Tuple[str, ...]:
    return xs[: i - 1] + (xs[i], xs[i - 1]) + xs[i + 1 :]


@check("w-laws")
def _check_w_laws(case: Case, cfg: SuiteConfig) -> Outcome:
    _, t = case
    xs = DEFAULT_ENUMERATION.take(cfg.fv_bound)
    n = len(xs)
    image = w_list(xs, t)
    if fv_indexed(image).maximum > n:
        return _fail("w-free-indices-in-range", t=t)
    for i in range(1, n):
        if swap(i, image) != w_list(_exchange(xs, i), t):
            return _fail("w-swap", t=t, i=i)
    for m in range(n + 1):
        if w_list(_insert(xs, m, _FRESH), t) != increment(m, image):
            return _fail("w-increment", t=t, m=m)
    for m in range(1, n + 2):
        extended = w_list(_insert(xs, m - 1, _FRESH), t)
        if m in fv_indexed(extended):
            return _fail("w-fresh-slot-not-free", t=t, m=m)
        if decrement(m, extended) != image:
            return _fail("w-decrement-fresh-slot", t=t, m=m)
        for x in sorted(fv_named(t)):
            if x not in xs[: m - 1] and m not in fv_indexed(w_list(_insert(xs, m - 1, x), t)):
                return _fail("w-used-slot-free", t=t, m=m, x=x)
    if w_list(xs + _EXTRA, t) != image:
        return _fail("w-list-extension", t=t)
    if w_list(xs, rename_binders(t)) != image:
        return _fail("w-alpha-stable", t=t)
    for k, z in enumerate(xs):
        renamed = named_subst(t, z, Var(_FRESH))
        if w_list(xs[:k] + (_FRESH,) + xs[k + 1 :], renamed) != image:
            return _fail("w-variable-renaming", t=t, z=z)
    return None


@check("u-laws")
def _check_u_laws(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    xs = DEFAULT_ENUMERATION.take(cfg.fv_bound)
    n = len(xs)
    image = u_list(xs, a)
    free = fv_indexed(a)
    if not fv_named(image) <= set(xs):
        return _fail("u-free-variables-in-list", a=a)
    if w_list(xs, image) != a:
        return _fail("w-inverts-u", a=a)
    for i in range(1, n):
        if not alpha_eq(u_list(_exchange(xs, i), a), u_list(xs, swap(i, a))):
            return _fail("u-swap", a=a, i=i)
    for m in range(n + 1):
        if not alpha_eq(u_list(_insert(xs, m, _FRESH), increment(m, a)), image):
            return _fail("u-increment", a=a, m=m)
    for m in range(1, n + 1):
        if m in free:
            if xs[m - 1] not in fv_named(image):
                return _fail("u-used-slot-free", a=a, m=m)
        elif not alpha_eq(u_list(xs[: m - 1] + xs[m:], decrement(m, a)), image):
            return _fail("u-decrement", a=a, m=m)
    if not alpha_eq(u_list(xs + _EXTRA, a), image):
        return _fail("u-list-extension", a=a)
    for k in range(n):
        renamed_list = xs[:k] + (_FRESH,) + xs[k + 1 :]
        if not alpha_eq(named_subst(image, xs[k], Var(_FRESH)), u_list(renamed_list, a)):
            return _fail("u-variable-renaming", a=a, k=k + 1)
    if not alpha_eq(u_list(xs, a, VarEnumeration("z")), image):
        return _fail("u-fresh-choice-irrelevant", a=a)
    return None


# ------------------------------------------------------------------ #
#                            ISOMORPHISM                              #
# ------------------------------------------------------------------ #


def _roundtrip_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a in _universe(cfg, _indexed_spec(cfg), "indexed"):
        yield ("roundtrip-indexed", a)
    for t in _universe(cfg, _named_spec(cfg), "named"):
        yield ("roundtrip-named", t)


def _step_u_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a in _universe(cfg, _indexed_spec(cfg), "indexed"):
        for indexed, named in ISOMORPHIC_PAIRS:
            yield ("step-u", indexed, named, a)


def _step_w_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for t in _universe(cfg, _named_spec(cfg), "named"):
        for indexed, named in ISOMORPHIC_PAIRS:
            yield ("step-w", named, indexed, t)


def _equation_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a in _universe(cfg, _indexed_spec(cfg), "indexed"):
        yield ("eq-d-to-c", a)
    for t in _universe(cfg, _named_spec(cfg), "named"):
        yield ("eq-c-to-d", t)


_CLOSED = dict(size=5, named_size=4, fv_bound=3, with_metavars=False)

suite(
    "iso-roundtrip",
    "w_uniform after u_uniform is the identity, u_uniform after w_uniform is alpha-identity",
    size=6,
    named_size=5,
    fv_bound=3,
    with_metavars=True,
)(_roundtrip_cases)
suite("iso-step-u", "indexed steps are mirrored by named steps under u", **_CLOSED)(
    _step_u_cases
)
suite("iso-step-w", "named steps are mirrored by indexed steps under w", **_CLOSED)(
    _step_w_cases
)
suite("iso-eq", "the D and C equations correspond under the translations", **_CLOSED)(
    _equation_cases
)


@suite(
    "iso-open",
    "the isomorphism restated on terms with metavariables",
    size=5,
    named_size=4,
    fv_bound=3,
    with_metavars=True,
)
def _open_cases(cfg: SuiteConfig) -> Iterator[Case]:
    cfg = cfg.model_copy(update={"with_metavars": True})
    yield from _roundtrip_cases(cfg)
    yield from _step_u_cases(cfg)
    yield from _step_w_cases(cfg)
    yield from _equation_cases(cfg)


@check("roundtrip-indexed")
def _check_roundtrip_indexed(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    image = u_uniform(a)
    if w_uniform(image) != a:
        return _fail("w-after-u-identity", a=a, image=image)
    return None


@check("roundtrip-named")
def _check_roundtrip_named(case: Case, cfg: SuiteConfig) -> Outcome:
    _, t = case
    image = w_uniform(t)
    if not alpha_eq(u_uniform(image), t):
        return _fail("u-after-w-alpha-identity", t=t, image=image)
    return None


def _mirror(
    source_calc: CalculusId,
    target_calc: CalculusId,
    source: Any,
    translate: Callable[[Any], Any],
    cfg: SuiteConfig,
    law: str,
) -> Outcome:
    """Every step of `source` must be matched by one step of its translation"""
    cap = cfg.class_cap
    image = translate(source)
    targets = {node_key(target_calc, step.after, cap) for step in modulo_steps(target_calc, image, cap)}
    for step in modulo_steps(source_calc, source, cap):
        expected = translate(step.after)
        key = node_key(target_calc, expected, cap)
        if key in targets:
            continue
        inputs = dict(
            source=source,
            rule=step.rule,
            position=position_labels(step.position),
            reduct=step.after,
        )
        if key in reachable(target_calc, image, 3, cap):
            return _outcome(Verdict.FINDING, f"{law}-needs-several-steps", calculus=target_calc, **inputs)
        return _fail(law, calculus=target_calc, **inputs)
    return None


@check("step-u")
def _check_step_u(case: Case, cfg: SuiteConfig) -> Outcome:
    _, indexed, named, a = case
    xs = DEFAULT_ENUMERATION.take(fv_indexed(a).maximum)
    return _mirror(indexed, named, a, lambda term: u_list(xs, term), cfg, "u-preserves-steps")


@check("step-w")
def _check_step_w(case: Case, cfg: SuiteConfig) -> Outcome:
    _, named, indexed, t = case
    xs = DEFAULT_ENUMERATION.take(uniform_length(t))
    return _mirror(named, indexed, t, lambda term: w_list(xs, term), cfg, "w-preserves-steps")


@check("eq-d-to-c")
def _check_eq_d_to_c(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    xs = DEFAULT_ENUMERATION.take(fv_indexed(a).maximum)
    image = u_list(xs, a)
    for position in iter_positions(a):
        moved = eqd_apply(a, position)
        if moved is None:
            continue
        mirrored = eqc_apply(image, position, rename=True)
        if mirrored is None or not alpha_eq(mirrored, u_list(xs, moved)):
            return _fail("u-maps-d-to-c", a=a, position=position_labels(position))
    return None


@check("eq-c-to-d")
def _check_eq_c_to_d(case: Case, cfg: SuiteConfig) -> Outcome:
    _, t = case
    xs = DEFAULT_ENUMERATION.take(uniform_length(t))
    image = w_list(xs, t)
    for position in iter_positions(t):
        moved = eqc_apply(t, position, rename=True)
        if moved is None:
            continue
        if eqd_apply(image, position) != w_list(xs, moved):
            return _fail("w-maps-c-to-d", t=t, position=position_labels(position))
    return None


# ------------------------------------------------------------------ #
#                  EQUATIONS, TERMINATION, CONFLUENCE                 #
# ------------------------------------------------------------------ #


@suite(
    "eqd",
    "EqD is an involution preserving size and free indices, EqC is an involution",
    size=6,
    named_size=4,
    fv_bound=3,
    with_metavars=False,
)
def _eqd_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a in _universe(cfg, _indexed_spec(cfg), "indexed"):
        yield ("eqd", a)
    for t in _universe(cfg, _named_spec(cfg), "named"):
        yield ("eqc", t)


@check("eqd")
def _check_eqd(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    for position in iter_positions(a):
        moved = eqd_apply(a, position)
        if moved is None:
            continue
        where = position_labels(position)
        if eqd_apply(moved, position) != a:
            return _fail("eqd-involution", a=a, position=where)
        if size(moved) != size(a) or fv_indexed(moved) != fv_indexed(a):
            return _fail("eqd-preserves-size-and-free-indices", a=a, position=where)
        if a not in d_class(moved, cfg.class_cap):
            return _fail("d-class-symmetric", a=a, position=where)
    return None


@check("eqc")
def _check_eqc(case: Case, cfg: SuiteConfig) -> Outcome:
    _, t = case
    for position in iter_positions(t):
        moved = eqc_apply(t, position)
        if moved is None:
            continue
        if eqc_apply(moved, position) != t or fv_named(moved) != fv_named(t):
            return _fail("eqc-involution", t=t, position=position_labels(position))
    return None


_SUBSTITUTION_CALCULI = (CalculusId.REX_SUB, CalculusId.RE_SUB, CalculusId.REGC_SUB)


@suite("sim", "substitution normal forms of a[b] equal r_subst(a, b)", size=5, fv_bound=3)
def _sim_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a, b in _pure_pairs(cfg):
        for calculus in _SUBSTITUTION_CALCULI:
            yield ("sim", calculus, a, b)


@check("sim")
def _check_sim(case: Case, cfg: SuiteConfig) -> Outcome:
    _, calculus, a, b = case
    expected = r_subst(a, b)
    for strategy in cfg.strategies:
        try:
            result, _ = normalize(calculus, strategy, Clos(a, b), cfg.max_steps, cfg.class_cap)
        except BoundExceeded:
            return _outcome(
                Verdict.BOUND,
                "substitution-terminates",
                calculus=calculus,
                strategy=strategy,
                a=a,
                b=b,
            )
        if result != expected:
            return _fail(
                "simulates-substitution",
                calculus=calculus,
                strategy=strategy,
                a=a,
                b=b,
                result=result,
            )
    return None


@suite(
    "term-bound",
    "rex_sub normal forms are reached within the step bound",
    size=5,
    fv_bound=3,
    with_metavars=False,
)
def _term_bound_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a in _universe(cfg, _indexed_spec(cfg), "indexed"):
        yield ("term-bound", a)


@check("term-bound")
def _check_term_bound(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    for strategy in cfg.strategies:
        try:
            normalize(CalculusId.REX_SUB, strategy, a, cfg.max_steps, cfg.class_cap)
        except BoundExceeded as e:
            return _outcome(
                Verdict.BOUND,
                "substitution-terminates",
                strategy=strategy,
                a=a,
                steps=len(e.trace),
            )
    return None


@suite("joinability", "one-step rex peaks modulo D are joinable", size=5, fv_bound=3, with_metavars=True)
def _joinability_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for a in _universe(cfg, _indexed_spec(cfg), "indexed"):
        yield ("join", a)


@check("join")
def _check_join(case: Case, cfg: SuiteConfig) -> Outcome:
    _, a = case
    for b1, b2 in peaks(CalculusId.REX, a, cfg.class_cap):
        if not joinable(CalculusId.REX, b1, b2, cfg.join_depth, cfg.class_cap):
            return _fail("peak-joinable", a=a, left=b1, right=b2)
    return None


@suite("enum-count", "enumeration agrees with the recurrence counter", size=5, fv_bound=3)
def _enum_count_cases(cfg: SuiteConfig) -> Iterator[Case]:
    for world, closures, metavars in product(World, (False, True), (False, True)):
        for fv_bound in range(cfg.fv_bound + 1):
            max_size = cfg.size if world is World.INDEXED else min(cfg.size, 4)
            yield (
                "enum-count",
                EnumSpec(
                    world=world,
                    max_size=max_size,
                    fv_bound=fv_bound,
                    allow_closures=closures,
                    allow_metavars=metavars,
                    max_delta=cfg.max_delta,
                ),
            )


@check("enum-count")
def _check_enum_count(case: Case, cfg: SuiteConfig) -> Outcome:
    _, spec = case
    terms = list(enumerate_terms(spec))
    expected = count_terms(spec)
    spec_text = spec.model_dump_json()
    if len(terms) != expected:
        return _fail("count-matches-recurrence", spec=spec_text, enumerated=len(terms), counted=expected)
    if len(set(terms)) != len(terms):
        return _fail("enumeration-duplicate-free", spec=spec_text)
    return None


# ------------------------------------------------------------------ #
#                               RUNNER                                #
# ------------------------------------------------------------------ #


def get_suite(suite_id: str) -> Suite:
    try:
        return SUITES[suite_id]
    except KeyError:
        raise ValueError(f"Unknown suite '{suite_id}', expected one of: {', '.join(SUITES)}") from None


def run_suite(suite_id: str, config: Optional[SuiteConfig] = None) -> PropertyReport:
    """
    Check every case of the suite's universe (or of one shard of it) and
    report. Failures are report content, never exceptions.
    """
    selected = get_suite(suite_id)
    cfg = (config or SuiteConfig()).resolve(selected.defaults)
    if cfg.workers > 1 and cfg.shard is None:
        return _run_sharded(suite_id, cfg)

    logger.info(f"Running suite {suite_id}")
    report = PropertyReport(property_id=suite_id, config=cfg.model_dump(mode="json"))
    started = time.perf_counter()
    for index, case in enumerate(selected.cases(cfg)):
        if cfg.shard is not None and index % cfg.shard[1] != cfg.shard[0]:
            continue
        report.universe += 1
        try:
            outcome = CHECKS[case[0]](case, cfg)
        except ClassCapExceeded as e:
            outcome = _outcome(Verdict.BOUND, "class-cap", case=case[0], cap=e.cap)
        if outcome is None:
            continue
        verdict, details = outcome
        if verdict is Verdict.FAIL:
            logger.error(f"Suite {suite_id} failed: {details}")
            report.record_failure(details)
        elif verdict is Verdict.BOUND:
            logger.warning(f"Suite {suite_id} hit a bound: {details}")
            report.record_bound(details)
        elif len(report.findings) < settings.MAX_COUNTEREXAMPLES:
            report.findings.append(details)
    report.elapsed = time.perf_counter() - started
    logger.info(
        f"Suite {suite_id} finished: {report.status.value}, "
        f"{report.universe} cases in {report.elapsed:.2f}s"
    )
    return report


def _run_sharded(suite_id: str, cfg: SuiteConfig) -> PropertyReport:
    configs = [
        cfg.model_copy(update={"shard": (index, cfg.workers), "workers": 1})
        for index in range(cfg.workers)
    ]
    with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
        reports: List[PropertyReport] = list(executor.map(run_suite, [suite_id] * cfg.workers, configs))
    merged = reduce(PropertyReport.merge, reports)
    merged.config = cfg.model_dump(mode="json")
    return merged


def run_all(config: Optional[SuiteConfig] = None) -> List[PropertyReport]:
    return [run_suite(suite_id, config) for suite_id in SUITES]
