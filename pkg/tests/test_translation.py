import pytest
from hypothesis import given

from rexlab.errors import DuplicateVariableList, FreeIndexOutOfRange, FreeVariableNotInList
from rexlab.terms.indexed import Abs, App, Clos, Index, Meta, fv_indexed
from rexlab.terms.named import NAbs, NApp, NMeta, Var, alpha_eq, fv_named
from rexlab.terms.natset import NatSet
from rexlab.translate.translation import (
    DEFAULT_ENUMERATION,
    VarEnumeration,
    u_list,
    u_uniform,
    uniform_length,
    w_list,
    w_uniform,
)
from tests.strategies import indexed_terms, named_terms


class TestVarEnumeration:
    def test_names(self):
        assert DEFAULT_ENUMERATION.take(3) == ("x1", "x2", "x3")
        assert VarEnumeration("v").name(4) == "v4"

    def test_index_of(self):
        assert DEFAULT_ENUMERATION.index_of("x12") == 12
        assert DEFAULT_ENUMERATION.index_of("x0") is None
        assert DEFAULT_ENUMERATION.index_of("y1") is None

    def test_fresh(self):
        assert DEFAULT_ENUMERATION.fresh({"x1", "x2", "y"}) == "x3"

    @pytest.mark.parametrize("prefix", ["x1", "1x", ""])
    def test_invalid_prefix(self, prefix):
        with pytest.raises(ValueError):
            VarEnumeration(prefix)


class TestW:
    @pytest.mark.parametrize(
        "xs, source, expected",
        [
            (("x",), r"\y. y x", Abs(App(Index(1), Index(2)))),
            (("x",), "x", Index(1)),
            (("x",), "y[y:=x]", Clos(Index(1), Index(1))),
            (("y", "z"), r"\x. x z", Abs(App(Index(1), Index(3)))),
            (("x", "y"), "?X{y}", Meta("X", NatSet.of([2]))),
        ],
    )
    def test_w_list(self, nm, xs, source, expected):
        assert w_list(xs, nm(source)) == expected

    def test_first_occurrence_wins(self, nm):
        assert w_list(("x", "x"), nm("x")) == Index(1)

    def test_free_variable_outside_the_list(self, nm):
        with pytest.raises(FreeVariableNotInList) as excinfo:
            w_list(("x",), nm("x y"))
        assert excinfo.value.name == "y"

    def test_uniform(self, nm):
        assert uniform_length(nm("x3 x1")) == 3
        assert w_uniform(nm("?X{x1}")) == Meta("X", NatSet.of([1]))
        assert w_uniform(nm(r"\x1. x1 x2")) == Abs(App(Index(1), Index(3)))

    def test_uniform_needs_enumeration_names(self, nm):
        with pytest.raises(FreeVariableNotInList):
            w_uniform(nm("y"))


class TestU:
    def test_u_list(self):
        image = u_list(("x",), Abs(App(Index(1), Index(2))))
        assert image == NAbs("x1", NApp(Var("x1"), Var("x")))
        assert alpha_eq(image, NAbs("z", NApp(Var("z"), Var("x"))))

    def test_closure(self, nm):
        image = u_list(("x",), Clos(Index(1), Index(1)))
        assert alpha_eq(image, nm("z[z:=x]"))

    def test_metavariable(self):
        image = u_list(("x", "y"), Meta("X", NatSet.of([1, 2])))
        assert image == NMeta("X", frozenset({"x", "y"}))

    def test_uniform(self, nm):
        assert u_uniform(Abs(App(Index(1), Index(2)))) == nm(r"\x2. x2 x1")

    def test_duplicate_list(self):
        with pytest.raises(DuplicateVariableList):
            u_list(("x", "x"), Index(1))

    def test_index_out_of_range(self):
        with pytest.raises(FreeIndexOutOfRange) as excinfo:
            u_list(("x",), App(Index(1), Index(2)))
        assert (excinfo.value.index, excinfo.value.length) == (2, 1)

    def test_fresh_binders_avoid_the_list(self):
        image = u_list(("x1",), Abs(Index(2)))
        assert image == NAbs("x2", Var("x1"))


class TestRoundTrips:
    @given(indexed_terms(max_index=3, closures=True, metavars=True))
    def test_w_after_u_is_the_identity(self, a):
        assert w_uniform(u_uniform(a)) == a

    @given(named_terms(metavars=True))
    def test_u_after_w_is_alpha_identity(self, t):
        assert alpha_eq(u_uniform(w_uniform(t)), t)

    @given(indexed_terms(max_index=3, closures=True))
    def test_u_keeps_free_variables_in_the_list(self, a):
        xs = DEFAULT_ENUMERATION.take(fv_indexed(a).maximum)
        assert fv_named(u_list(xs, a)) <= set(xs)
