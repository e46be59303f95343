import random

import pytest
from hypothesis import given

from rexlab.config import settings
from rexlab.errors import ParseError
from rexlab.oracles.enumeration import EnumSpec, random_term
from rexlab.syntax.parser import World, parse_indexed, parse_named, parse_term
from rexlab.syntax.printer import print_term
from rexlab.terms.indexed import Abs, App, Clos, Index, Meta
from rexlab.terms.named import ExSub, NAbs, NApp, NMeta, Var
from rexlab.terms.natset import NatSet
from tests.strategies import indexed_terms, named_terms


class TestIndexedSyntax:
    @pytest.mark.parametrize(
        "source, expected",
        [
            (r"\ 1 2", Abs(App(Index(1), Index(2)))),
            ("1[2] 3", App(Clos(Index(1), Index(2)), Index(3))),
            ("λ 1", Abs(Index(1))),
            ("1 2 3", App(App(Index(1), Index(2)), Index(3))),
            ("1[2][3]", Clos(Clos(Index(1), Index(2)), Index(3))),
            ("?X{1,3}", Meta("X", NatSet.of([1, 3]))),
            ("?X{}[1]", Clos(Meta("X"), Index(1))),
            ("(\\ 1)\n  2", App(Abs(Index(1)), Index(2))),
        ],
    )
    def test_parse(self, source, expected):
        assert parse_indexed(source) == expected

    @pytest.mark.parametrize(
        "term, text",
        [
            (App(Abs(Index(1)), Index(2)), r"(\ 1) 2"),
            (App(Index(1), App(Index(2), Index(3))), "1 (2 3)"),
            (Clos(App(Index(1), Index(2)), Index(3)), "(1 2)[3]"),
            (App(Index(1), Clos(Index(2), Index(3))), "1 2[3]"),
            (Meta("X", NatSet.of([1, 2])), "?X{1,2}"),
        ],
    )
    def test_print(self, term, text):
        assert print_term(term) == text

    @pytest.mark.parametrize(
        "source, line, column",
        [("0", 1, 1), ("1 )", 1, 3), ("(1", 1, 3), ("1\n  #", 2, 3), ("\\", 1, 2)],
    )
    def test_errors_carry_a_location(self, source, line, column):
        with pytest.raises(ParseError) as excinfo:
            parse_indexed(source)
        assert (excinfo.value.line, excinfo.value.column) == (line, column)

    @given(indexed_terms(closures=True, metavars=True))
    def test_print_parse_round_trip(self, a):
        assert parse_indexed(print_term(a)) == a


class TestNamedSyntax:
    @pytest.mark.parametrize(
        "source, expected",
        [
            (r"\x. x[x:=y]", NAbs("x", ExSub(Var("x"), "x", Var("y")))),
            (r"(\x. x) y", NApp(NAbs("x", Var("x")), Var("y"))),
            ("x' y_1", NApp(Var("x'"), Var("y_1"))),
            ("?X{y,x}", NMeta("X", frozenset({"x", "y"}))),
            (r"t[x:=\y. y]", ExSub(Var("t"), "x", NAbs("y", Var("y")))),
        ],
    )
    def test_parse(self, source, expected):
        assert parse_named(source) == expected

    def test_print_sorts_decorations(self):
        assert print_term(NMeta("X", frozenset({"y", "x"}))) == "?X{x,y}"

    @pytest.mark.parametrize("source", ["x.", r"\1. x", "x[x=y]", "?X{1}"])
    def test_errors(self, source):
        with pytest.raises(ParseError):
            parse_named(source)

    @given(named_terms(metavars=True))
    def test_print_parse_round_trip(self, t):
        assert parse_named(print_term(t)) == t


def test_parse_term_dispatches_on_the_world():
    assert parse_term("1", World.INDEXED) == Index(1)
    assert parse_term("x", "named") == Var("x")


def test_print_rejects_other_values():
    with pytest.raises(TypeError):
        print_term("1")


@pytest.mark.slow
@pytest.mark.parametrize("world", list(World))
def test_random_terms_survive_printing(world):
    spec = EnumSpec(world=world, max_size=14, fv_bound=3, allow_metavars=True)
    rng = random.Random(settings.DEFAULT_SEED)
    for _ in range(settings.RANDOM_CASES):
        term = random_term(rng, spec)
        assert parse_term(print_term(term), world) == term
