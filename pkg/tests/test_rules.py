import pytest

from rexlab.constants.calculi import CalculusId, RuleId
from rexlab.engine.equations import (
    EquationMove,
    c_class,
    canonical,
    class_key,
    d_class,
    eqc_apply,
    eqd_apply,
    equation_moves,
)
from rexlab.engine.rules import apply_rule_at_root
from rexlab.errors import ClassCapExceeded
from rexlab.terms.named import ExSub, NAbs, NApp, Var, alpha_eq


class TestIndexedRules:
    @pytest.mark.parametrize(
        "rule, source, expected",
        [
            (RuleId.APP, r"(1 2)[3]", r"1[3] 2[3]"),
            (RuleId.LAMB, r"(\ 1)[2]", r"\ 2[3]"),
            (RuleId.VAR, r"1[\ 1]", r"\ 1"),
            (RuleId.VARR, r"3[\ 1]", r"2"),
            (RuleId.GC, r"2[5]", r"1"),
            (RuleId.GC, r"(\ 1)[5]", r"\ 1"),
            (RuleId.COMP, r"1[1][2]", r"2[3][1[2]]"),
        ],
    )
    def test_contracta(self, ix, rule, source, expected):
        assert apply_rule_at_root(rule, ix(source), CalculusId.RE) == ix(expected)

    @pytest.mark.parametrize(
        "rule, source",
        [
            (RuleId.VARR, r"1[2]"),
            (RuleId.GC, r"1[5]"),
            (RuleId.COMP, r"1[2][3]"),
            (RuleId.BETA, r"1 2"),
            (RuleId.VAR, r"(\ 1)[2]"),
        ],
    )
    def test_side_conditions(self, ix, rule, source):
        assert apply_rule_at_root(rule, ix(source)) is None

    def test_beta_depends_on_the_calculus(self, ix):
        redex = ix(r"(\ \ 2) 1")
        assert apply_rule_at_root(RuleId.BETA, redex, CalculusId.RE) == ix(r"(\ 2)[1]")
        assert apply_rule_at_root(RuleId.BETA, redex, CalculusId.DB) == ix(r"\ 2")
        assert apply_rule_at_root(RuleId.BETA, redex, CalculusId.R) == ix(r"\ 2")

    def test_equations_are_not_rules(self, ix):
        with pytest.raises(ValueError):
            apply_rule_at_root(RuleId.EQD_LR, ix("1[2][3]"))


class TestNamedRules:
    def test_beta(self, nm):
        assert apply_rule_at_root(RuleId.NBETA, nm(r"(\x. x) y")) == nm("x[x:=y]")

    def test_app(self, nm):
        assert apply_rule_at_root(RuleId.NAPP, nm("(x z)[x:=y]")) == nm("x[x:=y] z[x:=y]")

    def test_variables(self, nm):
        assert apply_rule_at_root(RuleId.NVAR, nm("x[x:=y]")) == Var("y")
        assert apply_rule_at_root(RuleId.NVARGC, nm("z[x:=y]")) == Var("z")
        assert apply_rule_at_root(RuleId.NVARGC, nm("x[x:=y]")) is None

    def test_garbage_collection(self, nm):
        assert apply_rule_at_root(RuleId.NGC, nm(r"(\z. z)[x:=y]")) == nm(r"\z. z")
        assert apply_rule_at_root(RuleId.NGC, nm("x[x:=y]")) is None

    def test_lamb_without_clash(self, nm):
        result = apply_rule_at_root(RuleId.NLAMB, nm(r"(\z. x)[x:=y]"))
        assert result == nm(r"\z. x[x:=y]")

    def test_lamb_renames_a_capturing_binder(self, nm):
        result = apply_rule_at_root(RuleId.NLAMB, nm(r"(\y. x)[x:=y]"))
        assert result == NAbs("y'", ExSub(Var("x"), "x", Var("y")))
        assert alpha_eq(result, nm(r"\w. x[x:=y]"))

    def test_comp(self, nm):
        assert apply_rule_at_root(RuleId.NCOMP, nm("z[y:=u][x:=w]")) is None
        result = apply_rule_at_root(RuleId.NCOMP, nm("z[x:=y][y:=w]"))
        assert result == nm("z[y:=w][x:=y[y:=w]]")


class TestEqD:
    def test_move_at_root(self, ix):
        assert eqd_apply(ix("1[2][3]"), ()) == ix("2[4][1]")

    def test_involution(self, ix):
        term = ix("1[2][3]")
        assert eqd_apply(eqd_apply(term, ()), ()) == term

    def test_side_condition(self, ix):
        assert eqd_apply(ix("1[1][3]"), ()) is None

    def test_moves_are_labelled_by_direction(self, ix):
        forward = list(equation_moves(ix("1[2][3]")))
        backward = list(equation_moves(ix("2[4][1]")))
        assert forward == [(EquationMove(RuleId.EQD_RL, ()), ix("2[4][1]"))]
        assert backward == [(EquationMove(RuleId.EQD_LR, ()), ix("1[2][3]"))]

    @pytest.mark.parametrize(
        "source, members",
        [
            ("1", ["1"]),
            ("1[2][3]", ["1[2][3]", "2[4][1]"]),
            (r"(\ 1) 2", [r"(\ 1) 2"]),
        ],
    )
    def test_d_class(self, ix, source, members):
        assert d_class(ix(source)) == frozenset(ix(m) for m in members)

    def test_canonical_representative(self, ix):
        a, b = ix("1[2][3]"), ix("2[4][1]")
        assert canonical(a) == canonical(b) == a
        assert canonical(canonical(b)) == canonical(b)
        assert class_key(a) == class_key(b)

    def test_class_cap(self, ix):
        with pytest.raises(ClassCapExceeded) as excinfo:
            d_class(ix("1[2][3]"), cap=1)
        assert excinfo.value.cap == 1


class TestEqC:
    def test_move(self, nm):
        assert eqc_apply(nm("x[x:=y][z:=y]"), ()) == nm("x[z:=y][x:=y]")
        assert eqc_apply(nm("z[x:=u][y:=w]"), ()) == nm("z[y:=w][x:=u]")

    def test_dependent_substitutions_do_not_commute(self, nm):
        assert eqc_apply(nm("z[x:=y][y:=w]"), ()) is None

    def test_clash_needs_renaming(self, nm):
        term = nm("x[x:=u][y:=x]")
        assert eqc_apply(term, ()) is None
        renamed = eqc_apply(term, (), rename=True)
        assert renamed == ExSub(ExSub(Var("x'"), "y", Var("x")), "x'", Var("u"))

    def test_c_class_is_modulo_alpha(self, nm):
        members = c_class(nm("z[x:=u][y:=w]"))
        assert len(members) == 2
        assert class_key(nm("z[x:=u][y:=w]")) == class_key(nm("z[y:=w][x:=u]"))

    def test_application_is_not_a_move(self, nm):
        assert eqc_apply(NApp(Var("x"), Var("y")), ()) is None
