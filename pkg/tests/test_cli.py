import json

import pytest

from rexlab.app import cli
from rexlab.modules.validators import check_meta_args, check_shard, check_var_list
from rexlab.utils.responses import create_error_response, create_success_response

OMEGA = r"(\ 1 1) (\ 1 1)"

pytestmark = pytest.mark.integration


def run(runner, *args, input=None):
    return runner.invoke(cli, list(args), input=input)


def run_json(runner, *args):
    result = run(runner, *args, "--format", "json")
    return result, json.loads(result.stdout)


class TestTermCommands:
    def test_parse(self, runner):
        result = run(runner, "parse", "(\\ 1)   2")
        assert result.exit_code == 0
        assert result.stdout == "(\\ 1) 2\n"

    def test_parse_json(self, runner):
        result, data = run_json(runner, "parse", "\\x. x", "--world", "named")
        assert result.exit_code == 0
        assert data == {
            "success": True,
            "message": "Parsed",
            "world": "named",
            "term": "\\x. x",
            "size": 2,
        }

    def test_parse_from_stdin(self, runner):
        result = run(runner, "parse", input="1[2]\n")
        assert result.exit_code == 0
        assert result.stdout == "1[2]\n"

    def test_parse_from_file(self, runner, tmp_path):
        source = tmp_path / "term.txt"
        source.write_text("\\ 1", encoding="utf-8")
        result = run(runner, "parse", "--file", str(source))
        assert result.stdout == "\\ 1\n"

    def test_parse_error(self, runner):
        result, data = run_json(runner, "parse", "(1")
        assert result.exit_code == 1
        assert data["error_key"] == "parse_error"
        assert "line 1, column 3" in data["error"]

    def test_missing_input(self, runner):
        result = run(runner, "parse", input="")
        assert result.exit_code == 1
        assert "No term given" in result.stderr

    def test_fv(self, runner):
        assert run(runner, "fv", "\\ 1 3").stdout == "{2}\n"
        assert run(runner, "fv", "\\x. x y", "--world", "named").stdout == "{y}\n"

    def test_enumerate(self, runner):
        args = ["enumerate", "--max-size", "2", "--fv-bound", "1", "--no-closures"]
        result = run(runner, *args)
        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["1", "\\ 1", "\\ 2"]
        assert run(runner, *args, "--count").stdout == "3\n"

    def test_enumerate_random_is_seeded(self, runner):
        args = ["enumerate", "--max-size", "8", "--random", "5", "--seed", "4"]
        first = run(runner, *args)
        assert first.exit_code == 0
        assert len(first.stdout.splitlines()) == 5
        assert run(runner, *args).stdout == first.stdout


class TestReductionCommands:
    def test_reduce(self, runner):
        result = run(runner, "reduce", "(\\ 1) 2", "--calculus", "rex")
        assert result.exit_code == 0
        assert result.stdout == "2\n"

    def test_reduce_with_trace(self, runner):
        result = run(runner, "normalize", "(\\ 1) 2", "--calculus", "rex", "--trace")
        assert result.stdout.splitlines() == ["Beta @ root : 1[2]", "Var @ root : 2", "2"]

    def test_named_calculus_reads_named_syntax(self, runner):
        result = run(runner, "reduce", "(\\x. x) y", "--calculus", "x", "--strategy", "ri")
        assert result.exit_code == 0
        assert result.stdout == "y\n"

    def test_reduce_json(self, runner):
        result, data = run_json(runner, "reduce", "(\\ 1) 2", "--calculus", "re")
        assert result.exit_code == 0
        assert data["result"] == "2"
        assert data["message"] == "Normal form reached in 2 steps"
        assert data["trace"]["status"] == "normal-form"

    def test_bound_exceeded(self, runner):
        result = run(runner, "reduce", OMEGA, "--calculus", "dB", "--max-steps", "3")
        assert result.exit_code == 2
        assert result.stdout == OMEGA + "\n"
        assert "No normal form within 3 steps" in result.stderr

    def test_bound_exceeded_json_keeps_the_trace(self, runner):
        result, data = run_json(runner, "reduce", OMEGA, "--calculus", "dB", "--max-steps", "3")
        assert result.exit_code == 2
        assert data["error_key"] == "bound_exceeded"
        assert len(data["trace"]["steps"]) == 3
        assert data["trace"]["status"] == "bound-exceeded"

    def test_calculus_is_required(self, runner):
        result = run(runner, "reduce", "1")
        assert result.exit_code == 1

    def test_world_mismatch(self, runner):
        result = run(runner, "reduce", "x", "--calculus", "rex")
        assert result.exit_code == 1

    def test_missing_input(self, runner):
        result, data = run_json(runner, "reduce", "--calculus", "rex")
        assert result.exit_code == 1
        assert data["error_key"] == "missing_input"

    def test_replay(self, runner, tmp_path):
        _, data = run_json(runner, "reduce", "(\\ 1 1) 2", "--calculus", "rex")
        saved = tmp_path / "trace.json"
        saved.write_text(json.dumps(data), encoding="utf-8")
        result = run(runner, "replay", str(saved))
        assert result.exit_code == 0
        assert result.stdout == "2 2\n"

    def test_replay_detects_tampering(self, runner, tmp_path):
        _, data = run_json(runner, "reduce", "(\\ 1) 2", "--calculus", "rex")
        data["trace"]["steps"][0]["after"] = "7"
        saved = tmp_path / "trace.json"
        saved.write_text(json.dumps(data["trace"]), encoding="utf-8")
        result, response = run_json(runner, "replay", str(saved))
        assert result.exit_code == 1
        assert response["error_key"] == "replay_mismatch"

    def test_replay_rejects_other_files(self, runner, tmp_path):
        saved = tmp_path / "trace.json"
        saved.write_text("not json", encoding="utf-8")
        result, response = run_json(runner, "replay", str(saved))
        assert result.exit_code == 1
        assert response["error_key"] == "invalid_trace"

    def test_replay_checks_the_recorded_result(self, runner, tmp_path):
        _, data = run_json(runner, "reduce", "(\\ 1) 2", "--calculus", "rex")
        data["trace"]["result"] = "7"
        saved = tmp_path / "trace.json"
        saved.write_text(json.dumps(data), encoding="utf-8")
        result, response = run_json(runner, "replay", str(saved))
        assert result.exit_code == 1
        assert response["error_key"] == "invalid_trace"
        assert "Recorded result differs" in response["error"]

    def test_replay_rejects_an_unknown_calculus(self, runner, tmp_path):
        saved = tmp_path / "trace.json"
        saved.write_text(json.dumps({"calculus": "nope", "initial": "1"}), encoding="utf-8")
        result, response = run_json(runner, "replay", str(saved))
        assert result.exit_code == 1
        assert response["error_key"] == "invalid_trace"


class TestTranslateAndMeta:
    def test_to_named(self, runner):
        result = run(runner, "translate", "\\ 1 2", "--to", "named")
        assert result.stdout == "\\x2. x2 x1\n"

    def test_to_indexed_with_a_list(self, runner):
        result = run(runner, "translate", "\\x. x z", "--to", "indexed", "--vars", "y, z")
        assert result.exit_code == 0
        assert result.stdout == "\\ 1 3\n"

    def test_invalid_list(self, runner):
        result, data = run_json(runner, "translate", "x", "--to", "indexed", "--vars", "a,a")
        assert result.exit_code == 1
        assert data["error_key"] == "invalid_var_list"

    def test_free_variable_outside_the_list(self, runner):
        result, data = run_json(runner, "translate", "y", "--to", "indexed", "--vars", "x")
        assert result.exit_code == 1
        assert data["error_key"] == "translation_error"

    @pytest.mark.parametrize(
        "args, expected",
        [
            (["swap", "1", "1 2"], "2 1"),
            (["increment", "0", "\\ 1 2"], "\\ 1 3"),
            (["db-subst", "1 2", "1", "3"], "3 1"),
            (["r-subst", "\\ 2", "1"], "\\ 2"),
            (["stacked-increment", "2", "1"], "3"),
        ],
    )
    def test_meta(self, runner, args, expected):
        result = run(runner, "meta", *args)
        assert result.exit_code == 0
        assert result.stdout == expected + "\n"

    def test_meta_arity(self, runner):
        result, data = run_json(runner, "meta", "swap", "x", "1")
        assert result.exit_code == 1
        assert data["error_key"] == "invalid_arguments"

    def test_undefined_decrement(self, runner):
        result, data = run_json(runner, "meta", "decrement", "1", "1")
        assert result.exit_code == 1
        assert data["error_key"] == "decrement_undefined"


class TestCheckCommand:
    def test_passing_suite_writes_a_report(self, runner, report_dir):
        result, data = run_json(
            runner, "check", "enum-count", "--size", "2", "--fv-bound", "1",
            "--report-dir", str(report_dir),
        )
        assert result.exit_code == 0
        assert data["success"] is True
        [entry] = data["reports"]
        assert entry["suite"] == "enum-count"
        assert entry["status"] == "pass"
        saved = json.loads(open(entry["report"], encoding="utf-8").read())
        assert saved["property_id"] == "enum-count"
        assert saved["universe"] == entry["universe"]

    def test_bound_exits_with_two(self, runner, report_dir):
        result = run(
            runner, "check", "term-bound", "--size", "3", "--max-steps", "0",
            "--strategy", "lo", "--report-dir", str(report_dir),
        )
        assert result.exit_code == 2

    def test_shard(self, runner, report_dir):
        result, data = run_json(
            runner, "check", "cor1", "--size", "2", "--subst-size", "2", "--fv-bound", "1",
            "--shard", "0/2", "--report-dir", str(report_dir),
        )
        assert result.exit_code == 0
        assert data["reports"][0]["universe"] > 0

    @pytest.mark.parametrize("shard", ["3/3", "a/b"])
    def test_invalid_shard(self, runner, report_dir, shard):
        result = run(runner, "check", "cor1", "--shard", shard, "--report-dir", str(report_dir))
        assert result.exit_code == 1
        assert not report_dir.exists()

    def test_unknown_suite(self, runner):
        assert run(runner, "check", "nope").exit_code == 1


class TestValidators:
    def test_shard(self):
        assert check_shard("1/3") == {"result": True, "shard": (1, 3)}
        assert check_shard(None) == {"result": True, "shard": None}
        assert check_shard("3/3")["error"] == "invalid_shard"
        assert not check_shard("a/b")["result"]

    def test_var_list(self):
        assert check_var_list("a, b")["variables"] == ["a", "b"]
        assert check_var_list("")["variables"] == []
        assert not check_var_list("a,a")["result"]
        assert not check_var_list("a,1b")["result"]

    def test_meta_args(self):
        assert check_meta_args("update", ["0", "2", "1"]) == {"result": True}
        assert not check_meta_args("update", ["0", "1"])["result"]
        assert "natural number" in check_meta_args("swap", ["-1", "1"])["reason"]


class TestResponses:
    def test_error_response(self):
        response, code = create_error_response("bound_exceeded", 2, max_steps=5)
        assert code == 2
        assert response == {
            "success": False,
            "error": "No normal form within 5 steps",
            "error_key": "bound_exceeded",
        }

    def test_missing_interpolation_falls_back_to_the_template(self):
        response, _ = create_error_response("parse_error", line=1)
        assert response["error"].startswith("Parse error at line {line}")

    def test_success_response(self):
        response, code = create_success_response("normal_form", {"result": "2"}, steps=2)
        assert code == 0
        assert response == {
            "success": True,
            "message": "Normal form reached in 2 steps",
            "result": "2",
        }

    def test_success_flag_follows_the_exit_code(self):
        response, code = create_success_response("suite_failed", exit_code=3, suite="x", failures=1)
        assert code == 3
        assert response["success"] is False
