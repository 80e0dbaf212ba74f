"""The command-line surface: subcommands, exit statuses, report rendering."""

import json

import pytest

from choquetrn.cli import EXIT_FAIL, EXIT_INPUT, EXIT_PASS, EXIT_USAGE, main


SOLVABLE = {
    "atoms": ["a", "b"],
    "measures": {
        "nu": {"rule": "additive", "weights": {"a": "1/2", "b": "1/3"}},
        "mu": {"rule": "explicit", "table": [
            {"set": [], "value": "0"},
            {"set": ["a"], "value": "1"},
            {"set": ["b"], "value": "5/3"},
            {"set": ["a", "b"], "value": "8/3"},
        ]},
    },
    "functions": {
        "f": {"a": "2", "b": "5"},
        "g": {"a": "1", "b": "3"},
    },
    "family": [
        {"alpha": "0", "set": ["a", "b"]},
        {"alpha": "2", "set": ["b"]},
        {"alpha": "5", "set": []},
    ],
}

UNSOLVABLE = {
    "atoms": ["1", "2"],
    "measures": {
        "nu": {"rule": "indicator_full"},
        "mu": {"rule": "cardinality", "scale": "1/2"},
    },
}


@pytest.fixture
def solvable_path(tmp_path):
    path = tmp_path / "solvable.json"
    path.write_text(json.dumps(SOLVABLE))
    return str(path)


@pytest.fixture
def unsolvable_path(tmp_path):
    path = tmp_path / "unsolvable.json"
    path.write_text(json.dumps(UNSOLVABLE))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitStatuses:
    def test_pass_is_zero(self, capsys, solvable_path):
        code, out, _ = run(capsys, "verify", "--input", solvable_path)
        assert code == EXIT_PASS
        assert json.loads(out)["verdicts"]["radon_nikodym"] is True

    def test_failing_verdict_is_one(self, capsys, unsolvable_path):
        code, out, _ = run(capsys, "solve", "--input", unsolvable_path)
        assert code == EXIT_FAIL
        report = json.loads(out)
        assert report["verdicts"]["solvable"] is False
        assert report["tables"]["chains_refuted"] == 2

    def test_usage_error_is_two(self, capsys):
        code, _, err = run(capsys, "not-a-command")
        assert code == EXIT_USAGE
        assert "usage" in err

    def test_input_error_is_three(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", "--input", str(tmp_path / "x.json"))
        assert code == EXIT_INPUT
        assert "input error" in err

    def test_malformed_input_is_three(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"atoms": ["a", "a"]}')
        code, _, err = run(capsys, "props", "--input", str(bad))
        assert code == EXIT_INPUT


class TestCommands:
    def test_props(self, capsys, solvable_path):
        code, out, _ = run(capsys, "props", "--input", solvable_path)
        assert code == EXIT_PASS
        report = json.loads(out)
        assert report["verdicts"]["abs_continuous"] is True
        assert report["verdicts"]["nu.null_additive"] is True
        assert report["tables"]["modulus"]

    def test_integrate(self, capsys, solvable_path):
        code, out, _ = run(capsys, "integrate", "--input", solvable_path)
        assert code == EXIT_PASS
        assert json.loads(out)["tables"]["value"] == "8/3"

    def test_integrate_over_set(self, capsys, solvable_path):
        code, out, _ = run(
            capsys, "integrate", "--input", solvable_path, "--set", "a"
        )
        assert json.loads(out)["tables"]["value"] == "1"

    def test_comonotone(self, capsys, solvable_path):
        code, out, _ = run(
            capsys, "comonotone", "--input", solvable_path, "--f", "f", "--g", "g"
        )
        assert code == EXIT_PASS
        assert json.loads(out)["verdicts"]["comonotone"] is True

    def test_check_decomposition(self, capsys, solvable_path):
        code, out, _ = run(capsys, "check-decomposition", "--input", solvable_path)
        assert code == EXIT_PASS
        report = json.loads(out)
        assert report["verdicts"]["decomposition"] is True
        assert report["verdicts"]["tail"] is True

    def test_derive_and_dyadic(self, capsys, solvable_path):
        code, out, _ = run(capsys, "derive", "--input", solvable_path)
        assert json.loads(out)["tables"]["function"] == {"a": "2", "b": "5"}
        code, out, _ = run(capsys, "dyadic", "--input", solvable_path, "--n", "3")
        assert code == EXIT_PASS
        assert json.loads(out)["tables"]["function"] == {"a": "2", "b": "3"}

    def test_solve(self, capsys, solvable_path):
        code, out, _ = run(capsys, "solve", "--input", solvable_path)
        assert code == EXIT_PASS
        assert json.loads(out)["tables"]["function"] == {"a": "2", "b": "5"}

    def test_classical(self, capsys, solvable_path):
        code, out, _ = run(capsys, "classical", "--input", solvable_path)
        assert code == EXIT_PASS
        report = json.loads(out)
        assert report["verdicts"]["holds"] is True
        assert report["verdicts"]["solver_agrees"] is True

    def test_sigma_finite(self, capsys, tmp_path):
        path = tmp_path / "trunc.json"
        path.write_text(json.dumps({
            "truncations": {
                "N_max": 5,
                "measures": {
                    "mu": {"rule": "max_element"},
                    "nu": {"rule": "indicator_nonempty"},
                },
            }
        }))
        code, out, _ = run(capsys, "sigma-finite", "--input", str(path))
        assert code == EXIT_PASS
        report = json.loads(out)
        assert report["verdicts"]["glue"] is True
        assert report["verdicts"]["verify"] is True

    def test_examples(self, capsys):
        for name in ("ex-3-6", "ex-4-4", "classical"):
            code, out, _ = run(capsys, "example", name)
            assert code == EXIT_PASS, name
            assert json.loads(out)["pass"] is True

    def test_missing_name_is_input_error(self, capsys, solvable_path):
        code, _, err = run(
            capsys, "integrate", "--input", solvable_path, "--f", "missing"
        )
        assert code == EXIT_INPUT


class TestReports:
    def test_deterministic_output(self, capsys, solvable_path):
        _, out1, _ = run(capsys, "solve", "--input", solvable_path)
        _, out2, _ = run(capsys, "solve", "--input", solvable_path)
        assert out1 == out2

    def test_digest_and_input_echo(self, capsys, solvable_path):
        _, out, _ = run(capsys, "verify", "--input", solvable_path)
        report = json.loads(out)
        assert report["input_digest"].startswith("sha256:")
        # the echoed input re-parses to an equivalent problem
        from choquetrn import parse_problem

        spec = parse_problem(report["input"])
        assert spec.functions["f"]("b") == 5

    def test_text_format_carries_the_same_facts(self, capsys, solvable_path):
        _, out_json, _ = run(capsys, "verify", "--input", solvable_path)
        _, out_text, _ = run(
            capsys, "verify", "--input", solvable_path, "--format", "text"
        )
        assert "verdicts.radon_nikodym: True" in out_text
        assert "input_digest" in out_text
        report = json.loads(out_json)
        assert report["verdicts"]["radon_nikodym"] is True

    def test_out_file(self, capsys, tmp_path, solvable_path):
        target = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "verify", "--input", solvable_path, "--out", str(target)
        )
        assert code == EXIT_PASS
        assert out == ""
        assert json.loads(target.read_text())["pass"] is True

    def test_seed_echoed(self, capsys, solvable_path):
        _, out, _ = run(capsys, "verify", "--input", solvable_path, "--seed", "7")
        assert json.loads(out)["seed"] == 7

    def test_no_floats_anywhere(self, capsys, solvable_path):
        _, out, _ = run(capsys, "check-decomposition", "--input", solvable_path)

        def scan(node):
            assert not isinstance(node, float)
            if isinstance(node, dict):
                for v in node.values():
                    scan(v)
            elif isinstance(node, list):
                for v in node:
                    scan(v)

        scan(json.loads(out, parse_float=float))
