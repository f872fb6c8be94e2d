import json
from pathlib import Path

import pytest

from src.cli.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_config, build_parser, main
from src.fforacle import draw_general_instance
from src.utils.engine_config import EngineConfig

GOLDEN = Path(__file__).parents[2] / "src" / "cli" / "data" / "paper_instance.chow"


def _write(tmp_path, text, name="script.chow"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_eval_empty_script(tmp_path, capsys):
    assert main(["eval", _write(tmp_path, ""), "--profile", "quick"]) == EXIT_OK
    assert "✅" in capsys.readouterr().out


def test_eval_golden_json(capsys):
    code = main(["eval", str(GOLDEN), "--format", "json", "--profile", "quick", "--seed", "3"])
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == 1
    assert data["seed"] == 3
    values = {
        f"{entry['space']}.{v['invariant']}": v["value"]
        for entry in data["entries"] if entry["space"]
        for v in entry["values"]
    }
    assert values["Y.euler"] == "21"
    assert values["Y.degree(-K)"] == "102"
    assert values["Y.h0(-K)"] == "27"


def test_parse_error_exit_code(tmp_path, capsys):
    path = _write(tmp_path, "base P2 * P2\nbundle F = O(2,0,0)\n")
    assert main(["eval", path]) == EXIT_USAGE
    assert "line 2 column 13" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert main(["eval", str(tmp_path / "missing.chow")]) == EXIT_USAGE


def test_execution_error_exit_code(tmp_path, capsys):
    path = _write(tmp_path, "base P1\nZ = zero(X, O(1)^2)\n")
    assert main(["eval", path]) == EXIT_FAILED
    assert "line 2" in capsys.readouterr().err


def test_strict_flag_turns_uncertified_into_failure(tmp_path):
    path = _write(tmp_path, "base P2\nE = zero(X, O(3))\nquery E h0(O)\n")
    assert main(["eval", path]) == EXIT_OK
    assert main(["eval", path, "--strict"]) == EXIT_FAILED


def test_fmt_outputs_canonical_form(tmp_path, capsys):
    path = _write(tmp_path, "base   P2*P2   # comment\nbundle F=O(2,0)+O(0,2)\n")
    assert main(["fmt", path]) == EXIT_OK
    assert capsys.readouterr().out == "base X = P2 * P2\nbundle F = O(2,0) + O(0,2)\n"


def test_fmt_check(tmp_path):
    canonical = _write(tmp_path, "base X = P2 * P2\n", "a.chow")
    messy = _write(tmp_path, "base P2*P2\n", "b.chow")
    assert main(["fmt", canonical, "--check"]) == EXIT_OK
    assert main(["fmt", messy, "--check"]) == EXIT_FAILED


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == EXIT_USAGE


def test_invalid_prime_is_usage_error(tmp_path):
    assert main(["eval", _write(tmp_path, ""), "--p", "4"]) == EXIT_USAGE


def test_flags_override_profile():
    args = build_parser().parse_args(
        ["check-paper", "--profile", "quick", "--seed", "5", "--p", "3,5", "--budget", "1000"]
    )
    config = build_config(args)
    assert config.seed == 5
    assert config.primes == (3, 5)
    assert config.point_budget == 1000
    assert config.seeds_per_prime == 3
    assert not config.strict


def test_eval_with_instance_file(tmp_path, capsys):
    drawn = draw_general_instance(5, 1, EngineConfig(jacobian_trials=10))
    (tmp_path / "phi.txt").write_text(drawn.instance_text, encoding="utf-8")
    path = _write(tmp_path, 'ffcheck instance="phi.txt" count_Y blowup_identity\n')
    assert main(["eval", path, "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    values = {v["invariant"]: v["value"] for v in data["entries"][0]["values"]}
    assert values["blowup_identity"] == "true"
