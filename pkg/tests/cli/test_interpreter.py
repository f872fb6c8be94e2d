import json
from pathlib import Path

import pytest

from src.cli import Report, format_space, parse, run
from src.cli.report import SMOOTHNESS_ASSUMPTION
from src.fforacle import count_Y, draw_general_instance, load_instance
from src.tower import preset
from src.utils.engine_config import EngineConfig
from src.utils.errors import ExecutionError, OracleInputError, TowerShapeError

GOLDEN = Path(__file__).parents[2] / "src" / "cli" / "data" / "paper_instance.chow"


@pytest.fixture(scope="module")
def golden_report():
    script = parse(GOLDEN.read_text(encoding="utf-8"), source=GOLDEN.name)
    return run(script, EngineConfig(seed=7))


def test_golden_fourfold_values(golden_report):
    values = golden_report.values()
    assert values["Y.euler"] == "21"
    assert values["Y.degree(-K)"] == "102"
    assert values["Y.h0(-K)"] == "27"
    assert values["Y.chiy"] == "[1, -3, 13, -3, 1]"
    assert values["Y.signature"] == "9"
    assert values["Y.canonical"] == "[-1, -1, -1]"
    assert values["Y.dim"] == "4"
    assert values["Y.fano"] == "true"


def test_golden_second_construction(golden_report):
    values = golden_report.values()
    assert values["YPE.euler"] == "21"
    assert values["YPE.degree(-K)"] == "102"
    assert values["YPE.h0(-K)"] == "27"


def test_golden_enriques_and_sixfold(golden_report):
    values = golden_report.values()
    assert values["S.dim"] == "2"
    assert values["S.euler"] == "12"
    assert values["S.chi(O)"] == "1"
    assert values["S.chiy"] == "[1, -10, 1]"
    assert values["S.h0(O)"] == "1"
    assert values["T.dim"] == "6"
    assert values["T.euler"] == "48"
    assert values["T.fano"] == "true"


def test_golden_provenance(golden_report):
    assert SMOOTHNESS_ASSUMPTION in golden_report.assumptions
    query = golden_report.entries[0]
    assert all("certified" in v.provenance for v in query.values)
    ffcheck = golden_report.entries[-1]
    assert ffcheck.kind == "ffcheck"
    assert ffcheck.seed == 42
    assert all(v.provenance == ["stochastic"] for v in ffcheck.values)
    assert golden_report.seed == 7


def test_golden_ffcheck_identities(golden_report):
    ffcheck = golden_report.entries[-1]
    by_name = {v.invariant: v for v in ffcheck.values}
    assert by_name["generic"].value == "true"
    assert by_name["stratified_identity"].value == "true"
    assert by_name["blowup_identity"].value == "true"
    assert by_name["jacobian(Y)"].value.startswith("0/")
    assert ffcheck.passed


def test_report_json_round_trip(golden_report):
    text = golden_report.to_json()
    data = json.loads(text)
    assert data["schema"] == 1
    assert isinstance(data["entries"][0]["values"][0]["value"], str)
    assert Report.from_json(text) == golden_report


def test_empty_script_gives_empty_report():
    report = run(parse(""))
    assert report.entries == []
    assert report.passed
    assert Report.from_json(report.to_json()).entries == []


def test_execution_error_carries_index():
    script = parse("base P1\nZ = zero(X, O(1)^2)\nquery Z euler")
    with pytest.raises(ExecutionError) as info:
        run(script)
    assert info.value.index == 1
    assert isinstance(info.value.cause, TowerShapeError)


def test_uncertified_h0_is_flagged():
    script = parse("base P2\nE = zero(X, O(3))\nquery E h0(O) chi(O)")
    report = run(script)
    h0, chi = report.entries[0].values
    assert h0.provenance == ["assumed"]
    assert h0.value == "0"
    assert chi.value == "0"
    assert report.passed


def test_strict_mode_fails_uncertified_h0():
    script = parse("base P2\nE = zero(X, O(3))\nquery E h0(O)")
    report = run(script, EngineConfig(strict=True))
    assert not report.passed


def test_ambient_queries_are_certified_only():
    report = run(parse("base P2 * P2\nquery X euler degree(O(1,1)) h0(O(1,1)) fano"))
    values = report.values()
    assert values["X.euler"] == "9"
    assert values["X.degree(O(1,1))"] == "6"
    assert values["X.h0(O(1,1))"] == "9"
    assert values["X.fano"] == "true"
    assert report.assumptions == []


@pytest.mark.parametrize("name, euler", [("S", 12), ("Y", 21)])
def test_format_space_reconstructs_preset(name, euler):
    text = format_space(preset(name), name) + f"query {name} euler dim\n"
    values = run(parse(text)).values()
    assert values[f"{name}.euler"] == str(euler)
    assert values[f"{name}.dim"] == str(preset(name).dim)


@pytest.fixture
def dumped_instance(tmp_path):
    drawn = draw_general_instance(5, 1, EngineConfig(jacobian_trials=10))
    (tmp_path / "inst.txt").write_text(drawn.instance_text, encoding="utf-8")
    return tmp_path, drawn.instance_text


def test_ffcheck_reads_dumped_instance(dumped_instance):
    folder, text = dumped_instance
    script = parse('ffcheck instance="inst.txt" count_Y stratified_identity blowup_identity',
                   source=str(folder / "check.chow"))
    report = run(script)
    assert report.assumptions == []
    entry = report.entries[0]
    by_name = {v.invariant: v for v in entry.values}
    m = load_instance(text)
    assert by_name["count_Y"].value == str(count_Y(m))
    assert by_name["count_Y"].provenance == ["certified"]
    assert by_name["stratified_identity"].value == "true"
    assert by_name["blowup_identity"].value == "true"
    assert by_name["generic"].note == "instance file inst.txt"
    assert entry.passed


def test_ffcheck_instance_prime_must_match(dumped_instance):
    folder, _ = dumped_instance
    script = parse('ffcheck p=3 instance="inst.txt" count_Y', source=str(folder / "check.chow"))
    with pytest.raises(ExecutionError) as info:
        run(script)
    assert isinstance(info.value.cause, OracleInputError)


def test_ffcheck_missing_instance_file(tmp_path):
    script = parse('ffcheck instance="absent.txt" count_Y', source=str(tmp_path / "check.chow"))
    with pytest.raises(ExecutionError) as info:
        run(script)
    assert info.value.index == 0
    assert isinstance(info.value.cause, OracleInputError)
