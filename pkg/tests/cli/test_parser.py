from pathlib import Path

import pytest

from src.cli import format_script, parse
from src.cli.dsl_ast import BaseStmt, BundleStmt, FFCheckStmt, ProjStmt, QueryStmt, ZeroStmt
from src.utils.errors import DslArityError, DslLexError, DslNameError, DslSyntaxError

GOLDEN = Path(__file__).parents[2] / "src" / "cli" / "data" / "paper_instance.chow"


def test_base_statement():
    script = parse("base P2 * P2")
    assert script.statements == [BaseStmt(name="X", dims=[2, 2])]
    assert script.lines == [1]


def test_named_base_and_comments():
    script = parse("# header\n\nbase W = P1 * P3   # trailing\n")
    assert script.statements == [BaseStmt(name="W", dims=[1, 3])]
    assert script.lines == [3]


def test_bundle_and_dual_projectivization():
    script = parse("base P2 * P2\nbundle F = O(2,0) + O(0,2)\nspace P = proj(Fdual)\n")
    bundle, proj = script.statements[1], script.statements[2]
    assert isinstance(bundle, BundleStmt)
    assert [t.base for t in bundle.terms] == [[2, 0], [0, 2]]
    assert proj == ProjStmt(name="P", bundle="F", dual=True)


def test_zero_locus_with_twist_and_power():
    text = "base P2 * P2\nbundle F = O(2,0) + O(0,2)\nP = proj(Fdual)\nY = zero(P, O{xi}(1)^3)\n"
    zero = parse(text).statements[-1]
    assert isinstance(zero, ZeroStmt)
    assert zero.space == "P"
    [term] = zero.terms
    assert term.base is None
    assert term.power == 3
    assert [(t.generator, t.degree) for t in term.twists] == [("xi", 1)]


def test_query_invariants():
    script = parse("preset Y\nquery Y euler degree(-K) chi(O) chiy fano h0(O(1,1,1)) dim canonical")
    query = script.statements[1]
    assert isinstance(query, QueryStmt)
    names = [inv.name for inv in query.invariants]
    assert names == ["euler", "degree", "chi", "chiy", "fano", "h0", "dim", "canonical"]
    assert query.invariants[1].arg.kind == "anticanonical"
    assert query.invariants[5].arg.term.base == [1, 1, 1]


def test_ffcheck_parameters():
    stmt = parse("ffcheck p=3 seed=42 blowup_identity").statements[0]
    assert stmt == FFCheckStmt(params={"p": 3, "seed": 42}, checks=["blowup_identity"])


def test_ffcheck_instance_path():
    stmt = parse('ffcheck instance="data/phi.txt" count_Y blowup_identity').statements[0]
    assert stmt.instance == "data/phi.txt"
    assert stmt.params == {}
    assert stmt.checks == ["count_Y", "blowup_identity"]
    with pytest.raises(DslSyntaxError):
        parse("ffcheck instance=phi count_Y")


def test_negative_degrees():
    stmt = parse("base P2 * P2 * P2\nbundle G = O(-2,0,0) + O(0,-2,0)").statements[1]
    assert [t.base for t in stmt.terms] == [[-2, 0, 0], [0, -2, 0]]


def test_golden_script_parses():
    script = parse(GOLDEN.read_text(encoding="utf-8"), source=GOLDEN.name)
    kinds = [s.kind for s in script.statements]
    assert kinds.count("query") == 4
    assert kinds.count("ffcheck") == 1
    assert len(script.lines) == len(script.statements)


def test_empty_script():
    assert parse("").statements == []
    assert parse("# only a comment\n").statements == []


@pytest.mark.parametrize("text", [
    "base P2 * P2",
    "base P2 * P2\nbundle F = O(2,0) + O(0,2)\nspace P = proj(Fdual)\nY = zero(P, O{xi}(1)^3)",
    "preset Y as Z\nquery Z euler degree(-K) degree(K) chi h0(O(1,1,1)) signature",
    "preset S\nquery S chi(O{xi}(-1)) h0(O(0,0){xi}(2))",
    "ffcheck p=5 trials=10 count_Y jacobian",
    'ffcheck p=5 instance="phi.txt" count_Y',
])
def test_print_reparse_fixpoint(text):
    first = parse(text)
    printed = format_script(first)
    second = parse(printed)
    assert second.statements == first.statements
    assert format_script(second) == printed


def test_golden_print_reparse_fixpoint():
    first = parse(GOLDEN.read_text(encoding="utf-8"))
    assert parse(format_script(first)).statements == first.statements


def test_arity_error_location():
    with pytest.raises(DslArityError) as info:
        parse("base P2 * P2\nbundle F = O(2,0,0)")
    assert info.value.line == 2
    assert info.value.column == 13
    assert "line 2 column 13" in str(info.value)


def test_query_arity_error():
    with pytest.raises(DslArityError):
        parse("preset Y\nquery Y h0(O(1,1))")


def test_undeclared_names():
    with pytest.raises(DslNameError):
        parse("query Y euler")
    with pytest.raises(DslNameError):
        parse("base P2\nspace P = proj(F)")
    with pytest.raises(DslNameError):
        parse("preset Q")
    with pytest.raises(DslNameError):
        parse("preset X\nY = zero(X, O{xi}(1))")


def test_bundle_before_base():
    with pytest.raises(DslNameError):
        parse("bundle F = O(1)")


def test_lexical_error():
    with pytest.raises(DslLexError) as info:
        parse("base P2 $ P2")
    assert info.value.column == 9


def test_syntax_errors():
    with pytest.raises(DslSyntaxError):
        parse("base P2 *")
    with pytest.raises(DslSyntaxError):
        parse("base Q2")
    with pytest.raises(DslSyntaxError):
        parse("preset Y\nquery Y")
    with pytest.raises(DslSyntaxError):
        parse("base P2 * P2\nbundle F = O{xi}(1)")
    with pytest.raises(DslSyntaxError):
        parse("preset Y extra")


def test_redeclared_names():
    with pytest.raises(DslNameError) as info:
        parse("base P2\nbase P2")
    assert info.value.line == 2
    with pytest.raises(DslNameError) as info:
        parse("base P2 * P2\nX = zero(X, O(1,1))")
    assert info.value.line == 2
    assert info.value.column == 1
    with pytest.raises(DslNameError):
        parse("base P2 * P2\nbundle X = O(1,0)")
    with pytest.raises(DslNameError):
        parse("preset Y\npreset Y")
    with pytest.raises(DslNameError):
        parse("base B = P1\nbase B = P2")
