"""The relmonad-lab command and its exit-code contract."""

import json

import pytest

from app.cli import SUITE_NAMES, execute_suite, main, run_suite
from app.errors import MalformedInputError
from app.fixtures.catalog import load_fixture
from app.schemas.models import SuiteInputs
from app.schemas.parse import dump_json


def _json_run(capsys, *argv):
    code = main([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def _checks(body):
    return {v["check"]: v for v in body["verdicts"]}


def test_validate_span(capsys):
    code, body = _json_run(capsys, "validate", "--fixture", "span")
    assert code == 0
    checks = _checks(body)
    assert checks["category:V"]["passed"]
    assert checks["relative-monad"]["passed"]
    assert checks["carrier"]["passed"]
    assert body["input_digest"].startswith("sha256:")


@pytest.mark.parametrize(
    ("fixture", "check", "law"),
    [
        ("broken-unit", "category:V", "left-unit"),
        ("broken-associativity", "category:M", "associativity"),
        ("broken-naturality", "nat-transformation:alpha", "naturality"),
        ("broken-action", "distributor:p", "right-associativity"),
        ("broken-loose-monad", "loose-monad", "associativity"),
    ],
)
def test_broken_fixtures_exit_one(capsys, fixture, check, law):
    code, body = _json_run(capsys, "validate", "--fixture", fixture)
    assert code == 1
    verdict = _checks(body)[check]
    assert not verdict["passed"]
    assert law in verdict["details"]["laws_failed"]


def test_nerve_check_span_with_dual(capsys):
    code, body = _json_run(capsys, "nerve-check", "--fixture", "span", "--dual")
    assert code == 0
    checks = _checks(body)
    assert sorted(checks) == ["comparison", "duality", "nerve-theorem", "relative-monad"]
    assert checks["nerve-theorem"]["details"]["algebra_count"] == 1
    assert checks["nerve-theorem"]["details"]["comparison_iso"] is False


def test_nerve_check_on_a_comonad(capsys):
    code, body = _json_run(capsys, "nerve-check", "--fixture", "cospan", "--dual")
    assert code == 0
    assert sorted(_checks(body)) == ["conerve-theorem", "duality", "relative-comonad"]


@pytest.mark.parametrize(
    "suite",
    ["kleisli", "algebras", "compare", "collapse", "promonad-check", "section-roundtrip", "semanticiser"],
)
def test_monad_suites_pass_on_arrow(capsys, suite):
    code, body = _json_run(capsys, suite, "--fixture", "arrow", "--chain-bound", "1")
    assert code == 0, body
    assert body["command"] == suite


def test_algebras_on_identity_root_lists_restrictions(capsys):
    _, body = _json_run(capsys, "algebras", "--fixture", "arrow")
    assert {"restriction:0", "restriction:1"} <= set(_checks(body))


@pytest.mark.parametrize(
    ("suite", "fixture"),
    [
        ("quantale", "two-chain"),
        ("v-nerve-check", "powerset"),
        ("quantale-validate", "chain3-quantale"),
        ("v-nerve-check", "chain3-nondense"),
        ("yo-bijection", "discrete-two"),
    ],
)
def test_quantale_suites(capsys, suite, fixture):
    code, _ = _json_run(capsys, suite, "--fixture", fixture)
    assert code == 0


def test_broken_quantale_stops_after_validation(capsys):
    code, body = _json_run(capsys, "quantale", "--fixture", "broken-residuation")
    assert code == 1
    assert [v["check"] for v in body["verdicts"]] == ["quantale"]


def test_input_file(tmp_path, capsys):
    path = tmp_path / "span.json"
    path.write_text(dump_json(load_fixture("span")))
    code, body = _json_run(capsys, "kleisli", "--input", str(path))
    assert code == 0
    assert _checks(body)["kleisli"]["details"]["morphisms"] == 1


def test_unreadable_input_exits_two(tmp_path, capsys):
    assert main(["validate", "--input", str(tmp_path / "missing.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_structure_exits_two(capsys):
    code, body = _json_run(capsys, "kleisli", "--fixture", "broken-unit")
    assert code == 2
    assert body["verdicts"][0]["check"] == "input"


def test_capacity_exits_two(capsys, caps):
    caps(MAX_OBJECTS=1)
    code, body = _json_run(capsys, "algebras", "--fixture", "arrow")
    assert code == 2
    assert body["verdicts"][0]["check"] == "capacity"


def test_text_output(capsys):
    assert main(["validate", "--fixture", "terminal"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] relative-monad" in out
    assert "checks passed" in out


# ============================================
# execute_suite / run_suite
# ============================================

def test_suite_names_include_corpus():
    assert "corpus" in SUITE_NAMES
    assert SUITE_NAMES == sorted(SUITE_NAMES)


def test_document_and_fixture_together_are_rejected():
    inputs = SuiteInputs(document=load_fixture("span"), fixture="span")
    with pytest.raises(MalformedInputError):
        execute_suite("validate", inputs)


def test_unknown_suite():
    report, code = run_suite("no-such-suite", SuiteInputs(fixture="span"))
    assert code == 2
    assert not report.passed


def test_digest_depends_on_flags():
    plain = execute_suite("semanticiser", SuiteInputs(fixture="arrow", chain_bound=1))
    other = execute_suite("semanticiser", SuiteInputs(fixture="arrow", chain_bound=2))
    assert plain.input_digest != other.input_digest
    again = execute_suite("semanticiser", SuiteInputs(fixture="arrow", chain_bound=1))
    assert again.input_digest == plain.input_digest
    assert again.model_dump() == plain.model_dump()
