"""Wire documents, the fixture catalog and report digests."""

import json

import pytest

from app.errors import CapacityExceededError, MalformedInputError
from app.fixtures.catalog import fixture_names, load_fixture, raw_fixture
from app.reports.models import RunReport, Verdict, digest
from app.reports.render import render_json, render_text
from app.schemas.parse import Parsed, dump_json, load_document, read_document


@pytest.mark.parametrize("name", fixture_names())
def test_every_fixture_loads(name):
    doc = load_fixture(name)
    assert doc.name == name
    assert load_document(dump_json(doc)) == doc


def test_unknown_fixture():
    with pytest.raises(MalformedInputError):
        raw_fixture("no-such-fixture")


def test_unknown_field_is_rejected():
    raw = raw_fixture("span")
    raw["extra"] = 1
    with pytest.raises(MalformedInputError) as exc:
        load_document(raw)
    assert exc.value.where == ("extra",)


def test_unsupported_schema_version():
    raw = raw_fixture("span")
    raw["schema_version"] = 99
    with pytest.raises(MalformedInputError):
        load_document(raw)


def test_invalid_json():
    with pytest.raises(MalformedInputError):
        load_document("{not json")


def test_missing_file(tmp_path):
    with pytest.raises(MalformedInputError):
        read_document(tmp_path / "missing.json")


def test_read_document(tmp_path):
    path = tmp_path / "span.json"
    path.write_text(dump_json(load_fixture("span")))
    assert read_document(path) == load_fixture("span")


def test_dangling_functor_image():
    raw = raw_fixture("span")
    raw["functors"]["j"]["obj_map"]["*"] = "nowhere"
    with pytest.raises(MalformedInputError):
        Parsed(load_document(raw)).monad


def test_partial_unit_is_malformed():
    raw = raw_fixture("arrow")
    del raw["monad"]["eta"]["1"]
    with pytest.raises(MalformedInputError):
        Parsed(load_document(raw)).monad


def test_missing_monad():
    with pytest.raises(MalformedInputError):
        Parsed(load_fixture("broken-unit")).monad


def test_het_cap(caps):
    caps(MAX_HET=2)
    with pytest.raises(CapacityExceededError):
        Parsed(load_fixture("broken-loose-monad")).distributor("p")


# ============================================
# Reports
# ============================================

def test_digest_ignores_key_order():
    assert digest({"a": 1, "b": (1, 2)}) == digest({"b": [1, 2], "a": 1})
    assert digest({"a": 1}).startswith("sha256:")


def test_json_report_has_no_wall_time():
    report = RunReport(
        command="validate",
        input_digest="sha256:0",
        verdicts=[Verdict(check="category:V", passed=True)],
        wall_time=1.5,
    )
    body = json.loads(render_json(report))
    assert "wall_time" not in body
    assert body["schema_version"] == 1
    assert "wall time 1.500s" in render_text(report)


def test_verdicts_sort_by_instance_then_check():
    report = RunReport(
        command="corpus",
        input_digest="",
        verdicts=[
            Verdict(check="b", passed=True, instance="set-0-0001"),
            Verdict(check="z", passed=True, instance="set-0-0000"),
            Verdict(check="a", passed=False, instance="set-0-0001"),
        ],
    ).sorted()
    assert [(v.instance, v.check) for v in report.verdicts] == [
        ("set-0-0000", "z"),
        ("set-0-0001", "a"),
        ("set-0-0001", "b"),
    ]
    assert report.exit_code == 1
