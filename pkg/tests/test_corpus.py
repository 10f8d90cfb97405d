"""Seeded corpus generation and the corpus pipeline."""

import time

import pytest

from app.checks import set_instance_verdicts
from app.cli import execute_suite
from app.corpus.generate import generate_corpus, quantale_instances
from app.corpus.spec import corpus_spec
from app.errors import CorpusExhaustedError, MalformedInputError
from app.fincat.ops import arrow_category
from app.langgraph.nodes import MUTANT_FLOOR
from app.langgraph.workflow import build_corpus_graph
from app.nervepullback.nerves import is_dense
from app.relmonad.laws import check_relative_monad, identity_monad
from app.schemas.models import SuiteInputs


def test_generation_is_seeded():
    spec = corpus_spec(seed=7, count=5)
    first, second = generate_corpus(spec), generate_corpus(spec)
    assert [i.id for i in first] == [f"set-7-{n:04d}" for n in range(5)]
    assert [i.monad for i in first] == [i.monad for i in second]


def test_generated_monads_are_lawful():
    for instance in generate_corpus(corpus_spec(seed=3, count=8)):
        assert check_relative_monad(instance.monad).passed


def test_dense_corpus_has_dense_roots():
    for instance in generate_corpus(corpus_spec(seed=2, count=5, density_required=True)):
        assert is_dense(instance.monad.j).dense


def test_exhausted_corpus(monkeypatch):
    monkeypatch.setattr("app.corpus.generate.ATTEMPTS_PER_INSTANCE", 0)
    with pytest.raises(CorpusExhaustedError) as exc:
        generate_corpus(corpus_spec(count=2))
    assert exc.value.produced == 0


@pytest.mark.parametrize(
    "fields", [{"max_objects": 99}, {"count": 0}, {"instance": "other"}, {"exhaustive": True}]
)
def test_bad_spec(fields):
    with pytest.raises(MalformedInputError):
        corpus_spec(**fields)


def test_quantale_pool_is_exhaustive_then_sampled():
    spec = corpus_spec(instance="quantale", max_objects=1, count=20)
    assert len(quantale_instances(spec)) == 1
    sampled = generate_corpus(corpus_spec(instance="quantale", max_objects=2, count=4, seed=5))
    assert len(sampled) == 4
    assert sampled == generate_corpus(corpus_spec(instance="quantale", max_objects=2, count=4, seed=5))


def test_exhaustive_pool_ignores_count():
    spec = corpus_spec(instance="quantale", max_objects=2, count=1, exhaustive=True)
    pool = quantale_instances(spec)
    assert len(pool) > 1
    assert generate_corpus(spec) == pool
    # two-element bases: the discrete, the chain and the indiscrete preorder
    assert len({i.id.split("-")[2] for i in pool if i.id.split("-")[1] == "2"}) == 3


def test_worker_count_does_not_change_verdicts():
    spec = corpus_spec(seed=11, count=4)
    runs = [
        build_corpus_graph().invoke({"spec": spec, "chain_bound": 1, "workers": workers})
        for workers in (1, 3)
    ]
    assert runs[0]["verdicts"] == runs[1]["verdicts"]
    assert runs[0]["summary"] == runs[1]["summary"]


def test_identity_root_instances_check_their_restrictions():
    verdicts = set_instance_verdicts(identity_monad(arrow_category()), "arrow", chain_bound=1)
    restrictions = [v for v in verdicts if v.check.startswith("restriction:")]
    assert [v.check for v in restrictions] == ["restriction:0", "restriction:1"]
    assert all(v.passed for v in verdicts)


def test_corpus_report():
    report = execute_suite("corpus", SuiteInputs(seed=4, count=10, chain_bound=1))
    assert report.seed == 4
    summary = [v for v in report.verdicts if v.check == "corpus"][0]
    assert summary.details["instances"] == 10
    assert summary.passed, summary.details
    assert report.exit_code == 0


def test_set_run_meets_the_mutant_floor():
    report = execute_suite("corpus", SuiteInputs(seed=0, count=20, chain_bound=1))
    summary = [v for v in report.verdicts if v.check == "corpus"][0]
    mutants = [v for v in report.verdicts if v.check == "section-mutants"]
    assert len(mutants) == 20
    assert all(v.details["rejected"] >= 2 for v in mutants)
    assert summary.details["section_mutants_rejected"] >= MUTANT_FLOOR
    assert summary.details["mutant_floor_met"]
    assert report.exit_code == 0


def test_run_below_the_mutant_floor_fails(monkeypatch):
    monkeypatch.setattr("app.langgraph.nodes.MUTANT_FLOOR", 10**6)
    report = execute_suite("corpus", SuiteInputs(seed=0, count=2, chain_bound=1))
    summary = [v for v in report.verdicts if v.check == "corpus"][0]
    assert not summary.passed
    assert summary.details["failed_instances"] == []
    assert report.exit_code == 1


# ============================================
# Full sweeps
# ============================================

@pytest.mark.slow
@pytest.mark.parametrize("dense", [False, True])
def test_set_sweep(dense):
    report = execute_suite("corpus", SuiteInputs(seed=0, count=200, dense=dense))
    assert report.exit_code == 0, [v for v in report.verdicts if not v.passed][:3]


@pytest.mark.slow
@pytest.mark.parametrize("quantale", ["2", "chain-3"])
def test_quantale_sweep(quantale):
    report = execute_suite(
        "corpus", SuiteInputs(instance="quantale", quantale=quantale, count=200, max_objects=3)
    )
    assert report.exit_code == 0, [v for v in report.verdicts if not v.passed][:3]


@pytest.mark.slow
@pytest.mark.parametrize("quantale", ["2", "chain-3"])
def test_exhaustive_quantale_sweep(quantale):
    start = time.perf_counter()
    report = execute_suite(
        "corpus",
        SuiteInputs(instance="quantale", quantale=quantale, max_objects=5, dense=True, exhaustive=True),
    )
    elapsed = time.perf_counter() - start
    assert report.exit_code == 0, [v for v in report.verdicts if not v.passed][:3]
    theorems = [v for v in report.verdicts if v.check == "V-nerve-theorem"]
    assert theorems
    assert all(v.details["comparison_iso"] and v.details["semanticiser_matches"] for v in theorems)
    assert all(v.passed for v in report.verdicts if v.check == "yoneda")
    assert elapsed < 120
