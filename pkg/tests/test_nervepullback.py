"""Density, the nerve pullback and the nerve theorem with its dual."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.checks import duality_verdict, nerve_verdict
from app.corpus.generate import generate_corpus
from app.corpus.spec import corpus_spec
from app.fincat.laws import validate_category, validate_presheaf
from app.fincat.ops import arrow_category, empty_category, identity_functor
from app.fincat.types import Functor
from app.nervepullback.nerves import is_dense, nerve_presheaf
from app.nervepullback.pullback import build_nerve_pullback
from app.nervepullback.theorem import check_conerve_theorem, check_nerve_theorem, relabel
from app.relmonad.duality import dualize
from app.relmonad.laws import identity_monad
from app.relmonad.types import RelativeMonad


def test_identity_root_is_dense():
    assert is_dense(identity_functor(arrow_category())).dense


def test_span_root_is_not_dense(parsed):
    report = is_dense(parsed("span").monad.j)
    assert not report.dense
    assert report.witness == report.failures[0]


def test_nerve_presheaf_values_are_homs():
    A = arrow_category()
    n = nerve_presheaf(identity_functor(A), 1)
    assert n.values == (A.hom(0, 1), A.hom(1, 1))


@pytest.mark.parametrize("name", ["span", "ff-root"])
def test_nerve_presheaves_are_functorial(parsed, name):
    j = parsed(name).monad.j
    for e in range(j.target.n_objects):
        assert validate_presheaf(nerve_presheaf(j, e)).passed


def test_empty_root():
    E = arrow_category()
    T = RelativeMonad(Functor(empty_category(), E, (), ()), (), (), {})
    report = check_nerve_theorem(T)
    assert report.algebra_count == 2
    assert (report.apex_objects, report.apex_morphisms) == (2, 3)
    assert report.apex_iso_base
    assert report.comparison_iso
    assert not report.dense
    assert report.passed


def test_span_nerve_theorem(parsed):
    report = check_nerve_theorem(parsed("span").monad)
    assert report.algebra_count == 1
    assert (report.apex_objects, report.apex_morphisms) == (3, 5)
    assert not report.dense
    assert not report.comparison_iso
    assert report.passed
    assert "density" in report.witnesses


@pytest.mark.parametrize("name", ["arrow", "ff-root", "terminal"])
def test_dense_roots_give_invertible_comparison(parsed, name):
    report = check_nerve_theorem(parsed(name).monad)
    assert report.dense
    assert report.comparison_iso
    assert report.passed


def test_nerve_pullback_is_a_category():
    pb = build_nerve_pullback(identity_monad(arrow_category()))
    assert validate_category(pb.category).passed
    assert pb.category.n_objects == 2


def test_cospan_conerve_matches_span(parsed):
    direct = relabel(check_nerve_theorem(parsed("span").monad))
    assert check_conerve_theorem(parsed("cospan").comonad) == direct
    assert check_conerve_theorem(dualize(parsed("span").monad)) == direct


def test_nerve_verdict_details(parsed):
    verdict = nerve_verdict(parsed("span").monad)
    assert verdict.passed
    assert verdict.details["algebra_count"] == 1
    assert verdict.details["dense"] is False
    assert "witnesses" not in verdict.details


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=500))
def test_nerve_theorem_and_duality_on_generated_monads(seed):
    (instance,) = generate_corpus(corpus_spec(seed=seed, count=1))
    T = instance.monad
    assert check_nerve_theorem(T).passed
    assert duality_verdict(T).passed
