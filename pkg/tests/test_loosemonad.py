"""Loose monads, their collapse, modules and the semanticiser square."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.checks import module_collapse_verdicts, module_verdicts, semanticiser_verdict
from app.constructions.kleisli import build_kleisli
from app.corpus.generate import generate_corpus
from app.corpus.spec import corpus_spec
from app.errors import LawViolationError, MalformedInputError
from app.fincat.laws import validate_category
from app.fincat.ops import chain_category, identity_functor, same_maps, terminal_category
from app.loosemonad.build import associated_loose_monad, extension_morphism, loose_identity, promonad_on_point
from app.loosemonad.collapse import collapse, factor_through_collapse
from app.loosemonad.laws import check_loose_monad, check_loose_monad_morphism
from app.loosemonad.modules import compare_algebras_and_modules
from app.loosemonad.types import LooseMonadMorphism


def test_point_promonad_collapses_to_a_point(parsed):
    L = parsed("loose-point").loose_monad
    assert check_loose_monad(L).passed
    c = collapse(L)
    assert (c.category.n_objects, c.category.n_morphisms) == (1, 1)
    assert c.cartesian


def test_broken_loose_monad_is_not_associative(parsed):
    report = check_loose_monad(parsed("broken-loose-monad").loose_monad)
    assert report.laws_failed() == ["associativity"]
    assert report.first("associativity").witness == ("p", "p", "p")
    with pytest.raises(LawViolationError):
        collapse(parsed("broken-loose-monad").loose_monad)


def test_group_table_on_the_point():
    table = {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}
    c = collapse(promonad_on_point(["e", "s"], table, "e"))
    assert c.category.n_morphisms == 2
    assert validate_category(c.category).passed


def test_collapse_of_identity_loose_monad():
    A = chain_category(2)
    c = collapse(loose_identity(A))
    assert c.category == A
    assert c.cartesian


@pytest.mark.parametrize("name", ["span", "arrow", "ff-root"])
def test_associated_loose_monad_collapses_to_kleisli(parsed, name):
    T = parsed(name).monad
    assoc = associated_loose_monad(T)
    assert check_loose_monad(assoc.loose).passed
    assert assoc.dagger_report.passed
    assert collapse(assoc.loose).category == build_kleisli(T).category


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=500))
def test_kleisli_is_collapse_on_generated_monads(seed):
    (instance,) = generate_corpus(corpus_spec(seed=seed, count=1))
    T = instance.monad
    c = collapse(associated_loose_monad(T).loose)
    assert c.cartesian
    assert c.category == build_kleisli(T).category


@pytest.mark.parametrize("name", ["span", "arrow", "ff-root"])
def test_extension_morphism_factors_through_collapse(parsed, name):
    T = parsed(name).monad
    m = extension_morphism(T)
    assert check_loose_monad_morphism(m).passed
    factorization = factor_through_collapse(associated_loose_monad(T).loose, m)
    assert same_maps(factorization.functor, build_kleisli(T).v)
    assert factorization.uniqueness.unique


def test_morphism_that_ignores_the_unit():
    point = terminal_category()
    group = promonad_on_point(["e", "s"], {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}, "e")
    m = LooseMonadMorphism(loose_identity(point), group, identity_functor(point), {(0, 0, 0): "s"})
    assert check_loose_monad_morphism(m).laws_failed() == ["preserves-multiplication", "preserves-unit"]


def test_collapse_factorization_needs_matching_ends(parsed):
    span = parsed("span").monad
    with pytest.raises(MalformedInputError):
        factor_through_collapse(associated_loose_monad(parsed("arrow").monad).loose, extension_morphism(span))
    point = terminal_category()
    group = promonad_on_point(["e", "s"], {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}, "e")
    m = LooseMonadMorphism(loose_identity(point), group, identity_functor(point), {(0, 0, 0): "e"})
    with pytest.raises(MalformedInputError):
        factor_through_collapse(loose_identity(point), m)


# ============================================
# Modules and the semanticiser
# ============================================

@pytest.mark.parametrize("name", ["span", "arrow", "ff-root"])
def test_algebras_round_trip_through_modules(parsed, name):
    T = parsed(name).monad
    counts = compare_algebras_and_modules(T)
    assert len(counts) == T.base.n_objects
    assert all(c.round_trip for c in counts)
    assert all(v.passed for v in module_verdicts(T)), module_verdicts(T)


@pytest.mark.parametrize(("name", "algebras"), [("span", 1), ("arrow", 2)])
def test_algebra_modules_collapse(parsed, name, algebras):
    verdicts = module_collapse_verdicts(parsed(name).monad)
    assert len(verdicts) == algebras
    assert all(v.passed for v in verdicts)


def test_dense_root_has_as_many_modules_as_algebras(parsed):
    for count in compare_algebras_and_modules(parsed("ff-root").monad):
        assert count.dense_root
        assert count.bijective


@pytest.mark.parametrize("name", ["arrow", "ff-root"])
def test_semanticiser_on_dense_roots(parsed, name):
    verdict = semanticiser_verdict(parsed(name).monad, chain_bound=1)
    assert verdict.details["dense_root"]
    assert verdict.passed, verdict.details


def test_semanticiser_is_informational_off_dense_roots(parsed):
    verdict = semanticiser_verdict(parsed("span").monad, chain_bound=1)
    assert not verdict.details["dense_root"]
    assert verdict.passed
