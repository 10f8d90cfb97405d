"""Kleisli and Eilenberg–Moore objects, opalgebras and the comparison functor."""

from dataclasses import replace

import pytest

from app.checks import algebra_verdicts, kleisli_verdicts, restriction_verdicts
from app.constructions.algebras import algebras_on, check_algebra, enumerate_algebras, free_algebra
from app.constructions.comparison import comparison_functor, restriction_comparison
from app.constructions.kleisli import build_kleisli
from app.constructions.opalgebras import check_opalgebra, universal_opalgebra
from app.fincat.laws import validate_category
from app.fincat.ops import arrow_category, full_subcategory, is_strict_isomorphism
from app.fincat.types import LawReport, LawViolation
from app.nervepullback.nerves import is_dense
from app.relmonad.laws import identity_monad

MONADS = ["span", "arrow", "ff-root", "terminal"]


def test_kleisli_of_span(parsed):
    kl = build_kleisli(parsed("span").monad)
    assert kl.category.n_objects == 1
    assert kl.category.n_morphisms == 1
    assert kl.resolution.reproduces_monad


def test_kleisli_of_identity_monad_is_the_category():
    kl = build_kleisli(identity_monad(arrow_category()))
    assert (kl.category.n_objects, kl.category.n_morphisms) == (2, 3)
    assert validate_category(kl.category).passed
    assert is_strict_isomorphism(kl.v)


@pytest.mark.parametrize(("name", "count"), [("span", 1), ("arrow", 2), ("ff-root", 2), ("terminal", 1)])
def test_algebra_counts(parsed, name, count):
    em = enumerate_algebras(parsed(name).monad)
    assert len(em.algebras) == count
    assert validate_category(em.category).passed
    assert em.resolution.reproduces_monad


@pytest.mark.parametrize("name", MONADS)
def test_free_algebras_are_algebras(parsed, name):
    T = parsed(name).monad
    for x in range(T.domain.n_objects):
        alg = free_algebra(T, x)
        assert check_algebra(T, alg).passed
        assert alg in algebras_on(T, T.t_ob[x])


@pytest.mark.parametrize("name", MONADS)
def test_kleisli_suite_passes_on_lawful_fixtures(parsed, name):
    verdicts = kleisli_verdicts(parsed(name).monad)
    assert [v.check for v in verdicts] == [
        "kleisli",
        "kleisli-resolution",
        "universal-opalgebra",
        "opalgebra-factorization",
        "kleisli-collapse",
    ]
    assert all(v.passed for v in verdicts), verdicts


def test_kleisli_verdict_reads_the_attached_report(parsed, monkeypatch):
    T = parsed("span").monad
    kl = build_kleisli(T)
    assert kl.report == validate_category(kl.category)
    broken = replace(kl, report=LawReport.build("category", [LawViolation("associativity", (0, 0, 0))]))
    monkeypatch.setattr("app.checks.build_kleisli", lambda _T: broken)
    verdict = kleisli_verdicts(T)[0]
    assert verdict.check == "kleisli"
    assert not verdict.passed
    assert verdict.witness == ["associativity", 0, 0, 0]


@pytest.mark.parametrize("name", MONADS)
def test_algebra_suite_passes_on_lawful_fixtures(parsed, name):
    assert all(v.passed for v in algebra_verdicts(parsed(name).monad))


def test_universal_opalgebra_is_lawful(parsed):
    T = parsed("span").monad
    assert check_opalgebra(T, universal_opalgebra(build_kleisli(T))).passed


def test_comparison_for_identity_monad_is_an_isomorphism():
    report = comparison_functor(identity_monad(arrow_category()))
    assert report.passed
    assert report.root_dense
    assert is_strict_isomorphism(report.functor)


def test_comparison_for_dense_root(parsed):
    report = comparison_functor(parsed("ff-root").monad)
    assert report.fully_faithful
    assert report.k_then_i_is_free and report.i_then_u_is_v
    assert report.passed


@pytest.mark.parametrize("obj", [0, 1])
def test_restriction_along_a_point(obj):
    A = arrow_category()
    _, j = full_subcategory(A, [obj])
    rc = restriction_comparison(identity_monad(A), j)
    assert rc.isomorphism
    assert is_dense(j).dense == (obj == 1)


def test_restriction_verdicts_look_for_a_left_adjoint():
    verdicts = {v.check: v for v in restriction_verdicts(identity_monad(arrow_category()))}
    assert verdicts["restriction:1"].details == {
        "isomorphism": True,
        "dense": True,
        "adjoint": True,
        "asserted": True,
    }
    assert verdicts["restriction:0"].details["adjoint"]
    assert not verdicts["restriction:0"].details["asserted"]
    assert all(v.passed for v in verdicts.values())


def test_asserted_restriction_fails_without_isomorphism(monkeypatch):
    real = restriction_comparison
    monkeypatch.setattr("app.checks.restriction_comparison", lambda S, j: replace(real(S, j), isomorphism=False))
    verdicts = {v.check: v.passed for v in restriction_verdicts(identity_monad(arrow_category()))}
    assert verdicts == {"restriction:0": True, "restriction:1": False}
