"""Thin quantales, V-categories, presheaf objects and the enriched nerve theorem."""

import pytest

from app.checks import presheaf_verdicts, yo_verdict
from app.errors import CapacityExceededError
from app.quantale.laws import check_v_monad, validate_quantale, validate_vcat
from app.quantale.nerve import v_algebra_objects, v_check_nerve_theorem, v_kleisli
from app.quantale.presheaves import (
    classification_counts,
    enumerate_presheaves,
    is_presheaf,
    v_is_dense,
    v_nerve,
    v_presheaf_object,
)
from app.quantale.standard import (
    boolean_quantale,
    chain_quantale,
    chain_vcat,
    discrete_vcat,
    enumerate_preorders,
    enumerate_v_monads,
    enumerate_vcats,
    identity_vfunctor,
    isomorphism_class,
    powerset_vcat,
    preorder_vcat,
)
from app.quantale.types import Quantale
from app.quantale.yoneda import v_yo_monad_bijection


@pytest.mark.parametrize("k", [2, 3, 4])
def test_chain_quantales_are_lawful(k):
    assert validate_quantale(chain_quantale(k)).passed


def test_chain_quantale_needs_two_elements():
    with pytest.raises(ValueError):
        chain_quantale(1)


def test_boolean_residuals_are_implication():
    q = boolean_quantale()
    assert q.lres("1", "0") == "0"
    assert q.lres("0", "0") == "1"
    assert q.rres("1", "1") == "1"


def test_wrong_given_residual_is_reported():
    q = boolean_quantale()
    bad = Quantale.of(
        q.elements, q.order, q.tensor, q.unit, "2", residuals={("lres", "1", "0"): "1"}
    )
    assert validate_quantale(bad).laws_failed() == ["residual-table"]


def test_broken_quantale_fixtures(parsed):
    assert "unit" in validate_quantale(parsed("broken-quantale-unit").quantale).laws_failed()
    assert "residuation" in validate_quantale(parsed("broken-residuation").quantale).laws_failed()


# ============================================
# V-categories and presheaves
# ============================================

def test_enumerated_vcats():
    q = boolean_quantale()
    assert len(enumerate_vcats(q, 1)) == 1
    assert len(enumerate_vcats(q, 2)) == 4
    assert all(validate_vcat(A).passed for A in enumerate_vcats(q, 3))


@pytest.mark.parametrize(("n", "labelled", "classes"), [(2, 4, 3), (3, 29, 9), (4, 355, 33)])
def test_preorders_up_to_isomorphism(n, labelled, classes):
    q = boolean_quantale()
    assert len(enumerate_vcats(q, n)) == labelled
    representatives = enumerate_vcats(q, n, up_to_isomorphism=True)
    assert len(representatives) == classes
    assert len({isomorphism_class(A) for A in representatives}) == classes


def test_preorders_over_the_three_chain_use_top_and_bottom():
    q = chain_quantale(3)
    preorders = enumerate_preorders(q, 3, up_to_isomorphism=True)
    assert len(preorders) == 9
    assert {v for A in preorders for v in A.hom.values()} == {"0", "1"}
    assert all(validate_vcat(A).passed for A in preorders)


def test_isomorphism_class_ignores_labels():
    q = boolean_quantale()
    up = preorder_vcat(q, ["a", "b"], [(0, 1)])
    down = preorder_vcat(q, ["a", "b"], [(1, 0)])
    assert isomorphism_class(up) == isomorphism_class(down)
    assert isomorphism_class(up) != isomorphism_class(discrete_vcat(q, 2))


@pytest.mark.parametrize(("A", "count"), [(chain_vcat(boolean_quantale(), 2), 3), (discrete_vcat(boolean_quantale(), 2), 4)])
def test_presheaf_counts(A, count):
    assert len(enumerate_presheaves(A)) == count
    assert all(is_presheaf(A, p) for p in enumerate_presheaves(A))
    pa = v_presheaf_object(A)
    assert pa.report.passed
    assert len(pa.presheaves) == count


def test_presheaf_object_is_built_once_but_capped_every_call(caps):
    A = discrete_vcat(boolean_quantale(), 4)
    assert v_presheaf_object(A) is v_presheaf_object(A)
    caps(MAX_PRESHEAVES=8)
    with pytest.raises(CapacityExceededError):
        v_presheaf_object(A)


def test_presheaf_cap(caps):
    caps(MAX_PRESHEAVES=8)
    with pytest.raises(CapacityExceededError):
        enumerate_presheaves(discrete_vcat(boolean_quantale(), 4))


@pytest.mark.parametrize("name", ["two-chain", "discrete-two", "chain3-quantale"])
def test_classification_and_restriction(parsed, name):
    A = parsed(name).vcat("A")
    distributors, functors = classification_counts(A, A)
    assert distributors == functors
    assert all(v.passed for v in presheaf_verdicts(A)), presheaf_verdicts(A)


@pytest.mark.parametrize(("name", "count"), [("two-chain", 2), ("discrete-two", 4)])
def test_yo_monads_match_loose_monads(parsed, name, count):
    report = v_yo_monad_bijection(parsed(name).vcat("A"))
    assert report.loose_monads == report.yo_monads == count
    assert report.passed
    assert yo_verdict(parsed(name).vcat("A")).passed


# ============================================
# Monads and the nerve theorem
# ============================================

def test_monads_on_the_two_chain_are_closure_operators():
    monads = enumerate_v_monads(identity_vfunctor(chain_vcat(boolean_quantale(), 2)))
    assert sorted(T.t_ob for T in monads) == [(0, 1), (1, 1)]


def test_powerset_monad(parsed):
    T = parsed("powerset").v_monad
    assert check_v_monad(T).passed
    assert v_algebra_objects(T) == (0, 2, 3)
    assert v_kleisli(T).n_objects == 2
    report = v_check_nerve_theorem(T)
    assert report.dense
    assert report.comparison_iso
    assert report.passed


def test_nerve_is_a_relative_adjoint(parsed):
    for name in ("powerset", "chain3-nondense"):
        assert v_nerve(parsed(name).v_monad.j).report.passed


def test_nondense_root_on_the_three_chain(parsed):
    T = parsed("chain3-nondense").v_monad
    density = v_is_dense(T.j)
    assert not density.dense
    assert density.witness[:2] == (1, 0)
    report = v_check_nerve_theorem(T)
    assert not report.dense
    assert report.algebras == (1, 2)
    assert report.passed


def test_identity_monad_on_the_three_chain(parsed):
    report = v_check_nerve_theorem(parsed("chain3-identity").v_monad)
    assert report.dense
    assert report.algebras == (0, 1, 2)
    assert report.passed


def test_powerset_vcat_matches_fixture(parsed):
    built = powerset_vcat(boolean_quantale(), ["x", "y"])
    assert built.objects == parsed("powerset").vcat("E").objects
    assert built.hom == parsed("powerset").vcat("E").hom
