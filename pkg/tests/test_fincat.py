"""Finite categories, their validators and the shared table search."""

import itertools
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from app.corpus.generate import random_category
from app.errors import CapacityExceededError, MalformedInputError
from app.fincat.laws import (
    validate_category,
    validate_distributor,
    validate_functor,
    validate_nat_transformation,
)
from app.fincat.ops import (
    arrow_category,
    chain_category,
    check_pullback_property,
    conjoint,
    enumerate_functors,
    enumerate_nat_transformations,
    full_subcategory,
    hom_distributor,
    identity_functor,
    is_fully_faithful,
    is_strict_isomorphism,
    make_category,
    opposite,
    opposite_distributor,
    pullback_category,
    restrict_distributor,
    terminal_category,
)
from app.fincat.search import SearchBudget, StaticConstraints, UnionFind, backtrack
from app.fincat.types import NatTransformation


def _category(seed: int):
    return random_category(random.Random(seed), 3, 3)


seeds = st.integers(min_value=0, max_value=10_000)


# ============================================
# Validators on the bundled broken fixtures
# ============================================

def test_broken_unit_reports_typing_and_unit_witnesses(parsed):
    report = validate_category(parsed("broken-unit").category("V"))
    assert not report.passed
    assert report.first("composition-typed").witness == (3, 0, 0)
    assert report.first("left-unit").witness == (0, 3)


def test_broken_associativity_witness(parsed):
    report = validate_category(parsed("broken-associativity").category("M"))
    assert report.laws_failed() == ["associativity"]
    assert report.first("associativity").witness == (1, 1, 1)


def test_broken_naturality_fails_at_b(parsed):
    p = parsed("broken-naturality")
    assert validate_category(p.category("M")).passed
    report = validate_nat_transformation(p.nat_transformation("alpha"))
    assert report.violations[0].law == "naturality"
    assert report.violations[0].witness == (2,)


def test_broken_action_fails_right_associativity(parsed):
    report = validate_distributor(parsed("broken-action").distributor("p"))
    assert "right-associativity" in report.laws_failed()
    assert "left-associativity" not in report.laws_failed()


def test_span_and_arrow_validate(parsed):
    assert validate_category(parsed("span").category("V")).passed
    assert validate_category(parsed("arrow").category("2")).passed


def test_dangling_name_is_malformed():
    with pytest.raises(MalformedInputError):
        make_category(["a"], [("id_a", "a", "b")], {"a": "id_a"}, [])


def test_category_cap(caps):
    caps(MAX_OBJECTS=2)
    with pytest.raises(CapacityExceededError) as exc:
        chain_category(3)
    assert exc.value.limit == 2


# ============================================
# Enumeration
# ============================================

def test_functors_between_chains_are_monotone_maps():
    assert len(enumerate_functors(arrow_category(), arrow_category())) == 3
    assert len(enumerate_functors(arrow_category(), chain_category(2))) == 6
    assert all(validate_functor(F).passed for F in enumerate_functors(chain_category(2), chain_category(2)))


def test_search_budget_caps_enumeration(caps):
    caps(SEARCH_BUDGET=3)
    with pytest.raises(CapacityExceededError):
        enumerate_functors(chain_category(2), chain_category(2))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_nat_enumeration_matches_brute_force(seed):
    c = _category(seed)
    assume(c is not None)
    F = identity_functor(c)
    found = {alpha.components for alpha in enumerate_nat_transformations(F, F)}
    brute = {
        comps
        for comps in itertools.product(*(c.hom(a, a) for a in range(c.n_objects)))
        if validate_nat_transformation(NatTransformation(F, F, comps)).passed
    }
    assert found == brute


# ============================================
# Duality and restriction
# ============================================

@settings(max_examples=40, deadline=None)
@given(seeds)
def test_random_categories_are_lawful_and_opposite_is_an_involution(seed):
    c = _category(seed)
    assume(c is not None)
    assert validate_category(c).passed
    assert validate_category(opposite(c)).passed
    assert opposite(opposite(c)) == c


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_restriction_along_identities_is_strict(seed):
    c = _category(seed)
    assume(c is not None)
    p = hom_distributor(c)
    ident = identity_functor(c)
    assert validate_distributor(p).passed
    assert restrict_distributor(p, ident, ident) == p
    assert validate_distributor(opposite_distributor(p)).passed


def test_conjoint_of_identity_is_hom():
    c = chain_category(2)
    assert conjoint(identity_functor(c)) == hom_distributor(c)


def test_restriction_rejects_foreign_functors():
    p = hom_distributor(arrow_category())
    other = identity_functor(chain_category(2))
    with pytest.raises(MalformedInputError):
        restrict_distributor(p, other, other)


# ============================================
# Subcategories and pullbacks
# ============================================

def test_full_subcategory_is_fully_faithful():
    sub, inclusion = full_subcategory(chain_category(2), [0, 2])
    assert sub.n_objects == 2 and sub.n_morphisms == 3
    assert is_fully_faithful(inclusion) == (True, None)
    assert validate_functor(inclusion).passed


def test_collapsing_functor_is_not_full():
    F = enumerate_functors(arrow_category(), terminal_category())[0]
    ok, witness = is_fully_faithful(F)
    assert not ok
    assert witness == (1, 0, "not-surjective", 0, 1)


def test_pullback_of_identities_is_the_category():
    c = chain_category(2)
    ident = identity_functor(c)
    pb = pullback_category(ident, ident)
    assert is_strict_isomorphism(pb.left_leg)
    assert check_pullback_property(pb, ident, ident, chain_bound=1).passed


# ============================================
# Search helpers
# ============================================

def test_backtrack_yields_lexicographically():
    out = list(backtrack([0, 1], lambda key, partial: range(2)))
    assert out == [{0: 0, 1: 0}, {0: 0, 1: 1}, {0: 1, 1: 0}, {0: 1, 1: 1}]


def test_static_constraints_prune_on_last_key():
    keys = ["a", "b"]
    constraints = StaticConstraints(keys)
    constraints.add(["a", "b"], lambda s: s["a"] < s["b"])
    out = list(backtrack(keys, lambda key, partial: range(3), constraints))
    assert [(s["a"], s["b"]) for s in out] == [(0, 1), (0, 2), (1, 2)]


def test_search_budget_counts_nodes():
    budget = SearchBudget("toy", limit=2)
    with pytest.raises(CapacityExceededError):
        list(backtrack([0, 1], lambda key, partial: range(2), budget=budget))


def test_union_find_keeps_earliest_representative():
    uf = UnionFind(["a", "b", "c", "d"])
    uf.union("c", "b")
    uf.union("d", "c")
    assert uf.find("d") == "b"
    assert uf.representatives() == ["a", "b"]
