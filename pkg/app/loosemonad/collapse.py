"""Collapse of a loose monad: the identity-on-objects category with homs the het sets."""

import logging

from app.constructions.types import Factorization
from app.errors import CapacityExceededError, MalformedInputError
from app.fincat.ops import (
    build_category,
    enumerate_functors,
    hom_distributor,
    relabel_distributor,
    restrict_distributor,
)
from app.fincat.types import Distributor, Functor, Uniqueness
from app.loosemonad.build import loose_identity
from app.loosemonad.laws import check_loose_monad, check_loose_monad_morphism, check_module
from app.loosemonad.types import (
    CollapseResult,
    LooseMonad,
    LooseMonadModule,
    LooseMonadMorphism,
    ModuleCollapse,
)

logger = logging.getLogger(__name__)


def collapse(L: LooseMonad) -> CollapseResult:
    check_loose_monad(L).require()
    A, p = L.base, L.carrier
    category, elements = build_category(
        A.objects,
        p.het,
        identity_of=L.unit,
        compose_of=L.mult,
        label=lambda x, y, a: p.label(a),
    )
    index = {e: i for i, e in enumerate(elements)}
    projection = Functor(
        A,
        category,
        tuple(range(A.n_objects)),
        tuple(index[(A.src[u], A.tgt[u], L.eta[u])] for u in range(A.n_morphisms)),
    )
    restricted = restrict_distributor(hom_distributor(category), projection, projection)
    renamed = relabel_distributor(p, lambda x, y, a: index[(x, y, a)])
    cartesian = restricted == renamed
    if not cartesian:
        logger.warning("collapse comparison 2-cell is not cartesian")
    return CollapseResult(category, projection, elements, cartesian)


def factor_through_collapse(L: LooseMonad, m: LooseMonadMorphism) -> Factorization:
    """The functor ``collapse(L) -> B`` induced by a morphism into ``B(1, 1)``."""
    if m.source != L:
        raise MalformedInputError("morphism does not start at the loose monad being collapsed")
    if m.target != loose_identity(m.target.base):
        raise MalformedInputError("morphism does not land in a loose identity B(1, 1)")
    check_loose_monad_morphism(m).require()
    c = collapse(L)
    B = m.target.base
    functor = Functor(
        c.category,
        B,
        m.f.ob,
        tuple(m.phi[(x, y, a)] for x, y, a in c.elements),
    )

    # other functors h with π ⨾ h = f and h = phi on each het element
    def morphism_choices(i, _):
        return (m.phi[c.elements[i]],)

    try:
        count = len(
            enumerate_functors(
                c.category,
                B,
                object_choices=lambda x: (m.f.ob[x],),
                morphism_choices=morphism_choices,
            )
        )
    except CapacityExceededError:
        count = None
    return Factorization(functor, Uniqueness(count))


def collapse_module(M: LooseMonadModule) -> ModuleCollapse:
    """Reuse the module's het sets as a distributor between the two collapses."""
    check_module(M).require()
    left, right = collapse(M.left), collapse(M.right)
    C, D = left.category, right.category
    p = M.p
    left_action = {}
    for i, (c, c2, s) in enumerate(left.elements):
        for d in range(D.n_objects):
            for x in p.het[(c2, d)]:
                left_action[(i, d, x)] = M.lam[(c, c2, d, s, x)]
    right_action = {}
    for i, (d, d2, s) in enumerate(right.elements):
        for c in range(C.n_objects):
            for x in p.het[(c, d)]:
                right_action[(c, x, i)] = M.rho[(c, d, d2, x, s)]
    distributor = Distributor(C, D, dict(p.het), left_action, right_action, labels=p.labels)
    restricted = restrict_distributor(distributor, left.projection, right.projection)
    return ModuleCollapse(distributor, restricted == p)
