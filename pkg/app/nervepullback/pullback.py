"""The apex of the nerve-theorem pullback, presented through Kleisli presheaves.

``k_T`` is identity on objects, so a presheaf on ``Kl(T)`` restricting to the
nerve of ``e`` has its object part fixed at ``a ↦ E(j a, e)``; only the action
of the Kleisli morphisms varies.
"""

import logging

from app.constructions.algebras import enumerate_algebras
from app.constructions.kleisli import build_kleisli
from app.constructions.types import AlgebraCategory, KleisliCategory
from app.errors import LabError
from app.fincat.ops import build_category, functorial_actions
from app.fincat.types import Functor
from app.infra.settings import ensure_within, get_settings
from app.nervepullback.types import NervePullback, PullbackObject
from app.relmonad.types import RelativeMonad

logger = logging.getLogger(__name__)


def _commutes(E, a: PullbackObject, b: PullbackObject, epsilon: int) -> bool:
    for (f, x), y in a.action:
        if E.comp(y, epsilon) != b.act(f, E.comp(x, epsilon)):
            return False
    return True


def build_nerve_pullback(T: RelativeMonad, kl: KleisliCategory | None = None) -> NervePullback:
    kl = kl or build_kleisli(T)
    A, E, j = T.domain, T.base, T.j
    settings = get_settings()

    objects: list[PullbackObject] = []
    names: list[str] = []
    for e in range(E.n_objects):
        values = tuple(E.hom(j.ob[a], e) for a in range(A.n_objects))
        pinned = {
            (kl.k.mor[u], x): E.comp(j.mor[u], x)
            for u in range(A.n_morphisms)
            for x in values[A.tgt[u]]
        }
        found = functorial_actions(kl.category, values, pinned)
        for k, action in enumerate(found):
            objects.append(PullbackObject(e, tuple(sorted(action.items()))))
            names.append(E.objects[e] if len(found) == 1 else f"{E.objects[e]}#{k}")
        ensure_within("pullback objects", len(objects), settings.max_presheaves)

    N = len(objects)
    cells = {
        (i, k): tuple(
            eps
            for eps in E.hom(objects[i].carrier, objects[k].carrier)
            if _commutes(E, objects[i], objects[k], eps)
        )
        for i in range(N)
        for k in range(N)
    }
    category, morphisms = build_category(
        names,
        cells,
        identity_of=lambda i: E.identity[objects[i].carrier],
        compose_of=lambda i, k, l, p, q: E.comp(p, q),
        label=lambda i, k, eps: E.morphism_name(eps),
    )
    forget = Functor(
        category,
        E,
        tuple(o.carrier for o in objects),
        tuple(eps for _, _, eps in morphisms),
    )
    logger.info("pullback apex: %d objects, %d morphisms", category.n_objects, category.n_morphisms)
    return NervePullback(category, tuple(objects), morphisms, forget, kl)


def algebra_image(T: RelativeMonad, pb: NervePullback, alg) -> PullbackObject:
    """``f ↦ (g ↦ f ⨾ g^α)`` on ``E(j -, e)``."""
    E = T.base
    action = {}
    for index, (a, a2, f) in enumerate(pb.kleisli.elements):
        for g in E.hom(T.j.ob[a2], alg.carrier):
            action[(index, g)] = E.comp(f, alg.act(a2, g))
    return PullbackObject(alg.carrier, tuple(sorted(action.items())))


def comparison_to_pullback(
    T: RelativeMonad,
    em: AlgebraCategory | None = None,
    pb: NervePullback | None = None,
) -> Functor:
    em = em or enumerate_algebras(T)
    pb = pb or build_nerve_pullback(T)
    ob = []
    for alg in em.algebras:
        i = pb.object_index(algebra_image(T, pb, alg))
        if i is None:
            raise LabError(f"algebra on {T.base.objects[alg.carrier]} has no pullback image")
        ob.append(i)
    mor = tuple(pb.morphism_index(ob[i], ob[k], eps) for i, k, eps in em.morphisms)
    return Functor(em.category, pb.category, tuple(ob), mor)
