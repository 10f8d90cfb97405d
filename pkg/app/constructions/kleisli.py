import logging

from app.fincat.laws import validate_category
from app.fincat.ops import build_category
from app.fincat.types import Functor
from app.constructions.types import KleisliCategory, Resolution
from app.relmonad.adjunctions import monad_from_adjunction
from app.relmonad.laws import require_monad
from app.relmonad.types import RelativeAdjunction, RelativeMonad

logger = logging.getLogger(__name__)


def build_kleisli(T: RelativeMonad) -> KleisliCategory:
    """Objects of A, homs ``E(j x, t y)``, identities η, composition ``f ⨾ g†``."""
    require_monad(T)
    A, E = T.domain, T.base
    n = A.n_objects
    cells = {(x, y): T.kleisli_hom(x, y) for x in range(n) for y in range(n)}
    category, elements = build_category(
        A.objects,
        cells,
        identity_of=lambda x: T.eta[x],
        compose_of=lambda x, y, z, f, g: E.comp(f, T.ext(y, z, g)),
        label=lambda x, y, f: E.morphism_name(f),
    )
    index = {e: i for i, e in enumerate(elements)}
    k = Functor(
        A,
        category,
        tuple(range(n)),
        tuple(index[(A.src[u], A.tgt[u], T.unit_of(u))] for u in range(A.n_morphisms)),
    )
    v = Functor(category, E, T.t_ob, tuple(T.ext(x, y, f) for x, y, f in elements))
    adjunction = RelativeAdjunction(
        j=T.j,
        ell=k,
        r=v,
        phi={(x, y, index[(x, y, f)]): f for x, y, f in elements},
    )
    resolution = Resolution(adjunction, monad_from_adjunction(adjunction) == T)
    logger.debug("kleisli: %d objects, %d morphisms", category.n_objects, category.n_morphisms)
    report = validate_category(category)
    if not report.passed:
        logger.warning("kleisli category failed validation: %s", report.laws_failed())
    return KleisliCategory(category, elements, k, v, resolution, report)
