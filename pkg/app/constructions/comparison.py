from dataclasses import dataclass

from app.constructions.algebras import enumerate_algebras
from app.constructions.kleisli import build_kleisli
from app.constructions.types import Algebra, AlgebraCategory, ComparisonReport, KleisliCategory
from app.fincat.ops import compose_functors, is_fully_faithful, is_strict_isomorphism, same_maps
from app.fincat.types import Functor
from app.nervepullback.nerves import is_dense
from app.relmonad.laws import restrict_monad
from app.relmonad.types import RelativeMonad


def comparison_functor(
    T: RelativeMonad,
    kl: KleisliCategory | None = None,
    em: AlgebraCategory | None = None,
) -> ComparisonReport:
    """``i_T : Kl(T) -> Alg(T)``, ``x ↦ (t x, †)``, ``f ↦ f†``."""
    kl = kl or build_kleisli(T)
    em = em or enumerate_algebras(T)
    free = em.f.ob
    i_T = Functor(
        kl.category,
        em.category,
        free,
        tuple(
            em.morphism_index(free[x], free[y], T.ext(x, y, f)) for x, y, f in kl.elements
        ),
    )
    ff, witness = is_fully_faithful(i_T)
    root_dense = is_dense(T.j).dense
    return ComparisonReport(
        functor=i_T,
        fully_faithful=ff,
        fully_faithful_witness=witness,
        k_then_i_is_free=same_maps(compose_functors(kl.k, i_T), em.f),
        i_then_u_is_v=same_maps(compose_functors(i_T, em.u), kl.v),
        root_dense=root_dense,
        comparison_dense=is_dense(i_T).dense if root_dense else None,
    )


@dataclass(frozen=True)
class RestrictionComparison:
    functor: Functor
    isomorphism: bool


def restriction_comparison(S: RelativeMonad, j: Functor) -> RestrictionComparison:
    """``Alg(S) -> Alg(j ⨾ S)`` keeping the carrier and restricting ^α along j."""
    R = restrict_monad(S, j)
    big, small = enumerate_algebras(S), enumerate_algebras(R)
    E, A = S.base, j.source
    ob = []
    for alg in big.algebras:
        restricted = Algebra.of(
            alg.carrier,
            {
                (x, f): alg.act(j.ob[x], f)
                for x in range(A.n_objects)
                for f in E.hom(j.ob[x], alg.carrier)
            },
        )
        ob.append(small.algebra_index(restricted))
    mor = tuple(
        small.morphism_index(ob[i], ob[k], eps) for i, k, eps in big.morphisms
    )
    functor = Functor(big.category, small.category, tuple(ob), mor)
    return RestrictionComparison(functor, is_strict_isomorphism(functor))
