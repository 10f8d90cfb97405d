import logging

from app.constructions.algebras import enumerate_algebras
from app.constructions.kleisli import build_kleisli
from app.constructions.types import AlgebraCategory
from app.fincat.laws import validate_functor
from app.fincat.ops import is_strict_isomorphism
from app.nervepullback.nerves import is_dense
from app.nervepullback.pullback import build_nerve_pullback, comparison_to_pullback
from app.nervepullback.types import ConerveTheoremReport, NervePullback, NerveTheoremReport
from app.relmonad.duality import dualize
from app.relmonad.laws import require_monad
from app.relmonad.types import RelativeComonad, RelativeMonad

logger = logging.getLogger(__name__)


def _square_witness(T: RelativeMonad, pb: NervePullback) -> tuple | None:
    """First ``(object, u, x)`` where restricting along ``k_T`` misses the nerve."""
    A, E, j = T.domain, T.base, T.j
    k = pb.kleisli.k
    for i, obj in enumerate(pb.objects):
        for u in range(A.n_morphisms):
            for x in E.hom(j.ob[A.tgt[u]], obj.carrier):
                if obj.act(k.mor[u], x) != E.comp(j.mor[u], x):
                    return (i, u, x)
    return None


def _nerve_of_comparison_witness(T: RelativeMonad, em: AlgebraCategory, pb: NervePullback) -> tuple | None:
    """``g ↦ g^α`` must be a natural bijection ``E(j x, e) ≅ Alg(T)(i_T x, (e, α))``."""
    A, E = T.domain, T.base
    free = em.f.ob
    for i, alg in enumerate(em.algebras):
        for x in range(A.n_objects):
            homs = {em.morphisms[m][2] for m in em.category.hom(free[x], i)}
            images = [alg.act(x, g) for g in E.hom(T.j.ob[x], alg.carrier)]
            if len(set(images)) != len(images) or set(images) != homs:
                return (i, x, len(images), len(homs))
        for x, x2, f in pb.kleisli.elements:
            for g in E.hom(T.j.ob[x2], alg.carrier):
                ga = alg.act(x2, g)
                if alg.act(x, E.comp(f, ga)) != E.comp(T.ext(x, x2, f), ga):
                    return (i, f, g)
    return None


def check_nerve_theorem(T: RelativeMonad) -> NerveTheoremReport:
    require_monad(T)
    kl = build_kleisli(T)
    em = enumerate_algebras(T)
    pb = build_nerve_pullback(T, kl)
    density = is_dense(T.j)
    comparison = comparison_to_pullback(T, em, pb)
    functorial = validate_functor(comparison)
    iso = is_strict_isomorphism(comparison)

    witnesses: dict[str, tuple] = {}
    if density.witness is not None:
        witnesses["density"] = density.witness
    if not iso:
        witnesses["comparison"] = (em.category.n_objects, pb.category.n_objects)
    if not functorial.passed:
        v = functorial.violations[0]
        witnesses["comparison_functorial"] = (v.law, *v.witness)
    square = _square_witness(T, pb)
    if square is not None:
        witnesses["square"] = square
    nerve = _nerve_of_comparison_witness(T, em, pb)
    if nerve is not None:
        witnesses["nerve_of_comparison"] = nerve

    report = NerveTheoremReport(
        dense=density.dense,
        comparison_iso=iso,
        nerve_of_comparison_ok=nerve is None,
        square_commutes=square is None,
        comparison_functorial=functorial.passed,
        algebra_count=em.category.n_objects,
        apex_objects=pb.category.n_objects,
        apex_morphisms=pb.category.n_morphisms,
        apex_iso_base=is_strict_isomorphism(pb.forget),
        witnesses=witnesses,
    )
    if not report.theorem_holds:
        logger.warning("dense root with non-invertible comparison: %r", witnesses)
    return report


def relabel(report: NerveTheoremReport) -> ConerveTheoremReport:
    return ConerveTheoremReport(
        codense=report.dense,
        comparison_iso=report.comparison_iso,
        conerve_of_comparison_ok=report.nerve_of_comparison_ok,
        square_commutes=report.square_commutes,
        comparison_functorial=report.comparison_functorial,
        coalgebra_count=report.algebra_count,
        apex_objects=report.apex_objects,
        apex_morphisms=report.apex_morphisms,
        apex_iso_base=report.apex_iso_base,
        witnesses=dict(report.witnesses),
    )


def check_conerve_theorem(D: RelativeComonad) -> ConerveTheoremReport:
    """The nerve theorem for the op-dual monad, read back for the comonad."""
    return relabel(check_nerve_theorem(dualize(D)))
