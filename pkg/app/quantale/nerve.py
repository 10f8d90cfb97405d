"""The nerve theorem and the Eilenberg–Moore semanticiser over a quantale.

Everything is thin: a pullback object is an ``e`` whose nerve already carries a
Kleisli action, so the apex is the full subcategory of ``E`` on those ``e``.
"""

import logging

from app.errors import LabError
from app.quantale.laws import check_v_distributor, check_v_monad
from app.quantale.presheaves import right_lift, v_is_dense, v_presheaf_object
from app.quantale.types import PresheafObject, VCat, VDistributor, VNerveTheoremReport, VRelMonad

logger = logging.getLogger(__name__)


def v_kleisli(T: VRelMonad) -> VCat:
    """``Kl(T)(x, y) = E(j x, t y)`` on the objects of ``A``."""
    A, E, j = T.domain, T.base, T.j
    n = A.n_objects
    hom = {(x, y): E(j.ob[x], T.t_ob[y]) for x in range(n) for y in range(n)}
    return VCat.of(E.quantale, A.objects, hom)


def v_algebra_objects(T: VRelMonad) -> tuple[int, ...]:
    """Objects ``e`` with ``E(j x, e) ≤ E(t x, e)`` for every ``x``."""
    A, E, j = T.domain, T.base, T.j
    q = E.quantale
    return tuple(
        e
        for e in range(E.n_objects)
        if all(q.leq(E(j.ob[x], e), E(T.t_ob[x], e)) for x in range(A.n_objects))
    )


def _column(T: VRelMonad, e: int) -> tuple[str, ...]:
    return tuple(T.base(T.j.ob[a], e) for a in range(T.domain.n_objects))


def _unit_vcat(T: VRelMonad) -> VCat:
    return VCat.of(T.base.quantale, ("*",), {(0, 0): T.base.quantale.unit})


def v_semanticiser_apex(T: VRelMonad, kl: VCat | None = None) -> dict[tuple[int, int], str]:
    """Objects whose nerve is a ``Kl(T)``-module, homs ``E ∧`` the right lift of columns."""
    E = T.base
    q = E.quantale
    kl = kl or v_kleisli(T)
    point = _unit_vcat(T)
    modules = []
    for e in range(E.n_objects):
        column = _column(T, e)
        p = VDistributor(kl, point, tuple(((a, 0), column[a]) for a in range(kl.n_objects)))
        if check_v_distributor(p).passed:
            modules.append(e)
    return {
        (e, e2): q.meet((E(e, e2), right_lift(q, _column(T, e), _column(T, e2))))
        for e in modules
        for e2 in modules
    }


def v_pullback_apex(
    T: VRelMonad,
    pkl: PresheafObject,
) -> dict[tuple[int, int], str]:
    """Pairs ``(e, r)`` with ``n_j e = k* r``; since ``k*`` keeps values, ``r`` is the column."""
    E = T.base
    q = E.quantale
    objects = [(e, pkl.index_of(_column(T, e))) for e in range(E.n_objects)]
    objects = [(e, r) for e, r in objects if r is not None]
    return {
        (e, e2): q.meet((E(e, e2), pkl.category(r, r2)))
        for e, r in objects
        for e2, r2 in objects
    }


def v_check_nerve_theorem(T: VRelMonad) -> VNerveTheoremReport:
    check_v_monad(T).require()
    E = T.base
    pa = v_presheaf_object(T.domain)
    kl = v_kleisli(T)
    pkl = v_presheaf_object(kl)
    density = v_is_dense(T.j, pa)

    algebras = v_algebra_objects(T)
    for e in algebras:
        if pkl.index_of(_column(T, e)) is None:
            raise LabError(f"nerve of algebra {E.objects[e]} carries no Kleisli action")
    apex = v_pullback_apex(T, pkl)
    pullback = tuple(sorted({e for e, _ in apex}))

    witnesses: dict[str, tuple] = {}
    if density.witness is not None:
        witnesses["density"] = density.witness

    iso = set(algebras) == set(pullback)
    if not iso:
        witnesses["comparison"] = tuple(sorted(set(algebras) ^ set(pullback)))
    else:
        for e in algebras:
            for e2 in algebras:
                if E(e, e2) != apex[(e, e2)]:
                    iso = False
                    witnesses.setdefault("comparison", (e, e2, E(e, e2), apex[(e, e2)]))

    semanticiser = v_semanticiser_apex(T, kl)
    matches = semanticiser == apex
    if not matches:
        diff = sorted(set(semanticiser.items()) ^ set(apex.items()))
        witnesses["semanticiser"] = diff[0]

    report = VNerveTheoremReport(
        dense=density.dense,
        comparison_iso=iso,
        algebras=algebras,
        pullback=pullback,
        semanticiser_matches=matches,
        witnesses=witnesses,
    )
    if not report.theorem_holds:
        logger.warning("dense V-root with non-invertible comparison: %r", witnesses)
    return report
