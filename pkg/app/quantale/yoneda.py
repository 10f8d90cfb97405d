"""Loose monads on ``A`` against monads relative to ``よ : A -> P A``.

A loose monad ``c`` corresponds to ``t(y) = c(-, y)``; the round trip is checked
in both directions over complete enumerations.
"""

import logging

from app.fincat.search import StaticConstraints, backtrack
from app.quantale.laws import check_v_loose_monad, check_v_monad, validate_vcat
from app.quantale.nerve import v_algebra_objects, v_kleisli
from app.quantale.presheaves import enumerate_presheaves, presheaf_hom, v_presheaf_object
from app.quantale.standard import enumerate_v_monads
from app.quantale.types import PresheafObject, VCat, VFunctor, VLooseMonad, VRelMonad, YoBijectionReport

logger = logging.getLogger(__name__)


def enumerate_v_loose_monads(A: VCat) -> list[VLooseMonad]:
    q = A.quantale
    n = A.n_objects
    keys = [(x, y) for x in range(n) for y in range(n)]
    constraints = StaticConstraints(keys)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                constraints.add(
                    [(x, y), (y, z), (x, z)],
                    lambda s, x=x, y=y, z=z: q.leq(q.t(s[(y, z)], s[(x, y)]), s[(x, z)]),
                )

    def candidates(key, _partial):
        return [v for v in q.elements if q.leq(A(*key), v)]

    solutions = backtrack(keys, candidates, constraints, what="V-loose monad")
    monads = [VLooseMonad(A, tuple(sorted(s.items()))) for s in solutions]
    for L in monads:
        check_v_loose_monad(L).require()
    return monads


def yoneda_root(pa: PresheafObject) -> VFunctor:
    return VFunctor(pa.base, pa.category, pa.yoneda)


def enumerate_yo_monads(pa: PresheafObject) -> list[VRelMonad]:
    return enumerate_v_monads(yoneda_root(pa))


def to_loose(T: VRelMonad, pa: PresheafObject) -> VLooseMonad:
    n = pa.base.n_objects
    return VLooseMonad(
        pa.base,
        tuple(((x, y), pa.presheaves[T.t_ob[y]][x]) for x in range(n) for y in range(n)),
    )


def to_yo_monad(L: VLooseMonad, pa: PresheafObject) -> VRelMonad | None:
    n = pa.base.n_objects
    ob = [pa.index_of(tuple(L(x, y) for x in range(n))) for y in range(n)]
    if any(i is None for i in ob):
        return None
    return VRelMonad(yoneda_root(pa), tuple(ob))


def collapse_vcat(L: VLooseMonad) -> VCat:
    return VCat.of(L.base.quantale, L.base.objects, L.table)


def _algebras_match(T: VRelMonad, L: VLooseMonad, pa: PresheafObject) -> tuple | None:
    """``Alg(T)`` as a full subcategory of ``P A`` against ``P(collapse L)``."""
    collapsed = collapse_vcat(L)
    validate_vcat(collapsed).require()
    algebras = {pa.presheaves[e] for e in v_algebra_objects(T)}
    presheaves = set(enumerate_presheaves(collapsed))
    if algebras != presheaves:
        return ("objects", len(algebras), len(presheaves))
    q = pa.base.quantale
    for p in algebras:
        for r in algebras:
            if pa.category(pa.index_of(p), pa.index_of(r)) != presheaf_hom(q, p, r):
                return ("hom", p, r)
    return None


def v_yo_monad_bijection(A: VCat, pa: PresheafObject | None = None) -> YoBijectionReport:
    pa = pa or v_presheaf_object(A)
    loose = enumerate_v_loose_monads(A)
    yo = enumerate_yo_monads(pa)
    for T in yo:
        check_v_monad(T).require()

    witnesses: dict[str, tuple] = {}
    round_trip = True
    for T in yo:
        if to_yo_monad(to_loose(T, pa), pa) != T:
            round_trip = False
            witnesses.setdefault("round_trip", ("monad", T.t_ob))
    for L in loose:
        T = to_yo_monad(L, pa)
        if T is None or to_loose(T, pa) != L:
            round_trip = False
            witnesses.setdefault("round_trip", ("loose", L.carrier))
    if {to_loose(T, pa) for T in yo} != set(loose):
        round_trip = False
        witnesses.setdefault("round_trip", ("image", len(yo), len(loose)))

    kleisli_ok = True
    algebras_ok = True
    for T in yo:
        L = to_loose(T, pa)
        if v_kleisli(T).hom != collapse_vcat(L).hom:
            kleisli_ok = False
            witnesses.setdefault("kleisli", (T.t_ob,))
        mismatch = _algebras_match(T, L, pa)
        if mismatch is not None:
            algebras_ok = False
            witnesses.setdefault("algebras", (T.t_ob, *mismatch))

    logger.info("yoneda bijection on %d objects: %d loose, %d relative", A.n_objects, len(loose), len(yo))
    return YoBijectionReport(
        loose_monads=len(loose),
        yo_monads=len(yo),
        round_trip=round_trip,
        kleisli_is_collapse=kleisli_ok,
        algebras_are_presheaves=algebras_ok,
        witnesses=witnesses,
    )
