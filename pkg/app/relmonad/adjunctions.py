import itertools
import logging

from app.errors import MalformedInputError
from app.fincat.laws import validate_functor
from app.fincat.types import Functor, LawReport, LawViolation
from app.infra.settings import ensure_within, get_settings
from app.relmonad.types import RelativeAdjunction, RelativeMonad

logger = logging.getLogger(__name__)


def check_relative_adjunction(adj: RelativeAdjunction) -> LawReport:
    j, ell, r = adj.j, adj.ell, adj.r
    A, C, E = j.source, r.source, j.target
    if ell.source != A or ell.target != C or r.target != E:
        raise MalformedInputError("adjunction functors do not line up")
    violations = list(validate_functor(ell).violations) + list(validate_functor(r).violations)

    for x in range(A.n_objects):
        for y in range(C.n_objects):
            homs = C.hom(ell.ob[x], y)
            target = E.hom(j.ob[x], r.ob[y])
            images = []
            for h in homs:
                v = adj.phi.get((x, y, h))
                if v is None or v not in target:
                    raise MalformedInputError("phi is not total or mistyped", (x, y, h))
                images.append(v)
            if len(set(images)) != len(images) or len(images) != len(target):
                violations.append(LawViolation("bijective", (x, y, len(images), len(target))))

    for u in range(A.n_morphisms):
        x2, x = A.src[u], A.tgt[u]
        for y in range(C.n_objects):
            for h in C.hom(ell.ob[x], y):
                lhs = adj.phi[(x2, y, C.comp(ell.mor[u], h))]
                if lhs != E.comp(j.mor[u], adj.phi[(x, y, h)]):
                    violations.append(LawViolation("natural-left", (u, h)))
    for x in range(A.n_objects):
        for k in range(C.n_morphisms):
            y, y2 = C.src[k], C.tgt[k]
            for h in C.hom(ell.ob[x], y):
                if adj.phi[(x, y2, C.comp(h, k))] != E.comp(adj.phi[(x, y, h)], r.mor[k]):
                    violations.append(LawViolation("natural-right", (x, h, k)))
    return LawReport.build("relative adjunction", violations)


def monad_from_adjunction(adj: RelativeAdjunction) -> RelativeMonad:
    """``t = ℓ ⨾ r`` on objects, ``η_x = phi(id)`` and ``f† = r(phi⁻¹ f)``."""
    check_relative_adjunction(adj).require()
    j, ell, r = adj.j, adj.ell, adj.r
    A, C, E = j.source, r.source, j.target
    t_ob = tuple(r.ob[ell.ob[x]] for x in range(A.n_objects))
    eta = tuple(adj.phi[(x, ell.ob[x], C.identity[ell.ob[x]])] for x in range(A.n_objects))
    dagger = {}
    for x in range(A.n_objects):
        for y in range(A.n_objects):
            c = ell.ob[y]
            inverse = {adj.phi[(x, c, h)]: h for h in C.hom(ell.ob[x], c)}
            for f in E.hom(j.ob[x], t_ob[y]):
                dagger[(x, y, f)] = r.mor[inverse[f]]
    return RelativeMonad(j, t_ob, eta, dagger)


def _universal_arrows(r: Functor, j: Functor, x: int) -> list[tuple[int, int]]:
    C, E = r.source, j.target
    found = []
    for c in range(C.n_objects):
        for eta in E.hom(j.ob[x], r.ob[c]):
            universal = True
            for y in range(C.n_objects):
                images = {E.comp(eta, r.mor[h]) for h in C.hom(c, y)}
                if len(images) != len(C.hom(c, y)) or len(images) != len(E.hom(j.ob[x], r.ob[y])):
                    universal = False
                    break
            if universal:
                found.append((c, eta))
    return found


def _adjunction_from_arrows(
    r: Functor, j: Functor, arrows: tuple[tuple[int, int], ...]
) -> RelativeAdjunction:
    A, C, E = j.source, r.source, j.target
    ell_ob = tuple(c for c, _ in arrows)
    ell_mor = []
    for u in range(A.n_morphisms):
        x2, x = A.src[u], A.tgt[u]
        want = E.comp(j.mor[u], arrows[x][1])
        (h,) = [h for h in C.hom(ell_ob[x2], ell_ob[x]) if E.comp(arrows[x2][1], r.mor[h]) == want]
        ell_mor.append(h)
    ell = Functor(A, C, ell_ob, tuple(ell_mor))
    phi = {
        (x, y, h): E.comp(arrows[x][1], r.mor[h])
        for x in range(A.n_objects)
        for y in range(C.n_objects)
        for h in C.hom(ell_ob[x], y)
    }
    return RelativeAdjunction(j, ell, r, phi)


def find_left_relative_adjoint(
    r: Functor, j: Functor, *, all_solutions: bool = False
) -> RelativeAdjunction | list[RelativeAdjunction] | None:
    """Search for ``ℓ ⊣_j r``.

    Each ``ℓ x`` is a universal arrow from ``j x`` to ``r``; objects of C are
    tried in index order, then unit morphisms in index order.
    """
    if r.target != j.target:
        raise MalformedInputError("r and j must share a codomain")
    A = j.source
    per_object = [_universal_arrows(r, j, x) for x in range(A.n_objects)]
    if any(not arrows for arrows in per_object):
        logger.debug("no left j-adjoint: some object has no universal arrow")
        return [] if all_solutions else None
    if not all_solutions:
        return _adjunction_from_arrows(r, j, tuple(arrows[0] for arrows in per_object))

    total = 1
    for arrows in per_object:
        total *= len(arrows)
    ensure_within("adjunction solutions", total, get_settings().search_budget)
    return [
        _adjunction_from_arrows(r, j, choice) for choice in itertools.product(*per_object)
    ]
