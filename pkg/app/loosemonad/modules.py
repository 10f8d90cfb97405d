"""Algebras as modules over the associated loose monad, with carrier ``E(j, e)``."""

import logging
from collections.abc import Hashable

from app.constructions.algebras import algebras_on
from app.constructions.types import Algebra
from app.fincat.ops import constant_functor, hom_distributor, restrict_distributor, terminal_category
from app.fincat.search import backtrack
from app.fincat.types import Distributor
from app.loosemonad.build import associated_loose_monad, loose_identity
from app.loosemonad.types import LooseMonad, LooseMonadModule, ModuleCount
from app.nervepullback.nerves import is_dense
from app.relmonad.laws import require_monad
from app.relmonad.types import RelativeMonad

logger = logging.getLogger(__name__)


def representable_column(T: RelativeMonad, e: int) -> Distributor:
    """``E(j, e)`` as a distributor from A to the terminal category."""
    E = T.base
    point = constant_functor(terminal_category(), E, e)
    return restrict_distributor(hom_distributor(E), T.j, point)


def _module(T: RelativeMonad, loose: LooseMonad, p: Distributor, lam: dict) -> LooseMonadModule:
    right = loose_identity(p.right)
    ident = p.right.identity[0]
    rho = {
        (c, 0, 0, x, ident): x
        for c in range(T.domain.n_objects)
        for x in p.het[(c, 0)]
    }
    return LooseMonadModule(loose, right, p, lam, rho)


def algebra_module(T: RelativeMonad, alg: Algebra) -> LooseMonadModule:
    """``s · x = s ⨾ x^α`` on ``E(j, e)``."""
    require_monad(T)
    E = T.base
    loose = associated_loose_monad(T).loose
    p = representable_column(T, alg.carrier)
    n = T.domain.n_objects
    lam = {
        (c, c2, 0, s, x): E.comp(s, alg.act(c2, x))
        for c in range(n)
        for c2 in range(n)
        for s in loose.carrier.het[(c, c2)]
        for x in p.het[(c2, 0)]
    }
    return _module(T, loose, p, lam)


def module_to_algebra(T: RelativeMonad, e: int, M: LooseMonadModule) -> Algebra | None:
    """Recover ``x^α`` as the unique ``h : t c -> e`` with ``s ⨾ h = s · x`` for every ``s``.

    Returns ``None`` when some ``x`` has no such ``h`` or more than one.
    """
    E = T.base
    n = T.domain.n_objects
    table = {}
    for c2 in range(n):
        for x in E.hom(T.j.ob[c2], e):
            fits = [
                h
                for h in E.hom(T.t_ob[c2], e)
                if all(
                    E.comp(s, h) == M.lam[(c, c2, 0, s, x)]
                    for c in range(n)
                    for s in T.kleisli_hom(c, c2)
                )
            ]
            if len(fits) != 1:
                logger.debug("no unique extension for %r at %s: %d candidates", x, c2, len(fits))
                return None
            table[(c2, x)] = fits[0]
    return Algebra.of(e, table)


def enumerate_module_structures(T: RelativeMonad, e: int) -> list[LooseMonadModule]:
    """Every left action of ``E(j, T)`` on ``E(j, e)`` extending precomposition."""
    require_monad(T)
    A, E = T.domain, T.base
    n = A.n_objects
    loose = associated_loose_monad(T).loose
    p = representable_column(T, e)
    cells = {c: p.het[(c, 0)] for c in range(n)}
    keys = [
        (c, c2, s, x)
        for c in range(n)
        for c2 in range(n)
        for s in T.kleisli_hom(c, c2)
        for x in cells[c2]
    ]
    pinned = {}
    for u in range(A.n_morphisms):
        c, c2 = A.src[u], A.tgt[u]
        for x in cells[c2]:
            pinned[(c, c2, loose.eta[u], x)] = E.comp(T.j.mor[u], x)

    def mu(c0, c, c2, s0, s):
        return E.comp(s0, T.ext(c, c2, s))

    def candidates(key, _):
        return (pinned[key],) if key in pinned else cells[key[0]]

    def agrees(outer: Hashable | None, composite: Hashable | None) -> bool:
        return outer is None or composite is None or outer == composite

    def accept(key, partial):
        c, c2, s, x = key
        value = partial[key]
        # key as the inner action: s0 · (s · x) = (s0 ⨾ s†) · x
        for c0 in range(n):
            for s0 in T.kleisli_hom(c0, c):
                outer = partial.get((c0, c, s0, value))
                composite = partial.get((c0, c2, mu(c0, c, c2, s0, s), x))
                if not agrees(outer, composite):
                    return False
        # key as the outer action on an earlier value
        for c3 in range(n):
            for s2 in T.kleisli_hom(c2, c3):
                for x2 in cells[c3]:
                    if partial.get((c2, c3, s2, x2)) == x:
                        if not agrees(value, partial.get((c, c3, mu(c, c2, c3, s, s2), x2))):
                            return False
        # key as the composite
        for mid in range(n):
            for s0 in T.kleisli_hom(c, mid):
                for s1 in T.kleisli_hom(mid, c2):
                    if mu(c, mid, c2, s0, s1) != s:
                        continue
                    inner = partial.get((mid, c2, s1, x))
                    if inner is not None and not agrees(partial.get((c, mid, s0, inner)), value):
                        return False
        return True

    found = []
    for solution in backtrack(keys, candidates, accept, what="module structure"):
        lam = {(c, c2, 0, s, x): v for (c, c2, s, x), v in solution.items()}
        found.append(_module(T, loose, p, lam))
    logger.debug("carrier %s: %d module structures", E.objects[e], len(found))
    return found


def compare_algebras_and_modules(T: RelativeMonad) -> list[ModuleCount]:
    """Per carrier: algebra count, module count and the algebra round trip."""
    dense = is_dense(T.j).dense
    counts = []
    for e in range(T.base.n_objects):
        algebras = algebras_on(T, e)
        modules = enumerate_module_structures(T, e)
        round_trip = all(module_to_algebra(T, e, algebra_module(T, alg)) == alg for alg in algebras)
        counts.append(ModuleCount(e, len(algebras), len(modules), round_trip, dense))
    return counts
