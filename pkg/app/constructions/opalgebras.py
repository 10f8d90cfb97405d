"""Opalgebras: functors out of A with an action of Kleisli morphisms."""

import logging

from app.constructions.kleisli import build_kleisli
from app.constructions.types import Factorization, KleisliCategory, Opalgebra
from app.errors import CapacityExceededError, MalformedInputError
from app.fincat.ops import enumerate_functors
from app.fincat.search import StaticConstraints, backtrack
from app.fincat.types import Functor, LawReport, LawViolation, Uniqueness
from app.loosemonad.build import associated_loose_monad, loose_identity
from app.loosemonad.laws import check_loose_monad_morphism
from app.loosemonad.types import LooseMonadMorphism
from app.relmonad.laws import carrier_functor, require_monad
from app.relmonad.types import RelativeMonad

logger = logging.getLogger(__name__)


def _check_tables(T: RelativeMonad, o: Opalgebra) -> None:
    A, B = T.domain, o.a.target
    if o.a.source != A:
        raise MalformedInputError("opalgebra carrier does not start at the monad's domain")
    for x in range(A.n_objects):
        for y in range(A.n_objects):
            for f in T.kleisli_hom(x, y):
                value = o.oop.get((x, y, f))
                if value is None or value not in B.hom(o.a.ob[x], o.a.ob[y]):
                    raise MalformedInputError("opalgebra action is not total or mistyped", (x, y, f))


def _morphism_report(T: RelativeMonad, o: Opalgebra) -> LawReport:
    m = LooseMonadMorphism(
        source=associated_loose_monad(T).loose,
        target=loose_identity(o.a.target),
        f=o.a,
        phi=dict(o.oop),
    )
    return check_loose_monad_morphism(m)


def check_opalgebra(T: RelativeMonad, o: Opalgebra) -> LawReport:
    """Unit, extension and agreement with the carrier on tight morphisms.

    The induced 2-cell ``E(j, T) => B(a, a)`` is checked as a loose-monad
    morphism and attached as a supplementary report.
    """
    require_monad(T)
    _check_tables(T, o)
    A, E, B = T.domain, T.base, o.a.target
    a = o.a
    n = A.n_objects
    violations = []
    for x in range(n):
        if o.oop[(x, x, T.eta[x])] != B.identity[a.ob[x]]:
            violations.append(LawViolation("unit", (x,)))
    for x in range(n):
        for y in range(n):
            for f in T.kleisli_hom(x, y):
                for z in range(n):
                    for g in T.kleisli_hom(y, z):
                        fg = E.comp(f, T.ext(y, z, g))
                        if o.oop[(x, z, fg)] != B.comp(o.oop[(x, y, f)], o.oop[(y, z, g)]):
                            violations.append(LawViolation("extension", (x, y, z, f, g)))
    for u in range(A.n_morphisms):
        x, y = A.src[u], A.tgt[u]
        if o.oop[(x, y, T.unit_of(u))] != a.mor[u]:
            violations.append(LawViolation("tight-compatibility", (u,)))
    return LawReport.build("opalgebra", violations, (_morphism_report(T, o),))


def universal_opalgebra(kl: KleisliCategory) -> Opalgebra:
    """``k_T`` with each Kleisli morphism acting as itself."""
    return Opalgebra(kl.k, {(x, y, f): kl.index_of(x, y, f) for x, y, f in kl.elements})


def carrier_opalgebra(T: RelativeMonad) -> Opalgebra:
    """``t`` into E with the extension operator as action."""
    return Opalgebra(carrier_functor(T), dict(T.dagger))


def opalgebra_factorization(
    T: RelativeMonad, o: Opalgebra, kl: KleisliCategory | None = None
) -> Factorization:
    """The functor ``Kl(T) -> B`` with ``x ↦ a x`` and ``f ↦ oop(f)``."""
    report = check_opalgebra(T, o)
    report.require()
    kl = kl or build_kleisli(T)
    a, B = o.a, o.a.target
    functor = Functor(
        kl.category,
        B,
        a.ob,
        tuple(o.oop[(x, y, f)] for x, y, f in kl.elements),
    )

    # h must agree with a on k_T and send each Kleisli morphism to its action
    forced = {kl.k.mor[u]: a.mor[u] for u in range(T.domain.n_morphisms)}

    def morphism_choices(i, _):
        x, y, f = kl.elements[i]
        choice = o.oop[(x, y, f)]
        if i in forced and forced[i] != choice:
            return ()
        return (choice,)

    try:
        count = len(
            enumerate_functors(
                kl.category,
                B,
                object_choices=lambda x: (a.ob[x],),
                morphism_choices=morphism_choices,
            )
        )
    except CapacityExceededError as exc:
        logger.warning("factorization uniqueness not attempted: %s", exc)
        count = None
    return Factorization(functor, Uniqueness(count), report)


def opalgebra_structures(T: RelativeMonad, a: Functor) -> list[Opalgebra]:
    """Every action table making ``a`` an opalgebra, in lexicographic order."""
    require_monad(T)
    A, E, B = T.domain, T.base, a.target
    n = A.n_objects
    keys = [(x, y, f) for x in range(n) for y in range(n) for f in T.kleisli_hom(x, y)]
    pinned = {(A.src[u], A.tgt[u], T.unit_of(u)): a.mor[u] for u in range(A.n_morphisms)}

    def candidates(key, _):
        if key in pinned:
            return (pinned[key],)
        x, y, _f = key
        return B.hom(a.ob[x], a.ob[y])

    constraints = StaticConstraints(keys)
    for x, y, f in keys:
        for z in range(n):
            for g in T.kleisli_hom(y, z):
                fg = (x, z, E.comp(f, T.ext(y, z, g)))
                constraints.add(
                    [(x, y, f), (y, z, g), fg],
                    lambda s, k1=(x, y, f), k2=(y, z, g), k3=fg: B.comp(s[k1], s[k2]) == s[k3],
                )
    found = [Opalgebra(a, s) for s in backtrack(keys, candidates, constraints, what="opalgebra")]
    logger.debug("%d opalgebra structures", len(found))
    return found


def opalgebra_morphism_counts(T: RelativeMonad, a: Functor) -> tuple[int, int]:
    """Opalgebra structures on ``a`` against loose-monad morphisms ``E(j, t) -> B(1, 1)`` over ``a``.

    The right-hand count filters every typed table through the morphism check.
    """
    opalgebras = opalgebra_structures(T, a)
    A, B = T.domain, a.target
    n = A.n_objects
    keys = [(x, y, f) for x in range(n) for y in range(n) for f in T.kleisli_hom(x, y)]
    source, target = associated_loose_monad(T).loose, loose_identity(B)
    morphisms = 0
    for s in backtrack(keys, lambda key, _: B.hom(a.ob[key[0]], a.ob[key[1]]), what="loose-monad morphism"):
        if check_loose_monad_morphism(LooseMonadMorphism(source, target, a, s)).passed:
            morphisms += 1
    return len(opalgebras), morphisms
