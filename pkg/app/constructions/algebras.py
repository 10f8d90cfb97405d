import logging

from app.constructions.types import Algebra, AlgebraCategory, Resolution
from app.errors import LabError
from app.fincat.ops import build_category
from app.fincat.search import backtrack
from app.fincat.types import Functor, LawReport, LawViolation
from app.relmonad.adjunctions import monad_from_adjunction
from app.relmonad.laws import carrier_functor
from app.relmonad.types import RelativeAdjunction, RelativeMonad

logger = logging.getLogger(__name__)


def check_algebra(T: RelativeMonad, alg: Algebra) -> LawReport:
    A, E, e = T.domain, T.base, alg.carrier
    violations = []
    for x in range(A.n_objects):
        for f in E.hom(T.j.ob[x], e):
            if E.comp(T.eta[x], alg.act(x, f)) != f:
                violations.append(LawViolation("unit", (x, f)))
    for x in range(A.n_objects):
        for y in range(A.n_objects):
            for f in T.kleisli_hom(x, y):
                for g in E.hom(T.j.ob[y], e):
                    ga = alg.act(y, g)
                    if alg.act(x, E.comp(f, ga)) != E.comp(T.ext(x, y, f), ga):
                        violations.append(LawViolation("associativity", (x, y, f, g)))
    return LawReport.build("algebra", violations)


def free_algebra(T: RelativeMonad, x: int) -> Algebra:
    E = T.base
    return Algebra.of(
        T.t_ob[x],
        {
            (x2, f): T.ext(x2, x, f)
            for x2 in range(T.domain.n_objects)
            for f in E.hom(T.j.ob[x2], T.t_ob[x])
        },
    )


def algebras_on(T: RelativeMonad, e: int) -> list[Algebra]:
    """Every algebra structure on the carrier ``e``, tables in lexicographic order."""
    A, E = T.domain, T.base
    n = A.n_objects
    keys = [(x, f) for x in range(n) for f in E.hom(T.j.ob[x], e)]

    def candidates(key, _):
        x, f = key
        return [c for c in E.hom(T.t_ob[x], e) if E.comp(T.eta[x], c) == f]

    def accept(key, partial):
        # key as the inner g: aop(x, f ⨾ g^α) must be f† ⨾ g^α
        y, g = key
        ga = partial[key]
        for x in range(n):
            for f in T.kleisli_hom(x, y):
                outer = partial.get((x, E.comp(f, ga)))
                if outer is not None and outer != E.comp(T.ext(x, y, f), ga):
                    return False
        # key as the outer entry
        x, k = key
        value = partial[key]
        for (y, g), ga in partial.items():
            for f in T.kleisli_hom(x, y):
                if E.comp(f, ga) == k and value != E.comp(T.ext(x, y, f), ga):
                    return False
        return True

    found = [Algebra.of(e, s) for s in backtrack(keys, candidates, accept, what="algebra")]
    logger.debug("carrier %s: %d algebras", E.objects[e], len(found))
    return found


def is_algebra_morphism(T: RelativeMonad, a: Algebra, b: Algebra, epsilon: int) -> bool:
    E = T.base
    for x in range(T.domain.n_objects):
        for f in E.hom(T.j.ob[x], a.carrier):
            if E.comp(a.act(x, f), epsilon) != b.act(x, E.comp(f, epsilon)):
                return False
    return True


def enumerate_algebras(T: RelativeMonad) -> AlgebraCategory:
    """Eilenberg–Moore category: all algebras by carrier, morphisms commuting with ^α."""
    A, E = T.domain, T.base
    algebras: list[Algebra] = []
    names: list[str] = []
    for e in range(E.n_objects):
        on_e = algebras_on(T, e)
        for k, alg in enumerate(on_e):
            algebras.append(alg)
            names.append(E.objects[e] if len(on_e) == 1 else f"{E.objects[e]}#{k}")

    N = len(algebras)
    cells = {
        (i, k): tuple(
            eps
            for eps in E.hom(algebras[i].carrier, algebras[k].carrier)
            if is_algebra_morphism(T, algebras[i], algebras[k], eps)
        )
        for i in range(N)
        for k in range(N)
    }
    category, morphisms = build_category(
        names,
        cells,
        identity_of=lambda i: E.identity[algebras[i].carrier],
        compose_of=lambda i, k, l, p, q: E.comp(p, q),
        label=lambda i, k, eps: E.morphism_name(eps),
    )
    u = Functor(
        category,
        E,
        tuple(alg.carrier for alg in algebras),
        tuple(eps for _, _, eps in morphisms),
    )

    index = {m: n for n, m in enumerate(morphisms)}
    free = []
    for x in range(A.n_objects):
        alg = free_algebra(T, x)
        if alg not in algebras:
            raise LabError(f"free algebra on {A.objects[x]} was not enumerated")
        free.append(algebras.index(alg))
    t = carrier_functor(T)
    f = Functor(
        A,
        category,
        tuple(free),
        tuple(
            index[(free[A.src[w]], free[A.tgt[w]], t.mor[w])] for w in range(A.n_morphisms)
        ),
    )
    adjunction = RelativeAdjunction(
        j=T.j,
        ell=f,
        r=u,
        phi={
            (x, k, index[(free[x], k, eps)]): E.comp(T.eta[x], eps)
            for x in range(A.n_objects)
            for k in range(N)
            for eps in cells[(free[x], k)]
        },
    )
    resolution = Resolution(adjunction, monad_from_adjunction(adjunction) == T)
    logger.info("algebras: %d objects, %d morphisms", category.n_objects, category.n_morphisms)
    return AlgebraCategory(category, tuple(algebras), morphisms, u, f, resolution)
