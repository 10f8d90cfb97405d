"""Finite certificate that a square ``(n, k, pi1, pi2)`` is a semanticiser of ``k`` relative to ``n``.

Four verdicts: the restriction equation ``pi2(k, 1) = n(1, pi1)``, density of
``pi2``, the one-dimensional universal property over a finite universe of
cones, and the two-dimensional property for chains of copies of ``D(1, 1)``
up to a configurable length.
"""

import logging
from collections.abc import Callable, Hashable, Iterable, Sequence

from app.constructions.algebras import enumerate_algebras
from app.constructions.kleisli import build_kleisli
from app.constructions.types import AlgebraCategory, KleisliCategory
from app.errors import CapacityExceededError, MalformedInputError
from app.fincat.ops import (
    arrow_category,
    column_presheaf,
    conjoint,
    constant_functor,
    enumerate_functors,
    enumerate_presheaf_maps,
    identity_functor,
    restrict_distributor,
    terminal_category,
)
from app.fincat.search import StaticConstraints, UnionFind, backtrack
from app.fincat.types import Distributor, FinCat, Functor
from app.infra.settings import get_settings
from app.loosemonad.types import ChainVerdict, Cone, SemanticiserCertificate, SemanticiserSquare
from app.nervepullback.nerves import DensityReport
from app.nervepullback.pullback import build_nerve_pullback
from app.nervepullback.types import NervePullback, PullbackObject
from app.relmonad.laws import require_monad
from app.relmonad.types import RelativeMonad

logger = logging.getLogger(__name__)

Relation = tuple[Hashable, Hashable, Hashable, Callable[[Hashable, Hashable], bool]]


# ============================================
# Density of a distributor
# ============================================

def distributor_density(p: Distributor) -> DensityReport:
    """Is ``D(d, d') -> Nat(p(-, d), p(-, d'))``, ``v ↦ (x ↦ x · v)``, a bijection for all pairs?"""
    C, D = p.left, p.right
    columns = [column_presheaf(p, d) for d in range(D.n_objects)]
    failures = []
    for d in range(D.n_objects):
        for d2 in range(D.n_objects):
            homs = D.hom(d, d2)
            maps = enumerate_presheaf_maps(columns[d], columns[d2])
            induced = {
                tuple(p.act_right(c, x, v) for c in range(C.n_objects) for x in p.het[(c, d)])
                for v in homs
            }
            if len(induced) != len(homs) or len(maps) != len(homs):
                failures.append((d, d2, len(homs), len(maps)))
    if failures:
        return DensityReport(False, failures[0], tuple(failures))
    return DensityReport(True)


# ============================================
# One-dimensional universal property
# ============================================

def validate_cone(square: SemanticiserSquare, cone: Cone) -> None:
    K, X = square.pi2.left, cone.e.source
    if cone.p.left != K or cone.p.right != X or cone.e.target != square.pi1.target:
        raise MalformedInputError("cone does not fit the square")
    lhs = restrict_distributor(cone.p, square.k, identity_functor(X))
    rhs = restrict_distributor(square.n, identity_functor(square.k.source), cone.e)
    if lhs != rhs:
        raise MalformedInputError("cone fails the restriction equation")


def mediator_count(square: SemanticiserSquare, cone: Cone) -> int:
    """Functors ``h : X -> D`` with ``h ⨾ pi1 = e`` and ``pi2(1, h) = p``."""
    pi1, pi2 = square.pi1, square.pi2
    D = pi1.source
    candidates = enumerate_functors(
        cone.e.source,
        D,
        object_choices=lambda x: [d for d in range(D.n_objects) if pi1.ob[d] == cone.e.ob[x]],
        morphism_choices=lambda u, _: [m for m in range(D.n_morphisms) if pi1.mor[m] == cone.e.mor[u]],
    )
    idK = identity_functor(pi2.left)
    return sum(1 for h in candidates if restrict_distributor(pi2, idK, h) == cone.p)


# ============================================
# Two-dimensional property
# ============================================

def _end(D: FinCat, d0: int, ys: tuple[int, ...]) -> int:
    return D.tgt[ys[-1]] if ys else d0


def _chains(D: FinCat, length: int) -> list[tuple[int, tuple[int, ...]]]:
    out = [(d, ()) for d in range(D.n_objects)]
    for _ in range(length):
        out = [(d0, ys + (y,)) for d0, ys in out for y in D.morphisms_from(_end(D, d0, ys))]
    return out


def _joints(D: FinCat, c: tuple[int, ...], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``c[p]`` absorbed into its left neighbour, then into its right neighbour."""
    left = c[: p - 1] + (D.comp(c[p - 1], c[p]),) + c[p + 1 :]
    right = c[:p] + (D.comp(c[p], c[p + 1]),) + c[p + 2 :]
    return left, right


def _solve(
    keys: Sequence[Hashable],
    equal: Iterable[tuple[Hashable, Hashable]],
    relations: Iterable[Relation],
    candidates: Callable[[Hashable], Sequence[Hashable]],
    what: str,
) -> tuple[UnionFind, list[Hashable], list[dict]]:
    """Tables constant on the classes spanned by ``equal`` and satisfying ``relations``."""
    uf = UnionFind(keys)
    for a, b in equal:
        uf.union(a, b)
    reps = uf.representatives()
    constraints = StaticConstraints(reps)
    seen = set()
    for k1, k2, tag, pred in relations:
        r1, r2 = uf.find(k1), uf.find(k2)
        if (r1, r2, tag) in seen:
            continue
        seen.add((r1, r2, tag))
        constraints.add([r1, r2], lambda s, r1=r1, r2=r2, pred=pred: pred(s[r1], s[r2]))
    solutions = list(backtrack(reps, lambda r, _: candidates(r), constraints, what=what))
    return uf, reps, solutions


def _cells_into_hom(D: FinCat, n: int):
    keys = _chains(D, n)
    equal = []
    if n >= 2:
        for d0, c in _chains(D, n + 1):
            for p in range(1, n):
                left, right = _joints(D, c, p)
                equal.append(((d0, left), (d0, right)))
    relations: list[Relation] = []
    if n == 0:
        for u in range(D.n_morphisms):
            d, d2 = D.src[u], D.tgt[u]
            relations.append(
                ((d, ()), (d2, ()), ("N", u), lambda a, b, u=u: D.comp(a, u) == D.comp(u, b))
            )
    else:
        for d0, ys in keys:
            for u in D.morphisms_into(d0):
                k1 = (D.src[u], (D.comp(u, ys[0]),) + ys[1:])
                relations.append((k1, (d0, ys), ("L", u), lambda a, b, u=u: a == D.comp(u, b)))
            for v in D.morphisms_from(_end(D, d0, ys)):
                k1 = (d0, ys[:-1] + (D.comp(ys[-1], v),))
                relations.append((k1, (d0, ys), ("R", v), lambda a, b, v=v: a == D.comp(b, v)))
    return _solve(keys, equal, relations, lambda k: D.hom(k[0], _end(D, *k)), "multicell into hom")


def _cells_into_pi2(pi2: Distributor, n: int):
    K, D = pi2.left, pi2.right
    chains = _chains(D, n)
    keys = [
        (kappa, d0, x, ys)
        for kappa in range(K.n_objects)
        for d0, ys in chains
        for x in pi2.het[(kappa, d0)]
    ]
    equal = []
    if n >= 1:
        for d0, c in _chains(D, n + 1):
            for kappa in range(K.n_objects):
                for x in pi2.het[(kappa, d0)]:
                    # x · c[0] against c[0] ⨾ c[1]
                    equal.append(
                        (
                            (kappa, D.tgt[c[0]], pi2.act_right(kappa, x, c[0]), c[1:]),
                            (kappa, d0, x, (D.comp(c[0], c[1]),) + c[2:]),
                        )
                    )
                    for p in range(1, n):
                        left, right = _joints(D, c, p)
                        equal.append(((kappa, d0, x, left), (kappa, d0, x, right)))
    relations: list[Relation] = []
    for kappa, d0, x, ys in keys:
        end = _end(D, d0, ys)
        for f in K.morphisms_into(kappa):
            k1 = (K.src[f], d0, pi2.act_left(f, d0, x), ys)
            relations.append(
                (k1, (kappa, d0, x, ys), ("L", f), lambda a, b, f=f, end=end: a == pi2.act_left(f, end, b))
            )
        for v in D.morphisms_from(end):
            if n == 0:
                k1 = (kappa, D.tgt[v], pi2.act_right(kappa, x, v), ())
            else:
                k1 = (kappa, d0, x, ys[:-1] + (D.comp(ys[-1], v),))
            relations.append(
                (k1, (kappa, d0, x, ys), ("R", v), lambda a, b, v=v, kappa=kappa: a == pi2.act_right(kappa, b, v))
            )
    return _solve(
        keys, equal, relations, lambda k: pi2.het[(k[0], _end(D, k[1], k[3]))], "multicell into pi2"
    )


def chain_verdict(square: SemanticiserSquare, n: int) -> ChainVerdict:
    """``psi ↦ (x, ys ↦ x · psi(ys))`` must biject the two kinds of cell."""
    pi2 = square.pi2
    try:
        hom_uf, _, into_hom = _cells_into_hom(pi2.right, n)
        _, pi2_reps, into_pi2 = _cells_into_pi2(pi2, n)
    except CapacityExceededError as exc:
        logger.warning("chain length %d not attempted: %s", n, exc)
        return ChainVerdict(n, None, None, None)

    targets = {tuple(s[r] for r in pi2_reps) for s in into_pi2}
    images = set()
    onto_cells = True
    for s in into_hom:
        image = tuple(
            pi2.act_right(kappa, x, s[hom_uf.find((d0, ys))]) for kappa, d0, x, ys in pi2_reps
        )
        onto_cells = onto_cells and image in targets
        images.add(image)
    bijective = onto_cells and len(images) == len(into_hom) == len(into_pi2)
    logger.debug("chain %d: %d cells into hom, %d into pi2", n, len(into_hom), len(into_pi2))
    return ChainVerdict(n, len(into_hom), len(into_pi2), bijective)


# ============================================
# Certificate
# ============================================

def check_semanticiser(
    square: SemanticiserSquare,
    cones: Sequence[Cone] = (),
    *,
    chain_bound: int | None = None,
) -> SemanticiserCertificate:
    for cone in cones:
        validate_cone(square, cone)
    if chain_bound is None:
        chain_bound = get_settings().chain_bound

    A, D = square.k.source, square.pi1.source
    lhs = restrict_distributor(square.pi2, square.k, identity_functor(D))
    rhs = restrict_distributor(square.n, identity_functor(A), square.pi1)
    density = distributor_density(square.pi2)
    counts = tuple(mediator_count(square, cone) for cone in cones)
    chains = tuple(chain_verdict(square, n) for n in range(chain_bound + 1))
    certificate = SemanticiserCertificate(
        square=square,
        restriction_holds=lhs == rhs,
        dense=density.dense,
        density_witness=density.witness,
        mediator_counts=counts,
        chains=chains,
    )
    logger.info(
        "semanticiser: restriction=%s dense=%s cones=%d universal=%s chains=%s",
        certificate.restriction_holds,
        certificate.dense,
        len(counts),
        certificate.universal,
        certificate.two_dimensional,
    )
    return certificate


# ============================================
# The Eilenberg–Moore square
# ============================================

def em_semanticiser_square(
    T: RelativeMonad,
    kl: KleisliCategory | None = None,
    em: AlgebraCategory | None = None,
) -> SemanticiserSquare:
    """``n = E(j, 1)``, ``k = k_T``, ``pi1 = u_T`` and ``pi2(κ, (e, α)) = E(j κ, e)``.

    Kleisli morphisms act on ``pi2`` through the algebra structure, algebra
    morphisms by postcomposition.
    """
    require_monad(T)
    kl = kl or build_kleisli(T)
    em = em or enumerate_algebras(T)
    E, j = T.base, T.j
    K, D = kl.category, em.category
    het = {
        (kappa, i): E.hom(j.ob[kappa], alg.carrier)
        for kappa in range(K.n_objects)
        for i, alg in enumerate(em.algebras)
    }
    left_action = {}
    for m, (a, a2, f) in enumerate(kl.elements):
        for i, alg in enumerate(em.algebras):
            for x in het[(a2, i)]:
                left_action[(m, i, x)] = E.comp(f, alg.act(a2, x))
    right_action = {}
    for m, (i, _, eps) in enumerate(em.morphisms):
        for kappa in range(K.n_objects):
            for x in het[(kappa, i)]:
                right_action[(kappa, x, m)] = E.comp(x, eps)
    pi2 = Distributor(
        K, D, het, left_action, right_action, labels={f: E.morphism_name(f) for f in range(E.n_morphisms)}
    )
    return SemanticiserSquare(n=conjoint(j), k=kl.k, pi1=em.u, pi2=pi2)


def _object_cone(T: RelativeMonad, K: FinCat, obj: PullbackObject) -> Cone:
    X = terminal_category()
    E, j = T.base, T.j
    het = {(kappa, 0): E.hom(j.ob[kappa], obj.carrier) for kappa in range(K.n_objects)}
    p = Distributor(
        K,
        X,
        het,
        {(f, 0, x): y for (f, x), y in obj.action},
        {(kappa, x, X.identity[0]): x for (kappa, _), cell in het.items() for x in cell},
    )
    return Cone(constant_functor(X, E, obj.carrier), p)


def _arrow_cone(T: RelativeMonad, K: FinCat, a: PullbackObject, b: PullbackObject, eps: int) -> Cone:
    X = arrow_category()
    E, j = T.base, T.j
    arrow = X.hom(0, 1)[0]
    carriers = (a.carrier, b.carrier)
    het = {
        (kappa, end): E.hom(j.ob[kappa], carriers[end])
        for kappa in range(K.n_objects)
        for end in (0, 1)
    }
    left_action = {(f, 0, x): y for (f, x), y in a.action}
    left_action.update({(f, 1, x): y for (f, x), y in b.action})
    right_action = {}
    for kappa in range(K.n_objects):
        for end in (0, 1):
            for x in het[(kappa, end)]:
                right_action[(kappa, x, X.identity[end])] = x
        for x in het[(kappa, 0)]:
            right_action[(kappa, x, arrow)] = E.comp(x, eps)
    mor = [E.identity[a.carrier]] * X.n_morphisms
    mor[X.identity[1]] = E.identity[b.carrier]
    mor[arrow] = eps
    e = Functor(X, E, carriers, tuple(mor))
    return Cone(e, Distributor(K, X, het, left_action, right_action))


def default_cone_universe(T: RelativeMonad, pb: NervePullback | None = None) -> list[Cone]:
    """One cone per object of the nerve pullback and one per non-identity morphism."""
    pb = pb or build_nerve_pullback(T)
    K = pb.kleisli.category
    cones = [_object_cone(T, K, obj) for obj in pb.objects]
    for m, (i, k, eps) in enumerate(pb.morphisms):
        if pb.category.is_identity(m):
            continue
        cones.append(_arrow_cone(T, K, pb.objects[i], pb.objects[k], eps))
    return cones


def check_em_semanticiser(
    T: RelativeMonad,
    *,
    chain_bound: int | None = None,
    extra_cones: Sequence[Cone] = (),
) -> SemanticiserCertificate:
    kl = build_kleisli(T)
    em = enumerate_algebras(T)
    square = em_semanticiser_square(T, kl, em)
    cones = default_cone_universe(T, build_nerve_pullback(T, kl)) + list(extra_cones)
    return check_semanticiser(square, cones, chain_bound=chain_bound)
