import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from app.errors import LabError
from app.fincat.search import StaticConstraints, backtrack
from app.fincat.types import LawReport, LawViolation
from app.infra.settings import ensure_within, get_settings
from app.nervepullback.nerves import DensityReport
from app.quantale.laws import check_v_distributor, validate_vcat, validate_vfunctor
from app.quantale.types import PresheafObject, Quantale, VCat, VDistributor, VFunctor

logger = logging.getLogger(__name__)

Values = tuple[str, ...]


def presheaf_name(values: Sequence[str]) -> str:
    return "(" + ",".join(values) + ")"


def is_presheaf(A: VCat, values: Sequence[str]) -> bool:
    q = A.quantale
    n = A.n_objects
    return all(
        q.leq(q.t(values[a], A(a2, a)), values[a2]) for a in range(n) for a2 in range(n)
    )


def enumerate_presheaves(A: VCat) -> list[Values]:
    """All down-closed value maps ``objects(A) -> V``, lexicographic in element order."""
    q = A.quantale
    n = A.n_objects
    ensure_within("presheaf candidates", len(q.elements) ** n, get_settings().max_presheaves)
    keys = list(range(n))
    constraints = StaticConstraints(keys)
    for a in range(n):
        for a2 in range(n):
            constraints.add(
                [a, a2], lambda s, a=a, a2=a2: q.leq(q.t(s[a], A(a2, a)), s[a2])
            )
    solutions = backtrack(keys, lambda _k, _p: q.elements, constraints, what="V-presheaf")
    return [tuple(s[a] for a in keys) for s in solutions]


def presheaf_hom(q: Quantale, p: Sequence[str], r: Sequence[str]) -> str:
    """``⋀_a lres(p(a), r(a))``."""
    return q.meet(q.lres(p[a], r[a]) for a in range(len(p)))


def right_lift(q: Quantale, p: Sequence[str], r: Sequence[str]) -> str:
    """Largest ``v`` with ``v ⊗ p(a) ≤ r(a)`` for every ``a``, found by search."""
    return q.join(
        v for v in q.elements if all(q.leq(q.t(v, p[a]), r[a]) for a in range(len(p)))
    )


def representable(A: VCat, a: int) -> Values:
    return tuple(A(b, a) for b in range(A.n_objects))


def v_presheaf_object(A: VCat) -> PresheafObject:
    """``P A``, built once per V-category; the presheaf cap is checked on every call."""
    ensure_within("presheaf candidates", len(A.quantale.elements) ** A.n_objects, get_settings().max_presheaves)
    return _presheaf_object(A)


@lru_cache(maxsize=4096)
def _presheaf_object(A: VCat) -> PresheafObject:
    validate_vcat(A).require()
    q = A.quantale
    presheaves = enumerate_presheaves(A)
    N = len(presheaves)
    hom = {(i, k): presheaf_hom(q, presheaves[i], presheaves[k]) for i in range(N) for k in range(N)}
    category = VCat.of(q, [presheaf_name(p) for p in presheaves], hom)
    index = {p: i for i, p in enumerate(presheaves)}
    yoneda = tuple(index[representable(A, a)] for a in range(A.n_objects))

    violations = list(validate_vcat(category).violations)
    for a in range(A.n_objects):
        for i, p in enumerate(presheaves):
            if category(yoneda[a], i) != p[a]:
                violations.append(LawViolation("yoneda", (a, i)))
        for a2 in range(A.n_objects):
            if category(yoneda[a], yoneda[a2]) != A(a, a2):
                violations.append(LawViolation("yoneda-embedding", (a, a2)))
    for i in range(N):
        for k in range(N):
            if hom[(i, k)] != right_lift(q, presheaves[i], presheaves[k]):
                violations.append(LawViolation("right-lift", (i, k)))
    logger.debug("presheaf object: %d presheaves on %d objects", N, A.n_objects)
    return PresheafObject(A, category, tuple(presheaves), yoneda, LawReport.build("presheaf object", violations))


@dataclass(frozen=True)
class VNerve:
    functor: VFunctor
    report: LawReport


def v_nerve(j: VFunctor, pa: PresheafObject | None = None) -> VNerve:
    """``n_j(e)(a) = E(j a, e)`` with the relative-adjunction certificate."""
    A, E = j.source, j.target
    pa = pa or v_presheaf_object(A)
    ob = []
    for e in range(E.n_objects):
        i = pa.index_of(tuple(E(j.ob[a], e) for a in range(A.n_objects)))
        if i is None:
            raise LabError(f"nerve of {E.objects[e]} is not a presheaf")
        ob.append(i)
    functor = VFunctor(E, pa.category, tuple(ob))
    violations = list(validate_vfunctor(functor).violations)
    for a in range(A.n_objects):
        for e in range(E.n_objects):
            if E(j.ob[a], e) != pa.category(pa.yoneda[a], ob[e]):
                violations.append(LawViolation("relative-adjunction", (a, e)))
    return VNerve(functor, LawReport.build("V-nerve", violations))


def v_is_dense(j: VFunctor, pa: PresheafObject | None = None) -> DensityReport:
    """Is the nerve fully faithful: ``E(e, e') = P A(n_j e, n_j e')`` for every pair?"""
    E = j.target
    pa = pa or v_presheaf_object(j.source)
    n = v_nerve(j, pa).functor
    failures = tuple(
        (e, e2, E(e, e2), pa.category(n.ob[e], n.ob[e2]))
        for e in range(E.n_objects)
        for e2 in range(E.n_objects)
        if E(e, e2) != pa.category(n.ob[e], n.ob[e2])
    )
    if failures:
        return DensityReport(False, failures[0], failures)
    return DensityReport(True)


def v_classify_distributor(p: VDistributor, pa: PresheafObject | None = None) -> tuple[VFunctor, LawReport]:
    """The functor ``X -> P A``, ``x ↦ p(-, x)``, and its classification certificate."""
    check_v_distributor(p).require()
    A, X = p.left, p.right
    pa = pa or v_presheaf_object(A)
    violations = []
    ob = []
    for x in range(X.n_objects):
        column = tuple(p(a, x) for a in range(A.n_objects))
        i = pa.index_of(column)
        if i is None:
            raise LabError(f"column {x} of a valid distributor is not a presheaf")
        ob.append(i)
    functor = VFunctor(X, pa.category, tuple(ob))
    violations.extend(validate_vfunctor(functor).violations)
    for a in range(A.n_objects):
        for x in range(X.n_objects):
            if pa.projection(a, ob[x]) != p(a, x):
                violations.append(LawViolation("projection", (a, x)))
    return functor, LawReport.build("classification", violations)


def enumerate_v_distributors(A: VCat, X: VCat) -> list[VDistributor]:
    q = A.quantale
    keys = [(a, x) for a in range(A.n_objects) for x in range(X.n_objects)]
    constraints = StaticConstraints(keys)
    for a, x in keys:
        for a2 in range(A.n_objects):
            constraints.add(
                [(a, x), (a2, x)],
                lambda s, a=a, a2=a2, x=x: q.leq(q.t(s[(a, x)], A(a2, a)), s[(a2, x)]),
            )
        for x2 in range(X.n_objects):
            constraints.add(
                [(a, x), (a, x2)],
                lambda s, a=a, x=x, x2=x2: q.leq(q.t(X(x, x2), s[(a, x)]), s[(a, x2)]),
            )
    solutions = backtrack(keys, lambda _k, _p: q.elements, constraints, what="V-distributor")
    return [VDistributor(A, X, tuple(sorted(s.items()))) for s in solutions]


def enumerate_v_functors(X: VCat, B: VCat) -> list[VFunctor]:
    q = X.quantale
    keys = list(range(X.n_objects))
    constraints = StaticConstraints(keys)
    for x in keys:
        for x2 in keys:
            constraints.add(
                [x, x2], lambda s, x=x, x2=x2: q.leq(X(x, x2), B(s[x], s[x2]))
            )
    solutions = backtrack(keys, lambda _k, _p: range(B.n_objects), constraints, what="V-functor")
    return [VFunctor(X, B, tuple(s[x] for x in keys)) for s in solutions]


def classification_counts(A: VCat, X: VCat, pa: PresheafObject | None = None) -> tuple[int, int]:
    """Distributors ``X ⇸ A`` against functors ``X -> P A``."""
    pa = pa or v_presheaf_object(A)
    return len(enumerate_v_distributors(A, X)), len(enumerate_v_functors(X, pa.category))


def v_restrict_presheaf(
    p: VDistributor,
    f: VFunctor,
    g: VFunctor,
    pa: PresheafObject | None = None,
    pa2: PresheafObject | None = None,
) -> LawReport:
    """The classifier of ``p(f, g)`` equals ``g ⨾ p̆ ⨾ f*`` on objects."""
    A, A2, X2 = p.left, f.source, g.source
    pa = pa or v_presheaf_object(A)
    pa2 = pa2 or v_presheaf_object(A2)
    restricted = VDistributor(
        A2,
        X2,
        tuple(
            ((a, x), p(f.ob[a], g.ob[x]))
            for a in range(A2.n_objects)
            for x in range(X2.n_objects)
        ),
    )
    direct, _ = v_classify_distributor(restricted, pa2)
    classifier, _ = v_classify_distributor(p, pa)
    violations = []
    for x in range(X2.n_objects):
        column = pa.presheaves[classifier.ob[g.ob[x]]]
        via = pa2.index_of(tuple(column[f.ob[a]] for a in range(A2.n_objects)))
        if via != direct.ob[x]:
            violations.append(LawViolation("restriction", (x,)))
    return LawReport.build("presheaf restriction", violations)
