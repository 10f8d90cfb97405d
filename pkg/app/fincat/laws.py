"""Validators for the fincat types.

Dangling indices and non-total tables raise ``MalformedInputError``; broken
laws come back as ``LawReport`` violations with witnesses.
"""

from app.errors import MalformedInputError
from app.fincat.types import (
    Distributor,
    FinCat,
    Functor,
    LawReport,
    LawViolation,
    NatTransformation,
    Presheaf,
)


def _check_indices(c: FinCat) -> None:
    n, m = c.n_objects, c.n_morphisms
    if len(c.tgt) != m:
        raise MalformedInputError("source and target tables differ in length")
    for f in range(m):
        if not (0 <= c.src[f] < n and 0 <= c.tgt[f] < n):
            raise MalformedInputError(f"morphism {f} has a dangling endpoint", (f,))
    if len(c.identity) != n:
        raise MalformedInputError("identity table is not total on objects")
    for a, i in enumerate(c.identity):
        if not 0 <= i < m:
            raise MalformedInputError(f"identity of object {a} is dangling", (a,))
    for (f, g), h in c.compose.items():
        if not (0 <= f < m and 0 <= g < m and 0 <= h < m):
            raise MalformedInputError(f"composition entry ({f}, {g}) -> {h} is dangling", (f, g))


def validate_category(c: FinCat) -> LawReport:
    _check_indices(c)
    violations: list[LawViolation] = []

    for a, i in enumerate(c.identity):
        if c.src[i] != a or c.tgt[i] != a:
            violations.append(LawViolation("identity-endpoints", (a, i)))

    for (f, g) in c.compose:
        if c.tgt[f] != c.src[g]:
            violations.append(LawViolation("composition-defined", (f, g)))
    for f, g in c.composable_pairs():
        if (f, g) not in c.compose:
            violations.append(LawViolation("composition-defined", (f, g)))
            continue
        h = c.compose[(f, g)]
        if c.src[h] != c.src[f] or c.tgt[h] != c.tgt[g]:
            violations.append(LawViolation("composition-typed", (f, g, h)))
    if any(v.law in ("identity-endpoints", "composition-defined") for v in violations):
        return LawReport.build("category", violations)

    for f in range(c.n_morphisms):
        a, b = c.src[f], c.tgt[f]
        if c.comp(f, c.identity[b]) != f:
            violations.append(LawViolation("left-unit", (c.identity[b], f)))
        if c.comp(c.identity[a], f) != f:
            violations.append(LawViolation("right-unit", (f, c.identity[a])))

    get = c.compose.get
    for f, g in c.composable_pairs():
        fg = c.comp(f, g)
        for h in c.morphisms_from(c.tgt[g]):
            gh = c.comp(g, h)
            left, right = get((fg, h)), get((f, gh))
            if left is None or right is None:
                continue  # reported as composition-typed
            if left != right:
                violations.append(LawViolation("associativity", (f, g, h)))
    return LawReport.build("category", violations)


def validate_functor(F: Functor) -> LawReport:
    A, B = F.source, F.target
    if len(F.ob) != A.n_objects or len(F.mor) != A.n_morphisms:
        raise MalformedInputError("functor map is not total")
    if any(not 0 <= x < B.n_objects for x in F.ob) or any(not 0 <= u < B.n_morphisms for u in F.mor):
        raise MalformedInputError("functor map has a dangling image")

    violations: list[LawViolation] = []
    for u in range(A.n_morphisms):
        if B.src[F.mor[u]] != F.ob[A.src[u]]:
            violations.append(LawViolation("preserves-source", (u,)))
        if B.tgt[F.mor[u]] != F.ob[A.tgt[u]]:
            violations.append(LawViolation("preserves-target", (u,)))
    if violations:
        return LawReport.build("functor", violations)
    for a in range(A.n_objects):
        if F.mor[A.identity[a]] != B.identity[F.ob[a]]:
            violations.append(LawViolation("preserves-identity", (A.identity[a],)))
    for f, g in A.composable_pairs():
        if F.mor[A.comp(f, g)] != B.comp(F.mor[f], F.mor[g]):
            violations.append(LawViolation("preserves-composition", (f, g)))
    return LawReport.build("functor", violations)


def validate_nat_transformation(alpha: NatTransformation) -> LawReport:
    F, G = alpha.source, alpha.target
    A, B = F.source, F.target
    if len(alpha.components) != A.n_objects:
        raise MalformedInputError("components are not total on objects")
    violations: list[LawViolation] = []
    for a, c in enumerate(alpha.components):
        if not 0 <= c < B.n_morphisms or B.src[c] != F.ob[a] or B.tgt[c] != G.ob[a]:
            violations.append(LawViolation("component-typed", (a, c)))
    if violations:
        return LawReport.build("natural transformation", violations)
    for u in range(A.n_morphisms):
        a, b = A.src[u], A.tgt[u]
        if B.comp(F.mor[u], alpha.components[b]) != B.comp(alpha.components[a], G.mor[u]):
            violations.append(LawViolation("naturality", (u,)))
    return LawReport.build("natural transformation", violations)


def _check_distributor_tables(p: Distributor) -> None:
    C, D = p.left, p.right
    for c in range(C.n_objects):
        for d in range(D.n_objects):
            if (c, d) not in p.het:
                raise MalformedInputError(f"het({c}, {d}) is missing", (c, d))
    for u in range(C.n_morphisms):
        c_, c = C.src[u], C.tgt[u]
        for d in range(D.n_objects):
            for x in p.het[(c, d)]:
                y = p.left_action.get((u, d, x))
                if y is None or y not in p.het[(c_, d)]:
                    raise MalformedInputError("left action is not total or lands outside its het set", (u, d, x))
    for v in range(D.n_morphisms):
        d, d_ = D.src[v], D.tgt[v]
        for c in range(C.n_objects):
            for x in p.het[(c, d)]:
                y = p.right_action.get((c, x, v))
                if y is None or y not in p.het[(c, d_)]:
                    raise MalformedInputError("right action is not total or lands outside its het set", (c, x, v))


def validate_distributor(p: Distributor) -> LawReport:
    _check_distributor_tables(p)
    C, D = p.left, p.right
    violations: list[LawViolation] = []
    for (c, d), cell in p.het.items():
        for x in cell:
            if p.act_left(C.identity[c], d, x) != x:
                violations.append(LawViolation("left-unit", (c, d, x)))
            if p.act_right(c, x, D.identity[d]) != x:
                violations.append(LawViolation("right-unit", (c, d, x)))

    # (u ⨾ u') · x = u · (u' · x)
    for u, u2 in C.composable_pairs():
        c = C.tgt[u2]
        for d in range(D.n_objects):
            for x in p.het[(c, d)]:
                if p.act_left(C.comp(u, u2), d, x) != p.act_left(u, d, p.act_left(u2, d, x)):
                    violations.append(LawViolation("left-associativity", (u, u2, x)))
    for v, v2 in D.composable_pairs():
        d = D.src[v]
        for c in range(C.n_objects):
            for x in p.het[(c, d)]:
                if p.act_right(c, x, D.comp(v, v2)) != p.act_right(c, p.act_right(c, x, v), v2):
                    violations.append(LawViolation("right-associativity", (x, v, v2)))
    for u in range(C.n_morphisms):
        c_, c = C.src[u], C.tgt[u]
        for v in range(D.n_morphisms):
            d, d_ = D.src[v], D.tgt[v]
            for x in p.het[(c, d)]:
                if p.act_right(c_, p.act_left(u, d, x), v) != p.act_left(u, d_, p.act_right(c, x, v)):
                    violations.append(LawViolation("actions-commute", (u, x, v)))
    return LawReport.build("distributor", violations)


def validate_presheaf(P: Presheaf) -> LawReport:
    A = P.base
    if len(P.values) != A.n_objects:
        raise MalformedInputError("presheaf values are not total on objects")
    for f in range(A.n_morphisms):
        for x in P.values[A.tgt[f]]:
            y = P.action.get((f, x))
            if y is None or y not in P.values[A.src[f]]:
                raise MalformedInputError("presheaf action is not total", (f, x))
    violations: list[LawViolation] = []
    for a in range(A.n_objects):
        for x in P.values[a]:
            if P.action[(A.identity[a], x)] != x:
                violations.append(LawViolation("identity-action", (a, x)))
    for f, g in A.composable_pairs():
        for x in P.values[A.tgt[g]]:
            if P.action[(A.comp(f, g), x)] != P.action[(f, P.action[(g, x)])]:
                violations.append(LawViolation("composite-action", (f, g, x)))
    return LawReport.build("presheaf", violations)
