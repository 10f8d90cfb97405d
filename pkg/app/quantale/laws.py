"""Validators for the thin enriched instance.

Every 2-cell equation is automatic in a thin setting, so each check reduces to
the stated inequalities.
"""

from app.errors import MalformedInputError
from app.fincat.types import LawReport, LawViolation
from app.quantale.types import Quantale, VCat, VDistributor, VFunctor, VLooseMonad, VRelMonad


def _check_tables(q: Quantale) -> None:
    elements = set(q.elements)
    if len(elements) != len(q.elements):
        raise MalformedInputError("duplicate quantale elements")
    if q.unit not in elements:
        raise MalformedInputError(f"unit {q.unit!r} is not an element")
    for a, b in q.order:
        if a not in elements or b not in elements:
            raise MalformedInputError("order mentions an unknown element", (a, b))
    for a in q.elements:
        for b in q.elements:
            if q.tensor.get((a, b)) not in elements:
                raise MalformedInputError("tensor is not total", (a, b))
    for (kind, x, y), value in q.given_residuals:
        if kind not in ("lres", "rres") or not {x, y, value} <= elements:
            raise MalformedInputError("malformed residual entry", (kind, x, y))


def _lattice_violations(q: Quantale) -> list[LawViolation]:
    violations = []
    for a in q.elements:
        if not q.leq(a, a):
            violations.append(LawViolation("partial-order", ("reflexive", a)))
        for b in q.elements:
            if a != b and q.leq(a, b) and q.leq(b, a):
                violations.append(LawViolation("partial-order", ("antisymmetric", a, b)))
            for c in q.elements:
                if q.leq(a, b) and q.leq(b, c) and not q.leq(a, c):
                    violations.append(LawViolation("partial-order", ("transitive", a, b, c)))
    if violations:
        return violations
    for items in [()] + [(a, b) for a in q.elements for b in q.elements]:
        for upper in (True, False):
            try:
                q.bound(items, upper)
            except ValueError:
                violations.append(LawViolation("lattice", ("join" if upper else "meet", *items)))
    return violations


def validate_quantale(q: Quantale) -> LawReport:
    _check_tables(q)
    violations = _lattice_violations(q)
    if violations:
        return LawReport.build("quantale", violations)

    E, t, leq = q.elements, q.t, q.leq
    for a in E:
        if t(q.unit, a) != a or t(a, q.unit) != a:
            violations.append(LawViolation("unit", (a,)))
    for a in E:
        for b in E:
            for c in E:
                if t(t(a, b), c) != t(a, t(b, c)):
                    violations.append(LawViolation("associativity", (a, b, c)))
                if leq(a, b) and not (leq(t(a, c), t(b, c)) and leq(t(c, a), t(c, b))):
                    violations.append(LawViolation("monotone", (a, b, c)))
    for a in E:
        for b in E:
            for c in E:
                below = leq(t(a, b), c)
                if below != leq(b, q.rres(a, c)) or below != leq(a, q.lres(b, c)):
                    violations.append(LawViolation("residuation", (a, b, c)))
    for (kind, x, y), value in q.given_residuals:
        computed = q.lres(x, y) if kind == "lres" else q.rres(x, y)
        if value != computed:
            violations.append(LawViolation("residual-table", (kind, x, y)))
    return LawReport.build("quantale", violations)


def _check_vcat_tables(A: VCat) -> None:
    elements = set(A.quantale.elements)
    for x in range(A.n_objects):
        for y in range(A.n_objects):
            if A.hom.get((x, y)) not in elements:
                raise MalformedInputError("hom is not total", (x, y))


def validate_vcat(A: VCat) -> LawReport:
    _check_vcat_tables(A)
    q = A.quantale
    n = A.n_objects
    violations = []
    for x in range(n):
        if not q.leq(q.unit, A(x, x)):
            violations.append(LawViolation("identity", (x,)))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not q.leq(q.t(A(y, z), A(x, y)), A(x, z)):
                    violations.append(LawViolation("composition", (x, y, z)))
    return LawReport.build("V-category", violations)


def validate_vfunctor(F: VFunctor) -> LawReport:
    A, B = F.source, F.target
    if len(F.ob) != A.n_objects or any(not 0 <= b < B.n_objects for b in F.ob):
        raise MalformedInputError("object map is not total")
    q = A.quantale
    violations = [
        LawViolation("hom-monotone", (x, y))
        for x in range(A.n_objects)
        for y in range(A.n_objects)
        if not q.leq(A(x, y), B(F.ob[x], F.ob[y]))
    ]
    return LawReport.build("V-functor", violations)


def check_v_monad(T: VRelMonad) -> LawReport:
    A, E, j = T.domain, T.base, T.j
    if len(T.t_ob) != A.n_objects or any(not 0 <= e < E.n_objects for e in T.t_ob):
        raise MalformedInputError("carrier object map is not total")
    q = E.quantale
    violations = list(validate_vfunctor(j).violations)
    for x in range(A.n_objects):
        if not q.leq(q.unit, E(j.ob[x], T.t_ob[x])):
            violations.append(LawViolation("unit", (x,)))
        for y in range(A.n_objects):
            if not q.leq(E(j.ob[x], T.t_ob[y]), E(T.t_ob[x], T.t_ob[y])):
                violations.append(LawViolation("extension", (x, y)))
    return LawReport.build("V-relative monad", violations)


def check_v_distributor(p: VDistributor) -> LawReport:
    A, X = p.left, p.right
    q = A.quantale
    violations = []
    for a in range(A.n_objects):
        for x in range(X.n_objects):
            for a2 in range(A.n_objects):
                if not q.leq(q.t(p(a, x), A(a2, a)), p(a2, x)):
                    violations.append(LawViolation("left-action", (a2, a, x)))
            for x2 in range(X.n_objects):
                if not q.leq(q.t(X(x, x2), p(a, x)), p(a, x2)):
                    violations.append(LawViolation("right-action", (a, x, x2)))
    return LawReport.build("V-distributor", violations)


def check_v_loose_monad(L: VLooseMonad) -> LawReport:
    A = L.base
    q = A.quantale
    n = A.n_objects
    violations = []
    for x in range(n):
        for y in range(n):
            if not q.leq(A(x, y), L(x, y)):
                violations.append(LawViolation("unit", (x, y)))
            for z in range(n):
                if not q.leq(q.t(L(y, z), L(x, y)), L(x, z)):
                    violations.append(LawViolation("multiplication", (x, y, z)))
                if not q.leq(q.t(A(y, z), L(x, y)), L(x, z)):
                    violations.append(LawViolation("left-action", (x, y, z)))
                if not q.leq(q.t(L(y, z), A(x, y)), L(x, z)):
                    violations.append(LawViolation("right-action", (x, y, z)))
    return LawReport.build("V-loose monad", violations)
