from app.errors import MalformedInputError
from app.fincat.laws import validate_distributor
from app.fincat.types import LawReport, LawViolation
from app.loosemonad.types import LooseMonad, LooseMonadModule, LooseMonadMorphism


def _check_tables(L: LooseMonad) -> None:
    A, p = L.base, L.carrier
    if p.left != A or p.right != A:
        raise MalformedInputError("carrier must be an endo-distributor on the base")
    if len(L.eta) != A.n_morphisms:
        raise MalformedInputError("eta is not total on morphisms")
    for u, e in enumerate(L.eta):
        if e not in p.het[(A.src[u], A.tgt[u])]:
            raise MalformedInputError("eta lands outside its het set", (u,))
    n = A.n_objects
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for a in p.het[(x, y)]:
                    for b in p.het[(y, z)]:
                        r = L.mu.get((x, y, z, a, b))
                        if r is None or r not in p.het[(x, z)]:
                            raise MalformedInputError("mu is not total or mistyped", (x, y, z, a, b))


def check_loose_monad(L: LooseMonad) -> LawReport:
    _check_tables(L)
    A, p = L.base, L.carrier
    n = A.n_objects
    violations = list(validate_distributor(p).violations)
    mu = L.mult

    for x in range(n):
        for y in range(n):
            for a in p.het[(x, y)]:
                if mu(x, x, y, L.unit(x), a) != a:
                    violations.append(LawViolation("left-unit", (x, y, a)))
                if mu(x, y, y, a, L.unit(y)) != a:
                    violations.append(LawViolation("right-unit", (x, y, a)))
                for z in range(n):
                    for b in p.het[(y, z)]:
                        ab = mu(x, y, z, a, b)
                        for w in range(n):
                            for c in p.het[(z, w)]:
                                if mu(x, z, w, ab, c) != mu(x, y, w, a, mu(y, z, w, b, c)):
                                    violations.append(LawViolation("associativity", (a, b, c)))

    # eta is a 2-cell A(1, 1) => carrier
    for u, v in A.composable_pairs():
        x, y = A.src[u], A.tgt[u]
        uv = L.eta[A.comp(u, v)]
        if uv != p.act_left(u, A.tgt[v], L.eta[v]) or uv != p.act_right(x, L.eta[u], v):
            violations.append(LawViolation("unit-natural", (u, v)))

    # mu is balanced and equivariant
    for u in range(A.n_morphisms):
        x2, x = A.src[u], A.tgt[u]
        for y in range(n):
            for z in range(n):
                for a in p.het[(x, y)]:
                    for b in p.het[(y, z)]:
                        if mu(x2, y, z, p.act_left(u, y, a), b) != p.act_left(u, z, mu(x, y, z, a, b)):
                            violations.append(LawViolation("multiplication-natural", (u, a, b)))
    for v in range(A.n_morphisms):
        y, y2 = A.src[v], A.tgt[v]
        for x in range(n):
            for z in range(n):
                for a in p.het[(x, y)]:
                    for b in p.het[(y2, z)]:
                        lhs = mu(x, y2, z, p.act_right(x, a, v), b)
                        if lhs != mu(x, y, z, a, p.act_left(v, z, b)):
                            violations.append(LawViolation("multiplication-balanced", (a, v, b)))
    for v in range(A.n_morphisms):
        z, z2 = A.src[v], A.tgt[v]
        for x in range(n):
            for y in range(n):
                for a in p.het[(x, y)]:
                    for b in p.het[(y, z)]:
                        if mu(x, y, z2, a, p.act_right(y, b, v)) != p.act_right(x, mu(x, y, z, a, b), v):
                            violations.append(LawViolation("multiplication-natural", (a, b, v)))
    return LawReport.build("loose monad", violations)


def check_loose_monad_morphism(m: LooseMonadMorphism) -> LawReport:
    S, T, f = m.source, m.target, m.f
    A, p, q = S.base, S.carrier, T.carrier
    n = A.n_objects
    for x in range(n):
        for y in range(n):
            for a in p.het[(x, y)]:
                if m.phi.get((x, y, a)) not in q.het[(f.ob[x], f.ob[y])]:
                    raise MalformedInputError("phi is not total or mistyped", (x, y, a))
    violations = []
    for x in range(n):
        for y in range(n):
            for a in p.het[(x, y)]:
                for z in range(n):
                    for b in p.het[(y, z)]:
                        lhs = m.phi[(x, z, S.mult(x, y, z, a, b))]
                        rhs = T.mult(f.ob[x], f.ob[y], f.ob[z], m.phi[(x, y, a)], m.phi[(y, z, b)])
                        if lhs != rhs:
                            violations.append(LawViolation("preserves-multiplication", (a, b)))
    for u in range(A.n_morphisms):
        if m.phi[(A.src[u], A.tgt[u], S.eta[u])] != T.eta[f.mor[u]]:
            violations.append(LawViolation("preserves-unit", (u,)))
    return LawReport.build("loose monad morphism", violations)


def check_module(M: LooseMonadModule) -> LawReport:
    L, R, p = M.left, M.right, M.p
    C, D = L.base, R.base
    nc, nd = C.n_objects, D.n_objects
    for c in range(nc):
        for c2 in range(nc):
            for d in range(nd):
                for s in L.carrier.het[(c, c2)]:
                    for x in p.het[(c2, d)]:
                        if M.lam.get((c, c2, d, s, x)) not in p.het[(c, d)]:
                            raise MalformedInputError("left module action is not total", (c, c2, d, s, x))
    for c in range(nc):
        for d in range(nd):
            for d2 in range(nd):
                for x in p.het[(c, d)]:
                    for s in R.carrier.het[(d, d2)]:
                        if M.rho.get((c, d, d2, x, s)) not in p.het[(c, d2)]:
                            raise MalformedInputError("right module action is not total", (c, d, d2, x, s))

    violations = list(validate_distributor(p).violations)
    for c in range(nc):
        for d in range(nd):
            for x in p.het[(c, d)]:
                if M.lam[(c, c, d, L.unit(c), x)] != x:
                    violations.append(LawViolation("left-unit", (c, d, x)))
                if M.rho[(c, d, d, x, R.unit(d))] != x:
                    violations.append(LawViolation("right-unit", (c, d, x)))

    for c in range(nc):
        for c2 in range(nc):
            for c3 in range(nc):
                for s in L.carrier.het[(c, c2)]:
                    for s2 in L.carrier.het[(c2, c3)]:
                        ss = L.mult(c, c2, c3, s, s2)
                        for d in range(nd):
                            for x in p.het[(c3, d)]:
                                lhs = M.lam[(c, c2, d, s, M.lam[(c2, c3, d, s2, x)])]
                                if lhs != M.lam[(c, c3, d, ss, x)]:
                                    violations.append(LawViolation("left-associativity", (s, s2, x)))
    for c in range(nc):
        for d in range(nd):
            for d2 in range(nd):
                for d3 in range(nd):
                    for x in p.het[(c, d)]:
                        for s in R.carrier.het[(d, d2)]:
                            for s2 in R.carrier.het[(d2, d3)]:
                                lhs = M.rho[(c, d2, d3, M.rho[(c, d, d2, x, s)], s2)]
                                if lhs != M.rho[(c, d, d3, x, R.mult(d, d2, d3, s, s2))]:
                                    violations.append(LawViolation("right-associativity", (x, s, s2)))
    for c in range(nc):
        for c2 in range(nc):
            for s in L.carrier.het[(c, c2)]:
                for d in range(nd):
                    for d2 in range(nd):
                        for x in p.het[(c2, d)]:
                            for r in R.carrier.het[(d, d2)]:
                                lhs = M.rho[(c, d, d2, M.lam[(c, c2, d, s, x)], r)]
                                rhs = M.lam[(c, c2, d2, s, M.rho[(c2, d, d2, x, r)])]
                                if lhs != rhs:
                                    violations.append(LawViolation("actions-commute", (s, x, r)))

    # the module actions extend the carrier's actions along eta
    for u in range(C.n_morphisms):
        c, c2 = C.src[u], C.tgt[u]
        for d in range(nd):
            for x in p.het[(c2, d)]:
                if M.lam[(c, c2, d, L.eta[u], x)] != p.act_left(u, d, x):
                    violations.append(LawViolation("left-action-compatible", (u, x)))
    for v in range(D.n_morphisms):
        d, d2 = D.src[v], D.tgt[v]
        for c in range(nc):
            for x in p.het[(c, d)]:
                if M.rho[(c, d, d2, x, R.eta[v])] != p.act_right(c, x, v):
                    violations.append(LawViolation("right-action-compatible", (x, v)))
    return LawReport.build("module", violations)
