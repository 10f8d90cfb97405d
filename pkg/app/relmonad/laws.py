import logging
from collections.abc import Iterator

from app.errors import MalformedInputError
from app.fincat.laws import validate_functor
from app.fincat.ops import identity_functor
from app.fincat.search import StaticConstraints, backtrack
from app.fincat.types import FinCat, Functor, LawReport, LawViolation
from app.relmonad.types import RelativeMonad

logger = logging.getLogger(__name__)


def _check_tables(T: RelativeMonad) -> None:
    A, E = T.domain, T.base
    if len(T.t_ob) != A.n_objects or len(T.eta) != A.n_objects:
        raise MalformedInputError("t_ob or eta is not total on objects of A")
    for x in range(A.n_objects):
        if not 0 <= T.t_ob[x] < E.n_objects:
            raise MalformedInputError(f"t_ob[{x}] is dangling", (x,))
        e = T.eta[x]
        if not 0 <= e < E.n_morphisms or E.src[e] != T.j.ob[x] or E.tgt[e] != T.t_ob[x]:
            raise MalformedInputError(f"eta[{x}] is not a morphism j x -> t x", (x, e))
    for x in range(A.n_objects):
        for y in range(A.n_objects):
            allowed = E.hom(T.t_ob[x], T.t_ob[y])
            for f in T.kleisli_hom(x, y):
                g = T.dagger.get((x, y, f))
                if g is None:
                    raise MalformedInputError("dagger is not total", (x, y, f))
                if g not in allowed:
                    raise MalformedInputError("dagger image lies outside E(t x, t y)", (x, y, f, g))


def _kleisli_triples(T: RelativeMonad):
    n = T.domain.n_objects
    for x in range(n):
        for y in range(n):
            for f in T.kleisli_hom(x, y):
                for z in range(n):
                    for g in T.kleisli_hom(y, z):
                        yield x, y, z, f, g


def _associativity_holds(T: RelativeMonad, x: int, y: int, z: int, f: int, g: int) -> bool:
    E = T.base
    return T.ext(x, z, E.comp(f, T.ext(y, z, g))) == E.comp(T.ext(x, y, f), T.ext(y, z, g))


def _alternative_holds(T: RelativeMonad, x: int, y: int, z: int, f: int, g: int) -> bool:
    E = T.base
    rhs = E.comp(T.ext(x, y, f), T.ext(y, z, g))
    return T.ext(x, z, E.comp(T.eta[x], rhs)) == rhs


def check_alternative_associativity(T: RelativeMonad) -> LawReport:
    """``(η_x ⨾ f† ⨾ g†)† = f† ⨾ g†``."""
    violations = [
        LawViolation("alternative-associativity", triple)
        for triple in _kleisli_triples(T)
        if not _alternative_holds(T, *triple)
    ]
    return LawReport.build("alternative-associativity", violations)


def check_associativity_agreement(T: RelativeMonad, unit_holds: bool) -> LawReport:
    """Both associativity equations give the same answer on every Kleisli triple.

    Asserted only when ``η_x ⨾ f† = f`` holds everywhere: the two left-hand
    sides are then the same morphism. Without the unit law they can differ.
    """
    violations = []
    if unit_holds:
        for triple in _kleisli_triples(T):
            if _associativity_holds(T, *triple) != _alternative_holds(T, *triple):
                violations.append(LawViolation("associativity-agreement", triple))
    return LawReport.build("associativity-agreement", violations)


def check_relative_monad(T: RelativeMonad) -> LawReport:
    """Unit, unit-extension and associativity laws.

    The alternative associativity equation and the agreement of the two
    equations are attached as supplementary reports.
    """
    _check_tables(T)
    A, E = T.domain, T.base
    violations: list[LawViolation] = []
    for x in range(A.n_objects):
        for y in range(A.n_objects):
            for f in T.kleisli_hom(x, y):
                if E.comp(T.eta[x], T.ext(x, y, f)) != f:
                    violations.append(LawViolation("unit", (x, y, f)))
    unit_holds = not violations
    for x in range(A.n_objects):
        if T.ext(x, x, T.eta[x]) != E.identity[T.t_ob[x]]:
            violations.append(LawViolation("unit-extension", (x,)))
    for triple in _kleisli_triples(T):
        if not _associativity_holds(T, *triple):
            violations.append(LawViolation("associativity", triple))
    supplementary = (check_alternative_associativity(T), check_associativity_agreement(T, unit_holds))
    return LawReport.build("relative monad", violations, supplementary)


def require_monad(T: RelativeMonad) -> None:
    check_relative_monad(T).require()


def carrier_functor(T: RelativeMonad) -> Functor:
    """``t(u) = (j u ⨾ η_y)†``."""
    require_monad(T)
    A = T.domain
    mor = tuple(T.ext(A.src[u], A.tgt[u], T.unit_of(u)) for u in range(A.n_morphisms))
    return Functor(A, T.base, T.t_ob, mor)


def check_carrier(T: RelativeMonad) -> LawReport:
    """Functoriality of t together with naturality of η and of †."""
    t = carrier_functor(T)
    A, E, j = T.domain, T.base, T.j
    violations = list(validate_functor(t).violations)
    for u in range(A.n_morphisms):
        x, y = A.src[u], A.tgt[u]
        if E.comp(j.mor[u], T.eta[y]) != E.comp(T.eta[x], t.mor[u]):
            violations.append(LawViolation("eta-natural", (u,)))
    for u in range(A.n_morphisms):
        x2, x = A.src[u], A.tgt[u]
        for v in range(A.n_morphisms):
            y, y2 = A.src[v], A.tgt[v]
            for f in T.kleisli_hom(x, y):
                lhs = T.ext(x2, y2, E.comp_all(j.mor[u], f, t.mor[v]))
                rhs = E.comp_all(t.mor[u], T.ext(x, y, f), t.mor[v])
                if lhs != rhs:
                    violations.append(LawViolation("dagger-natural", (u, f, v)))
    return LawReport.build("carrier", violations)


def count_carrier_structures(T: RelativeMonad) -> int:
    """Functors on ``t_ob`` making both η and † natural, found by exhaustive search."""
    A, E, j = T.domain, T.base, T.j
    keys = list(range(A.n_morphisms))
    constraints = StaticConstraints(keys)
    for f, g in A.composable_pairs():
        fg = A.comp(f, g)
        constraints.add([f, g, fg], lambda s, f=f, g=g, fg=fg: E.comp(s[f], s[g]) == s[fg])
    for u in keys:
        x, y = A.src[u], A.tgt[u]
        constraints.add(
            [u], lambda s, u=u, x=x, y=y: E.comp(j.mor[u], T.eta[y]) == E.comp(T.eta[x], s[u])
        )
    for u in keys:
        x2, x = A.src[u], A.tgt[u]
        for v in keys:
            y, y2 = A.src[v], A.tgt[v]
            for f in T.kleisli_hom(x, y):
                constraints.add(
                    [u, v],
                    lambda s, u=u, v=v, f=f, x=x, y=y, x2=x2, y2=y2: T.ext(
                        x2, y2, E.comp_all(j.mor[u], f, s[v])
                    )
                    == E.comp_all(s[u], T.ext(x, y, f), s[v]),
                )

    def candidates(u, _):
        if A.is_identity(u):
            return (E.identity[T.t_ob[A.src[u]]],)
        return E.hom(T.t_ob[A.src[u]], T.t_ob[A.tgt[u]])

    return sum(1 for _ in backtrack(keys, candidates, constraints, what="carrier structure"))


def identity_monad(A: FinCat) -> RelativeMonad:
    return trivial_monad(identity_functor(A))


def trivial_monad(j: Functor) -> RelativeMonad:
    """``t = j``, ``η = id``, ``f† = f``."""
    A, E = j.source, j.target
    dagger = {
        (x, y, f): f
        for x in range(A.n_objects)
        for y in range(A.n_objects)
        for f in E.hom(j.ob[x], j.ob[y])
    }
    return RelativeMonad(j, j.ob, tuple(E.identity[j.ob[x]] for x in range(A.n_objects)), dagger)


def has_identity_root(T: RelativeMonad) -> bool:
    """Whether T is an ordinary monad: its root is ``1_E``."""
    E = T.base
    return T.domain == E and T.j.ob == tuple(range(E.n_objects)) and T.j.mor == tuple(range(E.n_morphisms))


def restrict_monad(S: RelativeMonad, j: Functor) -> RelativeMonad:
    """Precompose a monad on E (root ``1_E``) with ``j : A -> E``."""
    E = S.base
    if not has_identity_root(S):
        raise MalformedInputError("restrict_monad expects a monad whose root is the identity")
    if j.target != E:
        raise MalformedInputError("root does not land in the monad's category")
    A = j.source
    t_ob = tuple(S.t_ob[j.ob[x]] for x in range(A.n_objects))
    eta = tuple(S.eta[j.ob[x]] for x in range(A.n_objects))
    dagger = {
        (x, y, f): S.ext(j.ob[x], j.ob[y], f)
        for x in range(A.n_objects)
        for y in range(A.n_objects)
        for f in E.hom(j.ob[x], t_ob[y])
    }
    return RelativeMonad(j, t_ob, eta, dagger)


def enumerate_extensions(j: Functor, t_ob: tuple[int, ...], eta: tuple[int, ...]) -> Iterator[RelativeMonad]:
    """Every ``†`` completing ``(j, t_ob, eta)`` to a relative monad, in table order.

    The unit laws prune the search; associativity is checked on complete tables.
    """
    A, E = j.source, j.target
    keys = [
        (x, y, f)
        for x in range(A.n_objects)
        for y in range(A.n_objects)
        for f in E.hom(j.ob[x], t_ob[y])
    ]
    constraints = StaticConstraints(keys)
    for x, y, f in keys:
        constraints.add([(x, y, f)], lambda s, x=x, y=y, f=f: E.comp(eta[x], s[(x, y, f)]) == f)
        if x == y and f == eta[x]:
            constraints.add([(x, y, f)], lambda s, x=x, f=f: s[(x, x, f)] == E.identity[t_ob[x]])

    def candidates(key, _):
        x, y, _f = key
        return E.hom(t_ob[x], t_ob[y])

    for s in backtrack(keys, candidates, constraints, what="extension table"):
        T = RelativeMonad(j, tuple(t_ob), tuple(eta), s)
        if check_relative_monad(T).passed:
            yield T
