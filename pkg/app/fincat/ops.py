import itertools
import logging
from collections.abc import Callable, Hashable, Mapping, Sequence
from dataclasses import dataclass

from app.errors import MalformedInputError
from app.fincat.laws import validate_functor
from app.fincat.search import StaticConstraints, backtrack
from app.fincat.types import (
    Distributor,
    FinCat,
    Functor,
    NatTransformation,
    Presheaf,
    PullbackCategory,
)
from app.infra.settings import check_category_size

logger = logging.getLogger(__name__)


# ============================================
# Building categories
# ============================================

def make_category(
    objects: Sequence[str],
    morphisms: Sequence[tuple[str, str, str]],
    identities: Mapping[str, str],
    compose: Sequence[tuple[str, str, str]],
) -> FinCat:
    """Build from names: ``morphisms`` is ``(name, src, tgt)``, ``compose`` is ``(f, g, f⨾g)``."""
    obj = {name: i for i, name in enumerate(objects)}
    mor = {name: i for i, (name, _, _) in enumerate(morphisms)}
    try:
        src = tuple(obj[s] for _, s, _ in morphisms)
        tgt = tuple(obj[t] for _, _, t in morphisms)
        identity = tuple(mor[identities[name]] for name in objects)
        table = {(mor[f], mor[g]): mor[h] for f, g, h in compose}
    except KeyError as exc:
        raise MalformedInputError(f"dangling name {exc.args[0]!r}") from exc
    check_category_size(len(objects), len(morphisms))
    return FinCat(
        objects=tuple(objects),
        src=src,
        tgt=tgt,
        identity=identity,
        compose=table,
        names=tuple(name for name, _, _ in morphisms),
    )


def build_category(
    objects: Sequence[str],
    cells: Mapping[tuple[int, int], Sequence[Hashable]],
    identity_of: Callable[[int], Hashable],
    compose_of: Callable[[int, int, int, Hashable, Hashable], Hashable],
    label: Callable[[int, int, Hashable], str] = lambda a, b, x: str(x),
) -> tuple[FinCat, tuple[tuple[int, int, Hashable], ...]]:
    """A category whose morphisms are the elements of ``cells``, numbered by (a, b, position).

    Returns the category and, for each morphism id, its ``(a, b, element)``.
    """
    n = len(objects)
    elements: list[tuple[int, int, Hashable]] = []
    index: dict[tuple[int, int, Hashable], int] = {}
    for a in range(n):
        for b in range(n):
            for x in cells[(a, b)]:
                index[(a, b, x)] = len(elements)
                elements.append((a, b, x))
    check_category_size(n, len(elements))

    identity = []
    for a in range(n):
        e = identity_of(a)
        if (a, a, e) not in index:
            raise MalformedInputError(f"identity element {e!r} is not in cell ({a}, {a})", (a,))
        identity.append(index[(a, a, e)])

    compose: dict[tuple[int, int], int] = {}
    for a in range(n):
        for b in range(n):
            for x in cells[(a, b)]:
                for c in range(n):
                    for y in cells[(b, c)]:
                        z = compose_of(a, b, c, x, y)
                        if (a, c, z) not in index:
                            raise MalformedInputError(
                                f"composite {z!r} is not in cell ({a}, {c})", (a, b, c, x, y)
                            )
                        compose[(index[(a, b, x)], index[(b, c, y)])] = index[(a, c, z)]

    cat = FinCat(
        objects=tuple(objects),
        src=tuple(a for a, _, _ in elements),
        tgt=tuple(b for _, b, _ in elements),
        identity=tuple(identity),
        compose=compose,
        names=tuple(label(a, b, x) for a, b, x in elements),
    )
    return cat, tuple(elements)


def terminal_category() -> FinCat:
    return make_category(["*"], [("id_*", "*", "*")], {"*": "id_*"}, [("id_*", "id_*", "id_*")])


def empty_category() -> FinCat:
    return FinCat(objects=(), src=(), tgt=(), identity=(), compose={}, names=())


def chain_category(n: int) -> FinCat:
    """The ordinal [n]: objects 0..n with exactly one morphism i -> j for i <= j."""
    objects = [str(i) for i in range(n + 1)]
    cells = {(a, b): ((a, b),) if a <= b else () for a in range(n + 1) for b in range(n + 1)}
    cat, _ = build_category(
        objects,
        cells,
        identity_of=lambda a: (a, a),
        compose_of=lambda a, b, c, x, y: (a, c),
        label=lambda a, b, x: f"id_{a}" if a == b else f"{a}<{b}",
    )
    return cat


def arrow_category() -> FinCat:
    return chain_category(1)


def full_subcategory(c: FinCat, objects: Sequence[int]) -> tuple[FinCat, Functor]:
    """Full subcategory on ``objects`` (in the given order) and its inclusion."""
    keep = list(objects)
    mor = [f for a in keep for b in keep for f in c.hom(a, b)]
    new_id = {f: i for i, f in enumerate(mor)}
    pos = {a: i for i, a in enumerate(keep)}
    sub = FinCat(
        objects=tuple(c.objects[a] for a in keep),
        src=tuple(pos[c.src[f]] for f in mor),
        tgt=tuple(pos[c.tgt[f]] for f in mor),
        identity=tuple(new_id[c.identity[a]] for a in keep),
        compose={
            (new_id[f], new_id[g]): new_id[c.comp(f, g)]
            for f in mor
            for g in mor
            if c.tgt[f] == c.src[g]
        },
        names=tuple(c.morphism_name(f) for f in mor),
    )
    return sub, Functor(sub, c, tuple(keep), tuple(mor))


# ============================================
# Functors
# ============================================

def identity_functor(c: FinCat) -> Functor:
    return Functor(c, c, tuple(range(c.n_objects)), tuple(range(c.n_morphisms)))


def compose_functors(F: Functor, G: Functor) -> Functor:
    """``F ⨾ G``: first F, then G."""
    return Functor(
        F.source,
        G.target,
        tuple(G.ob[x] for x in F.ob),
        tuple(G.mor[u] for u in F.mor),
    )


def constant_functor(source: FinCat, target: FinCat, obj: int) -> Functor:
    return Functor(
        source,
        target,
        tuple(obj for _ in range(source.n_objects)),
        tuple(target.identity[obj] for _ in range(source.n_morphisms)),
    )


def same_maps(F: Functor, G: Functor) -> bool:
    return F.ob == G.ob and F.mor == G.mor


# ============================================
# Duality
# ============================================

def opposite(c: FinCat) -> FinCat:
    return FinCat(
        objects=c.objects,
        src=c.tgt,
        tgt=c.src,
        identity=c.identity,
        compose={(g, f): h for (f, g), h in c.compose.items()},
        names=c.names,
    )


def opposite_functor(F: Functor) -> Functor:
    return Functor(opposite(F.source), opposite(F.target), F.ob, F.mor)


def opposite_distributor(p: Distributor) -> Distributor:
    """``left=C, right=D`` becomes ``left=D^op, right=C^op`` with het'(d, c) = het(c, d)."""
    return Distributor(
        left=opposite(p.right),
        right=opposite(p.left),
        het={(d, c): cell for (c, d), cell in p.het.items()},
        left_action={(v, c, x): y for (c, x, v), y in p.right_action.items()},
        right_action={(d, x, u): y for (u, d, x), y in p.left_action.items()},
        labels=p.labels,
    )


# ============================================
# Distributors
# ============================================

def hom_distributor(c: FinCat) -> Distributor:
    n = c.n_objects
    return Distributor(
        left=c,
        right=c,
        het={(a, b): c.hom(a, b) for a in range(n) for b in range(n)},
        left_action={
            (u, b, x): c.comp(u, x)
            for u in range(c.n_morphisms)
            for b in range(n)
            for x in c.hom(c.tgt[u], b)
        },
        right_action={
            (a, x, v): c.comp(x, v)
            for v in range(c.n_morphisms)
            for a in range(n)
            for x in c.hom(a, c.src[v])
        },
        labels={f: c.morphism_name(f) for f in range(c.n_morphisms)},
    )


def restrict_distributor(p: Distributor, f: Functor, g: Functor) -> Distributor:
    """``p(f, g)``: het'(c', d') = het(f c', g d'), actions through f and g."""
    if f.target != p.left or g.target != p.right:
        raise MalformedInputError("restriction functors do not land in the distributor's categories")
    C, D = f.source, g.source
    het = {
        (c, d): p.het[(f.ob[c], g.ob[d])]
        for c in range(C.n_objects)
        for d in range(D.n_objects)
    }
    left_action = {
        (u, d, x): p.left_action[(f.mor[u], g.ob[d], x)]
        for u in range(C.n_morphisms)
        for d in range(D.n_objects)
        for x in het[(C.tgt[u], d)]
    }
    right_action = {
        (c, x, v): p.right_action[(f.ob[c], x, g.mor[v])]
        for v in range(D.n_morphisms)
        for c in range(C.n_objects)
        for x in het[(c, D.src[v])]
    }
    return Distributor(C, D, het, left_action, right_action, labels=p.labels)


def conjoint(j: Functor) -> Distributor:
    """``E(j, 1)``: left=A, right=E, het(a, e) = E(j a, e)."""
    E = j.target
    return restrict_distributor(hom_distributor(E), j, identity_functor(E))


def relabel_distributor(
    p: Distributor, rename: Callable[[int, int, Hashable], Hashable]
) -> Distributor:
    """Rename elements cell by cell; ``rename(c, d, x)`` must be injective on each cell."""
    C, D = p.left, p.right
    het = {(c, d): tuple(rename(c, d, x) for x in cell) for (c, d), cell in p.het.items()}
    left_action = {}
    for (u, d, x), y in p.left_action.items():
        left_action[(u, d, rename(C.tgt[u], d, x))] = rename(C.src[u], d, y)
    right_action = {}
    for (c, x, v), y in p.right_action.items():
        right_action[(c, rename(c, D.src[v], x), v)] = rename(c, D.tgt[v], y)
    return Distributor(C, D, het, left_action, right_action)


def column_presheaf(p: Distributor, d: int) -> Presheaf:
    """The presheaf ``p(-, d)`` on the left category."""
    C = p.left
    return Presheaf(
        base=C,
        values=tuple(p.het[(c, d)] for c in range(C.n_objects)),
        action={
            (u, x): p.left_action[(u, d, x)]
            for u in range(C.n_morphisms)
            for x in p.het[(C.tgt[u], d)]
        },
    )


# ============================================
# Enumeration
# ============================================

def enumerate_functors(
    source: FinCat,
    target: FinCat,
    *,
    object_choices: Callable[[int], Sequence[int]] | None = None,
    morphism_choices: Callable[[int, tuple[int, ...]], Sequence[int]] | None = None,
) -> list[Functor]:
    """All functors ``source -> target``, object map first, in lexicographic order.

    ``object_choices`` and ``morphism_choices`` narrow the candidates; the latter
    receives the morphism and the chosen object map.
    """
    n, m = source.n_objects, source.n_morphisms
    keys = [("ob", a) for a in range(n)] + [("mor", u) for u in range(m)]

    def obmap(partial) -> tuple[int, ...]:
        return tuple(partial[("ob", a)] for a in range(n))

    def candidates(key, partial):
        kind, i = key
        if kind == "ob":
            return object_choices(i) if object_choices else range(target.n_objects)
        a, b = partial[("ob", source.src[i])], partial[("ob", source.tgt[i])]
        if source.is_identity(i):
            options = (target.identity[a],)
        else:
            options = target.hom(a, b)
        if morphism_choices is not None:
            allowed = set(morphism_choices(i, obmap(partial)))
            options = tuple(x for x in options if x in allowed)
        return options

    constraints = StaticConstraints(keys)
    for f, g in source.composable_pairs():
        fg = source.comp(f, g)
        constraints.add(
            [("mor", f), ("mor", g), ("mor", fg)],
            lambda s, f=f, g=g, fg=fg: target.comp(s[("mor", f)], s[("mor", g)]) == s[("mor", fg)],
        )

    out = []
    for s in backtrack(keys, candidates, constraints, what="functor"):
        out.append(
            Functor(source, target, obmap(s), tuple(s[("mor", u)] for u in range(m)))
        )
    return out


def enumerate_nat_transformations(F: Functor, G: Functor) -> list[NatTransformation]:
    A, B = F.source, F.target
    keys = list(range(A.n_objects))
    constraints = StaticConstraints(keys)
    for u in range(A.n_morphisms):
        a, b = A.src[u], A.tgt[u]
        constraints.add(
            [a, b],
            lambda s, u=u, a=a, b=b: B.comp(F.mor[u], s[b]) == B.comp(s[a], G.mor[u]),
        )
    solutions = backtrack(
        keys, lambda a, _: B.hom(F.ob[a], G.ob[a]), constraints, what="natural transformation"
    )
    return [NatTransformation(F, G, tuple(s[a] for a in keys)) for s in solutions]


def enumerate_presheaf_maps(P: Presheaf, Q: Presheaf) -> list[dict[tuple[int, Hashable], Hashable]]:
    """Natural maps P => Q as tables ``(a, x) -> y``."""
    A = P.base
    keys = [(a, x) for a in range(A.n_objects) for x in P.values[a]]
    constraints = StaticConstraints(keys)
    for f in range(A.n_morphisms):
        a, a2 = A.src[f], A.tgt[f]
        for x in P.values[a2]:
            fx = P.action[(f, x)]
            constraints.add(
                [(a2, x), (a, fx)],
                lambda s, f=f, a=a, a2=a2, x=x, fx=fx: s[(a, fx)] == Q.action[(f, s[(a2, x)])],
            )
    return list(backtrack(keys, lambda k, _: Q.values[k[0]], constraints, what="presheaf map"))


def functorial_actions(
    base: FinCat,
    values: Sequence[Sequence[Hashable]],
    pinned: Mapping[tuple[int, Hashable], Hashable] | None = None,
) -> list[dict[tuple[int, Hashable], Hashable]]:
    """All presheaf structures on ``base`` with the given object part.

    Keys are ``(f, x)`` with ``x`` in ``values[tgt f]``; identities act trivially
    and entries in ``pinned`` are forced.
    """
    pinned = dict(pinned or {})
    keys = [(f, x) for f in range(base.n_morphisms) for x in values[base.tgt[f]]]
    decompositions: dict[int, list[tuple[int, int]]] = {}
    followers: dict[int, list[int]] = {}
    for f, g in base.composable_pairs():
        decompositions.setdefault(base.comp(f, g), []).append((f, g))
        followers.setdefault(g, []).append(f)
    preceding: dict[int, list[int]] = {}
    for f, g in base.composable_pairs():
        preceding.setdefault(f, []).append(g)

    def candidates(key, partial):
        f, x = key
        if key in pinned:
            return (pinned[key],)
        if base.is_identity(f):
            return (x,)
        return values[base.src[f]]

    def ok(f, g, x, partial) -> bool:
        # (f ⨾ g) acts as f after g
        y = partial.get((g, x))
        if y is None:
            return True
        lhs = partial.get((f, y))
        rhs = partial.get((base.comp(f, g), x))
        return lhs is None or rhs is None or lhs == rhs

    def accept(key, partial):
        h, x = key
        # key in role f ⨾ g
        for f, g in decompositions.get(h, ()):
            if not ok(f, g, x, partial):
                return False
        # key in role g: for every f before it
        for f in followers.get(h, ()):
            if not ok(f, h, x, partial):
                return False
        # key in role f applied to an earlier value
        for g in preceding.get(h, ()):
            for x2 in values[base.tgt[g]]:
                if partial.get((g, x2)) == x and not ok(h, g, x2, partial):
                    return False
        return True

    return list(backtrack(keys, candidates, accept, what="presheaf structure"))


# ============================================
# Properties of functors
# ============================================

def is_fully_faithful(F: Functor) -> tuple[bool, tuple | None]:
    A, B = F.source, F.target
    for a in range(A.n_objects):
        for a2 in range(A.n_objects):
            images = [F.mor[u] for u in A.hom(a, a2)]
            if len(set(images)) != len(images):
                return False, (a, a2, "not-injective", len(images), len(set(images)))
            target = B.hom(F.ob[a], F.ob[a2])
            if len(images) != len(target):
                return False, (a, a2, "not-surjective", len(images), len(target))
    return True, None


def is_strict_isomorphism(F: Functor) -> bool:
    A, B = F.source, F.target
    if A.n_objects != B.n_objects or A.n_morphisms != B.n_morphisms:
        return False
    if len(set(F.ob)) != B.n_objects or len(set(F.mor)) != B.n_morphisms:
        return False
    return validate_functor(F).passed


# ============================================
# Pullbacks
# ============================================

def pullback_category(F: Functor, G: Functor) -> PullbackCategory:
    if F.target != G.target:
        raise MalformedInputError("pullback legs have different codomains")
    X, Y = F.source, G.source
    pairs = tuple(
        (x, y) for x in range(X.n_objects) for y in range(Y.n_objects) if F.ob[x] == G.ob[y]
    )
    pos = {p: i for i, p in enumerate(pairs)}
    cells: dict[tuple[int, int], list[tuple[int, int]]] = {
        (i, k): [] for i in range(len(pairs)) for k in range(len(pairs))
    }
    for u in range(X.n_morphisms):
        for v in range(Y.n_morphisms):
            if F.mor[u] != G.mor[v]:
                continue
            s, t = (X.src[u], Y.src[v]), (X.tgt[u], Y.tgt[v])
            cells[(pos[s], pos[t])].append((u, v))

    apex, elements = build_category(
        [f"({X.objects[x]},{Y.objects[y]})" for x, y in pairs],
        cells,
        identity_of=lambda i: (X.identity[pairs[i][0]], Y.identity[pairs[i][1]]),
        compose_of=lambda a, b, c, p, q: (X.comp(p[0], q[0]), Y.comp(p[1], q[1])),
        label=lambda a, b, p: f"({X.morphism_name(p[0])},{Y.morphism_name(p[1])})",
    )
    left = Functor(apex, X, tuple(x for x, _ in pairs), tuple(p[0] for _, _, p in elements))
    right = Functor(apex, Y, tuple(y for _, y in pairs), tuple(p[1] for _, _, p in elements))
    logger.debug("pullback apex: %d objects, %d morphisms", apex.n_objects, apex.n_morphisms)
    return PullbackCategory(apex=apex, pairs=pairs, left_leg=left, right_leg=right)


@dataclass(frozen=True)
class PullbackCone:
    left: Functor
    right: Functor

    @property
    def apex(self) -> FinCat:
        return self.left.source


def mediating_functors(pb: PullbackCategory, cone: PullbackCone) -> list[Functor]:
    pos = {p: i for i, p in enumerate(pb.pairs)}
    P = pb.apex
    mor_pair = {i: (pb.left_leg.mor[i], pb.right_leg.mor[i]) for i in range(P.n_morphisms)}

    def object_choices(w):
        pair = (cone.left.ob[w], cone.right.ob[w])
        return (pos[pair],) if pair in pos else ()

    def morphism_choices(u, _):
        want = (cone.left.mor[u], cone.right.mor[u])
        return [i for i, p in mor_pair.items() if p == want]

    return enumerate_functors(
        cone.apex, P, object_choices=object_choices, morphism_choices=morphism_choices
    )


def chain_cones(F: Functor, G: Functor, chain_bound: int) -> list[PullbackCone]:
    """Every cone out of the chain categories [0], ..., [chain_bound]."""
    cones = []
    for n in range(chain_bound + 1):
        W = chain_category(n)
        lefts = enumerate_functors(W, F.source)
        rights = enumerate_functors(W, G.source)
        for h, k in itertools.product(lefts, rights):
            if same_maps(compose_functors(h, F), compose_functors(k, G)):
                cones.append(PullbackCone(h, k))
    return cones


@dataclass(frozen=True)
class PullbackPropertyReport:
    cones_checked: int
    failures: tuple[tuple[int, int], ...]
    two_cell_failures: tuple[tuple[int, int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.failures and not self.two_cell_failures


def check_pullback_property(
    pb: PullbackCategory,
    F: Functor,
    G: Functor,
    *,
    chain_bound: int = 2,
    cones: Sequence[PullbackCone] = (),
    cone_pairs: Sequence[tuple[PullbackCone, PullbackCone]] = (),
) -> PullbackPropertyReport:
    """Mediating functors are unique for every test cone; 2-cells correspond for every pair.

    ``failures`` lists ``(cone index, mediator count)``; ``two_cell_failures``
    lists ``(pair index, cone-side count, mediator-side count)``.
    """
    universe = chain_cones(F, G, chain_bound) + list(cones)
    failures = []
    for i, cone in enumerate(universe):
        count = len(mediating_functors(pb, cone))
        if count != 1:
            failures.append((i, count))

    two_cell_failures = []
    for i, (c1, c2) in enumerate(cone_pairs):
        lefts = enumerate_nat_transformations(c1.left, c2.left)
        rights = enumerate_nat_transformations(c1.right, c2.right)
        matching = sum(
            1
            for a, b in itertools.product(lefts, rights)
            if tuple(F.mor[x] for x in a.components) == tuple(G.mor[y] for y in b.components)
        )
        m1, m2 = mediating_functors(pb, c1), mediating_functors(pb, c2)
        mediated = len(enumerate_nat_transformations(m1[0], m2[0])) if m1 and m2 else -1
        if matching != mediated:
            two_cell_failures.append((i, matching, mediated))
    return PullbackPropertyReport(len(universe), tuple(failures), tuple(two_cell_failures))
