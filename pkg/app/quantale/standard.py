"""Standard quantales, preorders as V-categories, and exhaustive enumerations."""

from collections.abc import Iterable, Iterator, Mapping, Sequence
from itertools import combinations, permutations

from app.fincat.search import StaticConstraints, backtrack
from app.quantale.presheaves import v_is_dense
from app.quantale.types import Quantale, VCat, VFunctor, VRelMonad


def chain_quantale(k: int = 2) -> Quantale:
    """``{0 < ... < 1}`` with ``⊗ = min``; ``k = 2`` is the boolean quantale."""
    if k < 2:
        raise ValueError("a chain quantale needs at least two elements")
    if k == 2:
        elements = ["0", "1"]
    else:
        elements = ["0", *(f"{i}/{k - 1}" for i in range(1, k - 1)), "1"]
    order = [(elements[i], elements[j]) for i in range(k) for j in range(i, k)]
    tensor = {(a, b): elements[min(i, j)] for i, a in enumerate(elements) for j, b in enumerate(elements)}
    name = "2" if k == 2 else f"chain-{k}"
    return Quantale.of(elements, order, tensor, "1", name)


def boolean_quantale() -> Quantale:
    return chain_quantale(2)


def _closure(n: int, pairs: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    leq = {(x, x) for x in range(n)} | set(pairs)
    for k in range(n):
        for x in range(n):
            for y in range(n):
                if (x, k) in leq and (k, y) in leq:
                    leq.add((x, y))
    return leq


def preorder_vcat(q: Quantale, objects: Sequence[str], pairs: Iterable[tuple[int, int]]) -> VCat:
    """Preorder generated by ``pairs``, with homs ``top``/``bottom``."""
    leq = _closure(len(objects), pairs)
    n = len(objects)
    hom = {(x, y): q.top if (x, y) in leq else q.bottom for x in range(n) for y in range(n)}
    return VCat.of(q, objects, hom)


def chain_vcat(q: Quantale, n: int) -> VCat:
    return preorder_vcat(q, [str(i) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def discrete_vcat(q: Quantale, n: int) -> VCat:
    return preorder_vcat(q, [str(i) for i in range(n)], [])


def powerset_vcat(q: Quantale, atoms: Sequence[str]) -> VCat:
    """Subsets of ``atoms`` ordered by inclusion, in order of size then position."""
    subsets = [frozenset(c) for r in range(len(atoms) + 1) for c in combinations(range(len(atoms)), r)]
    names = ["{" + ",".join(atoms[i] for i in sorted(s)) + "}" for s in subsets]
    pairs = [(i, k) for i, s in enumerate(subsets) for k, t in enumerate(subsets) if s <= t]
    return preorder_vcat(q, names, pairs)


def full_sub(E: VCat, objects: Sequence[int]) -> VFunctor:
    """Inclusion of the full sub-V-category on ``objects``."""
    hom = {(x, y): E(a, b) for x, a in enumerate(objects) for y, b in enumerate(objects)}
    A = VCat.of(E.quantale, [E.objects[a] for a in objects], hom)
    return VFunctor(A, E, tuple(objects))


def identity_vfunctor(A: VCat) -> VFunctor:
    return VFunctor(A, A, tuple(range(A.n_objects)))


def _canonical(n: int, hom: Mapping[tuple[int, int], str]) -> tuple[str, ...]:
    """Least hom table over all relabellings of ``0..n-1``."""
    return min(
        tuple(hom[(p[x], p[y])] for x in range(n) for y in range(n)) for p in permutations(range(n))
    )


def isomorphism_class(A: VCat) -> tuple:
    return A.quantale, _canonical(A.n_objects, A.hom)


def _relabelling_representatives(n: int, structures: Iterable[dict]) -> list[dict]:
    """The first structure of each relabelling class, in enumeration order."""
    seen = set()
    out = []
    for s in structures:
        key = _canonical(n, s)
        if key not in seen:
            seen.add(key)
            out.append(s)
    return out


def enumerate_vcats(q: Quantale, n: int, *, up_to_isomorphism: bool = False) -> list[VCat]:
    """Every V-category structure on ``0..n-1``, or one per isomorphism class."""
    keys = [(x, y) for x in range(n) for y in range(n)]
    constraints = StaticConstraints(keys)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                constraints.add(
                    [(x, y), (y, z), (x, z)],
                    lambda s, x=x, y=y, z=z: q.leq(q.t(s[(y, z)], s[(x, y)]), s[(x, z)]),
                )

    def candidates(key, _partial):
        x, y = key
        return [v for v in q.elements if x != y or q.leq(q.unit, v)]

    objects = [str(i) for i in range(n)]
    structures = backtrack(keys, candidates, constraints, what="V-category")
    if up_to_isomorphism:
        structures = _relabelling_representatives(n, structures)
    return [VCat.of(q, objects, s) for s in structures]


def enumerate_preorders(q: Quantale, n: int, *, up_to_isomorphism: bool = False) -> list[VCat]:
    """Preorders on ``0..n-1`` as V-categories with homs ``top``/``bottom``."""
    two = chain_quantale(2)
    return [
        VCat.of(q, P.objects, {k: q.top if v == two.top else q.bottom for k, v in P.hom.items()})
        for P in enumerate_vcats(two, n, up_to_isomorphism=up_to_isomorphism)
    ]


def dense_subroots(E: VCat) -> Iterator[VFunctor]:
    """Full sub-V-category inclusions into ``E`` whose nerve is fully faithful."""
    for r in range(1, E.n_objects + 1):
        for objects in combinations(range(E.n_objects), r):
            j = full_sub(E, objects)
            if v_is_dense(j).dense:
                yield j


def enumerate_v_monads(j: VFunctor) -> list[VRelMonad]:
    """Every ``t_ob`` satisfying the unit and extension inequalities."""
    E = j.target
    q = E.quantale
    keys = list(range(j.source.n_objects))
    constraints = StaticConstraints(keys)
    for x in keys:
        constraints.add([x], lambda s, x=x: q.leq(q.unit, E(j.ob[x], s[x])))
        for y in keys:
            constraints.add(
                [x, y], lambda s, x=x, y=y: q.leq(E(j.ob[x], s[y]), E(s[x], s[y]))
            )
    solutions = backtrack(keys, lambda _k, _p: range(E.n_objects), constraints, what="V-monad")
    return [VRelMonad(j, tuple(s[x] for x in keys)) for s in solutions]
