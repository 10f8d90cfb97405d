"""Seeded instance generation.

Set instances are concrete categories: objects are small finite sets, morphisms
the functions obtained by closing a few random generators under composition.
Quantale instances are enumerated and then sampled, or kept whole in an
exhaustive sweep.
"""

import logging
import random
from dataclasses import dataclass
from itertools import combinations, islice

from app.corpus.spec import CorpusSpec
from app.errors import CapacityExceededError, CorpusExhaustedError
from app.fincat.ops import build_category, enumerate_functors, full_subcategory
from app.fincat.types import FinCat, Functor
from app.nervepullback.nerves import is_dense
from app.quantale.standard import (
    chain_quantale,
    dense_subroots,
    enumerate_preorders,
    enumerate_v_monads,
    enumerate_vcats,
    full_sub,
)
from app.quantale.types import VRelMonad
from app.relmonad.laws import enumerate_extensions
from app.relmonad.types import RelativeMonad

logger = logging.getLogger(__name__)

ATTEMPTS_PER_INSTANCE = 500
# extension tables looked at per sampled (j, t, η)
MAX_EXTENSIONS = 64


@dataclass(frozen=True)
class Instance:
    id: str
    monad: RelativeMonad | VRelMonad


def random_category(rng: random.Random, max_objects: int, max_hom: int) -> FinCat | None:
    n = rng.randint(1, max_objects)
    sizes = [rng.randint(1, 2) for _ in range(n)]
    cells: dict[tuple[int, int], set[tuple[int, ...]]] = {(a, b): set() for a in range(n) for b in range(n)}
    for a in range(n):
        cells[(a, a)].add(tuple(range(sizes[a])))
    for _ in range(rng.randint(0, n + 1)):
        a, b = rng.randrange(n), rng.randrange(n)
        cells[(a, b)].add(tuple(rng.randrange(sizes[b]) for _ in range(sizes[a])))

    changed = True
    while changed:
        changed = False
        for (a, b), xs in list(cells.items()):
            for c in range(n):
                for x in list(xs):
                    for y in list(cells[(b, c)]):
                        z = tuple(y[i] for i in x)
                        if z not in cells[(a, c)]:
                            cells[(a, c)].add(z)
                            changed = True
                            if len(cells[(a, c)]) > max_hom:
                                return None

    ordered = {k: sorted(v) for k, v in cells.items()}
    cat, _ = build_category(
        [str(a) for a in range(n)],
        ordered,
        identity_of=lambda a: tuple(range(sizes[a])),
        compose_of=lambda a, b, c, x, y: tuple(y[i] for i in x),
        label=lambda a, b, x: f"{a}>{b}:" + "".join(map(str, x)),
    )
    return cat


def random_root(rng: random.Random, E: FinCat, max_objects: int, max_hom: int) -> Functor | None:
    """Half the time a full subcategory inclusion, otherwise a random functor from a fresh category."""
    if rng.random() < 0.5:
        k = rng.randint(1, E.n_objects)
        _, j = full_subcategory(E, sorted(rng.sample(range(E.n_objects), k)))
        return j
    A = random_category(rng, max_objects, max_hom)
    if A is None:
        return None
    try:
        functors = enumerate_functors(A, E)
    except CapacityExceededError:
        return None
    return rng.choice(functors) if functors else None


def random_monad(rng: random.Random, j: Functor) -> RelativeMonad | None:
    A, E = j.source, j.target
    t_ob = tuple(rng.randrange(E.n_objects) for _ in range(A.n_objects))
    eta = []
    for x in range(A.n_objects):
        units = E.hom(j.ob[x], t_ob[x])
        if not units:
            return None
        eta.append(rng.choice(units))
    try:
        monads = list(islice(enumerate_extensions(j, t_ob, tuple(eta)), MAX_EXTENSIONS))
    except CapacityExceededError:
        return None
    return rng.choice(monads) if monads else None


def _set_corpus(spec: CorpusSpec) -> list[Instance]:
    rng = random.Random(spec.seed)
    out: list[Instance] = []
    budget = spec.count * ATTEMPTS_PER_INSTANCE
    attempts = 0
    while len(out) < spec.count:
        if attempts >= budget:
            raise CorpusExhaustedError(len(out), spec.count, attempts)
        attempts += 1
        E = random_category(rng, spec.max_objects, spec.max_hom)
        if E is None:
            continue
        j = random_root(rng, E, spec.max_objects, spec.max_hom)
        if j is None:
            continue
        if spec.density_required and not is_dense(j).dense:
            continue
        T = random_monad(rng, j)
        if T is None:
            continue
        out.append(Instance(f"set-{spec.seed}-{len(out):04d}", T))
    logger.info("corpus seed %d: %d instances in %d attempts", spec.seed, len(out), attempts)
    return out


def quantale_instances(spec: CorpusSpec) -> list[Instance]:
    """Every monad on every (dense, if asked) full sub-root of every base up to ``max_objects``.

    Bases are all V-categories, or in an exhaustive sweep the preorders, one per
    isomorphism class.
    """
    q = chain_quantale(2 if spec.quantale == "2" else 3)
    out: list[Instance] = []
    for n in range(1, spec.max_objects + 1):
        if spec.exhaustive:
            bases = enumerate_preorders(q, n, up_to_isomorphism=True)
        else:
            bases = enumerate_vcats(q, n)
        for e, E in enumerate(bases):
            if spec.density_required:
                roots = list(dense_subroots(E))
            else:
                roots = [full_sub(E, c) for k in range(1, n + 1) for c in combinations(range(n), k)]
            for r, j in enumerate(roots):
                for m, T in enumerate(enumerate_v_monads(j)):
                    out.append(Instance(f"{q.name}-{n}-{e:03d}-{r:02d}-{m:02d}", T))
    logger.info("quantale pool %s up to %d objects: %d instances", q.name, spec.max_objects, len(out))
    return out


def generate_corpus(spec: CorpusSpec) -> list[Instance]:
    if spec.instance == "set":
        return _set_corpus(spec)
    pool = quantale_instances(spec)
    if spec.exhaustive or len(pool) <= spec.count:
        return pool
    rng = random.Random(spec.seed)
    picked = sorted(rng.sample(range(len(pool)), spec.count))
    return [pool[i] for i in picked]
