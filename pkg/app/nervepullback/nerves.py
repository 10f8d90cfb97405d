import logging
from dataclasses import dataclass

from app.fincat.ops import enumerate_presheaf_maps
from app.fincat.types import Functor, Presheaf

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DensityReport:
    dense: bool
    witness: tuple | None = None  # (e, e', hom count, natural family count)
    failures: tuple[tuple, ...] = ()


def nerve_presheaf(j: Functor, e: int) -> Presheaf:
    """``a ↦ E(j a, e)`` acting by precomposition with ``j``."""
    A, E = j.source, j.target
    values = tuple(E.hom(j.ob[a], e) for a in range(A.n_objects))
    action = {
        (u, x): E.comp(j.mor[u], x)
        for u in range(A.n_morphisms)
        for x in values[A.tgt[u]]
    }
    return Presheaf(A, values, action)


def is_dense(j: Functor) -> DensityReport:
    """Is ``E(e, e') -> Nat(n_j e, n_j e')`` a bijection for every pair?"""
    E = j.target
    nerves = [nerve_presheaf(j, e) for e in range(E.n_objects)]
    failures = []
    for e in range(E.n_objects):
        for e2 in range(E.n_objects):
            homs = E.hom(e, e2)
            maps = enumerate_presheaf_maps(nerves[e], nerves[e2])
            induced = {
                tuple(sorted(((a, x), E.comp(x, eps)) for a in range(j.source.n_objects) for x in nerves[e].values[a]))
                for eps in homs
            }
            if len(induced) != len(homs) or len(maps) != len(homs):
                failures.append((e, e2, len(homs), len(maps)))
    if failures:
        logger.debug("root is not dense: %d failing pairs", len(failures))
        return DensityReport(False, failures[0], tuple(failures))
    return DensityReport(True)
