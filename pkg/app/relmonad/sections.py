"""Relative monads as sections of the retraction ``E(η, t) : E(t, t) => E(j, t)``."""

from collections.abc import Iterator
from itertools import combinations

from app.errors import MalformedInputError
from app.fincat.types import LawReport, LawViolation
from app.relmonad.laws import require_monad
from app.relmonad.types import RelativeMonad, SectionData


def _pairs(sd: SectionData):
    n = sd.j.source.n_objects
    return [(x, y) for x in range(n) for y in range(n)]


def section_from_monad(T: RelativeMonad) -> SectionData:
    require_monad(T)
    E = T.base
    r = {
        (x, y, h): E.comp(T.eta[x], h)
        for x in range(T.domain.n_objects)
        for y in range(T.domain.n_objects)
        for h in E.hom(T.t_ob[x], T.t_ob[y])
    }
    return SectionData(T.j, T.t_ob, dict(T.dagger), r)


def recovered_unit(sd: SectionData) -> tuple[int, ...]:
    E = sd.j.target
    return tuple(sd.r[(x, x, E.identity[sd.t_ob[x]])] for x in range(sd.j.source.n_objects))


def check_section(sd: SectionData) -> LawReport:
    j, E = sd.j, sd.j.target
    for x, y in _pairs(sd):
        for f in E.hom(j.ob[x], sd.t_ob[y]):
            if sd.s.get((x, y, f)) not in E.hom(sd.t_ob[x], sd.t_ob[y]):
                raise MalformedInputError("section is not total or mistyped", (x, y, f))
        for h in E.hom(sd.t_ob[x], sd.t_ob[y]):
            if sd.r.get((x, y, h)) not in E.hom(j.ob[x], sd.t_ob[y]):
                raise MalformedInputError("retraction is not total or mistyped", (x, y, h))

    eta = recovered_unit(sd)
    violations: list[LawViolation] = []
    for x, y in _pairs(sd):
        for h in E.hom(sd.t_ob[x], sd.t_ob[y]):
            if sd.r[(x, y, h)] != E.comp(eta[x], h):
                violations.append(LawViolation("retraction-is-precomposition", (x, y, h)))
        for f in E.hom(j.ob[x], sd.t_ob[y]):
            if sd.r[(x, y, sd.s[(x, y, f)])] != f:
                violations.append(LawViolation("section-retraction", (x, y, f)))
    for x in range(j.source.n_objects):
        if sd.s[(x, x, eta[x])] != E.identity[sd.t_ob[x]]:
            violations.append(LawViolation("unit-square", (x,)))
    for x, y in _pairs(sd):
        for f in E.hom(j.ob[x], sd.t_ob[y]):
            sf = sd.s[(x, y, f)]
            for z in range(j.source.n_objects):
                for g in E.hom(j.ob[y], sd.t_ob[z]):
                    both = E.comp(sf, sd.s[(y, z, g)])
                    if sd.s[(x, z, sd.r[(x, z, both)])] != both:
                        violations.append(LawViolation("multiplication-square", (x, y, z, f, g)))
    return LawReport.build("section", violations)


def monad_from_section(sd: SectionData) -> RelativeMonad:
    check_section(sd).require()
    return RelativeMonad(sd.j, sd.t_ob, recovered_unit(sd), dict(sd.s))


def _changed(sd: SectionData, s: dict | None = None, r: dict | None = None) -> SectionData:
    return SectionData(sd.j, sd.t_ob, {**sd.s, **(s or {})}, {**sd.r, **(r or {})})


def _s_changes(sd: SectionData) -> list[tuple[tuple[int, int, int], int]]:
    E = sd.j.target
    return [
        (key, h)
        for key in sorted(sd.s)
        for h in E.hom(sd.t_ob[key[0]], sd.t_ob[key[1]])
        if h != sd.s[key]
    ]


def section_mutants(sd: SectionData) -> Iterator[tuple[tuple, SectionData]]:
    """Mutated sections, keyed by ``(kind, *where)``, cheapest first.

    ``"s"`` and ``"r"`` change one entry; an ``"r"`` change at ``(x, x, id)``
    moves the recovered unit. ``"s+r"`` and ``"s+s"`` change two entries, and
    ``"drop-s"`` / ``"drop-r"`` leave one entry out.
    """
    E = sd.j.target
    singles = _s_changes(sd)
    for key, h in singles:
        yield ("s", *key), _changed(sd, s={key: h})
    for key in sorted(sd.r):
        x, y, _ = key
        for f in E.hom(sd.j.ob[x], sd.t_ob[y]):
            if f != sd.r[key]:
                yield ("r", *key), _changed(sd, r={key: f})

    for key, h in singles:
        x, y, f = key
        if sd.r[(x, y, h)] != f:
            yield ("s+r", *key, h), _changed(sd, s={key: h}, r={(x, y, h): f})
    for (k1, h1), (k2, h2) in combinations(singles, 2):
        if k1 != k2:
            yield ("s+s", *k1, *k2), _changed(sd, s={k1: h1, k2: h2})

    for key in sorted(sd.s):
        yield ("drop-s", *key), SectionData(sd.j, sd.t_ob, {k: v for k, v in sd.s.items() if k != key}, sd.r)
    for key in sorted(sd.r):
        yield ("drop-r", *key), SectionData(sd.j, sd.t_ob, sd.s, {k: v for k, v in sd.r.items() if k != key})
