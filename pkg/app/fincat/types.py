"""Finite categories, functors, natural transformations, distributors and presheaves.

Composition is stored in diagrammatic order: ``compose[(f, g)]`` is ``f ⨾ g``,
defined when ``tgt[f] == src[g]``. Objects and morphisms are integer indices;
names are kept for reports only.

A ``Distributor(left=C, right=D)`` has a het set for every pair ``(c, d)``, a
left action by ``C`` and a right action by ``D``::

    left_action[(u, d, x)]  = u · x   for u : c' -> c, x in het(c, d)   (lands in het(c', d))
    right_action[(c, x, v)] = x · v   for x in het(c, d), v : d -> d'   (lands in het(c, d'))

The conjoint ``E(j, 1)`` of ``j : A -> E`` is the distributor with ``left=A``,
``right=E`` and ``het(a, e) = E(j a, e)``.
"""

from __future__ import annotations

from collections.abc import Hashable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

from app.errors import LawViolationError


@dataclass(frozen=True)
class LawViolation:
    law: str
    witness: tuple


@dataclass(frozen=True)
class LawReport:
    """Outcome of a law check. ``supplementary`` reports never affect ``passed``."""

    subject: str
    violations: tuple[LawViolation, ...] = ()
    supplementary: tuple[LawReport, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def laws_failed(self) -> list[str]:
        seen: list[str] = []
        for v in self.violations:
            if v.law not in seen:
                seen.append(v.law)
        return seen

    def first(self, law: str) -> LawViolation | None:
        for v in self.violations:
            if v.law == law:
                return v
        return None

    def supplement(self, subject: str) -> LawReport | None:
        for s in self.supplementary:
            if s.subject == subject:
                return s
        return None

    def require(self) -> None:
        """Raise ``LawViolationError`` for the first violation, if any."""
        if self.violations:
            v = self.violations[0]
            raise LawViolationError(v.law, v.witness)

    @classmethod
    def build(
        cls,
        subject: str,
        violations: list[LawViolation],
        supplementary: tuple[LawReport, ...] = (),
    ) -> LawReport:
        return cls(subject=subject, violations=tuple(violations), supplementary=supplementary)


@dataclass(frozen=True)
class Uniqueness:
    """Result of an exhaustive uniqueness count; ``count is None`` means not attempted."""

    count: int | None

    @property
    def attempted(self) -> bool:
        return self.count is not None

    @property
    def unique(self) -> bool:
        return self.count == 1


@dataclass(frozen=True)
class FinCat:
    objects: tuple[str, ...]
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    identity: tuple[int, ...]
    compose: Mapping[tuple[int, int], int]
    names: tuple[str, ...] = field(default=(), compare=False)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    @cached_property
    def _homs(self) -> dict[tuple[int, int], tuple[int, ...]]:
        homs: dict[tuple[int, int], list[int]] = {
            (a, b): [] for a in range(self.n_objects) for b in range(self.n_objects)
        }
        for f, (a, b) in enumerate(zip(self.src, self.tgt)):
            if (a, b) in homs:
                homs[(a, b)].append(f)
        return {k: tuple(v) for k, v in homs.items()}

    def hom(self, a: int, b: int) -> tuple[int, ...]:
        return self._homs[(a, b)]

    def comp(self, f: int, g: int) -> int:
        """``f ⨾ g``."""
        return self.compose[(f, g)]

    def comp_all(self, *fs: int) -> int:
        out = fs[0]
        for g in fs[1:]:
            out = self.compose[(out, g)]
        return out

    def is_identity(self, f: int) -> bool:
        return self.identity[self.src[f]] == f

    def morphism_name(self, f: int) -> str:
        if self.names and f < len(self.names):
            return self.names[f]
        return f"m{f}"

    def object_index(self, name: str) -> int:
        return self.objects.index(name)

    def morphism_index(self, name: str) -> int:
        return self.names.index(name)

    def composable_pairs(self):
        for f in range(self.n_morphisms):
            for g in self._out.get(self.tgt[f], ()):
                yield f, g

    @cached_property
    def _out(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for g, a in enumerate(self.src):
            out.setdefault(a, []).append(g)
        return {k: tuple(v) for k, v in out.items()}

    def morphisms_from(self, a: int) -> tuple[int, ...]:
        return self._out.get(a, ())

    def morphisms_into(self, b: int) -> tuple[int, ...]:
        return tuple(f for f in range(self.n_morphisms) if self.tgt[f] == b)


@dataclass(frozen=True)
class Functor:
    source: FinCat
    target: FinCat
    ob: tuple[int, ...]
    mor: tuple[int, ...]


@dataclass(frozen=True)
class NatTransformation:
    source: Functor
    target: Functor
    components: tuple[int, ...]


@dataclass(frozen=True)
class Distributor:
    left: FinCat
    right: FinCat
    het: Mapping[tuple[int, int], tuple[Hashable, ...]]
    left_action: Mapping[tuple[int, int, Hashable], Hashable]
    right_action: Mapping[tuple[int, Hashable, int], Hashable]
    labels: Mapping[Hashable, str] = field(default_factory=dict, compare=False)

    def cell(self, c: int, d: int) -> tuple[Hashable, ...]:
        return self.het[(c, d)]

    def act_left(self, u: int, d: int, x: Hashable) -> Hashable:
        return self.left_action[(u, d, x)]

    def act_right(self, c: int, x: Hashable, v: int) -> Hashable:
        return self.right_action[(c, x, v)]

    def label(self, x: Hashable) -> str:
        return self.labels.get(x, str(x))


@dataclass(frozen=True)
class Presheaf:
    """Contravariant: ``action[(f, x)]`` for ``f : a -> a'`` and ``x`` in ``values[a']`` lies in ``values[a]``."""

    base: FinCat
    values: tuple[tuple[Hashable, ...], ...]
    action: Mapping[tuple[int, Hashable], Hashable]


@dataclass(frozen=True)
class PullbackCategory:
    apex: FinCat
    pairs: tuple[tuple[int, int], ...]
    left_leg: Functor
    right_leg: Functor
