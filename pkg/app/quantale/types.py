"""Finite quantales and the thin categories enriched in them.

Composition is written ``hom(y, z) ⊗ hom(x, y) ≤ hom(x, z)``; a presheaf ``p``
on ``A`` satisfies ``p(a) ⊗ A(a', a) ≤ p(a')``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property, reduce

from app.fincat.types import LawReport


@dataclass(frozen=True)
class Quantale:
    """``order`` holds every pair ``a ≤ b``; ``products`` the sorted ``((a, b), a ⊗ b)`` items."""

    elements: tuple[str, ...]
    order: frozenset[tuple[str, str]]
    products: tuple[tuple[tuple[str, str], str], ...]
    unit: str
    name: str = field(default="", compare=False)
    # residual entries supplied with the input, ((kind, x, y), value) with kind lres or rres
    given_residuals: tuple[tuple[tuple[str, str, str], str], ...] = field(default=(), compare=False)

    @classmethod
    def of(
        cls,
        elements: Iterable[str],
        order: Iterable[tuple[str, str]],
        tensor: Mapping[tuple[str, str], str],
        unit: str,
        name: str = "",
        residuals: Mapping[tuple[str, str, str], str] | None = None,
    ) -> Quantale:
        given = tuple(sorted((residuals or {}).items()))
        return cls(tuple(elements), frozenset(order), tuple(sorted(tensor.items())), unit, name, given)

    @cached_property
    def tensor(self) -> dict[tuple[str, str], str]:
        return dict(self.products)

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self.order

    def t(self, a: str, b: str) -> str:
        return self.tensor[(a, b)]

    def bound(self, items: Iterable[str], upper: bool) -> str:
        items = tuple(items)
        if upper:
            bounds = [u for u in self.elements if all(self.leq(x, u) for x in items)]
            best = [u for u in bounds if all(self.leq(u, v) for v in bounds)]
        else:
            bounds = [u for u in self.elements if all(self.leq(u, x) for x in items)]
            best = [u for u in bounds if all(self.leq(v, u) for v in bounds)]
        if len(best) != 1:
            kind = "join" if upper else "meet"
            raise ValueError(f"no {kind} of {items!r}")
        return best[0]

    @cached_property
    def bottom(self) -> str:
        return self.bound((), upper=True)

    @cached_property
    def top(self) -> str:
        return self.bound((), upper=False)

    @cached_property
    def _joins(self) -> dict[tuple[str, str], str]:
        return {(a, b): self.bound((a, b), upper=True) for a in self.elements for b in self.elements}

    @cached_property
    def _meets(self) -> dict[tuple[str, str], str]:
        return {(a, b): self.bound((a, b), upper=False) for a in self.elements for b in self.elements}

    def join(self, items: Iterable[str]) -> str:
        return reduce(lambda a, b: self._joins[(a, b)], items, self.bottom)

    def meet(self, items: Iterable[str]) -> str:
        return reduce(lambda a, b: self._meets[(a, b)], items, self.top)

    @cached_property
    def _lres(self) -> dict[tuple[str, str], str]:
        return {
            (b, c): self.join(a for a in self.elements if self.leq(self.t(a, b), c))
            for b in self.elements
            for c in self.elements
        }

    @cached_property
    def _rres(self) -> dict[tuple[str, str], str]:
        return {
            (a, c): self.join(b for b in self.elements if self.leq(self.t(a, b), c))
            for a in self.elements
            for c in self.elements
        }

    def lres(self, b: str, c: str) -> str:
        """Largest ``a`` with ``a ⊗ b ≤ c``."""
        return self._lres[(b, c)]

    def rres(self, a: str, c: str) -> str:
        """Largest ``b`` with ``a ⊗ b ≤ c``."""
        return self._rres[(a, c)]


@dataclass(frozen=True)
class VCat:
    quantale: Quantale
    objects: tuple[str, ...]
    homs: tuple[tuple[tuple[int, int], str], ...]

    @classmethod
    def of(cls, quantale: Quantale, objects: Iterable[str], hom: Mapping[tuple[int, int], str]) -> VCat:
        return cls(quantale, tuple(objects), tuple(sorted(hom.items())))

    @cached_property
    def hom(self) -> dict[tuple[int, int], str]:
        return dict(self.homs)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    def __call__(self, x: int, y: int) -> str:
        return self.hom[(x, y)]


@dataclass(frozen=True)
class VFunctor:
    source: VCat
    target: VCat
    ob: tuple[int, ...]


@dataclass(frozen=True)
class VRelMonad:
    j: VFunctor
    t_ob: tuple[int, ...]

    @property
    def domain(self) -> VCat:
        return self.j.source

    @property
    def base(self) -> VCat:
        return self.j.target


@dataclass(frozen=True)
class VLooseMonad:
    base: VCat
    carrier: tuple[tuple[tuple[int, int], str], ...]

    @cached_property
    def table(self) -> dict[tuple[int, int], str]:
        return dict(self.carrier)

    def __call__(self, x: int, y: int) -> str:
        return self.table[(x, y)]


@dataclass(frozen=True)
class VDistributor:
    """``het[(a, x)]`` with ``A`` acting on the left and ``X`` on the right."""

    left: VCat
    right: VCat
    het: tuple[tuple[tuple[int, int], str], ...]

    @cached_property
    def table(self) -> dict[tuple[int, int], str]:
        return dict(self.het)

    def __call__(self, a: int, x: int) -> str:
        return self.table[(a, x)]


@dataclass(frozen=True)
class PresheafObject:
    """``P A`` with its presheaves as value tuples and ``よ a`` located by index."""

    base: VCat
    category: VCat
    presheaves: tuple[tuple[str, ...], ...]
    yoneda: tuple[int, ...]
    report: LawReport

    def index_of(self, values: tuple[str, ...]) -> int | None:
        return self._index.get(tuple(values))

    @cached_property
    def _index(self) -> dict[tuple[str, ...], int]:
        return {p: i for i, p in enumerate(self.presheaves)}

    def projection(self, a: int, i: int) -> str:
        """``π_A(a, p) = p(a)``."""
        return self.presheaves[i][a]


@dataclass(frozen=True)
class VNerveTheoremReport:
    dense: bool
    comparison_iso: bool
    algebras: tuple[int, ...]
    pullback: tuple[int, ...]
    semanticiser_matches: bool
    witnesses: dict[str, tuple] = field(default_factory=dict)

    @property
    def theorem_holds(self) -> bool:
        return self.comparison_iso or not self.dense

    @property
    def passed(self) -> bool:
        return self.theorem_holds and self.semanticiser_matches


@dataclass(frozen=True)
class YoBijectionReport:
    loose_monads: int
    yo_monads: int
    round_trip: bool
    kleisli_is_collapse: bool
    algebras_are_presheaves: bool
    witnesses: dict[str, tuple] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (
            self.loose_monads == self.yo_monads
            and self.round_trip
            and self.kleisli_is_collapse
            and self.algebras_are_presheaves
        )
