from collections.abc import Mapping
from dataclasses import dataclass

from app.fincat.types import FinCat, Functor


@dataclass(frozen=True)
class RelativeMonad:
    """A j-relative monad on finite data.

    ``eta[x]`` is a morphism ``j x -> t x`` of E; ``dagger[(x, y, f)]`` is
    ``f† : t x -> t y`` for every ``f : j x -> t y``.
    """

    j: Functor
    t_ob: tuple[int, ...]
    eta: tuple[int, ...]
    dagger: Mapping[tuple[int, int, int], int]

    @property
    def domain(self) -> FinCat:
        return self.j.source

    @property
    def base(self) -> FinCat:
        return self.j.target

    def kleisli_hom(self, x: int, y: int) -> tuple[int, ...]:
        return self.base.hom(self.j.ob[x], self.t_ob[y])

    def ext(self, x: int, y: int, f: int) -> int:
        return self.dagger[(x, y, f)]

    def unit_of(self, u: int) -> int:
        """``j u ⨾ η_y`` for ``u : x -> y`` in A."""
        return self.base.comp(self.j.mor[u], self.eta[self.domain.tgt[u]])


@dataclass(frozen=True)
class RelativeComonad:
    """Dual data: ``eps[x] : t x -> j x`` and ``dagger[(x, y, f)] : t x -> t y`` for ``f : t x -> j y``."""

    j: Functor
    t_ob: tuple[int, ...]
    eps: tuple[int, ...]
    dagger: Mapping[tuple[int, int, int], int]


@dataclass(frozen=True)
class RelativeAdjunction:
    """``phi[(x, y, h)]`` sends ``h : ℓ x -> y`` in C to a morphism ``j x -> r y`` in E."""

    j: Functor
    ell: Functor
    r: Functor
    phi: Mapping[tuple[int, int, int], int]


@dataclass(frozen=True)
class SectionData:
    """Section ``s`` of the retraction ``r``, both indexed over pairs of objects of A.

    ``s[(x, y, f)]`` for ``f : j x -> t y`` lands in ``E(t x, t y)``;
    ``r[(x, y, h)]`` for ``h : t x -> t y`` lands in ``E(j x, t y)``.
    """

    j: Functor
    t_ob: tuple[int, ...]
    s: Mapping[tuple[int, int, int], int]
    r: Mapping[tuple[int, int, int], int]
