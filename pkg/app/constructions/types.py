from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property

from app.fincat.types import FinCat, Functor, LawReport, Uniqueness
from app.relmonad.types import RelativeAdjunction


@dataclass(frozen=True)
class Algebra:
    """Carrier ``e`` with ``f^α : t x -> e`` for every ``f : j x -> e``.

    ``aop`` holds the table as sorted ``((x, f), f^α)`` items so algebras hash
    and compare as data.
    """

    carrier: int
    aop: tuple[tuple[tuple[int, int], int], ...]

    @cached_property
    def table(self) -> dict[tuple[int, int], int]:
        return dict(self.aop)

    def act(self, x: int, f: int) -> int:
        return self.table[(x, f)]

    @classmethod
    def of(cls, carrier: int, table: Mapping[tuple[int, int], int]) -> "Algebra":
        return cls(carrier, tuple(sorted(table.items())))


@dataclass(frozen=True)
class Opalgebra:
    """A functor ``a : A -> B`` with ``oop[(x, y, f)] : a x -> a y`` for ``f : j x -> t y``."""

    a: Functor
    oop: Mapping[tuple[int, int, int], int]


@dataclass(frozen=True)
class Resolution:
    adjunction: RelativeAdjunction
    reproduces_monad: bool


@dataclass(frozen=True)
class KleisliCategory:
    category: FinCat
    elements: tuple[tuple[int, int, int], ...]
    k: Functor
    v: Functor
    resolution: Resolution
    # category laws of the composed table
    report: LawReport

    def index_of(self, x: int, y: int, f: int) -> int:
        return self._index[(x, y, f)]

    @cached_property
    def _index(self) -> dict[tuple[int, int, int], int]:
        return {e: i for i, e in enumerate(self.elements)}


@dataclass(frozen=True)
class AlgebraCategory:
    category: FinCat
    algebras: tuple[Algebra, ...]
    morphisms: tuple[tuple[int, int, int], ...]
    u: Functor
    f: Functor
    resolution: Resolution

    def morphism_index(self, i: int, k: int, epsilon: int) -> int:
        return self._index[(i, k, epsilon)]

    @cached_property
    def _index(self) -> dict[tuple[int, int, int], int]:
        return {e: n for n, e in enumerate(self.morphisms)}

    def algebra_index(self, alg: Algebra) -> int | None:
        try:
            return self.algebras.index(alg)
        except ValueError:
            return None


@dataclass(frozen=True)
class ComparisonReport:
    functor: Functor
    fully_faithful: bool
    fully_faithful_witness: tuple | None
    k_then_i_is_free: bool
    i_then_u_is_v: bool
    root_dense: bool
    comparison_dense: bool | None

    @property
    def passed(self) -> bool:
        ok = self.fully_faithful and self.k_then_i_is_free and self.i_then_u_is_v
        if self.root_dense:
            ok = ok and bool(self.comparison_dense)
        return ok


@dataclass(frozen=True)
class Factorization:
    functor: Functor
    uniqueness: Uniqueness
    report: LawReport | None = None
