from dataclasses import dataclass, field
from functools import cached_property

from app.constructions.types import KleisliCategory
from app.fincat.types import FinCat, Functor


@dataclass(frozen=True)
class PullbackObject:
    """A carrier ``e`` with a presheaf structure on ``Kl(T)`` whose value at ``a`` is ``E(j a, e)``.

    ``action`` holds sorted ``((f, x), y)`` items: the Kleisli morphism ``f : a -> a'``
    sends ``x`` in ``E(j a', e)`` to ``y`` in ``E(j a, e)``.
    """

    carrier: int
    action: tuple[tuple[tuple[int, int], int], ...]

    @cached_property
    def table(self) -> dict[tuple[int, int], int]:
        return dict(self.action)

    def act(self, f: int, x: int) -> int:
        return self.table[(f, x)]


@dataclass(frozen=True)
class NervePullback:
    category: FinCat
    objects: tuple[PullbackObject, ...]
    morphisms: tuple[tuple[int, int, int], ...]
    forget: Functor
    kleisli: KleisliCategory

    def object_index(self, obj: PullbackObject) -> int | None:
        return self._objects.get(obj)

    def morphism_index(self, i: int, k: int, epsilon: int) -> int:
        return self._morphisms[(i, k, epsilon)]

    @cached_property
    def _objects(self) -> dict[PullbackObject, int]:
        return {o: i for i, o in enumerate(self.objects)}

    @cached_property
    def _morphisms(self) -> dict[tuple[int, int, int], int]:
        return {m: i for i, m in enumerate(self.morphisms)}


@dataclass(frozen=True)
class NerveTheoremReport:
    dense: bool
    comparison_iso: bool
    nerve_of_comparison_ok: bool
    square_commutes: bool
    comparison_functorial: bool
    algebra_count: int
    apex_objects: int
    apex_morphisms: int
    apex_iso_base: bool
    witnesses: dict[str, tuple] = field(default_factory=dict)

    @property
    def theorem_holds(self) -> bool:
        # density forces the comparison to be invertible; not conversely
        return self.comparison_iso or not self.dense

    @property
    def passed(self) -> bool:
        return (
            self.theorem_holds
            and self.nerve_of_comparison_ok
            and self.square_commutes
            and self.comparison_functorial
        )


@dataclass(frozen=True)
class ConerveTheoremReport:
    codense: bool
    comparison_iso: bool
    conerve_of_comparison_ok: bool
    square_commutes: bool
    comparison_functorial: bool
    coalgebra_count: int
    apex_objects: int
    apex_morphisms: int
    apex_iso_base: bool
    witnesses: dict[str, tuple] = field(default_factory=dict)

    @property
    def theorem_holds(self) -> bool:
        return self.comparison_iso or not self.codense

    @property
    def passed(self) -> bool:
        return (
            self.theorem_holds
            and self.conerve_of_comparison_ok
            and self.square_commutes
            and self.comparison_functorial
        )
