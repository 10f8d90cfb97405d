"""Depth-first table search shared by every enumeration in the package.

Keys are assigned in the given order and candidates are tried in the order the
candidate function yields them, so solutions come out lexicographically.
"""

import logging
from collections.abc import Callable, Hashable, Iterable, Iterator, Sequence

from app.errors import CapacityExceededError
from app.infra.settings import get_settings

logger = logging.getLogger(__name__)

Assignment = dict
Candidates = Callable[[Hashable, Assignment], Iterable[Hashable]]
Accept = Callable[[Hashable, Assignment], bool]


class SearchBudget:
    def __init__(self, what: str, limit: int | None = None):
        self.what = what
        self.limit = limit if limit is not None else get_settings().search_budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise CapacityExceededError(f"{self.what} search nodes", self.nodes, self.limit)


def backtrack(
    keys: Sequence[Hashable],
    candidates: Candidates,
    accept: Accept | None = None,
    *,
    what: str = "table",
    budget: SearchBudget | None = None,
) -> Iterator[Assignment]:
    """Yield every total assignment of ``keys`` that ``accept`` admits at each step.

    ``accept(key, partial)`` is called right after ``key`` is assigned and must
    check every constraint whose keys are now all assigned.
    """
    budget = budget or SearchBudget(what)
    partial: Assignment = {}
    n = len(keys)
    found = 0
    if n == 0:
        yield {}
        return

    pending: list[Iterator[Hashable]] = [iter(list(candidates(keys[0], partial)))]
    while pending:
        i = len(pending) - 1
        key = keys[i]
        partial.pop(key, None)
        advanced = False
        for value in pending[i]:
            budget.tick()
            partial[key] = value
            if accept is None or accept(key, partial):
                advanced = True
                break
            del partial[key]
        if not advanced:
            pending.pop()
            continue
        if i == n - 1:
            found += 1
            yield dict(partial)
            continue
        pending.append(iter(list(candidates(keys[i + 1], partial))))
    logger.debug("%s search: %d solutions, %d nodes", what, found, budget.nodes)


class StaticConstraints:
    """Constraints over fixed key tuples, each checked once its last key is assigned."""

    def __init__(self, keys: Sequence[Hashable]):
        self._position = {k: i for i, k in enumerate(keys)}
        self._by_last: dict[Hashable, list[tuple[tuple[Hashable, ...], Callable[[Assignment], bool]]]] = {}

    def add(self, involved: Sequence[Hashable], check: Callable[[Assignment], bool]) -> None:
        last = max(involved, key=self._position.__getitem__)
        self._by_last.setdefault(last, []).append((tuple(involved), check))

    def __call__(self, key: Hashable, partial: Assignment) -> bool:
        for _, check in self._by_last.get(key, ()):
            if not check(partial):
                return False
        return True


class UnionFind:
    def __init__(self, items: Iterable[Hashable]):
        self._parent = {x: x for x in items}
        self._order = {x: i for i, x in enumerate(self._parent)}

    def find(self, x: Hashable) -> Hashable:
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, a: Hashable, b: Hashable) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        # earliest key stays the representative
        if self._order[rb] < self._order[ra]:
            ra, rb = rb, ra
        self._parent[rb] = ra

    def representatives(self) -> list[Hashable]:
        return [x for x in self._parent if self.find(x) == x]
