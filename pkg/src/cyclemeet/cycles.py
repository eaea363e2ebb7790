"""Exact longest-cycle computation and enumeration.

The search is a DFS branch-and-bound over simple paths anchored at each
cycle's minimum vertex. Two prunes run at every node: a reachability upper
bound on the extendable length, and a check that the anchor can still be
closed into. Exceeding the node budget is a hard error, never a silent
approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .graphs import Graph, check_vertex_set, is_forest, iter_bits

DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """Search ran out of node expansions; carries the best cycle length so far."""

    def __init__(self, message: str, best_length: int = 0):
        super().__init__(message)
        self.best_length = best_length


def canonical_cycle(vertices: Iterable[int]) -> tuple[int, ...]:
    """Rotation/reflection of the cyclic sequence that is lexicographically smallest."""
    seq = tuple(vertices)
    pivot = seq.index(min(seq))
    forward = seq[pivot:] + seq[:pivot]
    backward = forward[:1] + forward[1:][::-1]
    return min(forward, backward)


@dataclass(frozen=True)
class CycleEmbedding:
    """A simple cycle stored as its canonical oriented vertex sequence."""

    vertices: tuple[int, ...]

    @classmethod
    def from_sequence(cls, g: Graph, seq: Iterable[int]) -> "CycleEmbedding":
        vs = tuple(seq)
        if len(vs) < 3:
            raise ValueError("cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle repeats a vertex")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if not g.has_edge(a, b):
                raise ValueError(f"missing edge ({a},{b})")
        return cls(canonical_cycle(vs))

    @property
    def length(self) -> int:
        """Edge count, which equals the vertex count."""
        return len(self.vertices)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        out = set()
        for a, b in zip(self.vertices, self.vertices[1:] + self.vertices[:1]):
            out.add((a, b) if a < b else (b, a))
        return frozenset(out)

    def index_of(self, v: int) -> int:
        return self.vertices.index(v)

    def is_valid(self, g: Graph) -> bool:
        try:
            CycleEmbedding.from_sequence(g, self.vertices)
        except ValueError:
            return False
        return self.vertices == canonical_cycle(self.vertices)

    def to_json_dict(self) -> list[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class CycleSet:
    """All cycles of one length, canonicalized and lexicographically ordered."""

    length: int
    cycles: tuple[CycleEmbedding, ...]
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def to_json_dict(self) -> dict:
        return {
            "length": self.length,
            "count": len(self.cycles),
            "truncated": self.truncated,
            "cycles": [list(c.vertices) for c in self.cycles],
        }


class _Search:
    """Anchored branch-and-bound over simple paths in one graph."""

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.rows = g._rows
        self.budget = budget
        self.nodes = 0
        self.best = 0
        self.best_witness: Optional[tuple[int, ...]] = None

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"search budget of {self.budget} node expansions exceeded",
                best_length=self.best,
            )

    def run_longest(self) -> None:
        n = self.g.n
        for anchor in range(n):
            # cycles whose minimum vertex is the anchor
            allowed = ((1 << n) - 1) >> anchor << anchor
            if self.best >= allowed.bit_count():
                break
            self._extend_longest(anchor, [anchor], 1 << anchor, allowed)

    def _extend_longest(self, anchor: int, path: list[int], used: int, allowed: int) -> None:
        self._tick()
        head = path[-1]
        free = allowed & ~used
        reach = self.g.reach_mask(1 << head, free | (1 << head))
        if not reach & self.rows[anchor]:
            return
        if len(path) + (reach & free).bit_count() <= self.best:
            return
        if len(path) > max(self.best, 2) and self.rows[head] >> anchor & 1:
            self.best = len(path)
            self.best_witness = tuple(path)
        for v in self._ordered(self.rows[head] & free, free):
            path.append(v)
            self._extend_longest(anchor, path, used | (1 << v), allowed)
            path.pop()

    def _ordered(self, candidates: int, free: int) -> list[int]:
        """Candidates with the fewest onward free neighbors first (ties by id);
        drastically cuts backtracking on structured instances."""
        out = [((self.rows[v] & free).bit_count(), v) for v in iter_bits(candidates)]
        out.sort()
        return [v for _, v in out]

    def run_enumerate(self, target: int, limit: Optional[int]) -> tuple[set[tuple[int, ...]], bool]:
        found: set[tuple[int, ...]] = set()
        n = self.g.n
        truncated = False
        for anchor in range(n):
            allowed = ((1 << n) - 1) >> anchor << anchor
            if allowed.bit_count() < target:
                break
            try:
                self._extend_enum(anchor, [anchor], 1 << anchor, allowed, target, found, limit)
            except _EnumLimit:
                truncated = True
                break
        return found, truncated

    def _extend_enum(
        self,
        anchor: int,
        path: list[int],
        used: int,
        allowed: int,
        target: int,
        found: set[tuple[int, ...]],
        limit: Optional[int],
    ) -> None:
        self._tick()
        head = path[-1]
        free = allowed & ~used
        reach = self.g.reach_mask(1 << head, free | (1 << head))
        if not reach & self.rows[anchor]:
            return
        if len(path) + (reach & free).bit_count() < target:
            return
        if len(path) == target:
            # close only in one direction to skip mirror traversals
            if self.rows[head] >> anchor & 1 and path[1] < path[-1]:
                found.add(canonical_cycle(path))
                if limit is not None and len(found) >= limit:
                    raise _EnumLimit
            return
        for v in self._ordered(self.rows[head] & free, free):
            path.append(v)
            self._extend_enum(anchor, path, used | (1 << v), allowed, target, found, limit)
            path.pop()


class _EnumLimit(Exception):
    pass


def longest_cycle_length(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact length c(G) of a longest cycle."""
    if is_forest(g):
        raise ValueError("forest has no cycle")
    search = _Search(g, budget)
    search.run_longest()
    return search.best


def longest_cycle_witness(g: Graph, budget: int = DEFAULT_BUDGET) -> CycleEmbedding:
    """One longest cycle (canonical form)."""
    if is_forest(g):
        raise ValueError("forest has no cycle")
    search = _Search(g, budget)
    search.run_longest()
    assert search.best_witness is not None
    return CycleEmbedding(canonical_cycle(search.best_witness))


def enumerate_longest_cycles(
    g: Graph, limit: Optional[int] = None, budget: int = DEFAULT_BUDGET
) -> CycleSet:
    """All longest cycles, deduplicated up to rotation and reflection."""
    if is_forest(g):
        raise ValueError("forest has no cycle")
    length_search = _Search(g, budget)
    length_search.run_longest()
    target = length_search.best
    enum_search = _Search(g, budget)
    try:
        found, truncated = enum_search.run_enumerate(target, limit)
    except BudgetExceededError as err:
        # the length phase already established c(G)
        raise BudgetExceededError(str(err), best_length=target) from None
    cycles = tuple(CycleEmbedding(c) for c in sorted(found))
    return CycleSet(length=target, cycles=cycles, truncated=truncated)


@lru_cache(maxsize=256)
def _cached_longest_cycles(g: Graph, budget: int) -> CycleSet:
    return enumerate_longest_cycles(g, budget=budget)


def cached_longest_cycles(g: Graph, budget: int = DEFAULT_BUDGET) -> CycleSet:
    """Memoized full enumeration; graphs are immutable so caching is sound."""
    return _cached_longest_cycles(g, budget)


def min_pairwise_intersection(cs: CycleSet) -> tuple[int, tuple[CycleEmbedding, CycleEmbedding]]:
    """Minimum |V(X) ∩ V(Y)| over unordered cycle pairs, with one witnessing pair.

    Cycles on identical vertex sets intersect in that whole set, so the scan
    runs over distinct vertex sets; Hamiltonian-rich graphs stay cheap.
    """
    if len(cs.cycles) < 2:
        raise ValueError("need two cycles")
    first: dict[frozenset[int], CycleEmbedding] = {}
    second: dict[frozenset[int], CycleEmbedding] = {}
    for c in cs.cycles:
        vs = c.vertex_set()
        if vs not in first:
            first[vs] = c
        elif vs not in second:
            second[vs] = c
    best: Optional[int] = None
    witness: Optional[tuple[CycleEmbedding, CycleEmbedding]] = None
    for vs, twin in second.items():
        if best is None or len(vs) < best:
            best = len(vs)
            witness = (first[vs], twin)
    distinct = list(first)
    for i in range(len(distinct)):
        for j in range(i + 1, len(distinct)):
            size = len(distinct[i] & distinct[j])
            if best is None or size < best:
                best = size
                witness = (first[distinct[i]], first[distinct[j]])
    assert best is not None and witness is not None
    return best, witness


def is_t_transversal(g: Graph, a: Iterable[int], t: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff every longest cycle of g meets a in at least t vertices."""
    if t < 1:
        raise ValueError("t must be at least 1")
    avs = check_vertex_set(g, a)
    cs = cached_longest_cycles(g, budget)
    return all(len(avs & c.vertex_set()) >= t for c in cs.cycles)
