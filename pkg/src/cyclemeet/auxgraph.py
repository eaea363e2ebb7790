"""Segment decompositions of a cycle pair and their auxiliary bipartite graph.

Two cycles X, Y meeting in m vertices decompose into m (possibly empty)
segments each; a family of disjoint paths between the leftover sides induces
a bipartite graph on segment labels. The 4-cycle type census, crossing
structure, and supersaturation counts of that graph drive the separator
bound and the exchange certificates.

Segment labels are 1-based (x_1..x_m, y_1..y_m) throughout this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .cycles import CycleEmbedding
from .flow import PathFamily, edge_bound_holds
from .graphs import Graph


class SameSegmentPairError(ValueError):
    """Two disjoint family paths land on one (X_i, Y_j) segment pair.

    For genuinely longest cycles this cannot happen; when it does, the two
    offending paths are exactly what the exchange module needs to build a
    longer cycle, so they ride along on the error.
    """

    def __init__(self, pair: tuple[int, int], path1: tuple[int, ...], path2: tuple[int, ...]):
        super().__init__(f"Prop. 2.2 violation: two paths on segment pair {pair}")
        self.pair = pair
        self.path1 = path1
        self.path2 = path2


@dataclass(frozen=True)
class SegmentDecomposition:
    """Shared vertices of two cycles plus the ordered segments between them.

    x_segments[i-1] is the (possibly empty) run of X-vertices strictly
    between the i-th and (i+1)-th shared vertex along X's stored
    orientation, starting at the first shared vertex that orientation meets.
    """

    m: int
    m_order_x: tuple[int, ...]
    m_order_y: tuple[int, ...]
    x_segments: tuple[tuple[int, ...], ...]
    y_segments: tuple[tuple[int, ...], ...]

    def shared(self) -> frozenset[int]:
        return frozenset(self.m_order_x)

    def x_segment_of(self, v: int) -> tuple[int, int]:
        """(1-based segment index, position inside the segment) of an X-vertex."""
        for idx, seg in enumerate(self.x_segments):
            if v in seg:
                return idx + 1, seg.index(v)
        raise KeyError(v)

    def y_segment_of(self, v: int) -> tuple[int, int]:
        for idx, seg in enumerate(self.y_segments):
            if v in seg:
                return idx + 1, seg.index(v)
        raise KeyError(v)


def _segments_along(cycle: CycleEmbedding, shared: frozenset[int]):
    seq = cycle.vertices
    start = next(i for i, v in enumerate(seq) if v in shared)
    rotated = seq[start:] + seq[:start]
    meeting: list[int] = []
    segments: list[tuple[int, ...]] = []
    current: list[int] = []
    for v in rotated:
        if v in shared:
            if meeting:
                segments.append(tuple(current))
                current = []
            meeting.append(v)
        else:
            current.append(v)
    segments.append(tuple(current))
    return tuple(meeting), tuple(segments)


def decompose(g: Graph, x: CycleEmbedding, y: CycleEmbedding) -> SegmentDecomposition:
    """Split both cycles at their shared vertices, following stored orientations."""
    if not x.is_valid(g) or not y.is_valid(g):
        raise ValueError("cycles do not live in the host graph")
    shared = x.vertex_set() & y.vertex_set()
    if not shared:
        raise ValueError("empty intersection")
    mx, xsegs = _segments_along(x, shared)
    my, ysegs = _segments_along(y, shared)
    return SegmentDecomposition(
        m=len(shared), m_order_x=mx, m_order_y=my, x_segments=xsegs, y_segments=ysegs
    )


class FourCycleType(NamedTuple):
    """Consistency pattern of path-endpoint orders: alpha on X, beta on Y."""

    alpha: int
    beta: int


@dataclass(frozen=True)
class AuxGraph:
    """Bipartite graph on segment labels: edge (i,j) iff the family has an
    (X_i, Y_j)-path. Simple by construction; a duplicate is a mathematical
    event and raises SameSegmentPairError instead."""

    m: int
    edges: frozenset[tuple[int, int]]
    witness: dict[tuple[int, int], tuple[int, ...]]
    endpoints: dict[tuple[int, int], tuple[int, int]]
    decomposition: SegmentDecomposition

    def edge_count(self) -> int:
        return len(self.edges)

    def x_neighbors(self, i: int) -> frozenset[int]:
        return frozenset(j for (a, j) in self.edges if a == i)

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "edges": sorted(list(e) for e in self.edges),
            "endpoints": {f"{i},{j}": list(uv) for (i, j), uv in sorted(self.endpoints.items())},
        }


def build_aux(g: Graph, x: CycleEmbedding, y: CycleEmbedding, p: PathFamily) -> AuxGraph:
    """Construct the auxiliary graph of a path family between two cycles."""
    dec = decompose(g, x, y)
    shared = dec.shared()
    p.validate(g)
    if p.source_set != x.vertex_set() - shared or p.target_set != y.vertex_set() - shared:
        raise ValueError("family terminals are not the cycle remainders")
    edges: set[tuple[int, int]] = set()
    witness: dict[tuple[int, int], tuple[int, ...]] = {}
    endpoints: dict[tuple[int, int], tuple[int, int]] = {}
    for path in p.paths:
        u, v = path[0], path[-1]
        if u in shared or v in shared:
            raise ValueError("invalid terminal")
        try:
            i, _ = dec.x_segment_of(u)
            j, _ = dec.y_segment_of(v)
        except KeyError as exc:
            raise ValueError("invalid terminal") from exc
        if (i, j) in edges:
            raise SameSegmentPairError((i, j), witness[(i, j)], path)
        edges.add((i, j))
        witness[(i, j)] = path
        endpoints[(i, j)] = (u, v)
    aux = AuxGraph(m=dec.m, edges=frozenset(edges), witness=witness, endpoints=endpoints,
                   decomposition=dec)
    assert aux.edge_count() == len(p.paths)
    return aux


def classify_four_cycle(f: AuxGraph, i: int, j: int, k: int, l: int) -> FourCycleType:
    """Type (alpha, beta) of the 4-cycle x_i y_k x_j y_l, with i<j and k<l.

    alpha is 0 when the order of the two path endpoints on X_i agrees with
    the order on X_j; beta compares the endpoint orders on Y_k and Y_l.
    Both are invariant under reversing either cycle's orientation.
    """
    if not (i < j and k < l):
        raise ValueError("indices must satisfy i<j and k<l")
    for e in ((i, k), (i, l), (j, k), (j, l)):
        if e not in f.edges:
            raise ValueError("not a 4-cycle")
    dec = f.decomposition
    u_ik, v_ik = f.endpoints[(i, k)]
    u_il, v_il = f.endpoints[(i, l)]
    u_jk, v_jk = f.endpoints[(j, k)]
    u_jl, v_jl = f.endpoints[(j, l)]
    x_i_order = dec.x_segment_of(u_ik)[1] < dec.x_segment_of(u_il)[1]
    x_j_order = dec.x_segment_of(u_jk)[1] < dec.x_segment_of(u_jl)[1]
    y_k_order = dec.y_segment_of(v_ik)[1] < dec.y_segment_of(v_jk)[1]
    y_l_order = dec.y_segment_of(v_il)[1] < dec.y_segment_of(v_jl)[1]
    alpha = 0 if x_i_order == x_j_order else 1
    beta = 0 if y_k_order == y_l_order else 1
    return FourCycleType(alpha, beta)


def four_cycles(f: AuxGraph) -> list[tuple[int, int, int, int]]:
    """All (i, k, j, l) with i<j, k<l whose four edges are present."""
    out = []
    for i in range(1, f.m + 1):
        ni = f.x_neighbors(i)
        for j in range(i + 1, f.m + 1):
            common = sorted(ni & f.x_neighbors(j))
            for a in range(len(common)):
                for b in range(a + 1, len(common)):
                    out.append((i, common[a], j, common[b]))
    return out


def type_census(f: AuxGraph) -> dict[FourCycleType, int]:
    census = {FourCycleType(a, b): 0 for a in (0, 1) for b in (0, 1)}
    for (i, k, j, l) in four_cycles(f):
        census[classify_four_cycle(f, i, j, k, l)] += 1
    return census


def common_neighbor_counts(f: AuxGraph) -> dict[tuple[int, int], int]:
    """a_ij = |N(x_i) ∩ N(x_j)| for every 1 <= i < j <= m."""
    neigh = {i: f.x_neighbors(i) for i in range(1, f.m + 1)}
    return {
        (i, j): len(neigh[i] & neigh[j])
        for i in range(1, f.m + 1)
        for j in range(i + 1, f.m + 1)
    }


L_SET_THRESHOLD = 7


def l_set(f: AuxGraph) -> set[tuple[int, int]]:
    """Index pairs whose segments have at least 7 common neighbors in F."""
    return {pair for pair, a in common_neighbor_counts(f).items() if a >= L_SET_THRESHOLD}


def is_crossing(p1: tuple[int, int], p2: tuple[int, int]) -> bool:
    """True iff the four indices are distinct and [i1,j1] holds exactly one of i2,j2."""
    i1, j1 = p1
    i2, j2 = p2
    if not (i1 < j1 and i2 < j2):
        raise ValueError("pairs must be increasing")
    if len({i1, j1, i2, j2}) != 4:
        return False
    inside = (i1 <= i2 <= j1) + (i1 <= j2 <= j1)
    return inside == 1


def pairwise_noncrossing(pairs) -> bool:
    pairs = list(pairs)
    return all(
        not is_crossing(pairs[a], pairs[b])
        for a in range(len(pairs))
        for b in range(a + 1, len(pairs))
    )


def noncrossing_witness(m: int) -> tuple[tuple[int, int], ...]:
    """The nested-plus-adjacent family of size 2m-3: all (1,t) and all (t,t+1)."""
    fam = {(1, t) for t in range(2, m + 1)}
    fam |= {(t, t + 1) for t in range(1, m)}
    return tuple(sorted(fam))


MAX_NONCROSSING_M = 12


def max_noncrossing_family(m: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Exact maximum size of a pairwise non-crossing family of pairs over [m].

    Branch-and-bound maximum independent set in the crossing-conflict graph,
    seeded with the nested-plus-adjacent construction. Exact search is kept
    to m <= 12, which covers every segment count the toolkit meets.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    if m > MAX_NONCROSSING_M:
        raise ValueError(f"exact search capped at m={MAX_NONCROSSING_M}")
    all_pairs = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    index = {p: t for t, p in enumerate(all_pairs)}
    conflict = [0] * len(all_pairs)
    for a in range(len(all_pairs)):
        for b in range(a + 1, len(all_pairs)):
            if is_crossing(all_pairs[a], all_pairs[b]):
                conflict[a] |= 1 << b
                conflict[b] |= 1 << a

    seed = noncrossing_witness(m)
    assert pairwise_noncrossing(seed)
    best_size = len(seed)
    best_mask = 0
    for p in seed:
        best_mask |= 1 << index[p]

    def extend(chosen_mask: int, chosen_size: int, candidates: int) -> None:
        nonlocal best_size, best_mask
        if chosen_size + candidates.bit_count() <= best_size:
            return
        if not candidates:
            if chosen_size > best_size:
                best_size = chosen_size
                best_mask = chosen_mask
            return
        low = candidates & -candidates
        t = low.bit_length() - 1
        extend(chosen_mask | low, chosen_size + 1, candidates & ~low & ~conflict[t])
        extend(chosen_mask, chosen_size, candidates & ~low)

    extend(0, 0, (1 << len(all_pairs)) - 1)
    family = tuple(all_pairs[t] for t in range(len(all_pairs)) if best_mask >> t & 1)
    if best_size > 2 * m - 3:
        raise RuntimeError(f"non-crossing bound 2m-3 violated at m={m}: found {best_size}")
    return best_size, family


@dataclass(frozen=True)
class SupersaturationReport:
    """Counting diagnostics tying e(F) to the common-neighbor mass and L-set.

    Lower bounds are the convexity estimates valid whenever e(F) >= m; the
    edge bound is the sqrt(10)*m^1.5 + m/2 ceiling on e(F). Inequality flags
    are evaluated in exact arithmetic.
    """

    m: int
    edge_count: int
    assumption_met: bool
    sum_common: int
    l_size: int
    sum_lower_bound: Optional[Fraction] = None
    l_lower_bound: Optional[Fraction] = None
    sum_ok: Optional[bool] = None
    l_ok: Optional[bool] = None
    edge_bound_ok: Optional[bool] = None

    def edge_bound_value(self) -> float:
        import math

        return math.sqrt(10) * self.m**1.5 + self.m / 2

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "edge_count": self.edge_count,
            "assumption_met": self.assumption_met,
            "sum_common": self.sum_common,
            "l_size": self.l_size,
            "sum_lower_bound": None if self.sum_lower_bound is None else float(self.sum_lower_bound),
            "l_lower_bound": None if self.l_lower_bound is None else float(self.l_lower_bound),
            "sum_ok": self.sum_ok,
            "l_ok": self.l_ok,
            "edge_bound": self.edge_bound_value(),
            "edge_bound_ok": self.edge_bound_ok,
            "note": None if self.assumption_met else "assumption e(F) >= m not met; inequalities skipped",
        }


def supersaturation_report(f: AuxGraph) -> SupersaturationReport:
    """Evaluate the convexity chain on one auxiliary graph."""
    m = f.m
    ecount = f.edge_count()
    counts = common_neighbor_counts(f)
    total = sum(counts.values())
    lsize = sum(1 for a in counts.values() if a >= L_SET_THRESHOLD)
    if ecount < m:
        return SupersaturationReport(
            m=m, edge_count=ecount, assumption_met=False, sum_common=total, l_size=lsize
        )
    sum_lb = Fraction(ecount * (ecount - m), 2 * m)
    l_lb = Fraction(ecount * (ecount - m), 2 * m * m) - 3 * (m - 1)
    return SupersaturationReport(
        m=m,
        edge_count=ecount,
        assumption_met=True,
        sum_common=total,
        l_size=lsize,
        sum_lower_bound=sum_lb,
        l_lower_bound=l_lb,
        sum_ok=Fraction(total) >= sum_lb,
        l_ok=Fraction(lsize) >= l_lb,
        edge_bound_ok=edge_bound_holds(ecount, m),
    )
