"""Exchange arguments: turning forbidden path configurations into longer cycles.

Every constructor here takes vertex sequences apart and restitches them, then
validates edge existence and simplicity against the host graph before
returning; a certificate that fails validation is an internal error, never a
silent skip. Certificates pair two cycles that jointly cover both original
cycles' edges with strictly larger total length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .auxgraph import (
    AuxGraph,
    FourCycleType,
    SameSegmentPairError,
    build_aux,
    classify_four_cycle,
    decompose,
    four_cycles,
    is_crossing,
)
from .cycles import CycleEmbedding, canonical_cycle
from .flow import max_disjoint_paths
from .graphs import Graph


@dataclass(frozen=True)
class WinningCertificate:
    """Two cycles covering E(X) ∪ E(Y) with |q1| + |q2| > |X| + |Y|.

    Constructors only return certificates whose invariants were machine
    checked; the booleans ride along in the serialized form.
    """

    q1: CycleEmbedding
    q2: CycleEmbedding
    origin: str  # prop22 | type00 | lemma33 | merge
    surplus: int
    case: Optional[tuple[int, int]] = None
    covers_union: bool = True
    strictly_longer: bool = True

    def to_json_dict(self) -> dict:
        return {
            "q1": list(self.q1.vertices),
            "q2": list(self.q2.vertices),
            "origin": self.origin,
            "surplus": self.surplus,
            "case": None if self.case is None else list(self.case),
            "covers_union": self.covers_union,
            "strictly_longer": self.strictly_longer,
        }


def certificate_is_sound(
    g: Graph, x: CycleEmbedding, y: CycleEmbedding, cert: WinningCertificate
) -> bool:
    """Independent validator for both certificate invariants."""
    if not (cert.q1.is_valid(g) and cert.q2.is_valid(g)):
        return False
    if not (cert.q1.edge_set() | cert.q2.edge_set()) >= (x.edge_set() | y.edge_set()):
        return False
    return cert.q1.length + cert.q2.length > x.length + y.length


def _cyclic_arc(cycle: CycleEmbedding, u: int, v: int, flipped: bool) -> list[int]:
    """Vertices from u to v inclusive, walking the stored orientation (or its reverse)."""
    seq = cycle.vertices
    n = len(seq)
    i = seq.index(u)
    step = -1 if flipped else 1
    out = [u]
    while out[-1] != v:
        i = (i + step) % n
        out.append(seq[i])
        if len(out) > n:
            raise ValueError(f"{v} not on cycle")
    return out


def _segment_path(segment: Sequence[int], a: int, b: int) -> list[int]:
    """Subpath of one segment from a to b inclusive."""
    ia, ib = segment.index(a), segment.index(b)
    if ia <= ib:
        return list(segment[ia : ib + 1])
    return list(segment[ib : ia + 1])[::-1]


def _stitch(pieces: list[list[int]]) -> list[int]:
    """Join path pieces end-to-start into one closed vertex sequence."""
    out = list(pieces[0])
    for piece in pieces[1:]:
        if piece[0] != out[-1]:
            raise RuntimeError("exchange produced non-cycle: pieces do not meet")
        out.extend(piece[1:])
    if out[0] != out[-1]:
        raise RuntimeError("exchange produced non-cycle: walk does not close")
    return out[:-1]


def _check_clean_interior(path: Sequence[int], x: CycleEmbedding, y: CycleEmbedding) -> None:
    # interiors must avoid both cycles entirely or the restitched walks revisit
    # shared vertices and stop being simple cycles
    forbidden = x.vertex_set() | y.vertex_set()
    touched = forbidden.intersection(path[1:-1])
    if touched:
        raise ValueError(f"path interior touches the cycles at {sorted(touched)}")


def _orient_path(
    path: Sequence[int], x: CycleEmbedding, y: CycleEmbedding, shared: frozenset[int]
) -> tuple[int, ...]:
    """Return the path running from its X-side endpoint to its Y-side endpoint."""
    xs = x.vertex_set() - shared
    ys = y.vertex_set() - shared
    if path[0] in xs and path[-1] in ys:
        return tuple(path)
    if path[0] in ys and path[-1] in xs:
        return tuple(reversed(path))
    raise ValueError("path endpoints are not on the cycle remainders")


def prop22_exchange(
    g: Graph,
    x: CycleEmbedding,
    y: CycleEmbedding,
    path1: Sequence[int],
    path2: Sequence[int],
) -> CycleEmbedding:
    """Absorb a same-segment-pair path pair into a strictly longer cycle.

    The shorter of the two bridged stretches is replaced by the detour
    through the other cycle, so the result beats the cycle it modifies
    (both, when |x| = |y|).
    """
    cert = prop22_certificate(g, x, y, path1, path2)
    return cert.q1


def prop22_certificate(
    g: Graph,
    x: CycleEmbedding,
    y: CycleEmbedding,
    path1: Sequence[int],
    path2: Sequence[int],
) -> WinningCertificate:
    dec = decompose(g, x, y)
    shared = dec.shared()
    p1 = _orient_path(path1, x, y, shared)
    p2 = _orient_path(path2, x, y, shared)
    if set(p1) & set(p2):
        raise ValueError("paths are not disjoint")
    for p in (p1, p2):
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"missing edge ({a},{b})")
        _check_clean_interior(p, x, y)
    i1, posu1 = dec.x_segment_of(p1[0])
    i2, posu2 = dec.x_segment_of(p2[0])
    j1, posv1 = dec.y_segment_of(p1[-1])
    j2, posv2 = dec.y_segment_of(p2[-1])
    if i1 != i2 or j1 != j2:
        raise ValueError("paths do not land on one segment pair")
    a_edges = abs(posu1 - posu2)
    b_edges = abs(posv1 - posv2)
    seg_x = dec.x_segments[i1 - 1]
    seg_y = dec.y_segments[j1 - 1]

    # q_x replaces the X-stretch by the detour through Y, q_y the reverse;
    # the kept arc leaves the later in-segment endpoint so it wraps around
    # the cycle instead of running through the replaced stretch
    pa, pb = (p1, p2) if posu1 < posu2 else (p2, p1)
    q_x = CycleEmbedding.from_sequence(g, _stitch([
        _cyclic_arc(x, pb[0], pa[0], flipped=False),
        list(pa),
        _segment_path(seg_y, pa[-1], pb[-1]),
        list(reversed(pb)),
    ]))
    pa, pb = (p1, p2) if posv1 < posv2 else (p2, p1)
    q_y = CycleEmbedding.from_sequence(g, _stitch([
        _cyclic_arc(y, pb[-1], pa[-1], flipped=False),
        list(reversed(pa)),
        _segment_path(seg_x, pa[0], pb[0]),
        list(pb),
    ]))
    if a_edges > b_edges:
        q_x, q_y = q_y, q_x
        base_len = y.length
    else:
        base_len = x.length
    if q_x.length <= base_len:
        raise RuntimeError("exchange failed to lengthen the cycle")
    surplus = q_x.length + q_y.length - x.length - y.length
    cert = WinningCertificate(q1=q_x, q2=q_y, origin="prop22", surplus=surplus)
    if not certificate_is_sound(g, x, y, cert):
        raise RuntimeError("exchange produced unsound certificate")
    return cert


def type00_certificate(
    g: Graph,
    x: CycleEmbedding,
    y: CycleEmbedding,
    f: AuxGraph,
    fourcycle: tuple[int, int, int, int],
) -> WinningCertificate:
    """Winning certificate from a type-(0,0) 4-cycle of the auxiliary graph.

    Builds the two restitched cycles exactly as the exchange dictates: each
    of the four paths is used once per cycle, so the surplus is twice the
    total path length.
    """
    i, k, j, l = fourcycle
    kind = classify_four_cycle(f, i, j, k, l)
    if kind != FourCycleType(0, 0):
        raise ValueError(f"wrong type: {tuple(kind)} is not (0,0)")
    dec = f.decomposition
    paths = {key: f.witness[key] for key in ((i, k), (i, l), (j, k), (j, l))}
    for p in paths.values():
        _check_clean_interior(p, x, y)
    u = {key: f.endpoints[key][0] for key in paths}
    v = {key: f.endpoints[key][1] for key in paths}
    seg_xi = dec.x_segments[i - 1]
    seg_xj = dec.x_segments[j - 1]
    seg_yk = dec.y_segments[k - 1]
    seg_yl = dec.y_segments[l - 1]
    # orient both cycles so that the k-endpoints precede the l-endpoints on X
    # and the i-endpoints precede the j-endpoints on Y
    flip_x = not seg_xi.index(u[(i, k)]) < seg_xi.index(u[(i, l)])
    flip_y = not seg_yk.index(v[(i, k)]) < seg_yk.index(v[(j, k)])

    def fwd(key):
        return list(paths[key])

    def bwd(key):
        return list(reversed(paths[key]))

    q1_seq = _stitch([
        fwd((i, k)),
        _cyclic_arc(y, v[(j, l)], v[(i, k)], flip_y)[::-1],
        bwd((j, l)),
        _segment_path(seg_xj, u[(j, l)], u[(j, k)]),
        fwd((j, k)),
        _cyclic_arc(y, v[(j, k)], v[(i, l)], flip_y),
        bwd((i, l)),
        _segment_path(seg_xi, u[(i, l)], u[(i, k)]),
    ])
    q2_seq = _stitch([
        fwd((i, k)),
        _segment_path(seg_yk, v[(i, k)], v[(j, k)]),
        bwd((j, k)),
        _cyclic_arc(x, u[(i, l)], u[(j, k)], flip_x)[::-1],
        fwd((i, l)),
        _segment_path(seg_yl, v[(i, l)], v[(j, l)]),
        bwd((j, l)),
        _cyclic_arc(x, u[(j, l)], u[(i, k)], flip_x),
    ])
    q1 = CycleEmbedding.from_sequence(g, q1_seq)
    q2 = CycleEmbedding.from_sequence(g, q2_seq)
    surplus = q1.length + q2.length - x.length - y.length
    expected = 2 * sum(len(p) - 1 for p in paths.values())
    if surplus != expected:
        raise RuntimeError(f"surplus {surplus} != 2*sum|P| = {expected}")
    cert = WinningCertificate(q1=q1, q2=q2, origin="type00", surplus=surplus)
    if not certificate_is_sound(g, x, y, cert):
        raise RuntimeError("exchange produced unsound certificate")
    return cert


@dataclass(frozen=True)
class _Block:
    bid: int
    a: int
    b: int
    seq: tuple[int, ...]
    twin: Optional[int] = None  # second copy of a path defers to the first

    def oriented(self, start: int) -> tuple[int, ...]:
        return self.seq if self.seq[0] == start else tuple(reversed(self.seq))

    def other(self, start: int) -> int:
        return self.b if self.a == start else self.a


def _decompose_into_two_cycles(
    g: Graph, blocks: list[_Block]
) -> Optional[tuple[list[int], list[int]]]:
    """Partition the blocks into exactly two vertex-simple closed walks.

    Exhaustive DFS with deterministic ordering; each block is used exactly
    once, trail simplicity is enforced on host-graph vertices as the trail
    grows.
    """
    incidence: dict[int, list[int]] = {}
    for blk in blocks:
        incidence.setdefault(blk.a, []).append(blk.bid)
        incidence.setdefault(blk.b, []).append(blk.bid)
    for lst in incidence.values():
        lst.sort()
    all_mask = (1 << len(blocks)) - 1

    def rec(used: int, cycles: list[list[int]], trail):
        if trail is None:
            if used == all_mask:
                return cycles if len(cycles) == 2 else None
            if len(cycles) == 2:
                return None
            free = ~used & all_mask
            bid = (free & -free).bit_length() - 1
            blk = blocks[bid]
            return rec(used | 1 << bid, cycles, (blk.a, blk.b, list(blk.seq), set(blk.seq)))
        start, head, seq, vset = trail
        for bid in incidence.get(head, ()):
            if used >> bid & 1:
                continue
            blk = blocks[bid]
            if blk.twin is not None and not used >> blk.twin & 1:
                continue
            if head not in (blk.a, blk.b):
                continue
            walk = blk.oriented(head)
            nxt = walk[-1]
            interior = set(walk[1:-1])
            if interior & vset:
                continue
            if nxt == start:
                closed = seq + list(walk[1:-1])
                res = rec(used | 1 << bid, cycles + [closed], None)
                if res is not None:
                    return res
            elif nxt not in vset:
                res = rec(
                    used | 1 << bid,
                    cycles,
                    (start, nxt, seq + list(walk[1:]), vset | interior | {nxt}),
                )
                if res is not None:
                    return res
        return None

    return rec(0, [], None)


def lemma33_certificate(
    g: Graph,
    x: CycleEmbedding,
    y: CycleEmbedding,
    f: AuxGraph,
    c1: tuple[int, int, int, int],
    c2: tuple[int, int, int, int],
) -> Optional[WinningCertificate]:
    """Certificate from two type-(1,0) 4-cycles with crossing X-pairs and
    disjoint non-crossing Y-pairs.

    Returns None when the configuration does not match that hypothesis. All
    four endpoint-ordering cases are handled by one exhaustive restitching
    search over {every cycle arc once, every path twice}; the found pair is
    machine-verified, closing the case analysis computationally.
    """
    i1, k1, j1, l1 = c1
    i2, k2, j2, l2 = c2
    try:
        t1 = classify_four_cycle(f, i1, j1, k1, l1)
        t2 = classify_four_cycle(f, i2, j2, k2, l2)
    except ValueError:
        return None
    if t1 != FourCycleType(1, 0) or t2 != FourCycleType(1, 0):
        return None
    if not is_crossing((i1, j1), (i2, j2)):
        return None
    if {k1, l1} & {k2, l2}:
        return None
    if is_crossing((k1, l1), (k2, l2)):
        return None
    keys = [(i1, k1), (i1, l1), (j1, k1), (j1, l1), (i2, k2), (i2, l2), (j2, k2), (j2, l2)]
    paths = [f.witness[key] for key in keys]
    try:
        for p in paths:
            _check_clean_interior(p, x, y)
    except ValueError:
        return None

    marked_x = sorted({f.endpoints[key][0] for key in keys}, key=x.vertices.index)
    marked_y = sorted({f.endpoints[key][1] for key in keys}, key=y.vertices.index)
    blocks: list[_Block] = []

    def add_block(seq: Iterable[int], twin: Optional[int] = None) -> int:
        bid = len(blocks)
        seq = tuple(seq)
        blocks.append(_Block(bid=bid, a=seq[0], b=seq[-1], seq=seq, twin=twin))
        return bid

    for marks, cyc in ((marked_x, x), (marked_y, y)):
        for t, w in enumerate(marks):
            add_block(_cyclic_arc(cyc, w, marks[(t + 1) % len(marks)], flipped=False))
    for p in paths:
        first = add_block(p)
        add_block(p, twin=first)

    found = _decompose_into_two_cycles(g, blocks)
    if found is None:
        raise RuntimeError("restitching search found no certificate for a matched hypothesis")
    q1 = CycleEmbedding.from_sequence(g, found[0])
    q2 = CycleEmbedding.from_sequence(g, found[1])
    surplus = q1.length + q2.length - x.length - y.length
    expected = 2 * sum(len(p) - 1 for p in paths)
    if surplus != expected:
        raise RuntimeError(f"surplus {surplus} != 2*sum|P| = {expected}")
    cert = WinningCertificate(
        q1=q1, q2=q2, origin="lemma33", surplus=surplus, case=_lemma33_case(f, c1, c2)
    )
    if not certificate_is_sound(g, x, y, cert):
        raise RuntimeError("exchange produced unsound certificate")
    return cert


def _lemma33_case(f: AuxGraph, c1, c2) -> tuple[int, int]:
    """Which of the four endpoint-ordering cases the second 4-cycle realizes,
    after orienting both cycles by the first 4-cycle."""
    i1, k1, j1, l1 = c1
    i2, k2, j2, l2 = c2
    dec = f.decomposition
    seg = dec.x_segment_of
    seg_y = dec.y_segment_of
    flip_x = not seg(f.endpoints[(i1, k1)][0])[1] < seg(f.endpoints[(i1, l1)][0])[1]
    flip_y = not seg_y(f.endpoints[(i1, k1)][1])[1] < seg_y(f.endpoints[(j1, k1)][1])[1]
    bit_x = seg(f.endpoints[(i2, k2)][0])[1] < seg(f.endpoints[(i2, l2)][0])[1]
    bit_y = seg_y(f.endpoints[(i2, k2)][1])[1] < seg_y(f.endpoints[(j2, k2)][1])[1]
    return (int(bit_x ^ flip_x), int(bit_y ^ flip_y))


@dataclass(frozen=True)
class MergePlan:
    """Matched subpath substitutions between a cycle and a donor cycle."""

    substitutions: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    donor: Optional[CycleEmbedding] = None


def _is_subpath_of_cycle(cycle: CycleEmbedding, path: Sequence[int]) -> bool:
    seq = cycle.vertices
    n = len(seq)
    if len(path) > n:
        return False
    start = seq.index(path[0]) if path[0] in seq else -1
    if start < 0:
        return False
    for step in (1, -1):
        if all(seq[(start + step * t) % n] == path[t] for t in range(len(path))):
            return True
    return False


def cycle_merge(g: Graph, x: CycleEmbedding, plan: MergePlan) -> CycleEmbedding:
    """Replace matched subpaths of x by their donor counterparts.

    Validates the three merge conditions (shared endpoints, matching cyclic
    endpoint order, donor paths touching x only inside replaced subpaths) and
    names the violated one on failure.
    """
    subs = []
    for p, q in plan.substitutions:
        p, q = tuple(p), tuple(q)
        if len(p) < 2 or len(q) < 2 or p[0] == p[-1] or q[0] == q[-1]:
            raise ValueError("bullet 1: substitution paths need two distinct endpoints")
        if {q[0], q[-1]} != {p[0], p[-1]}:
            raise ValueError("bullet 1: endpoints differ")
        if q[0] != p[0]:
            q = tuple(reversed(q))
        subs.append((p, q))
    if not subs:
        return x
    for p, _ in subs:
        if not _is_subpath_of_cycle(x, p):
            raise ValueError("bullet 1: replaced piece is not a subpath of the cycle")
    for _, q in subs:
        for a, b in zip(q, q[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"bullet 1: donor piece misses edge ({a},{b})")
        if len(set(q)) != len(q):
            raise ValueError("bullet 1: donor piece repeats a vertex")
        if plan.donor is not None and not _is_subpath_of_cycle(plan.donor, q):
            raise ValueError("bullet 1: donor piece is not a subpath of the donor cycle")
    p_all: set[int] = set()
    q_all: set[int] = set()
    for p, q in subs:
        if p_all & set(p):
            raise ValueError("bullet 1: replaced pieces overlap")
        if q_all & set(q):
            raise ValueError("bullet 1: donor pieces overlap")
        p_all |= set(p)
        q_all |= set(q)

    endpoints = [w for p, _ in subs for w in (p[0], p[-1])]
    if len(subs) >= 2:
        if plan.donor is None:
            raise ValueError("bullet 2: donor cycle required to check endpoint order")
        order_x = tuple(v for v in x.vertices if v in endpoints)
        order_y = tuple(v for v in plan.donor.vertices if v in endpoints)
        if canonical_cycle(order_x) != canonical_cycle(order_y):
            raise ValueError("bullet 2: endpoint cyclic orders differ")

    xset = x.vertex_set()
    for _, q in subs:
        stray = (set(q) & xset) - p_all
        if stray:
            raise ValueError(f"bullet 3: donor piece touches the cycle at {sorted(stray)}")

    edges = set(x.edge_set())
    for p, q in subs:
        for a, b in zip(p, p[1:]):
            edges.discard((a, b) if a < b else (b, a))
        for a, b in zip(q, q[1:]):
            edges.add((a, b) if a < b else (b, a))
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(nb) != 2 for nb in adj.values()):
        raise RuntimeError("merge produced a vertex of degree != 2")
    start = min(adj)
    walk = [start]
    prev = None
    while True:
        nbs = adj[walk[-1]]
        nxt = nbs[0] if nbs[0] != prev else nbs[1]
        if nxt == start:
            break
        prev = walk[-1]
        walk.append(nxt)
        if len(walk) > len(adj):
            raise RuntimeError("merge produced disconnected edge set")
    if len(walk) != len(adj):
        raise RuntimeError("merge produced more than one cycle")
    merged = CycleEmbedding.from_sequence(g, walk)
    expected = x.length + sum(len(q) - len(p) for p, q in subs)
    assert merged.length == expected
    return merged


def improve_by_exchange(
    g: Graph, x: CycleEmbedding, y: CycleEmbedding
) -> Optional[tuple[CycleEmbedding, CycleEmbedding]]:
    """Try every implemented exchange on a cycle pair.

    Returns an improved pair covering the original edges, or None. On a pair
    of genuinely longest cycles this must always return None; a success there
    is a correctness bug in the searcher or in the exchanges.
    """
    shared = x.vertex_set() & y.vertex_set()
    if not shared:
        return None
    xs = x.vertex_set() - shared
    ys = y.vertex_set() - shared
    if not xs or not ys:
        return None
    allowed = frozenset(range(g.n)) - shared
    family = max_disjoint_paths(g, xs, ys, allowed=allowed)
    try:
        f = build_aux(g, x, y, family)
    except SameSegmentPairError as err:
        cert = prop22_certificate(g, x, y, err.path1, err.path2)
        return cert.q1, cert.q2
    cycles4 = four_cycles(f)
    type10: list[tuple[int, int, int, int]] = []
    for (i, k, j, l) in cycles4:
        kind = classify_four_cycle(f, i, j, k, l)
        if kind == FourCycleType(0, 0):
            cert = type00_certificate(g, x, y, f, (i, k, j, l))
            return cert.q1, cert.q2
        if kind == FourCycleType(1, 0):
            type10.append((i, k, j, l))
    for a in range(len(type10)):
        for b in range(a + 1, len(type10)):
            cert = lemma33_certificate(g, x, y, f, type10[a], type10[b])
            if cert is not None:
                return cert.q1, cert.q2
    return None
