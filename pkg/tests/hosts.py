"""Hand-built host graphs realizing the exchange configurations."""

from __future__ import annotations

from cyclemeet.cycles import CycleEmbedding
from cyclemeet.flow import PathFamily
from cyclemeet.graphs import Graph


def type00_host(long_path: bool = False):
    """Two 6-cycles sharing w1=0, w2=1, four connecting paths in the (0,0) pattern.

    With unit paths the certificate surplus is 8; `long_path` stretches one
    path to two edges, pushing the surplus to 10.
    """
    # X = 0-2-3-1-4-5-0, Y = 0-6-7-1-8-9-0
    x_edges = [(0, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 0)]
    y_edges = [(0, 6), (6, 7), (7, 1), (1, 8), (8, 9), (9, 0)]
    if long_path:
        paths = [(2, 6), (3, 10, 8), (4, 7), (5, 9)]
        n = 11
    else:
        paths = [(2, 6), (3, 8), (4, 7), (5, 9)]
        n = 10
    path_edges = [(p[t], p[t + 1]) for p in paths for t in range(len(p) - 1)]
    g = Graph(n, x_edges + y_edges + path_edges)
    x = CycleEmbedding.from_sequence(g, [0, 2, 3, 1, 4, 5])
    y = CycleEmbedding.from_sequence(g, [0, 6, 7, 1, 8, 9])
    family = PathFamily(
        paths=tuple(sorted(tuple(p) for p in paths)),
        source_set=frozenset({2, 3, 4, 5}),
        target_set=frozenset({6, 7, 8, 9}),
    )
    return g, x, y, family


def prop22_host():
    """Two 8-cycles sharing two vertices, two paths landing on one segment pair."""
    x_edges = [(0, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 7), (7, 0)]
    y_edges = [(0, 8), (8, 9), (9, 10), (10, 1), (1, 11), (11, 12), (12, 13), (13, 0)]
    g = Graph(14, x_edges + y_edges + [(2, 8), (3, 10)])
    x = CycleEmbedding.from_sequence(g, [0, 2, 3, 4, 1, 5, 6, 7])
    y = CycleEmbedding.from_sequence(g, [0, 8, 9, 10, 1, 11, 12, 13])
    return g, x, y, (2, 8), (3, 10)


def lemma33_host(bit_x: int, bit_y: int):
    """Two 12-cycles sharing four vertices, eight unit paths forming two
    type-(1,0) 4-cycles with crossing X-pairs (1,3),(2,4) and separated
    Y-pairs (1,2),(3,4). The bits choose the free endpoint orderings of the
    second 4-cycle, giving the four distinct configurations."""
    w = [0, 1, 2, 3]
    a = list(range(4, 12))
    b = list(range(12, 20))
    x_seq = [w[0], a[0], a[1], w[1], a[2], a[3], w[2], a[4], a[5], w[3], a[6], a[7]]
    y_seq = [w[0], b[0], b[1], w[1], b[2], b[3], w[2], b[4], b[5], w[3], b[6], b[7]]
    x_edges = list(zip(x_seq, x_seq[1:] + x_seq[:1]))
    y_edges = list(zip(y_seq, y_seq[1:] + y_seq[:1]))
    # first 4-cycle on segments (1,3)x(1,2), fixed type-(1,0) orientation
    paths = [(a[0], b[0]), (a[1], b[2]), (a[5], b[1]), (a[4], b[3])]
    # second 4-cycle on segments (2,4)x(3,4), orderings controlled by the bits
    if bit_x:
        u23, u24, u43, u44 = a[2], a[3], a[7], a[6]
    else:
        u23, u24, u43, u44 = a[3], a[2], a[6], a[7]
    if bit_y:
        v23, v43, v24, v44 = b[4], b[5], b[6], b[7]
    else:
        v23, v43, v24, v44 = b[5], b[4], b[7], b[6]
    paths += [(u23, v23), (u24, v24), (u43, v43), (u44, v44)]
    g = Graph(20, x_edges + y_edges + paths)
    x = CycleEmbedding.from_sequence(g, x_seq)
    y = CycleEmbedding.from_sequence(g, y_seq)
    family = PathFamily(
        paths=tuple(sorted(paths)),
        source_set=frozenset(a),
        target_set=frozenset(b),
    )
    return g, x, y, family


def lemma33_host_long_path(bit_x: int = 0, bit_y: int = 0):
    """lemma33_host with one connecting path stretched to two edges."""
    g, x, y, family = lemma33_host(bit_x, bit_y)
    # replace the unit path (4, 12) by 4 - 20 - 12 through a fresh vertex
    edges = [(u, v) for u, v in g.edges() if (u, v) != (4, 12)]
    edges += [(4, 20), (20, 12)]
    g2 = Graph(21, edges)
    paths = tuple(sorted((4, 20, 12) if p == (4, 12) else p for p in family.paths))
    fam = PathFamily(paths=paths, source_set=family.source_set, target_set=family.target_set)
    x2 = CycleEmbedding.from_sequence(g2, x.vertices)
    y2 = CycleEmbedding.from_sequence(g2, y.vertices)
    return g2, x2, y2, fam


def merge_host():
    """A 6-cycle plus a 4-vertex detour replacing one of its edges."""
    # cycle 0..5; detour 1 - 6 - 7 - 8 - 2 parallels the edge (1, 2)
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
             (1, 6), (6, 7), (7, 8), (8, 2)]
    g = Graph(9, edges)
    x = CycleEmbedding.from_sequence(g, [0, 1, 2, 3, 4, 5])
    donor = CycleEmbedding.from_sequence(g, [1, 6, 7, 8, 2])
    return g, x, donor
