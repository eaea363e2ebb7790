"""Immutable undirected graphs on dense integer vertex ids.

Adjacency is stored as one bitmask row per vertex, which keeps neighborhood
intersection and BFS frontiers at one machine-word operation per 64 vertices.
Graphs never change after construction; algorithms that need "deletion" pass
an allowed-vertex mask instead.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

VERTEX_CAP = 128


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with vertices 0..n-1, immutable after construction.

    Self-loops are rejected; duplicate edges collapse. Instances hash and
    compare by value, so they are safe dict keys and cache keys.
    """

    __slots__ = ("n", "_rows", "edge_count", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), *, cap: int = VERTEX_CAP):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if n > cap:
            raise ValueError(f"graph has {n} vertices, above the cap of {cap}")
        rows = [0] * n
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not rows[u] >> v & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                count += 1
        self.n = n
        self._rows = tuple(rows)
        self.edge_count = count
        self._hash = hash((n, self._rows))

    # -- basic accessors -------------------------------------------------

    def row(self, v: int) -> int:
        """Neighbor bitmask of v."""
        return self._rows[v]

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self._rows[v])

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self._rows[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    # -- mask utilities ---------------------------------------------------

    def neighbors_of_mask(self, mask: int) -> int:
        """Union of neighbor rows over the vertices in mask (may overlap mask)."""
        out = 0
        for v in iter_bits(mask):
            out |= self._rows[v]
        return out

    def reach_mask(self, start: int, allowed: int) -> int:
        """Vertices reachable from the start mask inside allowed (start included)."""
        seen = start & allowed
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self._rows[v]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def check_vertex_set(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """Validate vertices against g and return them as a frozenset."""
    vs = frozenset(vertices)
    for v in vs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph of order {g.n}")
    return vs


# -- structural operations ------------------------------------------------


def is_connected(g: Graph) -> bool:
    """True iff g has exactly one connected component (vacuously true for n=0)."""
    if g.n == 0:
        return True
    return g.reach_mask(1, g.full_mask) == g.full_mask


def connected_components(g: Graph) -> list[int]:
    """Component masks, ordered by smallest member vertex."""
    remaining = g.full_mask
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = g.reach_mask(start, remaining)
        comps.append(comp)
        remaining &= ~comp
    return comps


def neighborhood(g: Graph, a: Iterable[int]) -> frozenset[int]:
    """All vertices outside a adjacent to some vertex of a."""
    avs = check_vertex_set(g, a)
    amask = mask_of(avs)
    return frozenset(iter_bits(g.neighbors_of_mask(amask) & ~amask))


def diameter(g: Graph) -> int:
    """Maximum over vertex pairs of the shortest-path length."""
    if g.n == 0 or not is_connected(g):
        raise ValueError("infinite diameter")
    best = 0
    full = g.full_mask
    for s in range(g.n):
        seen = 1 << s
        frontier = seen
        dist = 0
        while seen != full:
            nxt = g.neighbors_of_mask(frontier) & ~seen
            frontier = nxt
            seen |= nxt
            dist += 1
        # distance to the last layer reached from s
        best = max(best, dist)
    return best


def eccentricity_bfs(g: Graph, s: int) -> list[int]:
    """Distances from s to every vertex (-1 when unreachable)."""
    dist = [-1] * g.n
    dist[s] = 0
    frontier = 1 << s
    seen = frontier
    d = 0
    while frontier:
        nxt = g.neighbors_of_mask(frontier) & ~seen
        d += 1
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def is_regular(g: Graph) -> Optional[int]:
    """The common degree d when g is d-regular, else None."""
    if g.n == 0:
        return None
    d = g.degree(0)
    if all(g.degree(v) == d for v in range(1, g.n)):
        return d
    return None


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects g or leaves one vertex.

    Equals n-1 for complete graphs; computed by minimizing the local
    vertex connectivity over all non-adjacent pairs.
    """
    if g.n < 2:
        raise ValueError("undefined connectivity")
    if g.edge_count == g.n * (g.n - 1) // 2:
        return g.n - 1
    if not is_connected(g):
        return 0
    from .flow import local_vertex_connectivity

    best = g.n - 1
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            best = min(best, local_vertex_connectivity(g, s, t))
            if best == 0:
                return 0
    return best


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(connected_components(g))


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests."""
    best: Optional[int] = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in g.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


# -- named graphs -----------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(n: int) -> Graph:
    """Hub vertex n joined to every vertex of an n-cycle."""
    if n < 3:
        raise ValueError("wheel rim needs at least 3 vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)]
    return Graph(n + 1, edges)


def grid_graph(rows: int, cols: int) -> Graph:
    def vid(r: int, c: int) -> int:
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph(rows * cols, edges)


def petersen_graph() -> Graph:
    """Outer pentagon 0-4, inner pentagram 5-9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def prism_graph(n: int) -> Graph:
    """Two n-cycles joined by a perfect matching (circular ladder)."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph(2 * n, edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph(a.n + b.n, edges)


# -- graph6 format ----------------------------------------------------------
#
# De-facto standard format: printable bytes 63..126, a size header followed
# by the upper triangle of the adjacency matrix in column order, packed into
# big-endian 6-bit groups.


def graph_to_graph6(g: Graph) -> str:
    if g.n <= 62:
        header = bytes([g.n + 63])
    elif g.n <= 258047:
        header = bytes(
            [126, ((g.n >> 12) & 0x3F) + 63, ((g.n >> 6) & 0x3F) + 63, (g.n & 0x3F) + 63]
        )
    else:
        raise ValueError("graph too large for graph6")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for k in range(0, len(bits), 6):
        val = 0
        for bit in bits[k : k + 6]:
            val = val << 1 | bit
        body.append(val + 63)
    return (header + bytes(body)).decode("ascii")


def graph_from_graph6(text: str, *, cap: int = VERTEX_CAP) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    raw = data.encode("ascii")
    if not raw:
        raise ValueError("empty graph6 string")
    if raw[0] == 126:
        if len(raw) >= 2 and raw[1] == 126:
            raise ValueError("graph6 strings beyond 258047 vertices unsupported")
        if len(raw) < 4:
            raise ValueError("truncated graph6 header")
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
    else:
        n = raw[0] - 63
        body = raw[1:]
    if n < 0:
        raise ValueError("invalid graph6 header byte")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for byte in body:
        val = byte - 63
        if not 0 <= val < 64:
            raise ValueError("invalid graph6 body byte")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[idx:]):
        raise ValueError("nonzero padding bits in graph6 body")
    return Graph(n, edges, cap=cap)


# -- edge-list text format ----------------------------------------------------


def graph_to_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_from_edge_list(text: str, n: Optional[int] = None, *, cap: int = VERTEX_CAP) -> Graph:
    """Parse "u v" pairs, one per line; '#' starts a comment.

    The vertex count is max id + 1 unless given explicitly or recorded in a
    "# n=N" comment (which the writer emits so isolated vertices survive).
    """
    edges = []
    seen_max = -1
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            body = stripped.lstrip("#").strip()
            if n is None and body.startswith("n="):
                n = int(body[2:])
            continue
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        seen_max = max(seen_max, u, v)
    if n is None:
        n = seen_max + 1
    return Graph(max(n, 0), edges, cap=cap)
