"""Simple undirected graphs, graph6 I/O, orientations and cycle bases.

Vertices are always 0..n-1.  Edges are stored as a strictly increasing
sequence of pairs (u, v) with u < v, so two graphs are equal iff their
(n, edges) data match bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import Graph6Error, GraphError, OddCycleError

#: Largest vertex count accepted by the graph6 codec (3-byte header form).
GRAPH6_MAX_N = 258047


@dataclass(frozen=True)
class Graph:
    """An undirected graph without loops or parallel edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise GraphError(f"edges not strictly increasing at ({u}, {v})")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from unordered pairs, normalizing and validating."""
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise GraphError(f"duplicate edge {pair}")
            seen.add(pair)
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _adjacency_sets(self) -> tuple[frozenset[int], ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self._adjacency_sets[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency_sets[u]

    def degrees(self) -> list[int]:
        return [len(s) for s in self._adjacency_sets]

    def adjacency_matrix(self) -> list[list[int]]:
        """Dense symmetric 0/1 adjacency matrix."""
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = 1
            a[v][u] = 1
        return a

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, tuple(edges))

    def is_regular(self) -> int | None:
        """The common valency if the graph is regular, else None."""
        degs = self.degrees()
        if self.n == 0:
            return 0
        k = degs[0]
        return k if all(d == k for d in degs) else None


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 record.

    Accepts the optional ">>graph6<<" prefix, one- and three-byte vertex
    count headers, and the column-major upper-triangle bit payload.
    """
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    text = text.rstrip("\r\n")
    if not text:
        raise Graph6Error("empty graph6 record")
    data = []
    for off, ch in enumerate(text):
        code = ord(ch)
        if not (63 <= code <= 126):
            raise Graph6Error(f"character {ch!r} outside graph6 range", off)
        data.append(code - 63)
    if data[0] <= 62:
        n, body, base = data[0], data[1:], 1
    elif data[0] == 63:
        if len(data) < 4:
            raise Graph6Error("truncated multi-byte vertex count", len(text))
        if data[1] == 63:
            raise Graph6Error("6-byte vertex counts not supported", 1)
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body, base = data[4:], 4
    else:  # pragma: no cover - unreachable, 0 <= value <= 63
        raise Graph6Error("bad header byte", 0)
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"payload holds {len(body)} bytes, expected {(nbits + 5) // 6}",
            base + len(body),
        )
    bits = 0
    for value in body:
        bits = (bits << 6) | value
    pad = 6 * len(body) - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(text) - 1)
    bits >>= pad
    edges = []
    # Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if pos >= 0 and (bits >> pos) & 1:
                edges.append((u, v))
            pos -= 1
    return Graph(n, tuple(sorted(edges)))


def to_graph6(g: Graph) -> str:
    """Encode a graph as a canonical one-line graph6 record."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"n={n} exceeds graph6 maximum {GRAPH6_MAX_N}")
    if n <= 62:
        header = [n]
    else:
        header = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    bits = 0
    nbits = n * (n - 1) // 2
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if g.has_edge(u, v):
                bits |= 1 << pos
            pos -= 1
    nbytes = (nbits + 5) // 6
    bits <<= 6 * nbytes - nbits
    body = [(bits >> (6 * (nbytes - 1 - i))) & 63 for i in range(nbytes)]
    return "".join(chr(63 + v) for v in header + body)


# ---------------------------------------------------------------------------
# plain edge-list text format: "n m" header then one "u v" line per edge
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"bad edge-list header {lines[0]!r}, expected 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"header promises {m} edges, found {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structure analysis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureSummary:
    """Components, bipartitions and degrees of a graph.

    ``bipartition[i]`` is the pair of color classes (Y, Z) of component i,
    or None when that component is not bipartite.  Y always contains the
    smallest-indexed vertex of the component.
    """

    c: int
    b: int
    component_id: tuple[int, ...]
    bipartition: tuple[tuple[tuple[int, ...], tuple[int, ...]] | None, ...]
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int


def structure_summary(g: Graph) -> StructureSummary:
    """Count components and bipartite components; record degrees."""
    comp = [-1] * g.n
    bipartitions: list[tuple[tuple[int, ...], tuple[int, ...]] | None] = []
    color = [0] * g.n
    c = 0
    for root in range(g.n):
        if comp[root] != -1:
            continue
        comp[root] = c
        color[root] = 0
        queue = [root]
        members = [root]
        bipartite = True
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if comp[w] == -1:
                    comp[w] = c
                    color[w] = color[v] ^ 1
                    members.append(w)
                    queue.append(w)
                elif color[w] == color[v]:
                    bipartite = False
        if bipartite:
            y = tuple(sorted(v for v in members if color[v] == color[root]))
            z = tuple(sorted(v for v in members if color[v] != color[root]))
            bipartitions.append((y, z))
        else:
            bipartitions.append(None)
        c += 1
    degs = g.degrees()
    return StructureSummary(
        c=c,
        b=sum(1 for p in bipartitions if p is not None),
        component_id=tuple(comp),
        bipartition=tuple(bipartitions),
        degrees=tuple(degs),
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
    )


def find_odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """Vertices of some odd cycle, or None when the graph is bipartite."""
    parent = [-1] * g.n
    depth = [-1] * g.n
    for root in range(g.n):
        if depth[root] != -1:
            continue
        depth[root] = 0
        stack = [root]
        order = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if depth[w] == -1:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    stack.append(w)
                    order.append(w)
        # Check every non-tree edge of this component for odd parity.
        for v in order:
            for w in g.neighbors(v):
                if w < v or parent[w] == v or parent[v] == w:
                    continue
                if (depth[v] + depth[w]) % 2 == 0:
                    return _tree_cycle(parent, depth, v, w)
    return None


def _tree_cycle(parent, depth, v, w) -> tuple[int, ...]:
    """Cycle through edge (v, w) and the tree paths to their meeting point."""
    pv, pw = [v], [w]
    a, b = v, w
    while depth[a] > depth[b]:
        a = parent[a]
        pv.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        pw.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        pv.append(a)
        pw.append(b)
    # pv ends at the meeting point; pw repeats it, drop and reverse.
    return tuple(pv + pw[-2::-1])


# ---------------------------------------------------------------------------
# orientations and the arc ordering e_1..e_m, rev(e_1)..rev(e_m)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ArcSystem:
    """An orientation of a graph plus the induced ordering of all 2m arcs.

    Arc i < m is the oriented edge i; arc m+i is its reverse.
    """

    graph: Graph
    orientation: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.orientation) != self.graph.m:
            raise GraphError("orientation length differs from edge count")
        for (t, h), (u, v) in zip(self.orientation, self.graph.edges):
            if (min(t, h), max(t, h)) != (u, v):
                raise GraphError(
                    f"oriented pair ({t}, {h}) does not match edge ({u}, {v})"
                )

    @property
    def num_arcs(self) -> int:
        return 2 * self.graph.m

    def arc(self, i: int) -> tuple[int, int]:
        m = self.graph.m
        if i < m:
            return self.orientation[i]
        t, h = self.orientation[i - m]
        return (h, t)

    def arcs(self) -> list[tuple[int, int]]:
        fwd = list(self.orientation)
        return fwd + [(h, t) for t, h in fwd]

    def reverse_index(self, i: int) -> int:
        m = self.graph.m
        return i + m if i < m else i - m

    @cached_property
    def _arc_lookup(self) -> dict[tuple[int, int], int]:
        return {a: i for i, a in enumerate(self.arcs())}

    def arc_index(self, tail: int, head: int) -> int:
        try:
            return self._arc_lookup[(tail, head)]
        except KeyError:
            raise GraphError(f"no arc {tail}->{head} in this graph") from None

    def edge_index(self, u: int, v: int) -> int:
        i = self.arc_index(u, v)
        return i if i < self.graph.m else i - self.graph.m


def default_arc_system(g: Graph, bipartite: bool = False) -> ArcSystem:
    """The lexicographic orientation u->v for u < v.

    With ``bipartite=True``, orient every edge from the Y class to the Z
    class of its component instead; raises OddCycleError when some
    component is not bipartite.
    """
    if not bipartite:
        return ArcSystem(g, g.edges)
    summary = structure_summary(g)
    if summary.b != summary.c:
        cyc = find_odd_cycle(g)
        assert cyc is not None
        raise OddCycleError(cyc)
    in_y = [False] * g.n
    for part in summary.bipartition:
        assert part is not None
        for v in part[0]:
            in_y[v] = True
    orientation = tuple(
        (u, v) if in_y[u] else (v, u) for u, v in g.edges
    )
    return ArcSystem(g, orientation)


# ---------------------------------------------------------------------------
# fundamental cycles from a DFS spanning forest
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrientedCycle:
    """A closed walk of arcs through distinct vertices."""

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for (_, h), (t, _) in zip(self.arcs, self.arcs[1:] + self.arcs[:1]):
            if h != t:
                raise GraphError("cycle arcs do not chain head to tail")
        verts = [t for t, _ in self.arcs]
        if len(set(verts)) != len(verts):
            raise GraphError("cycle revisits a vertex")

    def vertices(self) -> tuple[int, ...]:
        return tuple(t for t, _ in self.arcs)

    def undirected_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((min(t, h), max(t, h)) for t, h in self.arcs))

    def reversed(self) -> "OrientedCycle":
        return OrientedCycle(tuple((h, t) for t, h in self.arcs[::-1]))


def fundamental_cycles(g: Graph, a: ArcSystem) -> tuple[OrientedCycle, ...]:
    """One oriented cycle per non-tree edge of a DFS spanning forest.

    The forest is rooted at the minimum vertex of each component with
    neighbors visited in ascending order; each cycle starts along its
    non-tree edge in the direction the ArcSystem orients it.
    """
    parent = [-1] * g.n
    depth = [-1] * g.n
    for root in range(g.n):
        if depth[root] != -1:
            continue
        depth[root] = 0
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if depth[w] == -1:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    stack.append((w, iter(g.neighbors(w))))
                    break
            else:
                stack.pop()
    tree = set()
    for v in range(g.n):
        if parent[v] != -1:
            tree.add((min(v, parent[v]), max(v, parent[v])))
    cycles = []
    for i, (u, v) in enumerate(g.edges):
        if (u, v) in tree:
            continue
        tail, head = a.orientation[i]
        path = _tree_path(parent, depth, head, tail)
        arcs = [(tail, head)] + list(zip(path, path[1:]))
        cycles.append(OrientedCycle(tuple(arcs)))
    return tuple(cycles)


def _tree_path(parent, depth, start, end) -> list[int]:
    """Vertices of the unique forest path from start to end."""
    fwd, back = [start], [end]
    a, b = start, end
    while depth[a] > depth[b]:
        a = parent[a]
        fwd.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        back.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        fwd.append(a)
        back.append(b)
    return fwd[:-1] + back[::-1]
