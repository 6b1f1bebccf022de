"""Isomorph-free generation of small graphs.

Canonical forms come from equitable-partition refinement with
backtracking over the first non-singleton cell: the canonical labeling
is the one minimizing the upper-triangle adjacency code.  Generation
proceeds by vertex augmentation with canonical-form rejection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import EnumerationError
from .graphs import Graph, parse_graph6, structure_summary, to_graph6

#: Built-in generation limit for unrestricted graph streams.
MAX_BUILTIN_N = 8

#: Built-in limit for regular-only streams (much smaller search space).
MAX_REGULAR_N = 10


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _equitable(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until neighbor counts are constant on
    every cell against every cell.  Splits keep a deterministic order."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keys = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(keys[v], []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    new_cells.append(groups[key])
        cells = new_cells
        if not changed:
            return cells


def _code_for_labeling(adj: list[int], order: list[int]) -> int:
    """Upper-triangle adjacency bits under the labeling order[i] -> i."""
    code = 0
    for i, v in enumerate(order):
        mv = adj[v]
        for j in range(i):
            code <<= 1
            if (mv >> order[j]) & 1:
                code |= 1
    return code


def canonical_labeling(g: Graph) -> list[int]:
    """A vertex order realizing the canonical (minimum) adjacency code."""
    n = g.n
    if n == 0:
        return []
    adj = _adjacency_masks(g)
    degs = [m.bit_count() for m in adj]
    # Universal and isolated vertices are mutually interchangeable: fix
    # them up front (first/last) instead of branching over their orders.
    front = [v for v in range(n) if degs[v] == n - 1 and n > 1]
    back = [v for v in range(n) if degs[v] == 0]
    middle = [v for v in range(n) if v not in front and v not in back]
    by_degree: dict[int, list[int]] = {}
    for v in middle:
        by_degree.setdefault(degs[v], []).append(v)
    cells = [[v] for v in front]
    cells += [by_degree[d] for d in sorted(by_degree)]
    cells += [[v] for v in back]

    best: list | None = None

    def explore(cells: list[list[int]]):
        nonlocal best
        cells = _equitable(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code_for_labeling(adj, order)
            if best is None or code < best[0]:
                best = [code, order]
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            explore(cells[:target] + [[v], rest] + cells[target + 1:])

    explore(cells)
    assert best is not None
    return best[1]


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of g."""
    order = canonical_labeling(g)
    relabel = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, [(relabel[u], relabel[v]) for u, v in g.edges])


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_form(g))


# ---------------------------------------------------------------------------
# filters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphFilter:
    """Conjunctive predicates applied to a census stream."""

    connected_only: bool = False
    min_degree: int = 0
    regular_only: int | None = None
    forbid_degree_one: bool = False

    def __post_init__(self):
        if self.min_degree < 0:
            raise EnumerationError("min_degree must be non-negative")
        if self.regular_only is not None and self.regular_only < 0:
            raise EnumerationError("regular valency must be non-negative")

    def matches(self, g: Graph) -> bool:
        degs = g.degrees()
        if self.min_degree > 0 and (g.n == 0 or min(degs) < self.min_degree):
            return False
        if self.forbid_degree_one and any(d == 1 for d in degs):
            return False
        if self.regular_only is not None and g.is_regular() != self.regular_only:
            return False
        if self.connected_only and structure_summary(g).c > 1 and g.n > 0:
            return False
        return True

    def to_dict(self) -> dict:
        return {
            "connected_only": self.connected_only,
            "min_degree": self.min_degree,
            "regular_only": self.regular_only,
            "forbid_degree_one": self.forbid_degree_one,
        }


# ---------------------------------------------------------------------------
# vertex-augmentation generation
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """All non-isomorphic graphs on n vertices, sorted by graph6 record."""
    if n == 0:
        return (Graph(0, ()),)
    if n == 1:
        return (Graph(1, ()),)
    seen: set[str] = set()
    for g in _all_graphs(n - 1):
        base_edges = g.edges
        for subset in range(1 << (n - 1)):
            extra = tuple((v, n - 1) for v in range(n - 1) if (subset >> v) & 1)
            seen.add(canonical_graph6(Graph(n, tuple(sorted(base_edges + extra)))))
    return tuple(parse_graph6(s) for s in sorted(seen))


@lru_cache(maxsize=None)
def _regular_graphs(n: int, k: int) -> tuple[Graph, ...]:
    """All non-isomorphic k-regular graphs on n vertices.

    Vertex augmentation restricted to max degree k, pruning partial
    graphs whose degree deficits can no longer be absorbed by the
    remaining vertices.
    """
    if k >= n or (n * k) % 2 == 1:
        return ()
    level: set[str] = {to_graph6(Graph(1, ()))}
    for j in range(2, n + 1):
        remaining = n - j
        nxt: set[str] = set()
        for s in level:
            g = parse_graph6(s)
            degs = g.degrees()
            open_verts = [v for v in range(j - 1) if degs[v] < k]
            for subset in _bounded_subsets(open_verts, k):
                extra = tuple((v, j - 1) for v in subset)
                cand = Graph(j, tuple(sorted(g.edges + extra)))
                if _regular_feasible(cand.degrees(), k, remaining):
                    nxt.add(canonical_graph6(cand))
        level = nxt
    out = [parse_graph6(s) for s in sorted(level)]
    return tuple(g for g in out if g.is_regular() == k)


def _bounded_subsets(items: list[int], limit: int) -> Iterator[tuple[int, ...]]:
    """All subsets of size <= limit, smallest first for determinism."""
    def rec(start: int, chosen: list[int]) -> Iterator[tuple[int, ...]]:
        yield tuple(chosen)
        if len(chosen) == limit:
            return
        for i in range(start, len(items)):
            chosen.append(items[i])
            yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def _regular_feasible(degs: list[int], k: int, remaining: int) -> bool:
    deficits = [k - d for d in degs]
    if any(d < 0 for d in deficits):
        return False
    if any(d > remaining for d in deficits):
        return False
    return sum(deficits) <= remaining * k


def generate_nonisomorphic(n: int, f: GraphFilter | None = None) -> Iterator[Graph]:
    """Stream exactly one representative per isomorphism class on n
    vertices that satisfies the filter, in graph6 order."""
    if n < 0:
        raise EnumerationError("vertex count must be non-negative")
    f = f or GraphFilter()
    if f.regular_only is not None and n <= MAX_REGULAR_N:
        pool: tuple[Graph, ...] = _regular_graphs(n, f.regular_only)
    elif n <= MAX_BUILTIN_N:
        pool = _all_graphs(n)
    else:
        raise EnumerationError(
            f"built-in generation stops at n={MAX_BUILTIN_N} "
            f"(n={MAX_REGULAR_N} for regular-only filters); "
            "supply an external graph6 stream instead"
        )
    for g in pool:
        if f.matches(g):
            yield g
