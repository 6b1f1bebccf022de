"""Independent oracles used by the test suite.

Deliberately separate from the package internals: Fraction-based
elimination, memoized cofactor expansion for characteristic
polynomials, a numpy brute force over labeled graphs, and networkx as
a reference graph6 codec and isomorphism checker.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx
import numpy as np

from arcwalk.graphs import Graph


def nx_graph(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def nx_graph6(g: Graph) -> str:
    """Reference graph6 encoding via networkx."""
    return nx.to_graph6_bytes(nx_graph(g), header=False).decode().strip()


def nx_from_graph6(record: str) -> Graph:
    G = nx.from_graph6_bytes(record.encode())
    return Graph.from_edges(G.number_of_nodes(), G.edges())


def fraction_rank_and_nullity(rows: list[list[Fraction]], cols: int) -> tuple[int, int]:
    """Gaussian elimination over Fraction, independent of the package."""
    mat = [list(map(Fraction, r)) for r in rows]
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pr = mat[rank]
        inv = Fraction(1) / pr[c]
        mat[rank] = [x * inv for x in pr]
        for i in range(len(mat)):
            if i != rank and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank, cols - rank


def dim_L_oracle(g: Graph) -> int:
    """Nullity of the stacked incidence matrix of the digraph of g,
    built from scratch (lexicographic orientation, forward then reverse)."""
    m = g.m
    arcs = list(g.edges) + [(v, u) for u, v in g.edges]
    dout = [[Fraction(0)] * (2 * m) for _ in range(g.n)]
    din = [[Fraction(0)] * (2 * m) for _ in range(g.n)]
    for j, (t, h) in enumerate(arcs):
        dout[t][j] = Fraction(1)
        din[h][j] = Fraction(1)
    _, nullity = fraction_rank_and_nullity(dout + din, 2 * m)
    return nullity


# ---------------------------------------------------------------------------
# characteristic polynomial by memoized cofactor expansion
# ---------------------------------------------------------------------------


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _poly_add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def charpoly_cofactor(entries: list[list[Fraction]]) -> list[Fraction]:
    """Coefficients (ascending) of det(xI - M) via cofactor expansion
    along columns, memoized over row subsets."""
    n = len(entries)
    # xI - M as polynomial entries: [(constant, linear)] pairs.
    poly = [
        [
            [Fraction(-entries[i][j]), Fraction(1)] if i == j else [Fraction(-entries[i][j])]
            for j in range(n)
        ]
        for i in range(n)
    ]
    memo: dict[int, list[Fraction]] = {0: [Fraction(1)]}

    def det(row_mask: int) -> list[Fraction]:
        if row_mask in memo:
            return memo[row_mask]
        rows = [i for i in range(n) if (row_mask >> i) & 1]
        col = len(rows) - 1  # expand along the last used column
        acc = [Fraction(0)]
        for pos, i in enumerate(rows):
            entry = poly[i][col]
            if entry == [Fraction(0)]:
                continue
            minor = det(row_mask & ~(1 << i))
            term = _poly_mul(entry, minor)
            if (pos + col) % 2:
                term = [-c for c in term]
            acc = _poly_add(acc, term)
        memo[row_mask] = acc
        return acc

    out = det((1 << n) - 1)
    out += [Fraction(0)] * (n + 1 - len(out))
    return out


# ---------------------------------------------------------------------------
# brute-force unlabeled graph counts
# ---------------------------------------------------------------------------


def count_unlabeled_bruteforce(n: int) -> int:
    """Number of isomorphism classes on n vertices by canonicalizing all
    2^C(n,2) labeled graphs over all n! permutations (numpy, n <= 6)."""
    pairs = list(itertools.combinations(range(n), 2))
    npairs = len(pairs)
    index = {p: i for i, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    # perm_map[p][e] = index of pair e after relabeling by permutation p
    perm_map = np.array(
        [
            [index[tuple(sorted((perm[u], perm[v])))] for (u, v) in pairs]
            for perm in perms
        ],
        dtype=np.int64,
    )
    count_graphs = 1 << npairs
    codes = np.arange(count_graphs, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(npairs, dtype=np.int64)[None, :]) & 1
    weights = (1 << np.arange(npairs, dtype=np.int64))
    best = None
    for chunk in range(0, len(perms), 8):
        pm = perm_map[chunk : chunk + 8]
        # graphs x perms: relabeled codes
        relabeled = bits[:, pm] @ weights  # (graphs, perms_in_chunk)
        m = relabeled.min(axis=1)
        best = m if best is None else np.minimum(best, m)
    return int(np.unique(best).size)
