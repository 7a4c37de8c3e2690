"""Undirected simple graphs: parsing, enumeration, degeneracy, random generation.

Vertices are dense integers ``0..n-1``.  Graphs are immutable after
construction and safe to share across workers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceededError, GraphFormatError

Edge = tuple[int, int]

ENUMERATION_MAX_N = 7


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[frozenset[int], ...] = field(compare=False)

    def __init__(self, n: int, edges) -> None:
        if n < 0:
            raise GraphFormatError("vertex count must be non-negative")
        norm = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u},{v}) out of range for n={n}")
            e = _normalize_edge(u, v)
            if e in norm:
                raise GraphFormatError(f"duplicate edge {e}")
            norm.add(e)
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in adj))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def adjacency_bitmasks(self) -> np.ndarray:
        """Per-vertex neighbor sets packed as int64 bitmasks (n <= 63)."""
        if self.n > 63:
            raise CapExceededError("bitmask adjacency requires n <= 63")
        masks = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def subgraph_without_vertex(self, v: int) -> "Graph":
        """Graph on n-1 vertices obtained by deleting v (labels compacted)."""
        relabel = {u: (u if u < v else u - 1) for u in range(self.n) if u != v}
        edges = [
            (relabel[a], relabel[b])
            for a, b in self.edges
            if a != v and b != v
        ]
        return Graph(self.n - 1, edges)

    def relabeled(self, perm: dict[int, int] | list[int]) -> "Graph":
        if isinstance(perm, list):
            perm = {i: p for i, p in enumerate(perm)}
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class GraphClassTag:
    is_connected: bool
    is_tree: bool
    is_forest: bool
    is_complete: bool
    is_bipartite: bool


# ---------------------------------------------------------------------------
# constructors


def parse_edge_list(text: str) -> Graph:
    """Parse the canonical edge-list format.

    Lines of ``u v`` integer pairs, with an optional ``n <count>`` header
    line that fixes the vertex count (needed to preserve isolated
    vertices).  Without a header, n is 1 + the largest vertex mentioned.
    """
    n: int | None = None
    edges: list[Edge] = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: malformed header")
            try:
                n = int(parts[1])
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: bad vertex count") from exc
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer vertex") from exc
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    if n is None:
        n = max_seen + 1
    if max_seen >= n:
        raise GraphFormatError(f"vertex index {max_seen} >= declared n={n}")
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


# ---------------------------------------------------------------------------
# basic statistics


def degree_stats(g: Graph) -> tuple[int, int]:
    """(max degree, min degree)."""
    if g.n == 0:
        raise GraphFormatError("degree_stats requires n >= 1")
    degs = g.degrees()
    return max(degs), min(degs)


def degeneracy(g: Graph) -> int:
    """Min-degree peeling via the linear-time core decomposition.

    Vertices enter the degree buckets in index order, so the peel is
    deterministic (ties broken by smallest vertex index among equal-degree
    vertices in the initial layout).
    """
    if g.n == 0:
        raise GraphFormatError("degeneracy requires n >= 1")
    n = g.n
    deg = g.degrees()
    max_deg = max(deg) if deg else 0
    # counting sort of vertices by degree (stable, so index order within ties)
    bin_start = [0] * (max_deg + 2)
    for d in deg:
        bin_start[d + 1] += 1
    for d in range(1, max_deg + 2):
        bin_start[d] += bin_start[d - 1]
    pos = [0] * n
    order = [0] * n
    fill = bin_start[:-1].copy()
    for v in range(n):
        order[fill[deg[v]]] = v
        pos[v] = fill[deg[v]]
        fill[deg[v]] += 1
    best = 0
    removed = [False] * n
    for i in range(n):
        v = order[i]
        best = max(best, deg[v])
        removed[v] = True
        for u in g.adjacency[v]:
            if removed[u] or deg[u] <= deg[v]:
                continue
            du, pu = deg[u], pos[u]
            pw = bin_start[du]
            w = order[pw]
            if u != w:
                order[pu], order[pw] = w, u
                pos[u], pos[w] = pw, pu
            bin_start[du] += 1
            deg[u] -= 1
    return best


def _component_masks(g: Graph) -> list[set[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.add(u)
                    stack.append(u)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(_component_masks(g)) == 1


def connected_components(g: Graph) -> list[Graph]:
    comps = []
    for verts in _component_masks(g):
        order = sorted(verts)
        relabel = {v: i for i, v in enumerate(order)}
        edges = [
            (relabel[u], relabel[v])
            for u, v in g.edges
            if u in verts
        ]
        comps.append(Graph(len(order), edges))
    return comps


def classify(g: Graph) -> GraphClassTag:
    connected = is_connected(g)
    ncomp = len(_component_masks(g))
    forest = g.num_edges == g.n - ncomp  # acyclic iff |E| = n - #components
    tree = connected and forest and g.n >= 1
    complete = g.num_edges == g.n * (g.n - 1) // 2
    # 2-coloring BFS
    color = [-1] * g.n
    bipartite = True
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue and bipartite:
            v = queue.pop()
            for u in g.adjacency[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    bipartite = False
                    break
        if not bipartite:
            break
    return GraphClassTag(
        is_connected=connected,
        is_tree=tree,
        is_forest=forest,
        is_complete=complete,
        is_bipartite=bipartite,
    )


# ---------------------------------------------------------------------------
# random generation

# The RNG is numpy's PCG64 behind numpy.random.Generator.  Edge selection
# uses geometric gap skipping over the C(n,2) pair indices in lexicographic
# order, so the same (n, p, seed) triple reproduces bit-identically on any
# platform, for any p, through a single code path.


def _pair_from_index(idx: int, n: int) -> Edge:
    # row u satisfies idx < cum(u+1) where cum(u) = u*n - u*(u+1)/2
    # solve by integer binary search to avoid float error at large n
    lo, hi = 0, n - 1
    while lo < hi:
        mid = (lo + hi) // 2
        cum = (mid + 1) * n - (mid + 1) * (mid + 2) // 2
        if idx < cum:
            hi = mid
        else:
            lo = mid + 1
    u = lo
    before = u * n - u * (u + 1) // 2
    v = u + 1 + (idx - before)
    return u, v


def erdos_renyi(n: int, p: float, rng_seed: int) -> Graph:
    """G(n, p): each pair included independently with probability p."""
    if n < 1:
        raise GraphFormatError("erdos_renyi requires n >= 1")
    if not 0.0 <= p <= 1.0:
        raise GraphFormatError("p must lie in [0, 1]")
    m = n * (n - 1) // 2
    if p == 0.0 or m == 0:
        return Graph(n, [])
    rng = np.random.Generator(np.random.PCG64(rng_seed))
    indices: list[int] = []
    pos = -1
    if p == 1.0:
        indices = list(range(m))
    else:
        batch = max(256, int(2.2 * m * p) + 16)
        while True:
            gaps = rng.geometric(p, size=batch)
            for gap in gaps:
                pos += int(gap)
                if pos >= m:
                    break
                indices.append(pos)
            if pos >= m:
                break
    return Graph(n, [_pair_from_index(i, n) for i in indices])


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _connected_mask(n: int, adj_masks: list[int]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v_bits = frontier
        while v_bits:
            v = (v_bits & -v_bits).bit_length() - 1
            v_bits &= v_bits - 1
            nxt |= adj_masks[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def enumerate_connected_graphs(n: int):
    """Yield every labeled connected simple graph on n vertices once."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise CapExceededError(
            f"enumerate_connected_graphs supports 1 <= n <= {ENUMERATION_MAX_N}"
        )
    pairs = list(itertools.combinations(range(n), 2))
    m = len(pairs)
    for mask in range(1 << m):
        adj_masks = [0] * n
        edges = []
        mm = mask
        while mm:
            i = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            u, v = pairs[i]
            adj_masks[u] |= 1 << v
            adj_masks[v] |= 1 << u
            edges.append((u, v))
        if _connected_mask(n, adj_masks):
            yield Graph(n, edges)


def graph_from_edge_mask(mask: int, n: int) -> Graph:
    """Graph whose edges are the set bits of mask over lexicographic pairs."""
    pairs = list(itertools.combinations(range(n), 2))
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    return Graph(n, edges)
