"""Atoms: graphs built in k rounds from a seed by attaching independent
sets, each old vertex receiving exactly one new neighbor.

Enumeration is exhaustive up to layer-preserving relabeling; the layer
structure is part of the object, so two atoms are identified only when a
permutation fixing every layer maps one edge set onto the other.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import CapExceededError, GraphFormatError
from .graphs import Graph

BINOMIAL_TREE_MAX_K = 24
ENUM_MAX_K = 5
ENUM_MAX_N = 12


@dataclass(frozen=True)
class Atom:
    graph: Graph
    layers: tuple[tuple[int, ...], ...]
    seed: int

    @property
    def k(self) -> int:
        return len(self.layers)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.sorted_edges()],
            "layers": [list(layer) for layer in self.layers],
            "seed": self.seed,
        }


def binomial_tree(k: int) -> Atom:
    """The unique tree k-atom; 2^(k-1) vertices, built by matching a full
    independent copy to the previous atom at every step."""
    if k < 1:
        raise GraphFormatError("binomial_tree requires k >= 1")
    if k > BINOMIAL_TREE_MAX_K:
        raise CapExceededError(f"binomial_tree capped at k <= {BINOMIAL_TREE_MAX_K}")
    edges: list[tuple[int, int]] = []
    layers: list[tuple[int, ...]] = [(0,)]
    m = 1
    for _ in range(k - 1):
        layers.append(tuple(range(m, 2 * m)))
        edges.extend((j, m + j) for j in range(m))
        m *= 2
    return Atom(Graph(m, edges), tuple(layers), 0)


def extend_atom(
    atom: Atom, assignment: dict[int, int], extra_edges=frozenset()
) -> Atom:
    """Attach a new independent layer; assignment maps every old vertex to
    the index (0-based) of its unique new neighbor.

    extra_edges must be empty: under the exactly-one-edge atom definition
    the construction admits no optional edges.
    """
    if extra_edges:
        raise GraphFormatError(
            "extra edges are not allowed under the exactly-one-edge definition"
        )
    m = atom.graph.n
    if set(assignment.keys()) != set(range(m)):
        raise GraphFormatError("assignment must cover every old vertex exactly once")
    targets = set(assignment.values())
    a = len(targets)
    if targets != set(range(a)):
        raise GraphFormatError("assignment must be surjective onto 0..a-1")
    edges = list(atom.graph.edges)
    edges.extend((v, m + assignment[v]) for v in range(m))
    layers = atom.layers + (tuple(range(m, m + a)),)
    return Atom(Graph(m + a, edges), layers, atom.seed)


def is_atom(g: Graph, layers) -> bool:
    """Check every construction invariant against an ordered partition."""
    layers = tuple(tuple(sorted(layer)) for layer in layers)
    flat = [v for layer in layers for v in layer]
    if sorted(flat) != list(range(g.n)) or not layers:
        return False
    if len(layers[0]) != 1:
        return False
    prefix: set[int] = set(layers[0])
    for layer in layers[1:]:
        lset = set(layer)
        if not 1 <= len(lset) <= len(prefix):
            return False
        # independence
        for u, v in itertools.combinations(layer, 2):
            if g.has_edge(u, v):
                return False
        # each prefix vertex has exactly one neighbor in the new layer
        for v in prefix:
            if len(g.adjacency[v] & lset) != 1:
                return False
        # each new vertex has at least one neighbor in the prefix
        for w in layer:
            nb = g.adjacency[w]
            if not nb & prefix:
                return False
            # and no neighbors outside the prefix and later layers' rule:
            # within-layer edges already excluded; later layers checked on
            # their own iteration, so nothing extra here
        prefix |= lset
    # no stray edges: every edge must join a layer to an earlier layer
    index = {}
    for i, layer in enumerate(layers):
        for v in layer:
            index[v] = i
    return all(index[u] != index[v] for u, v in g.edges)


# ---------------------------------------------------------------------------
# exhaustive enumeration with layer-preserving canonical forms


def _set_partitions(m: int, blocks: int):
    """All partitions of range(m) into exactly `blocks` blocks, as a list of
    per-element block labels in restricted-growth form."""
    labels = [0] * m

    def rec(i: int, used: int):
        if m - i < blocks - used:
            return
        if i == m:
            yield labels.copy()
            return
        for b in range(used):
            labels[i] = b
            yield from rec(i + 1, used)
        if used < blocks:
            labels[i] = used
            yield from rec(i + 1, used + 1)

    yield from rec(0, 0)


@dataclass
class _LayeredAtom:
    """Internal enumeration node: per-layer masks of prefix-neighbors."""

    sizes: tuple[int, ...]
    layer_masks: tuple[tuple[int, ...], ...]  # for layers 2..k
    auts: list[tuple[int, ...]]  # vertex permutations fixing each layer

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def to_atom(self) -> Atom:
        offsets = [0]
        for s in self.sizes:
            offsets.append(offsets[-1] + s)
        edges = []
        for li, masks in enumerate(self.layer_masks, start=1):
            base = offsets[li]
            for j, mask in enumerate(masks):
                w = base + j
                mm = mask
                while mm:
                    u = (mm & -mm).bit_length() - 1
                    mm &= mm - 1
                    edges.append((u, w))
        layers = tuple(
            tuple(range(offsets[i], offsets[i + 1]))
            for i in range(len(self.sizes))
        )
        return Atom(Graph(self.n, edges), layers, 0)


def _apply_perm_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out |= 1 << perm[v]
    return out


def _extensions(parent: _LayeredAtom, a: int):
    """Distinct one-layer extensions of the parent by a new vertices,
    deduplicated under the parent's layer-preserving automorphisms."""
    m = parent.n
    seen: set[tuple[int, ...]] = set()
    for labels in _set_partitions(m, a):
        masks = [0] * a
        for v, b in enumerate(labels):
            masks[b] |= 1 << v
        canon = None
        for g in parent.auts:
            sig = tuple(sorted(_apply_perm_mask(mk, g) for mk in masks))
            if canon is None or sig < canon:
                canon = sig
        if canon in seen:
            continue
        seen.add(canon)
        # child automorphisms: parent perms mapping the mask multiset to
        # itself, extended by every matching of equal masks
        child_auts: list[tuple[int, ...]] = []
        sorted_masks = tuple(sorted(masks))
        if sorted_masks != canon:
            # use the canonical labeling as the stored representative
            masks = list(canon)
            sorted_masks = canon
        for g in parent.auts:
            mapped = [_apply_perm_mask(mk, g) for mk in masks]
            if tuple(sorted(mapped)) != sorted_masks:
                continue
            # group positions by mask value to enumerate matchings
            groups: dict[int, tuple[list[int], list[int]]] = {}
            for j, mk in enumerate(masks):
                groups.setdefault(mk, ([], []))[0].append(j)
            okay = True
            for j, mk in enumerate(mapped):
                if mk not in groups:
                    okay = False
                    break
                groups[mk][1].append(j)
            if not okay:
                continue
            # one representative matching per (g, group permutation)
            per_group = []
            keys = sorted(groups)
            for key in keys:
                tgt, src = groups[key]
                per_group.append(list(itertools.permutations(range(len(src)))))
            for combo in itertools.product(*per_group):
                perm = list(g) + [0] * a
                for gi, key in enumerate(keys):
                    tgt, src = groups[key]
                    for si, pi in enumerate(combo[gi]):
                        # new vertex src[si] (position with mapped mask key)
                        # goes to position tgt[pi]
                        perm[m + src[si]] = m + tgt[pi]
                child_auts.append(tuple(perm))
        yield _LayeredAtom(
            sizes=parent.sizes + (a,),
            layer_masks=parent.layer_masks + (tuple(masks),),
            auts=child_auts,
        )


def enumerate_atoms(k: int, n_max: int):
    """All k-atoms with at most n_max vertices, one per layer-preserving
    isomorphism class."""
    if k < 1 or k > ENUM_MAX_K:
        raise CapExceededError(f"enumerate_atoms capped at 1 <= k <= {ENUM_MAX_K}")
    if n_max < 1 or n_max > ENUM_MAX_N:
        raise CapExceededError(f"enumerate_atoms capped at n_max <= {ENUM_MAX_N}")
    level: list[_LayeredAtom] = [
        _LayeredAtom(sizes=(1,), layer_masks=(), auts=[(0,)])
    ]
    for _ in range(k - 1):
        nxt: list[_LayeredAtom] = []
        for parent in level:
            m = parent.n
            for a in range(1, min(m, n_max - m) + 1):
                nxt.extend(_extensions(parent, a))
        level = nxt
    for node in level:
        if node.n <= n_max:
            yield node.to_atom()


# ---------------------------------------------------------------------------
# layer-size sequences


def is_valid_sequence(sizes) -> bool:
    sizes = list(sizes)
    if not sizes or sizes[0] != 1:
        return False
    prefix = 0
    for a in sizes:
        if a < 1 or (prefix and a > prefix):
            return False
        prefix += a
    return True


def valid_sequences(n: int, k: int) -> list[tuple[int, ...]]:
    """All layer-size sequences of a k-atom on n vertices."""
    if n > 20:
        raise CapExceededError("valid_sequences capped at n <= 20")
    out: list[tuple[int, ...]] = []
    seq = [1]

    def rec(total: int):
        if len(seq) == k:
            if total == n:
                out.append(tuple(seq))
            return
        remaining = k - len(seq)
        for a in range(1, min(total, n - total - (remaining - 1)) + 1):
            seq.append(a)
            rec(total + a)
            seq.pop()

    if 1 <= k and n >= k:
        rec(1)
    return out


def quotient_sum_raw(sizes) -> float:
    """Sum over i < j of sqrt(a_i / a_j)."""
    sizes = list(sizes)
    return sum(
        math.sqrt(sizes[i] / sizes[j])
        for i in range(len(sizes))
        for j in range(i + 1, len(sizes))
    )


def min_quotient_sum(n: int, k: int) -> tuple[float, tuple[int, ...]] | None:
    """Exhaustive minimizer of the quotient sum over valid sequences.

    Returns (value, argmin) or None when no valid sequence exists.
    Ties broken by lexicographically smallest sequence."""
    candidates = valid_sequences(n, k)
    if not candidates:
        return None
    best: tuple[float, tuple[int, ...]] | None = None
    for seq in sorted(candidates):
        val = quotient_sum_raw(seq)
        if best is None or val < best[0] - 1e-15:
            best = (val, seq)
    return best
