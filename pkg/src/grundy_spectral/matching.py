"""Matching and characteristic polynomials, path trees, and the
Godsil-Gutman division identity relating them."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError
from .graphs import Graph
from .polynomials import IntPolynomial, largest_real_root

MATCHING_MAX_N = 30
PATH_TREE_MAX_NODES = 10**6


# ---------------------------------------------------------------------------
# matching polynomial


def _matching_coeffs(n: int, adj: list[int]) -> list[int]:
    """Signed matching counts via the vertex-deletion recursion.

    mu(S) = x * mu(S - v) - sum_{u ~ v, u in S} mu(S - v - u), v = low bit
    of S.  Memoized on the induced vertex subset, which keeps the state
    space tied to the graph's actual branching rather than to n!.
    Returns coefficients of mu as a dense list, constant term first.
    """
    memo: dict[int, list[int]] = {0: [1]}

    def rec(s: int) -> list[int]:
        got = memo.get(s)
        if got is not None:
            return got
        v_bit = s & -s
        v = v_bit.bit_length() - 1
        rest = s ^ v_bit
        sub = rec(rest)
        out = [0] + list(sub)  # multiply by x
        nb = adj[v] & rest
        while nb:
            u_bit = nb & -nb
            nb ^= u_bit
            sub2 = rec(rest ^ u_bit)
            for i, c in enumerate(sub2):
                out[i] -= c
        memo[s] = out
        return out

    full = (1 << n) - 1
    coeffs = rec(full)
    coeffs.extend([0] * (n + 1 - len(coeffs)))
    return coeffs


def matching_polynomial(g: Graph) -> IntPolynomial:
    """Exact matching polynomial: sum over matchings M of (-1)^|M| x^(n-2|M|)."""
    if g.n > MATCHING_MAX_N:
        raise CapExceededError(f"matching_polynomial capped at n <= {MATCHING_MAX_N}")
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return IntPolynomial(_matching_coeffs(g.n, adj))


def matching_polynomial_direct(g: Graph) -> IntPolynomial:
    """Independent oracle: enumerate every matching explicitly (n <= 10)."""
    if g.n > 10:
        raise CapExceededError("direct matching enumeration capped at n <= 10")
    edges = g.sorted_edges()
    counts = [0] * (g.n // 2 + 1)

    def rec(i: int, used: int, size: int) -> None:
        counts[size] += 1
        for j in range(i, len(edges)):
            u, v = edges[j]
            bits = (1 << u) | (1 << v)
            if used & bits:
                continue
            rec(j + 1, used | bits, size + 1)

    rec(0, 0, 0)
    coeffs = [0] * (g.n + 1)
    for size, cnt in enumerate(counts):
        coeffs[g.n - 2 * size] = (-1) ** size * cnt
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# characteristic polynomial (division-free, exact integers)


def char_polynomial(g: Graph) -> IntPolynomial:
    """Exact characteristic polynomial of the adjacency matrix.

    Berkowitz's division-free algorithm; integer arithmetic throughout.
    """
    if g.n > MATCHING_MAX_N:
        raise CapExceededError(f"char_polynomial capped at n <= {MATCHING_MAX_N}")
    n = g.n
    if n == 0:
        return IntPolynomial((1,))
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        a[u][v] = a[v][u] = 1
    # coefficients highest degree first during the Toeplitz build
    c = [1, -a[0][0]]
    for i in range(1, n):
        # principal leading (i+1)x(i+1) block; row/col vectors against block i
        r = [a[i][j] for j in range(i)]
        s = [a[j][i] for j in range(i)]
        m = [[a[p][q] for q in range(i)] for p in range(i)]
        # t[k] = R * M^(k-2) * S for k >= 2; t[0] = 1 (leading), t[1] = -a_ii
        t = [1, -a[i][i]]
        vec = s[:]
        for _ in range(i):
            t.append(-sum(rp * vp for rp, vp in zip(r, vec)))
            vec = [sum(m[p][q] * vec[q] for q in range(i)) for p in range(i)]
        # multiply the Toeplitz column t into c
        new = [0] * (len(c) + 1)
        for j, cj in enumerate(c):
            if cj == 0:
                continue
            for k, tk in enumerate(t):
                if j + k < len(new):
                    new[j + k] += cj * tk
        c = new[: i + 2]
    c.reverse()  # constant term first
    return IntPolynomial(c)


# ---------------------------------------------------------------------------
# path trees


@dataclass(frozen=True)
class RootedTree:
    """A rooted tree; for path trees each node carries its source path."""

    tree: Graph
    root: int
    path_labels: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.tree.n


def _path_tree_structure(
    g: Graph, u: int, max_nodes: int = PATH_TREE_MAX_NODES
) -> tuple[list[int], list[tuple[int, ...]]]:
    """(parent index per node, path label per node); node 0 is the root."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    parents = [-1]
    labels: list[tuple[int, ...]] = [(u,)]
    # DFS over simple-path extensions
    stack: list[tuple[int, int]] = [(0, 1 << u)]  # (node index, visited mask)
    while stack:
        node, visited = stack.pop()
        last = labels[node][-1]
        for w in sorted(g.adjacency[last]):
            if visited >> w & 1:
                continue
            child = len(parents)
            if child >= max_nodes:
                raise CapExceededError(
                    f"path tree exceeds {max_nodes} nodes"
                )
            parents.append(node)
            labels.append(labels[node] + (w,))
            stack.append((child, visited | (1 << w)))
    return parents, labels


def path_tree(g: Graph, u: int) -> RootedTree:
    """Rooted tree of the simple paths of g starting at u."""
    parents, labels = _path_tree_structure(g, u)
    edges = [(parents[i], i) for i in range(1, len(parents))]
    return RootedTree(
        tree=Graph(len(parents), edges), root=0, path_labels=tuple(labels)
    )


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    if a == [1]:
        return list(b)
    if b == [1]:
        return list(a)
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def tree_matching_polynomial(
    parents: list[int],
) -> tuple[IntPolynomial, IntPolynomial]:
    """(mu of the tree, mu of the tree minus its root) from a parent array.

    Rooted two-polynomial recursion: with p_v = mu(subtree at v) and
    q_v = mu(subtree at v minus v) = product of the children's p, we have
    p_v = x*q_v - sum_i q_{c_i} * prod_{j != i} p_{c_j}.
    Linear in nodes up to the polynomial arithmetic, so it scales to path
    trees far beyond the general-graph cap.
    """
    n = len(parents)
    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        children[parents[v]].append(v)
    p: list[list[int] | None] = [None] * n
    q: list[list[int] | None] = [None] * n
    # children appear after parents, so reverse index order is a post-order
    for v in range(n - 1, -1, -1):
        ch = children[v]
        if not ch:
            p[v] = [0, 1]
            q[v] = [1]
            continue
        prod = [1]
        prefixes = []
        for c in ch:
            prefixes.append(prod)
            prod = _poly_mul(prod, p[c])
        qv = prod
        # x * qv
        pv = [0] + qv
        suffix = [1]
        for i in range(len(ch) - 1, -1, -1):
            c = ch[i]
            term = _poly_mul(_poly_mul(prefixes[i], suffix), q[c])
            for k, t in enumerate(term):
                pv[k] -= t
            suffix = _poly_mul(suffix, p[c])
        p[v] = pv
        q[v] = qv
        for c in ch:
            q[c] = None  # no longer needed; keep memory flat on wide trees
    return IntPolynomial(p[0]), IntPolynomial(q[0])


def mu_max_root(g: Graph) -> float:
    """Largest real root of the matching polynomial, to 1e-10 absolute."""
    if g.n == 0:
        raise ValueError("mu_max_root requires a nonempty graph")
    max_deg = max((len(s) for s in g.adjacency), default=0)
    if max_deg == 0:
        return 0.0
    if g.n <= 20:
        # int64-exact coefficients at this size; float bisection certifies
        # the root of a real-rooted polynomial to ~1e-12
        from . import _kernels

        mu = _kernels.matching_poly_masks(g.adjacency_bitmasks(), g.n)
        return float(_kernels.largest_root_realrooted(mu, float(max_deg)))
    mu = matching_polynomial(g)
    return largest_real_root(mu, float(max_deg))


def verify_pathtree_identity(g: Graph, u: int) -> bool:
    """Exact check of mu_G * mu_{T\\root} == mu_T * mu_{G\\u} for T = T(G,u)."""
    parents, _ = _path_tree_structure(g, u)
    mu_t, mu_t_minus_root = tree_matching_polynomial(parents)
    mu_g = matching_polynomial(g)
    mu_g_minus_u = matching_polynomial(g.subgraph_without_vertex(u))
    return mu_g * mu_t_minus_root == mu_t * mu_g_minus_u


# ---------------------------------------------------------------------------
# rooted embedding (used for the binomial-tree containment check)


def rooted_tree_embeds(
    pattern_parents: list[int], host_parents: list[int]
) -> bool:
    """True iff the pattern tree embeds in the host tree, root onto root,
    children injectively into children (subtree containment order)."""

    def children_of(parents: list[int]) -> list[list[int]]:
        ch: list[list[int]] = [[] for _ in range(len(parents))]
        for v in range(1, len(parents)):
            ch[parents[v]].append(v)
        return ch

    pch = children_of(pattern_parents)
    hch = children_of(host_parents)
    memo: dict[tuple[int, int], bool] = {}

    def embeds(pv: int, hv: int) -> bool:
        key = (pv, hv)
        got = memo.get(key)
        if got is not None:
            return got
        pcs, hcs = pch[pv], hch[hv]
        if len(pcs) > len(hcs):
            memo[key] = False
            return False
        # bipartite matching of pattern children into host children
        match: list[int] = [-1] * len(hcs)

        def augment(i: int, seen: set[int]) -> bool:
            for j in range(len(hcs)):
                if j in seen or not embeds(pcs[i], hcs[j]):
                    continue
                seen.add(j)
                if match[j] == -1 or augment(match[j], seen):
                    match[j] = i
                    return True
            return False

        ok = all(augment(i, set()) for i in range(len(pcs)))
        memo[key] = ok
        return ok

    return embeds(0, 0)
