"""Compiled kernels for the exhaustive corpus sweeps.

Everything here operates on bitmask adjacency (int64 per vertex, n <= 63)
or CSR arrays, and is called through the thin Python wrappers in the
public modules.  The two Grundy engines are deliberately different search
spaces: ``grundy_brute`` maximizes first-fit over vertex orderings, while
``grundy_feasible`` searches color assignments directly.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# ---------------------------------------------------------------------------
# small helpers


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def first_fit_masks(adj, order):
    """First-fit colors (1-based) for a bitmask-adjacency graph."""
    n = order.shape[0]
    colors = np.zeros(n, np.int64)
    for i in range(n):
        v = order[i]
        used = 0
        av = adj[v]
        for u in range(adj.shape[0]):
            if (av >> u) & 1 and colors[u] > 0:
                used |= 1 << (colors[u] - 1)
        c = 1
        while used & 1:
            used >>= 1
            c += 1
        colors[v] = c
    return colors


@njit(cache=True)
def first_fit_csr(indptr, indices, order):
    """First-fit colors (1-based) on a CSR adjacency; linear time."""
    n = indptr.shape[0] - 1
    colors = np.zeros(n, np.int64)
    stamp = np.full(n + 2, -1, np.int64)
    for i in range(n):
        v = order[i]
        for j in range(indptr[v], indptr[v + 1]):
            cu = colors[indices[j]]
            if cu > 0:
                stamp[cu] = v
        c = 1
        while stamp[c] == v:
            c += 1
        colors[v] = c
    return colors


# ---------------------------------------------------------------------------
# Grundy engine 1: pruned maximization of first-fit over orderings


@njit(cache=True)
def grundy_brute(adj, n):
    maxdeg = 0
    for v in range(n):
        d = _popcount(adj[v])
        if d > maxdeg:
            maxdeg = d
    cap = maxdeg + 1
    best = 0
    colors = np.zeros(n, np.int64)
    cand = np.zeros(n + 1, np.int64)
    chosen = np.zeros(n, np.int64)
    numcol = np.zeros(n + 1, np.int64)
    mask = 0
    level = 0
    while True:
        if best == cap:
            return best
        backtrack = False
        if level == n:
            if numcol[n] > best:
                best = numcol[n]
            backtrack = True
        elif numcol[level] + (n - level) <= best:
            backtrack = True
        else:
            v = cand[level]
            while v < n and (mask >> v) & 1:
                v += 1
            if v == n:
                backtrack = True
            else:
                cand[level] = v
                used = 0
                av = adj[v]
                for u in range(n):
                    if (av >> u) & 1 and (mask >> u) & 1:
                        used |= 1 << (colors[u] - 1)
                c = 1
                while used & 1:
                    used >>= 1
                    c += 1
                colors[v] = c
                chosen[level] = v
                nc = numcol[level]
                if c > nc:
                    nc = c
                numcol[level + 1] = nc
                mask |= 1 << v
                level += 1
                cand[level] = 0
        if backtrack:
            if level == 0:
                return best
            level -= 1
            u = chosen[level]
            mask ^= 1 << u
            cand[level] = u + 1


# ---------------------------------------------------------------------------
# Grundy engine 2: backtracking over greedy color assignments


@njit(cache=True)
def grundy_feasible(adj, n, k, budget):
    """Search for a greedy k-coloring (every vertex of color c is adjacent
    to colors 1..c-1; all k colors used).

    Returns (status, colors, spent): status 1 feasible, 0 infeasible,
    -1 budget exhausted.
    """
    deg = np.zeros(n, np.int64)
    for v in range(n):
        deg[v] = _popcount(adj[v])
    # static order: degree descending, index ascending
    order = np.zeros(n, np.int64)
    taken = np.zeros(n, np.uint8)
    for i in range(n):
        bd = -1
        bv = -1
        for v in range(n):
            if not taken[v] and deg[v] > bd:
                bd = deg[v]
                bv = v
        taken[bv] = 1
        order[i] = bv

    colors = np.zeros(n, np.int64)
    seen = np.zeros(n, np.int64)  # bitmask of neighbor colors
    un = deg.copy()  # uncolored-neighbor counts
    trial = np.zeros(n, np.int64)
    used_count = np.zeros(k + 1, np.int64)  # vertices per color
    used_total = 0  # number of distinct colors in use
    spent = 0
    level = 0
    trial[0] = 0
    while True:
        if level == n:
            return 1, colors, spent
        v = order[level]
        dv = deg[v]
        cmax = k if k < dv + 1 else dv + 1
        c = trial[level] + 1
        placed = False
        while c <= cmax:
            spent += 1
            if spent > budget:
                return -1, colors, spent
            if (seen[v] >> (c - 1)) & 1:
                c += 1
                continue
            # tentative assign
            ok = True
            # v itself: colors below c not yet seen must come from uncolored nbrs
            missing = (c - 1) - _popcount(seen[v] & ((1 << (c - 1)) - 1))
            if missing > un[v]:
                ok = False
            if ok:
                # surjectivity: colors still unused must fit in remaining vertices
                new_used = used_total
                if used_count[c] == 0:
                    new_used += 1
                if k - new_used > n - level - 1:
                    ok = False
            if ok:
                # neighbors already colored lose an uncolored neighbor
                av = adj[v]
                for u in range(n):
                    if (av >> u) & 1:
                        if colors[u] > 0:
                            cu = colors[u]
                            miss_u = (cu - 1) - _popcount(
                                (seen[u] | (1 << (c - 1)))
                                & ((1 << (cu - 1)) - 1)
                            )
                            if miss_u > un[u] - 1:
                                ok = False
                                break
            if ok:
                colors[v] = c
                if used_count[c] == 0:
                    used_total += 1
                used_count[c] += 1
                av = adj[v]
                for u in range(n):
                    if (av >> u) & 1:
                        seen[u] |= 1 << (c - 1)
                        un[u] -= 1
                trial[level] = c
                level += 1
                if level < n:
                    trial[level] = 0
                placed = True
                break
            c += 1
        if not placed:
            # backtrack
            if level == 0:
                return 0, colors, spent
            level -= 1
            v = order[level]
            c = colors[v]
            colors[v] = 0
            used_count[c] -= 1
            if used_count[c] == 0:
                used_total -= 1
            av = adj[v]
            for u in range(n):
                if (av >> u) & 1:
                    un[u] += 1
            # rebuild seen masks of neighbors (cheap for small n)
            for u in range(n):
                if (av >> u) & 1:
                    s = 0
                    au = adj[u]
                    for w in range(n):
                        if (au >> w) & 1 and colors[w] > 0:
                            s |= 1 << (colors[w] - 1)
                    seen[u] = s


@njit(cache=True)
def _profile_cap(adj, n):
    """Largest k compatible with the degree profile: for each color c <= k
    at least k-c+1 vertices need degree >= c-1."""
    deg = np.zeros(n, np.int64)
    for v in range(n):
        deg[v] = _popcount(adj[v])
    k = n
    while k > 1:
        feasible = True
        for c in range(1, k + 1):
            cnt = 0
            for v in range(n):
                if deg[v] >= c - 1:
                    cnt += 1
            if cnt < k - c + 1:
                feasible = False
                break
        if feasible:
            break
        k -= 1
    return k


@njit(cache=True)
def grundy_exact_masks(adj, n, budget):
    """(value, exact_flag, witness colors, spent).

    exact_flag 0 means the budget ran out and value is only the best
    greedy coloring found (a lower bound on the Grundy number).
    """
    maxdeg = 0
    for v in range(n):
        d = _popcount(adj[v])
        if d > maxdeg:
            maxdeg = d
    identity = np.arange(n)
    ff = first_fit_masks(adj, identity)
    lb = 0
    for v in range(n):
        if ff[v] > lb:
            lb = ff[v]
    best_colors = ff.copy()
    hi = maxdeg + 1
    cap2 = _profile_cap(adj, n)
    if cap2 < hi:
        hi = cap2
    spent_total = 0
    k = hi
    while k > lb:
        status, colors, spent = grundy_feasible(adj, n, k, budget - spent_total)
        spent_total += spent
        if status == 1:
            return k, 1, colors, spent_total
        if status == -1:
            return lb, 0, best_colors, spent_total
        k -= 1
    return lb, 1, best_colors, spent_total


# ---------------------------------------------------------------------------
# chromatic number


@njit(cache=True)
def chromatic_feasible(adj, n, k, budget):
    """Proper k-coloring feasibility; colors constrained to 1..k with the
    usual new-color symmetry break.  Returns (status, spent)."""
    deg = np.zeros(n, np.int64)
    for v in range(n):
        deg[v] = _popcount(adj[v])
    order = np.zeros(n, np.int64)
    taken = np.zeros(n, np.uint8)
    for i in range(n):
        bd = -1
        bv = -1
        for v in range(n):
            if not taken[v] and deg[v] > bd:
                bd = deg[v]
                bv = v
        taken[bv] = 1
        order[i] = bv
    colors = np.zeros(n, np.int64)
    maxused = np.zeros(n + 1, np.int64)
    trial = np.zeros(n, np.int64)
    spent = 0
    level = 0
    while True:
        if level == n:
            return 1, spent
        v = order[level]
        limit = maxused[level] + 1
        if limit > k:
            limit = k
        c = trial[level] + 1
        placed = False
        while c <= limit:
            spent += 1
            if spent > budget:
                return -1, spent
            conflict = False
            av = adj[v]
            for u in range(n):
                if (av >> u) & 1 and colors[u] == c:
                    conflict = True
                    break
            if not conflict:
                colors[v] = c
                trial[level] = c
                m = maxused[level]
                if c > m:
                    m = c
                maxused[level + 1] = m
                level += 1
                if level < n:
                    trial[level] = 0
                placed = True
                break
            c += 1
        if not placed:
            if level == 0:
                return 0, spent
            level -= 1
            colors[order[level]] = 0


@njit(cache=True)
def chromatic_exact_masks(adj, n, budget):
    """(value, exact_flag, spent) by iterative deepening on k."""
    if n == 0:
        return 0, 1, 0
    spent_total = 0
    for k in range(1, n + 1):
        status, spent = chromatic_feasible(adj, n, k, budget - spent_total)
        spent_total += spent
        if status == 1:
            return k, 1, spent_total
        if status == -1:
            return k, 0, spent_total
    return n, 1, spent_total


# ---------------------------------------------------------------------------
# exact small-graph polynomials (int64 coefficients)


@njit(cache=True)
def berkowitz_charpoly(a, n):
    """Characteristic polynomial coefficients (constant first) of an n x n
    int64 matrix, division-free."""
    c = np.zeros(n + 2, np.int64)
    c[0] = 1
    c[1] = -a[0, 0]
    clen = 2
    r = np.zeros(n, np.int64)
    s = np.zeros(n, np.int64)
    vec = np.zeros(n, np.int64)
    nvec = np.zeros(n, np.int64)
    t = np.zeros(n + 2, np.int64)
    new = np.zeros(n + 2, np.int64)
    for i in range(1, n):
        for j in range(i):
            r[j] = a[i, j]
            s[j] = a[j, i]
        t[0] = 1
        t[1] = -a[i, i]
        for j in range(i):
            vec[j] = s[j]
        for step in range(i):
            acc = 0
            for j in range(i):
                acc += r[j] * vec[j]
            t[2 + step] = -acc
            for pidx in range(i):
                acc2 = 0
                for q in range(i):
                    acc2 += a[pidx, q] * vec[q]
                nvec[pidx] = acc2
            for pidx in range(i):
                vec[pidx] = nvec[pidx]
        tlen = i + 2
        for j in range(i + 2):
            new[j] = 0
        for j in range(clen):
            cj = c[j]
            if cj != 0:
                for kk in range(tlen):
                    if j + kk < i + 2:
                        new[j + kk] += cj * t[kk]
        clen = i + 2
        for j in range(clen):
            c[j] = new[j]
    out = np.zeros(n + 1, np.int64)
    for j in range(n + 1):
        out[j] = c[n - j]
    return out


@njit(cache=True)
def matching_poly_masks(adj, n):
    """Matching polynomial coefficients (constant first) via the subset DP."""
    size = 1 << n
    table = np.zeros((size, n + 1), np.int64)
    table[0, 0] = 1
    for s in range(1, size):
        v = 0
        while not (s >> v) & 1:
            v += 1
        rest = s ^ (1 << v)
        # x * mu(rest)
        for j in range(n):
            table[s, j + 1] = table[rest, j]
        nb = adj[v] & rest
        while nb:
            u_bit = nb & (-nb)
            nb ^= u_bit
            rest2 = rest ^ u_bit
            for j in range(n + 1):
                table[s, j] -= table[rest2, j]
    return table[size - 1].copy()


@njit(cache=True)
def largest_root_realrooted(coeffs, hi):
    """Largest root of a real-rooted monic polynomial (int64 coefficients,
    constant first) by derivative-sequence bisection; absolute tol ~1e-12."""
    deg = coeffs.shape[0] - 1
    while deg > 0 and coeffs[deg] == 0:
        deg -= 1
    if deg <= 0:
        return 0.0
    # derivative chain in float
    chain = np.zeros((deg, deg + 1), np.float64)
    for j in range(deg + 1):
        chain[0, j] = coeffs[j]
    for d in range(1, deg):
        for j in range(deg + 1 - d):
            chain[d, j] = chain[d - 1, j + 1] * (j + 1)
    lo = -hi - 2.0
    hif = hi + 2.0
    for _ in range(80):
        mid = 0.5 * (lo + hif)
        above = True
        for d in range(deg):
            val = 0.0
            for j in range(deg - d, -1, -1):
                val = val * mid + chain[d, j]
            if val <= 0.0:
                above = False
                break
        if above:
            hif = mid
        else:
            lo = mid
        if hif - lo < 1e-13:
            break
    return 0.5 * (lo + hif)


@njit(cache=True)
def degeneracy_masks(adj, n):
    deg = np.zeros(n, np.int64)
    for v in range(n):
        deg[v] = _popcount(adj[v])
    removed = np.zeros(n, np.uint8)
    best = 0
    for _ in range(n):
        bv = -1
        bd = n + 1
        for v in range(n):
            if not removed[v] and deg[v] < bd:
                bd = deg[v]
                bv = v
        removed[bv] = 1
        if bd > best:
            best = bd
        av = adj[bv]
        for u in range(n):
            if (av >> u) & 1 and not removed[u]:
                deg[u] -= 1
    return best


@njit(cache=True)
def _connected(adj, n):
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


# ---------------------------------------------------------------------------
# full-corpus scan over all labeled connected graphs on n vertices


@njit(cache=True)
def corpus_scan(n, budget):
    """Per-edge-mask statistics for every labeled graph on n vertices.

    Returns (connected, grundy_brute, grundy_exact, exact_ok, chromatic,
    maxdeg, mindeg, nedges, degen, lambda1, mu1, mu_eq_phi, is_tree).
    Non-connected masks are left zeroed with connected=0.
    """
    m = n * (n - 1) // 2
    total = 1 << m
    pu = np.zeros(m, np.int64)
    pv = np.zeros(m, np.int64)
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            pu[idx] = u
            pv[idx] = v
            idx += 1
    conn = np.zeros(total, np.uint8)
    gb = np.zeros(total, np.int8)
    ge = np.zeros(total, np.int8)
    ge_ok = np.zeros(total, np.uint8)
    chrom = np.zeros(total, np.int8)
    maxd = np.zeros(total, np.int8)
    mind = np.zeros(total, np.int8)
    nedges = np.zeros(total, np.int8)
    degen = np.zeros(total, np.int8)
    lam1 = np.zeros(total, np.float64)
    mu1 = np.zeros(total, np.float64)
    mu_eq_phi = np.zeros(total, np.uint8)
    is_tree = np.zeros(total, np.uint8)
    adj = np.zeros(n, np.int64)
    amat = np.zeros((n, n), np.int64)
    for mask in range(total):
        for v in range(n):
            adj[v] = 0
        ne = 0
        for i in range(m):
            if (mask >> i) & 1:
                adj[pu[i]] |= 1 << pv[i]
                adj[pv[i]] |= 1 << pu[i]
                ne += 1
        if not _connected(adj, n):
            continue
        conn[mask] = 1
        nedges[mask] = ne
        dmax = 0
        dmin = n
        for v in range(n):
            d = _popcount(adj[v])
            if d > dmax:
                dmax = d
            if d < dmin:
                dmin = d
        maxd[mask] = dmax
        mind[mask] = dmin
        degen[mask] = degeneracy_masks(adj, n)
        is_tree[mask] = 1 if ne == n - 1 else 0
        gb[mask] = grundy_brute(adj, n)
        val, okflag, _, _ = grundy_exact_masks(adj, n, budget)
        ge[mask] = val
        ge_ok[mask] = okflag
        cval, cok, _ = chromatic_exact_masks(adj, n, budget)
        chrom[mask] = cval if cok else -1
        for u in range(n):
            for v in range(n):
                amat[u, v] = 1 if (adj[u] >> v) & 1 else 0
        phi = berkowitz_charpoly(amat, n)
        mu = matching_poly_masks(adj, n)
        eq = 1
        for j in range(n + 1):
            if phi[j] != mu[j]:
                eq = 0
                break
        mu_eq_phi[mask] = eq
        lam1[mask] = largest_root_realrooted(phi, float(dmax))
        mu1[mask] = largest_root_realrooted(mu, float(dmax))
    return (
        conn,
        gb,
        ge,
        ge_ok,
        chrom,
        maxd,
        mind,
        nedges,
        degen,
        lam1,
        mu1,
        mu_eq_phi,
        is_tree,
    )


# ---------------------------------------------------------------------------
# all labeled trees via Pruefer codes


@njit(cache=True)
def _prufer_decode(code, n, eu, ev):
    """Edges of the labeled tree with the given Pruefer sequence."""
    deg = np.ones(n, np.int64)
    for i in range(n - 2):
        deg[code[i]] += 1
    ptr = 0
    leaf = -1
    # smallest leaf pointer walk
    used = np.zeros(n, np.uint8)
    idx = 0
    for i in range(n - 2):
        if leaf == -1:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        v = code[i]
        eu[idx] = leaf
        ev[idx] = v
        idx += 1
        deg[leaf] = 0
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    # final edge between the two remaining degree-1 vertices
    a = -1
    for v in range(n):
        if deg[v] == 1:
            if a == -1:
                a = v
            else:
                eu[idx] = a
                ev[idx] = v
                idx += 1
                break
    _ = used


@njit(cache=True)
def _poly_mul_into(dst, a, b, n1):
    """dst = a * b for coefficient rows of length n1 (degrees must fit)."""
    for j in range(n1):
        dst[j] = 0
    for j in range(n1):
        cj = a[j]
        if cj != 0:
            for kk in range(n1 - j):
                bk = b[kk]
                if bk != 0:
                    dst[j + kk] += cj * bk


@njit(cache=True)
def _tree_matching_from_edges(eu, ev, n, head, nxt, to, order, parent,
                              child, p, q, pre, suf, tmp):
    """Matching polynomial of a tree from its edge list.

    Rooted (p, q) recursion at root 0: q_v = prod of children's p,
    p_v = x*q_v - sum_i q_{c_i} * prod_{j != i} p_{c_j}.
    All buffers are caller-allocated scratch; the result lands in p[0].
    """
    n1 = n + 1
    for v in range(n):
        head[v] = -1
    for i in range(n - 1):
        to[2 * i] = ev[i]
        nxt[2 * i] = head[eu[i]]
        head[eu[i]] = 2 * i
        to[2 * i + 1] = eu[i]
        nxt[2 * i + 1] = head[ev[i]]
        head[ev[i]] = 2 * i + 1
    for v in range(n):
        parent[v] = -2
    parent[0] = -1
    order[0] = 0
    cnt = 1
    qi = 0
    while qi < cnt:
        v = order[qi]
        qi += 1
        e = head[v]
        while e != -1:
            u = to[e]
            if parent[u] == -2:
                parent[u] = v
                order[cnt] = u
                cnt += 1
            e = nxt[e]
    for oi in range(n - 1, -1, -1):
        v = order[oi]
        nch = 0
        e = head[v]
        while e != -1:
            u = to[e]
            if parent[u] == v:
                child[nch] = u
                nch += 1
            e = nxt[e]
        for j in range(n1):
            pre[0, j] = 0
            suf[nch, j] = 0
        pre[0, 0] = 1
        suf[nch, 0] = 1
        for i in range(nch):
            _poly_mul_into(pre[i + 1], pre[i], p[child[i]], n1)
        for i in range(nch - 1, -1, -1):
            _poly_mul_into(suf[i], suf[i + 1], p[child[i]], n1)
        for j in range(n1):
            q[v, j] = pre[nch, j]
        p[v, 0] = 0
        for j in range(n):
            p[v, j + 1] = q[v, j]
        for i in range(nch):
            u = child[i]
            _poly_mul_into(tmp, pre[i], suf[i + 1], n1)
            for j in range(n1):
                cj = tmp[j]
                if cj != 0:
                    for kk in range(n1 - j):
                        qk = q[u, kk]
                        if qk != 0:
                            p[v, j + kk] -= cj * qk


@njit(cache=True)
def prufer_forest_sweep(n):
    """Check mu == phi for every labeled tree on n vertices.

    Returns (number of trees checked, number of mismatches).
    """
    if n == 1:
        return 1, 0
    total = 1
    for _ in range(n - 2):
        total *= n
    code = np.zeros(max(n - 2, 1), np.int64)
    eu = np.zeros(n - 1, np.int64)
    ev = np.zeros(n - 1, np.int64)
    head = np.zeros(n, np.int64)
    nxt = np.zeros(2 * (n - 1), np.int64)
    to = np.zeros(2 * (n - 1), np.int64)
    order = np.zeros(n, np.int64)
    parent = np.zeros(n, np.int64)
    child = np.zeros(n, np.int64)
    p = np.zeros((n, n + 1), np.int64)
    q = np.zeros((n, n + 1), np.int64)
    pre = np.zeros((n + 1, n + 1), np.int64)
    suf = np.zeros((n + 1, n + 1), np.int64)
    tmp = np.zeros(n + 1, np.int64)
    amat = np.zeros((n, n), np.int64)
    mismatches = 0
    for t in range(total):
        x = t
        for i in range(n - 2):
            code[i] = x % n
            x //= n
        _prufer_decode(code, n, eu, ev)
        _tree_matching_from_edges(eu, ev, n, head, nxt, to, order, parent,
                                  child, p, q, pre, suf, tmp)
        for i in range(n):
            for j in range(n):
                amat[i, j] = 0
        for i in range(n - 1):
            amat[eu[i], ev[i]] = 1
            amat[ev[i], eu[i]] = 1
        phi = berkowitz_charpoly(amat, n)
        for j in range(n + 1):
            if phi[j] != p[0, j]:
                mismatches += 1
                break
    return total, mismatches


# ---------------------------------------------------------------------------
# binomial-tree eigenvalue recurrence


@njit(cache=True)
def tk_sequence(k_max):
    """f_1..f_{k_max} of the largest-eigenvalue recurrence, f_1 = 0."""
    out = np.zeros(k_max, np.float64)
    f = 0.0
    for i in range(1, k_max):
        f = 0.5 * (f + np.sqrt(f * f + 4.0))
        out[i] = f
    return out
