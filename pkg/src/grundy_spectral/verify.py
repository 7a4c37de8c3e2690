"""Named verification suites: each re-checks one mathematical invariant
over an exhaustive small corpus and reports per-property pass/fail.

These power the `verify` CLI subcommand.  Default sizes are chosen to
finish in seconds; the acceptance tests run the same logic at the larger
corpus sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .atoms import binomial_tree, enumerate_atoms, min_quotient_sum
from .coloring import first_fit, grundy_bruteforce, grundy_exact
from .errors import GraphFormatError
from .graphs import (
    Graph,
    complete_bipartite,
    enumerate_connected_graphs,
    erdos_renyi,
    is_connected,
)
from .matching import (
    char_polynomial,
    matching_polynomial,
    mu_max_root,
    verify_pathtree_identity,
)
from .spectral import (
    atom_lambda_lower,
    lambda_max,
    quotient_matrix,
    quotient_sum,
    tk_lambda,
    tk_lambda_table,
)

TOL = 1e-8


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, passed, detail)


def suite_pathtree_identity(n_max: int = 5, random_n7: int = 0) -> list[CheckResult]:
    """mu_G * mu_{T\\root} == mu_T * mu_{G\\u} exactly, every root."""
    out = []
    for n in range(2, n_max + 1):
        bad = 0
        total = 0
        for g in enumerate_connected_graphs(n):
            for u in range(n):
                total += 1
                if not verify_pathtree_identity(g, u):
                    bad += 1
        out.append(
            _result(
                f"pathtree-identity-n{n}",
                bad == 0,
                f"{total - bad}/{total} (graph, root) pairs",
            )
        )
    if random_n7:
        bad = 0
        count = 0
        seed = 0
        while count < random_n7:
            g = erdos_renyi(7, 0.45, 10_000 + seed)
            seed += 1
            if not is_connected(g):
                continue
            count += 1
            if not verify_pathtree_identity(g, count % 7):
                bad += 1
        out.append(
            _result(
                "pathtree-identity-random-n7",
                bad == 0,
                f"{random_n7 - bad}/{random_n7} seeded graphs",
            )
        )
    return out


def suite_forest_mu_phi(
    tree_n_max: int = 8, nontree_n_max: int = 5
) -> list[CheckResult]:
    """mu == phi exactly on trees; strictly different off forests."""
    out = []
    for n in range(2, tree_n_max + 1):
        total, mismatches = _kernels.prufer_forest_sweep(n)
        out.append(
            _result(
                f"forest-mu-phi-trees-n{n}",
                mismatches == 0,
                f"{total} labeled trees, {mismatches} mismatches",
            )
        )
    bad = 0
    total = 0
    for n in range(3, nontree_n_max + 1):
        for g in enumerate_connected_graphs(n):
            if len(g.edges) == n - 1:
                continue
            total += 1
            if matching_polynomial(g) == char_polynomial(g):
                bad += 1
    out.append(
        _result(
            "forest-mu-phi-nontrees",
            bad == 0,
            f"{total} connected non-trees, {bad} spurious equalities",
        )
    )
    return out


def suite_grundy_engines(n_max: int = 6) -> list[CheckResult]:
    """Ordering search and assignment search agree everywhere."""
    out = []
    for n in range(1, n_max + 1):
        bad = 0
        total = 0
        for g in enumerate_connected_graphs(n):
            total += 1
            if grundy_exact(g).value != grundy_bruteforce(g):
                bad += 1
        out.append(
            _result(
                f"grundy-engines-n{n}",
                bad == 0,
                f"{total} connected graphs, {bad} disagreements",
            )
        )
    return out


def suite_atom_grundy(k_max: int = 4, n_max: int = 10) -> list[CheckResult]:
    """Every k-atom admits a first-fit ordering using k colors (reverse
    layer order), hence Grundy >= k; binomial trees hit exactly k."""
    out = []
    for k in range(1, k_max + 1):
        bad = 0
        total = 0
        for atom in enumerate_atoms(k, n_max):
            total += 1
            order = [v for layer in reversed(atom.layers) for v in layer]
            coloring = first_fit(atom.graph, order)
            if coloring.num_colors != k:
                bad += 1
        out.append(
            _result(
                f"atom-first-fit-k{k}",
                bad == 0,
                f"{total} atoms, {bad} without a k-color witness",
            )
        )
    for k in range(1, k_max + 1):
        val = grundy_exact(binomial_tree(k).graph).value
        out.append(
            _result(
                f"binomial-tree-grundy-k{k}",
                val == k,
                f"grundy = {val}, expected {k}",
            )
        )
    return out


def suite_interlacing(k_max: int = 4, n_max: int = 10) -> list[CheckResult]:
    """lambda1(G) >= lambda1(B) >= quotient_sum and the k*sqrt(k)/(4*sqrt(n)) - 2
    lower bound, on every enumerated atom."""
    out = []
    for k in range(2, k_max + 1):
        bad_chain = 0
        bad_lower = 0
        total = 0
        for atom in enumerate_atoms(k, n_max):
            total += 1
            lam = lambda_max(atom.graph).lambda1
            b = quotient_matrix(atom.sizes)
            lam_b = b.lambda1()
            qs = quotient_sum(atom.sizes)
            if not (lam >= lam_b - TOL and lam_b >= qs - TOL):
                bad_chain += 1
            if lam < atom_lambda_lower(k, atom.graph.n) - TOL:
                bad_lower += 1
        out.append(
            _result(
                f"interlacing-chain-k{k}",
                bad_chain == 0,
                f"{total} atoms, {bad_chain} chain violations",
            )
        )
        out.append(
            _result(
                f"atom-lambda-lower-k{k}",
                bad_lower == 0,
                f"{total} atoms, {bad_lower} lower-bound violations",
            )
        )
    return out


def suite_minimizer(n_max: int = 12) -> list[CheckResult]:
    """The quotient-sum minimizer is a non-decreasing sequence."""
    bad = []
    total = 0
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            got = min_quotient_sum(n, k)
            if got is None:
                continue
            total += 1
            _, seq = got
            if list(seq) != sorted(seq):
                bad.append((n, k, seq))
    return [
        _result(
            "minimizer-non-decreasing",
            not bad,
            f"{total} (n,k) pairs checked" + (f"; violations: {bad[:3]}" if bad else ""),
        )
    ]


def suite_sandwich(k_max: int = 10**5) -> list[CheckResult]:
    """sqrt(2(k-1)) >= f_k for all k, and the gap shrinks with k."""
    table = tk_lambda_table(k_max)
    ks = np.arange(1, k_max + 1)
    gaps = np.sqrt(2.0 * (ks - 1)) - table
    ok_sign = bool(np.all(gaps >= -1e-12))
    ok_shrink = k_max < 1000 or gaps[k_max - 1] < gaps[999]
    return [
        _result("sandwich-upper", ok_sign, f"min gap {gaps.min():.3e}"),
        _result(
            "sandwich-gap-shrinks",
            bool(ok_shrink),
            f"gap(k={k_max}) = {gaps[-1]:.3e}",
        ),
    ]


def suite_first_fit(trials: int = 200) -> list[CheckResult]:
    """First-fit always yields a proper, gap-free coloring."""
    rng = np.random.Generator(np.random.PCG64(7))
    bad = 0
    for t in range(trials):
        n = int(rng.integers(1, 12))
        g = erdos_renyi(n, float(rng.random()), int(rng.integers(0, 2**32)))
        order = rng.permutation(n).tolist()
        c = first_fit(g, order)
        if not (c.is_proper(g) and c.is_gap_free()):
            bad += 1
    return [
        _result("first-fit-proper-gap-free", bad == 0, f"{trials} random graphs")
    ]


def suite_lambda_bounds(n_max: int = 6) -> list[CheckResult]:
    """sqrt(max_degree) <= lambda1 <= max_degree on connected graphs, with
    the stated equality cases (stars on the left, regular on the right)."""
    bad = 0
    total = 0
    for n in range(2, n_max + 1):
        for g in enumerate_connected_graphs(n):
            total += 1
            lam = lambda_max(g).lambda1
            d = max(len(s) for s in g.adjacency)
            if not (math.sqrt(d) - TOL <= lam <= d + TOL):
                bad += 1
    star_ok = abs(lambda_max(complete_bipartite(1, 4)).lambda1 - 2.0) < TOL
    return [
        _result("lambda-sandwich", bad == 0, f"{total} connected graphs"),
        _result("lambda-star-equality", star_ok, "K_{1,4} -> 2"),
    ]


def suite_bound_soundness(n_max: int = 6) -> list[CheckResult]:
    """Exact Grundy <= each sound upper bound on the connected corpus."""
    from .bounds import (
        bound_degeneracy_log,
        bound_maxdeg,
        bound_edges,
        bound_size_corollary,
        bound_spectral_recurrence,
        bound_spectral_remark,
        bound_wilf,
    )
    from .coloring import chromatic_number
    from .graphs import degeneracy

    bad: dict[str, int] = {}
    total = 0
    for n in range(2, n_max + 1):
        for g in enumerate_connected_graphs(n):
            total += 1
            gamma = grundy_exact(g).value
            lam = lambda_max(g).lambda1
            mu = mu_max_root(g)
            d = max(len(s) for s in g.adjacency)
            checks = {
                "maxdeg_plus_one": bound_maxdeg(d),
                "spectral_recurrence": bound_spectral_recurrence(mu),
                "spectral_remark": bound_spectral_remark(mu),
                "size_corollary": bound_size_corollary(lam, n),
                "edges_wu_elphick": bound_edges(len(g.edges), lam, n),
                "degeneracy_log": bound_degeneracy_log(degeneracy(g), n),
            }
            for name, val in checks.items():
                if gamma > val + TOL:
                    bad[name] = bad.get(name, 0) + 1
            chi = chromatic_number(g)
            if chi is not None and chi > bound_wilf(lam) + TOL:
                bad["wilf_chromatic"] = bad.get("wilf_chromatic", 0) + 1
    return [
        _result(
            "bound-soundness",
            not bad,
            f"{total} connected graphs" + (f"; violations {bad}" if bad else ""),
        )
    ]


SUITES = {
    "pathtree-identity": suite_pathtree_identity,
    "forest-mu-phi": suite_forest_mu_phi,
    "grundy-engines": suite_grundy_engines,
    "atom-grundy": suite_atom_grundy,
    "interlacing": suite_interlacing,
    "minimizer": suite_minimizer,
    "sandwich": suite_sandwich,
    "first-fit": suite_first_fit,
    "lambda-bounds": suite_lambda_bounds,
    "bound-soundness": suite_bound_soundness,
}


def run_suite(name: str) -> list[CheckResult]:
    if name not in SUITES:
        raise GraphFormatError(
            f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}"
        )
    return SUITES[name]()
