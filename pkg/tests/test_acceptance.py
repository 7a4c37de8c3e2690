"""Acceptance gate: one test per release criterion, each printing a
single pass/fail line with its measured runtime.

The exhaustive 7-vertex corpus scan and the full atom enumeration are
session fixtures (see conftest), so their cost is paid once; the timers
here cover the criterion's own verification logic.
"""

from __future__ import annotations

import math
import time

import numpy as np
import pytest
from click.testing import CliRunner

from grundy_spectral import _kernels
from grundy_spectral.atoms import binomial_tree, min_quotient_sum
from grundy_spectral.cli import main as cli_main
from grundy_spectral.coloring import grundy_exact
from grundy_spectral.graphs import (
    complete_bipartite,
    complete_graph,
    enumerate_connected_graphs,
    erdos_renyi,
    is_connected,
)
from grundy_spectral.matching import verify_pathtree_identity
from grundy_spectral.spectral import (
    atom_lambda_lower,
    lambda_max,
    quotient_matrix,
    quotient_sum,
    tk_lambda,
)

TOL = 1e-8


def _report(num: int, label: str, passed: bool, started: float) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] criterion {num}: {label} ({time.time() - started:.1f}s)")
    assert passed, f"criterion {num} failed: {label}"


@pytest.fixture(scope="module")
def atom_spectra(atoms_by_k):
    """(atom, lambda1, mu1) for every enumerated atom, via exact integer
    polynomials and certified root bisection."""
    out = {}
    for k, atoms in atoms_by_k.items():
        rows = []
        for atom in atoms:
            g = atom.graph
            hi = float(max(len(s) for s in g.adjacency)) if g.edges else 0.0
            if hi == 0.0:
                rows.append((atom, 0.0, 0.0))
                continue
            phi = _kernels.berkowitz_charpoly(g.adjacency_matrix(), g.n)
            mu = _kernels.matching_poly_masks(g.adjacency_bitmasks(), g.n)
            lam1 = float(_kernels.largest_root_realrooted(phi, hi))
            mu1 = float(_kernels.largest_root_realrooted(mu, hi))
            rows.append((atom, lam1, mu1))
        out[k] = rows
    return out


def test_criterion_1_sandwich(tk_table):
    t0 = time.time()
    ks = np.arange(1, tk_table.shape[0] + 1)
    gaps = np.sqrt(2.0 * (ks - 1)) - tk_table
    ok = bool(np.all(gaps[1:] >= 0.0)) and gaps[10**6 - 1] < gaps[10**3 - 1]
    _report(1, "sqrt(2(k-1)) dominates f_k up to 1e6, gap shrinking", ok, t0)
    assert time.time() - t0 < 1.0


def test_criterion_2_recurrence_vs_eigenvalue():
    t0 = time.time()
    ok = True
    for k in range(1, 13):
        lam = lambda_max(binomial_tree(k).graph).lambda1
        if abs(lam - tk_lambda(k)) >= 1e-7:
            ok = False
    _report(2, "recurrence matches tree eigenvalues for k <= 12", ok, t0)
    assert time.time() - t0 < 10.0


def test_criterion_3_pathtree_identity():
    t0 = time.time()
    ok = True
    for n in range(2, 7):
        for g in enumerate_connected_graphs(n):
            for u in range(n):
                if not verify_pathtree_identity(g, u):
                    ok = False
    count = 0
    seed = 0
    while count < 500:
        g = erdos_renyi(7, 0.5, 31_000 + seed)
        seed += 1
        if not is_connected(g):
            continue
        if not verify_pathtree_identity(g, count % 7):
            ok = False
        count += 1
    _report(3, "path-tree identity exact on n<=6 corpus + 500 random n=7", ok, t0)
    assert time.time() - t0 < 300.0


def test_criterion_4_forest_equivalence(corpus6):
    t0 = time.time()
    ok = True
    for n in range(2, 10):
        total, mismatches = _kernels.prufer_forest_sweep(n)
        if total != n ** (n - 2) or mismatches != 0:
            ok = False
    conn, *_rest = corpus6
    mu_eq_phi, is_tree = corpus6[11], corpus6[12]
    nontree = (conn == 1) & (is_tree == 0)
    if np.any(mu_eq_phi[nontree] == 1):
        ok = False
    _report(4, "mu == phi exactly on trees n<=9, never on non-trees n<=6", ok, t0)
    assert time.time() - t0 < 120.0


def test_criterion_5_atom_eigenvalue_chain(atom_spectra, tk_table):
    t0 = time.time()
    ok = True
    for k, rows in atom_spectra.items():
        f_k = float(tk_table[k - 1])
        tree_n = 2 ** (k - 1)
        for atom, lam1, mu1 in rows:
            if not (lam1 >= mu1 - TOL and mu1 >= f_k - TOL):
                ok = False
            at_tree_value = abs(mu1 - f_k) <= TOL
            is_tk = len(atom.graph.edges) == atom.graph.n - 1
            if is_tk and atom.graph.n != tree_n:
                ok = False  # the tree atom must be the binomial tree
            if at_tree_value != is_tk:
                ok = False  # equality characterizes exactly the tree atom
    _report(5, "lambda1 >= mu1 >= f_k on all atoms; equality only on T_k", ok, t0)
    assert time.time() - t0 < 300.0


def test_criterion_6_exact_engines(corpus7):
    t0 = time.time()
    conn, gb, ge, ge_ok = corpus7[0], corpus7[1], corpus7[2], corpus7[3]
    mask = conn == 1
    ok = bool(np.all(ge_ok[mask] == 1)) and bool(np.all(gb[mask] == ge[mask]))
    for k in range(1, 6):
        if grundy_exact(binomial_tree(k).graph).value != k:
            ok = False
    for m in range(1, 5):
        for n in range(1, 5):
            if grundy_exact(complete_bipartite(m, n)).value != 2:
                ok = False
    _report(6, "both Grundy engines agree on all connected n<=7", ok, t0)
    assert time.time() - t0 < 600.0


def test_criterion_7_bound_soundness(corpus7, tk_table):
    t0 = time.time()
    conn = corpus7[0] == 1
    gamma = corpus7[2][conn].astype(np.float64)
    maxd = corpus7[5][conn].astype(np.float64)
    nedges = corpus7[7][conn].astype(np.float64)
    degen = corpus7[8][conn].astype(np.float64)
    lam1 = corpus7[9][conn]
    mu1 = corpus7[10][conn]
    n = 7.0
    ok = bool(np.all(corpus7[3][conn] == 1))  # exact values everywhere
    # largest k with f_k <= mu1 + 1e-9
    recurrence = np.searchsorted(tk_table, mu1 + 1e-9, side="right")
    checks = [
        gamma <= maxd + 1.0 + TOL,
        gamma <= recurrence + TOL,
        gamma <= (mu1 + 0.5) ** 2 / 2.0 + 1.0 + TOL,
        gamma <= (4.0 * math.sqrt(n) * (lam1 + 2.0)) ** (2.0 / 3.0) + TOL,
        gamma <= 2.0 * nedges / lam1 + 1e-6,
        gamma <= degen * math.log2(n) + degen + 1.0 + TOL,
    ]
    for arr in checks:
        if not bool(np.all(arr)):
            ok = False
    # tightness witnesses
    for k in range(1, 6):
        t = binomial_tree(k)
        mu_t = float(
            _kernels.largest_root_realrooted(
                _kernels.matching_poly_masks(
                    t.graph.adjacency_bitmasks(), t.graph.n
                ),
                float(t.graph.n),
            )
        ) if t.graph.edges else 0.0
        bound = int(np.searchsorted(tk_table, mu_t + 1e-9, side="right"))
        if bound != k or grundy_exact(t.graph).value != k:
            ok = False
    for nn in range(2, 9):
        kn = complete_graph(nn)
        lam = lambda_max(kn).lambda1
        edges_bound = 2.0 * len(kn.edges) / lam
        if abs(edges_bound - nn) > 1e-6 or grundy_exact(kn).value != nn:
            ok = False
    _report(7, "every bound dominates exact Grundy on connected n<=7", ok, t0)
    assert time.time() - t0 < 600.0


def test_criterion_8_interlacing_and_lower_bound(atom_spectra):
    t0 = time.time()
    ok = True
    for k, rows in atom_spectra.items():
        if k < 2:
            continue
        for atom, lam1, _mu1 in rows:
            lam_b = quotient_matrix(atom.sizes).lambda1()
            qs = quotient_sum(atom.sizes)
            if not (lam1 >= lam_b - TOL and lam_b >= qs - TOL):
                ok = False
            if lam1 < atom_lambda_lower(k, atom.graph.n) - TOL:
                ok = False
    _report(8, "interlacing chain and k*sqrt(k)/(4*sqrt(n))-2 on all atoms", ok, t0)
    assert time.time() - t0 < 60.0


def test_criterion_9_minimizer_monotone():
    t0 = time.time()
    ok = True
    for n in range(1, 15):
        for k in range(1, n + 1):
            got = min_quotient_sum(n, k)
            if got is None:
                continue
            _, seq = got
            if list(seq) != sorted(seq):
                ok = False
    _report(9, "quotient-sum minimizer is non-decreasing for n <= 14", ok, t0)
    assert time.time() - t0 < 60.0


def test_criterion_10_random_graph_trends():
    from grundy_spectral.experiments import Family, SweepConfig, run_sweep

    t0 = time.time()
    config = SweepConfig(
        family=Family.SPARSE_C_OVER_N,
        n_values=(10**3, 10**4, 10**5),
        trials=10,
        rng_seed=42,
        c=2.0,
    )
    rows = run_sweep(config).rows
    ok = True
    hits = 0
    for r in rows:
        target = max(math.sqrt(r.max_degree), 2.0)  # np = c = 2
        if 0.75 * target <= r.lambda1 <= 1.25 * target:
            hits += 1
    if hits < 0.8 * len(rows):
        ok = False
    medians = []
    for n in config.n_values:
        sub = [r for r in rows if r.n == n]
        medians.append(
            float(
                np.median(
                    [r.bounds["spectral_recurrence"] / r.ref_lnn_lnlnn for r in sub]
                )
            )
        )
    if not (medians[0] >= medians[1] >= medians[2]):
        ok = False
    sharp = sum(
        1
        for r in rows
        if r.n == 10**5
        and r.bounds["spectral_recurrence"] < r.bounds["maxdeg_plus_one"]
    )
    if sharp < 9:
        ok = False
    _report(10, "sparse-graph eigenvalue and bound trends at seed 42", ok, t0)
    assert time.time() - t0 < 300.0


def test_criterion_11_cli_determinism(tmp_path):
    t0 = time.time()
    runner = CliRunner()
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "family=sparse_c_over_n\nc=2\nn_values=100,200\ntrials=3\nrng_seed=42\n"
    )
    sweep_a = runner.invoke(cli_main, ["sweep", str(cfg)])
    sweep_b = runner.invoke(cli_main, ["sweep", str(cfg)])
    tk_a = runner.invoke(cli_main, ["tk", "--k-max", "1000"])
    tk_b = runner.invoke(cli_main, ["tk", "--k-max", "1000"])
    ok = (
        sweep_a.exit_code == 0
        and sweep_a.stdout == sweep_b.stdout
        and tk_a.exit_code == 0
        and tk_a.stdout == tk_b.stdout
    )
    _report(11, "sweep and tk outputs byte-identical across runs", ok, t0)
