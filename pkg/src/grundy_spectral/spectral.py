"""Largest adjacency eigenvalue, the binomial-tree eigenvalue recurrence,
and the layer-size quotient matrix with its interlacing chain."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
import scipy.sparse

from . import _kernels
from .atoms import is_valid_sequence, quotient_sum_raw
from .errors import GraphFormatError
from .graphs import Graph
from .matching import char_polynomial
from .polynomials import largest_real_root

EXACT_POLY_MAX_N = 30
_KERNEL_POLY_MAX_N = 20  # int64 coefficients comfortably exact up to here

POWER_ITER_MAX = 10**5
POWER_ITER_RTOL = 1e-12
RESIDUAL_TARGET = 1e-9


class SpectralMethod(str, Enum):
    EXACT_POLY = "exact_poly"
    ITERATIVE = "iterative"


@dataclass(frozen=True)
class SpectralSummary:
    lambda1: float
    method: SpectralMethod
    residual: float


def _lambda_iterative(g: Graph) -> SpectralSummary:
    # shifted power iteration: any positive shift kills the +-lambda1
    # oscillation of bipartite graphs (|lambda_n| <= lambda1), and a small
    # one preserves the relative gap (lambda1+s)/(lambda2+s) that sets the
    # convergence rate, so shift 1 beats shift max_degree by an order of
    # magnitude on sparse graphs; the all-ones start has positive overlap
    # with the Perron vector of every component
    n = g.n
    rows, cols = [], []
    for u, v in g.edges:
        rows += [u, v]
        cols += [v, u]
    a = scipy.sparse.csr_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(n, n)
    )
    max_deg = max((len(s) for s in g.adjacency), default=0)
    if max_deg == 0:
        return SpectralSummary(0.0, SpectralMethod.ITERATIVE, 0.0)
    shift = 1.0
    v = np.ones(n) / np.sqrt(n)
    rq_prev = -np.inf
    lam = 0.0
    residual = np.inf
    for _ in range(POWER_ITER_MAX):
        av = a @ v
        lam = float(v @ av)
        residual = float(np.max(np.abs(av - lam * v)) / np.max(np.abs(v)))
        converged = abs(lam - rq_prev) <= POWER_ITER_RTOL * max(1.0, abs(lam))
        # the Rayleigh quotient converges twice as fast as the vector, so
        # keep going until the residual certificate is tight as well
        if converged and residual <= RESIDUAL_TARGET:
            break
        rq_prev = lam
        w = av + shift * v
        v = w / np.linalg.norm(w)
    return SpectralSummary(lam, SpectralMethod.ITERATIVE, residual)


def lambda_max(g: Graph) -> SpectralSummary:
    """Largest adjacency eigenvalue to 1e-8 or better."""
    if g.n == 0:
        raise GraphFormatError("lambda_max requires n >= 1")
    max_deg = max((len(s) for s in g.adjacency), default=0)
    if max_deg == 0:
        return SpectralSummary(0.0, SpectralMethod.EXACT_POLY, 0.0)
    if g.n <= _KERNEL_POLY_MAX_N:
        phi = _kernels.berkowitz_charpoly(g.adjacency_matrix(), g.n)
        lam = float(_kernels.largest_root_realrooted(phi, float(max_deg)))
        return SpectralSummary(lam, SpectralMethod.EXACT_POLY, 0.0)
    if g.n <= EXACT_POLY_MAX_N:
        lam = largest_real_root(char_polynomial(g), float(max_deg))
        return SpectralSummary(lam, SpectralMethod.EXACT_POLY, 0.0)
    return _lambda_iterative(g)


# ---------------------------------------------------------------------------
# binomial-tree recurrence

_TK_CACHE = np.zeros(0)


def tk_lambda_table(k_max: int) -> np.ndarray:
    """f_1..f_{k_max} with f_1 = 0 and
    f_{k+1} = (f_k + sqrt(f_k^2 + 4)) / 2.

    The recurrence is monotone increasing with Lipschitz constant below 1
    in f_k, so double precision accumulates no meaningful error over 10^6
    steps (each step's relative rounding is ~1e-16 and is contracted, not
    amplified, downstream).
    """
    global _TK_CACHE
    if k_max < 1:
        raise GraphFormatError("k must be >= 1")
    if _TK_CACHE.shape[0] < k_max:
        _TK_CACHE = _kernels.tk_sequence(max(k_max, 1024))
    return _TK_CACHE[:k_max]


def tk_lambda(k: int) -> float:
    """lambda_1 of the k-th binomial tree via the eigenvalue recurrence."""
    return float(tk_lambda_table(k)[k - 1])


# ---------------------------------------------------------------------------
# quotient matrix


@dataclass(frozen=True)
class QuotientMatrix:
    k: int
    entries: np.ndarray
    sizes: tuple[int, ...]

    def lambda1(self) -> float:
        return float(np.linalg.eigvalsh(self.entries)[-1])


def quotient_matrix(sizes) -> QuotientMatrix:
    """Normalized partition compression of an atom's adjacency by layers:
    entry (i, j) = sqrt(a_i / a_j) for i < j, symmetric, zero diagonal."""
    sizes = tuple(int(a) for a in sizes)
    if not is_valid_sequence(sizes):
        raise GraphFormatError(f"invalid layer-size sequence {sizes}")
    k = len(sizes)
    b = np.zeros((k, k))
    for i in range(k):
        for j in range(i + 1, k):
            b[i, j] = b[j, i] = np.sqrt(sizes[i] / sizes[j])
    return QuotientMatrix(k=k, entries=b, sizes=sizes)


def quotient_sum(sizes) -> float:
    """(2/k) * sum over i < j of sqrt(a_i / a_j); a lower bound on the
    quotient matrix's largest eigenvalue by averaging."""
    sizes = tuple(int(a) for a in sizes)
    if not is_valid_sequence(sizes):
        raise GraphFormatError(f"invalid layer-size sequence {sizes}")
    return 2.0 / len(sizes) * quotient_sum_raw(sizes)


def atom_lambda_lower(k: int, n: int) -> float:
    """Lower bound k*sqrt(k)/(4*sqrt(n)) - 2 on a k-atom's largest
    eigenvalue."""
    if k < 1 or n < 1:
        raise GraphFormatError("k and n must be >= 1")
    return k * np.sqrt(k) / (4.0 * np.sqrt(n)) - 2.0
