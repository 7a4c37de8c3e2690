"""First-fit coloring and two independent exact Grundy engines.

The brute-force engine maximizes first-fit over vertex orderings (the
definition, usable as an oracle up to n = 9).  The exact engine searches
greedy color assignments directly, which scales to ~20 vertices; a
feasible assignment is converted to a witness ordering by listing the
color classes in increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CapExceededError, GraphFormatError
from .graphs import Graph

BRUTEFORCE_MAX_N = 9
DEFAULT_EXPANSION_BUDGET = 10**8


@dataclass(frozen=True)
class Coloring:
    color: tuple[int, ...]  # per-vertex, 1-based
    num_colors: int

    def is_proper(self, g: Graph) -> bool:
        return all(self.color[u] != self.color[v] for u, v in g.edges)

    def is_gap_free(self) -> bool:
        used = set(self.color)
        return used == set(range(1, self.num_colors + 1)) if used else True

    def to_json(self) -> dict:
        return {"color": list(self.color), "num_colors": self.num_colors}


@dataclass(frozen=True)
class GrundyWitness:
    ordering: tuple[int, ...]
    coloring: Coloring

    def to_json(self) -> dict:
        return {"ordering": list(self.ordering), "coloring": self.coloring.to_json()}


@dataclass(frozen=True)
class GrundyResult:
    """Result of an exact engine; ``exact`` False means the budget ran out
    and ``value`` is only the best lower bound found."""

    value: int
    exact: bool
    witness: GrundyWitness | None


def _check_permutation(g: Graph, ordering) -> np.ndarray:
    order = np.asarray(list(ordering), dtype=np.int64)
    if order.shape != (g.n,) or sorted(order.tolist()) != list(range(g.n)):
        raise GraphFormatError("ordering is not a permutation of the vertices")
    return order


def first_fit(g: Graph, ordering) -> Coloring:
    """Color vertices in the given order, smallest color not among the
    already-colored neighbors."""
    order = _check_permutation(g, ordering)
    if g.n == 0:
        return Coloring((), 0)
    colors = _kernels.first_fit_masks(g.adjacency_bitmasks(), order)
    return Coloring(tuple(int(c) for c in colors), int(colors.max()))


def grundy_bruteforce(g: Graph) -> int:
    """Max first-fit colors over all n! orderings (pruned, still the
    definitional search space)."""
    if g.n > BRUTEFORCE_MAX_N:
        raise CapExceededError(f"grundy_bruteforce capped at n <= {BRUTEFORCE_MAX_N}")
    if g.n == 0:
        return 0
    return int(_kernels.grundy_brute(g.adjacency_bitmasks(), g.n))


def _witness_from_colors(g: Graph, colors: np.ndarray) -> GrundyWitness:
    order = sorted(range(g.n), key=lambda v: (colors[v], v))
    coloring = first_fit(g, order)
    return GrundyWitness(tuple(order), coloring)


def grundy_exact(
    g: Graph, budget: int = DEFAULT_EXPANSION_BUDGET
) -> GrundyResult:
    """Exact Grundy number via backtracking over greedy colorings."""
    if g.n == 0:
        return GrundyResult(0, True, None)
    if g.n > 63:
        raise CapExceededError("grundy_exact capped at n <= 63")
    val, exact_flag, colors, _ = _kernels.grundy_exact_masks(
        g.adjacency_bitmasks(), g.n, budget
    )
    witness = _witness_from_colors(g, colors)
    return GrundyResult(int(val), bool(exact_flag), witness)


def chromatic_number(
    g: Graph, budget: int = DEFAULT_EXPANSION_BUDGET
) -> int | None:
    """Exact chromatic number; None when the budget runs out."""
    if g.n == 0:
        return 0
    if g.n > 63:
        raise CapExceededError("chromatic_number capped at n <= 63")
    val, exact_flag, _ = _kernels.chromatic_exact_masks(
        g.adjacency_bitmasks(), g.n, budget
    )
    return int(val) if exact_flag else None
