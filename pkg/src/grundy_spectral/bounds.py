"""Upper bounds on the Grundy number, plus an aggregating per-graph report.

Each evaluator is a pure function of the quantities it depends on, so
bounds can be recomputed from logged spectral data without re-analyzing
the graph.  Disconnected graphs: the Grundy number is the max over
components, and the spectral quantities of the whole graph equal the max
over components, so every evaluator stays valid as-is; reports flag the
convention.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .coloring import (
    DEFAULT_EXPANSION_BUDGET,
    chromatic_number,
    grundy_exact,
)
from .errors import GraphFormatError
from .graphs import Graph, degeneracy, degree_stats
from .matching import MATCHING_MAX_N, mu_max_root
from .spectral import lambda_max, tk_lambda_table

BOUND_NAMES = (
    "maxdeg_plus_one",
    "wilf",
    "spectral_recurrence",
    "spectral_remark",
    "size_corollary",
    "edges_wu_elphick",
    "degeneracy_log",
    "bollobas_half_density",
)

BOLLOBAS_MIN_N = 16
_RECURRENCE_SLACK = 1e-9


def bound_maxdeg(delta: int) -> int:
    """Delta + 1: greedy coloring never needs more."""
    return delta + 1


def bound_wilf(lambda1: float) -> float:
    """1 + lambda1; bounds the chromatic number (not the Grundy number),
    reported for comparison."""
    return 1.0 + lambda1


def bound_spectral_recurrence(mu1: float) -> int:
    """Largest k whose binomial-tree eigenvalue f_k is <= mu1 (+1e-9).

    A graph with Grundy number >= k has mu1 >= f_k, so this is a valid
    upper bound on the Grundy number of a connected graph.  Valid with
    lambda1 in place of mu1 as well, since mu1 <= lambda1.
    """
    if mu1 < -_RECURRENCE_SLACK:
        raise GraphFormatError("mu1 must be >= 0")
    # f_k <= sqrt(2(k-1)), so k = mu1^2/2 + 2 is safely past the answer
    hi = int(mu1 * mu1 / 2.0) + 2
    table = tk_lambda_table(hi)
    k = 1
    while k < hi and table[k] <= mu1 + _RECURRENCE_SLACK:
        k += 1
    return k


def bound_spectral_remark(mu1: float) -> float:
    """(mu1 + 1/2)^2 / 2 + 1, the closed form with the vanishing term
    replaced by its proven cap of 1/2."""
    return (mu1 + 0.5) ** 2 / 2.0 + 1.0


def bound_size_corollary(lambda1: float, n: int) -> float:
    """(4*sqrt(n)*(lambda1+2))^(2/3): inverts the atom eigenvalue lower
    bound k*sqrt(k)/(4*sqrt(n)) - 2 <= lambda1 for k."""
    if n < 1 or lambda1 < 0:
        raise GraphFormatError("need n >= 1 and lambda1 >= 0")
    return (4.0 * math.sqrt(n) * (lambda1 + 2.0)) ** (2.0 / 3.0)


def bound_edges(num_edges: int, lambda1: float, n: int | None = None) -> float:
    """2|E|/lambda1; tight on complete graphs.

    For an empty graph lambda1 = 0 and the quotient is undefined; the
    bound degrades to the trivial n (every color class a singleton), which
    requires passing n.
    """
    if lambda1 > 0:
        return 2.0 * num_edges / lambda1
    if n is None:
        raise GraphFormatError("edgeless graph: pass n for the fallback bound")
    return float(n)


def bound_degeneracy_log(d: int, n: int) -> float:
    """d*log2(n) + d + 1.

    The underlying guarantee is only an order-of-growth statement; the
    leading constant 1 here is a heuristic choice, checked empirically on
    the small-graph corpus but not proven.  Outputs carry the
    HEURISTIC-CONSTANT label for that reason.
    """
    if n < 2:
        raise GraphFormatError("degeneracy-log bound needs n >= 2")
    return d * math.log2(n) + d + 1


def bound_bollobas(n: int) -> float:
    """(1 + 5 ln ln n / ln n) * n / log2(n); the almost-sure Grundy value
    for density-1/2 random graphs, reported informationally only."""
    if n < BOLLOBAS_MIN_N:
        raise GraphFormatError(
            f"half-density bound needs n >= {BOLLOBAS_MIN_N} (ln ln n > 0)"
        )
    ln_n = math.log(n)
    return (1.0 + 5.0 * math.log(ln_n) / ln_n) * n / math.log2(n)


# ---------------------------------------------------------------------------
# aggregated report

CSV_HEADER = (
    "graph_id,n,num_edges,max_degree,degeneracy,lambda1,mu1,"
    "exact_grundy,exact_chromatic," + ",".join(BOUND_NAMES)
)


@dataclass(frozen=True)
class BoundReport:
    graph_id: str
    n: int
    num_edges: int
    max_degree: int
    degeneracy: int
    lambda1: float
    mu1: float | None
    exact_grundy: int | None
    exact_chromatic: int | None
    bounds: dict[str, float | int | None]
    notes: dict[str, str]

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "num_edges": self.num_edges,
            "max_degree": self.max_degree,
            "degeneracy": self.degeneracy,
            "lambda1": self.lambda1,
            "mu1": self.mu1,
            "exact_grundy": self.exact_grundy,
            "exact_chromatic": self.exact_chromatic,
            "bounds": dict(self.bounds),
            "notes": dict(self.notes),
        }

    def to_csv_row(self) -> str:
        def cell(v) -> str:
            if v is None:
                return ""
            if isinstance(v, float):
                return repr(v)
            return str(v)

        fixed = [
            self.graph_id,
            self.n,
            self.num_edges,
            self.max_degree,
            self.degeneracy,
            self.lambda1,
            self.mu1,
            self.exact_grundy,
            self.exact_chromatic,
        ]
        return ",".join(cell(v) for v in fixed) + "," + ",".join(
            cell(self.bounds.get(name)) for name in BOUND_NAMES
        )

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def bound_report(
    g: Graph,
    exact_budget: int = DEFAULT_EXPANSION_BUDGET,
    graph_id: str = "graph",
) -> BoundReport:
    """Compute every applicable bound next to exact values when feasible."""
    max_degree, _ = degree_stats(g)
    degen = degeneracy(g)
    lam1 = lambda_max(g).lambda1 if g.n >= 1 else 0.0
    mu1 = None
    if 1 <= g.n <= MATCHING_MAX_N:
        mu1 = mu_max_root(g)
    exact_g = None
    exact_chi = None
    notes = {
        "degeneracy_log": "HEURISTIC-CONSTANT",
        "bollobas_half_density": "informational: models density-1/2 random graphs only",
        "wilf": "bounds the chromatic number, not the Grundy number",
        "disconnected": "Grundy = max over components; spectral data is whole-graph",
    }
    if g.n <= 63 and g.n >= 1:
        res = grundy_exact(g, exact_budget)
        if res.exact:
            exact_g = res.value
        chi = chromatic_number(g, exact_budget)
        if chi is not None:
            exact_chi = chi
    bounds: dict[str, float | int | None] = {
        "maxdeg_plus_one": bound_maxdeg(max_degree),
        "wilf": bound_wilf(lam1),
        # mu1 is sharper when available; lambda1 >= mu1 keeps it valid
        "spectral_recurrence": bound_spectral_recurrence(
            mu1 if mu1 is not None else lam1
        ),
        "spectral_remark": bound_spectral_remark(
            mu1 if mu1 is not None else lam1
        ),
        "size_corollary": bound_size_corollary(lam1, g.n) if g.n else None,
        "edges_wu_elphick": bound_edges(len(g.edges), lam1, g.n),
        "degeneracy_log": (
            bound_degeneracy_log(degen, g.n) if g.n >= 2 else None
        ),
        "bollobas_half_density": (
            bound_bollobas(g.n) if g.n >= BOLLOBAS_MIN_N else None
        ),
    }
    if mu1 is None:
        notes["spectral_recurrence"] = "computed from lambda1 (mu1 infeasible)"
        notes["spectral_remark"] = "computed from lambda1 (mu1 infeasible)"
    return BoundReport(
        graph_id=graph_id,
        n=g.n,
        num_edges=len(g.edges),
        max_degree=max_degree,
        degeneracy=degen,
        lambda1=lam1,
        mu1=mu1,
        exact_grundy=exact_g,
        exact_chromatic=exact_chi,
        bounds=bounds,
        notes=notes,
    )
