import math

import pytest

from grundy_spectral.bounds import (
    BOUND_NAMES,
    CSV_HEADER,
    bound_bollobas,
    bound_degeneracy_log,
    bound_edges,
    bound_maxdeg,
    bound_report,
    bound_size_corollary,
    bound_spectral_recurrence,
    bound_spectral_remark,
    bound_wilf,
)
from grundy_spectral.errors import GraphFormatError
from grundy_spectral.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    erdos_renyi,
    path_graph,
)
from grundy_spectral.spectral import tk_lambda


def test_bound_maxdeg():
    assert bound_maxdeg(4) == 5
    assert bound_maxdeg(0) == 1


def test_bound_wilf():
    assert bound_wilf(3.0) == 4.0
    assert abs(bound_wilf((1 + 5**0.5) / 2) - 2.618033988749895) < 1e-9


def test_bound_spectral_recurrence_thresholds():
    assert bound_spectral_recurrence(0.0) == 1
    assert bound_spectral_recurrence(1.0) == 2
    assert bound_spectral_recurrence(1.5) == 2  # below golden ratio
    assert bound_spectral_recurrence(tk_lambda(5)) == 5
    # monotone in mu1
    values = [bound_spectral_recurrence(x / 10) for x in range(0, 60)]
    assert values == sorted(values)


def test_bound_spectral_remark():
    assert bound_spectral_remark(1.0) == 2.125
    assert abs(bound_spectral_remark(math.sqrt(3)) - 3.493) < 0.01
    assert bound_spectral_remark(0.0) == 1.125


def test_bound_size_corollary():
    assert abs(bound_size_corollary(7.0, 8) - (4 * math.sqrt(8) * 9) ** (2 / 3)) < 1e-9
    assert abs(bound_size_corollary(0.0, 1) - 4.0) < 1e-12


def test_bound_edges():
    assert abs(bound_edges(10, 4.0) - 5.0) < 1e-12
    # empty graph falls back to n
    assert bound_edges(0, 0.0, n=7) == 7.0
    with pytest.raises(GraphFormatError):
        bound_edges(0, 0.0)


def test_bound_degeneracy_log():
    assert abs(bound_degeneracy_log(1, 8) - 5.0) < 1e-12
    assert abs(bound_degeneracy_log(4, 5) - (4 * math.log2(5) + 5)) < 1e-12
    with pytest.raises(GraphFormatError):
        bound_degeneracy_log(1, 1)


def test_bound_bollobas():
    n = 1024
    expected = (1 + 5 * math.log(math.log(n)) / math.log(n)) * n / math.log2(n)
    assert abs(bound_bollobas(n) - expected) < 1e-12
    # monotone for n >= 16
    vals = [bound_bollobas(n) for n in range(16, 200)]
    assert vals == sorted(vals)
    with pytest.raises(GraphFormatError):
        bound_bollobas(15)


def test_report_p4_tight_recurrence():
    r = bound_report(path_graph(4), graph_id="P4")
    assert r.exact_grundy == 3
    assert r.bounds["spectral_recurrence"] == 3


def test_report_k4_values():
    r = bound_report(complete_graph(4))
    assert r.exact_grundy == 4 and r.exact_chromatic == 4
    # mu1(K4) is the largest root of x^4 - 6x^2 + 3
    assert abs(r.mu1 - math.sqrt(3 + math.sqrt(6))) < 1e-9
    assert r.bounds["spectral_recurrence"] == 4
    assert abs(r.bounds["edges_wu_elphick"] - 4.0) < 1e-9


def test_report_grundy_bounded_by_all_sound_bounds():
    sound = (
        "maxdeg_plus_one",
        "spectral_recurrence",
        "spectral_remark",
        "size_corollary",
        "edges_wu_elphick",
        "degeneracy_log",
    )
    for seed in range(15):
        g = erdos_renyi(10, 0.4, 700 + seed)
        r = bound_report(g)
        assert r.exact_grundy is not None
        for name in sound:
            assert r.exact_grundy <= r.bounds[name] + 1e-8, name


def test_report_large_graph_skips_exact_fields():
    g = erdos_renyi(100, 0.05, 7)
    r = bound_report(g)
    assert r.mu1 is None and r.exact_grundy is None
    assert r.bounds["spectral_recurrence"] >= 1
    assert "spectral_recurrence" in r.notes


def test_report_serialization():
    r = bound_report(cycle_graph(5), graph_id="C5")
    row = r.to_csv_row()
    assert row.startswith("C5,5,5,2,2,")
    assert len(row.split(",")) == len(CSV_HEADER.split(","))
    data = r.to_json()
    assert set(data["bounds"]) == set(BOUND_NAMES)


def test_report_single_vertex():
    r = bound_report(Graph(1, []))
    assert r.exact_grundy == 1
    assert r.bounds["degeneracy_log"] is None
