"""Shared fixtures; the expensive exhaustive scans run once per session."""

from __future__ import annotations

import numpy as np
import pytest

from grundy_spectral import _kernels
from grundy_spectral.atoms import enumerate_atoms

CORPUS_BUDGET = 10**9


@pytest.fixture(scope="session")
def corpus6():
    """Per-edge-mask stats for every labeled graph on 6 vertices."""
    return _kernels.corpus_scan(6, CORPUS_BUDGET)


@pytest.fixture(scope="session")
def corpus7():
    """Per-edge-mask stats for every labeled graph on 7 vertices (~5 min)."""
    return _kernels.corpus_scan(7, CORPUS_BUDGET)


@pytest.fixture(scope="session")
def atoms_by_k():
    """Every enumerated k-atom for k <= 5, n <= 12."""
    return {k: list(enumerate_atoms(k, 12)) for k in range(1, 6)}


@pytest.fixture(scope="session")
def tk_table():
    return _kernels.tk_sequence(10**6)


def pytest_configure(config):
    # warm the numba cache so the timed acceptance tests measure math, not JIT
    _kernels.first_fit_masks(np.zeros(1, np.int64), np.zeros(1, np.int64))
