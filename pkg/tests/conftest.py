"""Shared synthetic molecules and cached spectra.

No real molecule has D and mu in this package, so every quantitative test
runs on made-up wells chosen to span the regimes and the number of levels.
"""

import functools

import numpy as np
import pytest

from tietzhua import oracle, spectrum
from tietzhua.model import MoleculeParams

# name, D (cm^-1), r_e (A), b_h (1/A), c_h, mu (amu)
CASE_I = [
    MoleculeParams("I-shallow", 1000.0, 1.0, 2.0, 0.3, 1.0),
    MoleculeParams("I-mid", 8000.0, 1.2, 1.8, 0.25, 2.0),
    MoleculeParams("I-deep", 40000.0, 1.0, 2.0, 0.3, 1.0),
]
CASE_III = [
    MoleculeParams("III-a", 2000.0, 1.0, 1.0, 0.05, 1.0),
    MoleculeParams("III-b", 6000.0, 1.5, 1.4, 0.08, 2.0),
]
CASE_IV = [
    MoleculeParams("IV-a", 2000.0, 1.0, 1.0, -0.4, 1.0),
    MoleculeParams("IV-b", 6000.0, 1.5, 1.4, -0.2, 2.0),
]
MORSE = MoleculeParams("V", 6000.0, 1.5, 1.4, 0.0, 2.0)


@functools.lru_cache(maxsize=None)
def solved(params):
    return spectrum.solve(params)


@functools.lru_cache(maxsize=None)
def reference_levels(params):
    return spectrum.oracle_levels(params)


def grid_nodes(params, state):
    """Sign changes of the state's wavefunction on its node grid."""
    r = spectrum.node_grid(params, state.E)
    values = spectrum.wavefunction(params, state, r)
    return oracle.count_nodes(values, spectrum.NODE_FLOOR * float(np.max(np.abs(values))))


def max_rel(a, b):
    a, b = np.asarray(a, float), np.asarray(b, float)
    return float(np.max(np.abs(a - b) / np.abs(b))) if len(b) else 0.0


_ACCEPTANCE = []


def record_acceptance(line):
    _ACCEPTANCE.append(line)
    print(line)


@pytest.fixture
def acceptance():
    return record_acceptance


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
