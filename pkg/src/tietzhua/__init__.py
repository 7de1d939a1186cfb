"""s-wave bound states of the Tietz-Hua diatomic potential.

    V(r) = D [(1 - exp(-b_h (r - r_e))) / (1 - c_h exp(-b_h (r - r_e)))]^2

Energies in cm^-1, lengths in angstrom, masses in amu.  Start with
:func:`solve`, which dispatches on the regime of ``c_h``.
"""

from .catalog import CatalogEntry, CatalogError, load_catalog
from .errors import (
    ConvergenceError,
    DomainError,
    OracleError,
    PoleError,
    SingularityError,
    TietzHuaError,
)
from .model import Case, MoleculeParams, classify_regime, potential_th, threshold_ch
from .spectrum import BoundState, SpectrumReport, normalized_wavefunction, solve, wavefunction
from .specfun import gauss_2f1, jacobi_p, kummer_1f1, ln_gamma

__all__ = [
    "BoundState",
    "Case",
    "CatalogEntry",
    "CatalogError",
    "ConvergenceError",
    "DomainError",
    "MoleculeParams",
    "OracleError",
    "PoleError",
    "SingularityError",
    "SpectrumReport",
    "TietzHuaError",
    "classify_regime",
    "gauss_2f1",
    "jacobi_p",
    "kummer_1f1",
    "ln_gamma",
    "load_catalog",
    "normalized_wavefunction",
    "potential_th",
    "solve",
    "threshold_ch",
    "wavefunction",
]
