"""Molecule parameters, unit scaling, potentials and regime classification."""

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from .constants import conv_for_mass
from .errors import DomainError, SingularityError

__all__ = [
    "MoleculeParams",
    "ScaledParams",
    "Case",
    "Regime",
    "CASE_V_TOL",
    "SINGULAR_GUARD",
    "scale",
    "scale_energy",
    "potential_th",
    "potential_morse",
    "morse_beta",
    "threshold_ch",
    "singular_radius",
    "classify_regime",
]

# |c_h| below this is treated as the Morse case
CASE_V_TOL = 1e-12
# distance (angstrom) from r0 inside which the potential refuses to evaluate
SINGULAR_GUARD = 1e-12


@dataclass(frozen=True)
class MoleculeParams:
    """One diatomic system.

    D is the well depth in cm^-1, r_e the bond length in angstrom, b_h the
    range parameter in 1/angstrom, c_h the dimensionless shape parameter and
    mu the reduced mass in amu.
    """

    name: str
    D: float
    r_e: float
    b_h: float
    c_h: float
    mu: float

    def __post_init__(self):
        for field in ("D", "r_e", "b_h", "c_h", "mu"):
            value = getattr(self, field)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise DomainError(f"{field} must be a finite number, got {value!r}")
            object.__setattr__(self, field, float(value))
        for field in ("D", "r_e", "b_h", "mu"):
            if getattr(self, field) <= 0:
                raise DomainError(f"{field} must be positive, got {getattr(self, field)}")
        if not abs(self.c_h) < 1:
            raise DomainError(f"c_h must satisfy |c_h| < 1, got {self.c_h}")

    def with_ch(self, c_h):
        return replace(self, c_h=c_h)


@dataclass(frozen=True)
class ScaledParams:
    d_tilde: float  # 2 mu D / hbar^2, 1/angstrom^2
    bh: float
    ch: float
    re: float
    conv: float  # hbar^2 / (2 mu), cm^-1 angstrom^2


class Case(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"


@dataclass(frozen=True)
class Regime:
    """Which solver applies and on which radial interval.

    ``domain_hi`` is always ``inf``; ``r0`` is the singular radius and is set
    only for c_h > 0.
    """

    case_id: Case
    domain_lo: float
    domain_hi: float
    r0: float | None
    threshold: float


def scale(params):
    conv = conv_for_mass(params.mu)
    return ScaledParams(params.D / conv, params.b_h, params.c_h, params.r_e, conv)


def scale_energy(sp, E):
    return E / sp.conv


def morse_beta(b_h, c_h):
    if not abs(c_h) < 1:
        raise DomainError(f"c_h must satisfy |c_h| < 1, got {c_h}")
    return b_h / (1.0 - c_h)


def threshold_ch(params):
    """Smallest c_h for which the closed-form treatment holds: exp(-b_h r_e)."""
    return math.exp(-params.b_h * params.r_e)


def singular_radius(params):
    if params.c_h <= 0:
        return None
    return params.r_e + math.log(params.c_h) / params.b_h


def _as_radius(r):
    arr = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise DomainError("radius must be finite and non-negative")
    return arr


def potential_th(params, r):
    """Tietz-Hua potential in cm^-1; accepts a scalar or an array of radii."""
    arr = _as_radius(r)
    r0 = singular_radius(params)
    if r0 is not None and np.any(np.abs(arr - r0) < SINGULAR_GUARD):
        raise SingularityError(f"potential evaluated within {SINGULAR_GUARD} A of r0 = {r0}")
    e = np.exp(-params.b_h * (arr - params.r_e))
    v = params.D * (-np.expm1(-params.b_h * (arr - params.r_e)) / (1.0 - params.c_h * e)) ** 2
    return float(v) if v.ndim == 0 else v


def potential_morse(D, beta, r_e, r):
    arr = _as_radius(r)
    v = D * np.expm1(-beta * (arr - r_e)) ** 2
    return float(v) if v.ndim == 0 else v


def classify_regime(params):
    c = params.c_h
    threshold = threshold_ch(params)
    if abs(c) < CASE_V_TOL:
        return Regime(Case.V, 0.0, math.inf, None, threshold)
    if c < 0:
        return Regime(Case.IV, 0.0, math.inf, None, threshold)
    r0 = singular_radius(params)
    if c >= threshold:
        return Regime(Case.I, r0, math.inf, r0, threshold)
    return Regime(Case.III, 0.0, math.inf, r0, threshold)
