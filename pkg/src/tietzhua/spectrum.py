"""Bound-state solvers for the Tietz-Hua potential.

Energies are in cm^-1, lengths in angstrom.  Every solver returns a
:class:`SpectrumReport`; :func:`solve` picks the solver from the regime.

* case I   closed-form energies and Jacobi-polynomial wavefunctions on (r0, inf)
* case III zeros of 2F1(lam + d+ - g, lam + d+ + g; 2 lam + 1; c e^{b re})
* case IV  zeros of 2F1(1 + lam + g - db, lam + g + db; 2 lam + 1; |c| / (e^{-b re} + |c|))
* case V   the Morse ladder

Cases III and IV are solved by a dense sign scan followed by Brent refinement.
The root count is checked against the Numerov level count and each root's
node count against its index.
"""

import functools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate, optimize

from . import oracle
from .errors import ConvergenceError, DomainError
from .model import Case, classify_regime, morse_beta, potential_th, scale, scale_energy
from .specfun import RTOL, gauss_2f1, jacobi_p, kummer_1f1, ln_gamma

__all__ = [
    "Exponents",
    "BoundState",
    "RootDiagnostic",
    "SpectrumReport",
    "SCAN_POINTS",
    "exponents_at",
    "largest_integer_below",
    "count_case_i",
    "energy_closed_case_i",
    "norm_case_i",
    "wavefunction_case_i",
    "z0_case_iii",
    "z0_case_iv",
    "transcend_value_case_iii",
    "transcend_value_case_iv",
    "energy_roots_case_iii",
    "energy_roots_case_iv",
    "wavefunction_case_iii",
    "wavefunction_case_iv",
    "energy_morse",
    "wavefunction_morse",
    "wavefunction",
    "find_roots",
    "turning_points",
    "node_grid",
    "node_count",
    "log_norm",
    "normalized_wavefunction",
    "oracle_levels",
    "solve",
]

CLOSED_FORM = "closed_form"
TRANSCEND_III = "transcend_iii"
TRANSCEND_IV = "transcend_iv"
MORSE_CLOSED = "morse_closed"

SCAN_POINTS = 4001
SCAN_EDGE = 1e-9
# sign scans only need the sign of 2F1, so they run at a loose tolerance
SCAN_RTOL = 1e-4
ROOT_RTOL = 1e-12
ROOT_MAXITER = 200
MARGINAL = 1e-8
# exp(-integral of kappa) at which the forbidden regions are cut off
NODE_CUT = 4.0
NORM_CUT = 12.0
NODE_SAMPLES = 400
# samples below this fraction of the peak are boundary residue, not nodes
NODE_FLOOR = 1e-6


@dataclass(frozen=True)
class Exponents:
    """Exponents realised at one energy; infinite entries mark c_h = 0."""

    lambda_: float
    delta_plus: float
    delta_minus: float
    gamma: float
    delta_bar_plus: float
    gamma_bar_plus: float


@dataclass(frozen=True)
class BoundState:
    n_r: int
    E: float
    eps: float
    exps: Exponents
    method: str
    marginal: bool = False
    nodes: int | None = None


@dataclass(frozen=True)
class RootDiagnostic:
    """Bookkeeping for one bracketed root of a quantization function."""

    bracket: tuple
    iterations: int
    function_calls: int
    converged: bool
    note: str = ""


@dataclass
class SpectrumReport:
    params: object
    regime: object
    states: list
    n_r_max: int
    method: str
    diagnostics: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    oracle_count: int | None = None

    @property
    def energies(self):
        return [s.E for s in self.states]


# ---------------------------------------------------------------------------
# exponents


def exponents_at(sp, E):
    """Exponents at energy E (cm^-1) for scaled parameters ``sp``."""
    D = sp.d_tilde * sp.conv
    if not (math.isfinite(E) and 0.0 <= E < D):
        raise DomainError(f"exponents need 0 <= E < D = {D}, got {E}")
    eps = scale_energy(sp, E)
    d, b, c = sp.d_tilde, sp.bh, sp.ch
    lam = math.sqrt(d - eps) / b
    if c == 0.0:
        inf = math.inf
        return Exponents(lam, inf, -inf, inf, inf, inf)
    gamma = math.sqrt(d / (c * c) - eps) / b
    delta_plus = 0.5 + math.sqrt(0.25 + d / b**2 * (1.0 - 1.0 / c) ** 2)
    delta_bar = 0.5 + math.sqrt(0.25 + d / b**2 * (1.0 + 1.0 / abs(c)) ** 2)
    return Exponents(lam, delta_plus, 1.0 - delta_plus, gamma, delta_bar, gamma)


def _require(params, case):
    regime = classify_regime(params)
    if regime.case_id is not case:
        raise DomainError(f"{params.name}: expected case {case.value}, regime is case {regime.case_id.value}")
    return regime


def _require_energy(params, E):
    if not (math.isfinite(E) and 0.0 < E < params.D):
        raise DomainError(f"energy must lie in (0, D = {params.D}), got {E}")


# ---------------------------------------------------------------------------
# case I


def largest_integer_below(q):
    """Largest integer strictly less than q (so 3.0 -> 2); -1 when q <= 0."""
    if q <= 0:
        return -1
    return math.ceil(q) - 1


def _case_i_constants(sp):
    delta = 0.5 + math.sqrt(0.25 + sp.d_tilde / sp.bh**2 * (1.0 - 1.0 / sp.ch) ** 2)
    k = sp.d_tilde / sp.bh**2 * (1.0 / sp.ch**2 - 1.0)
    return delta, k


def count_case_i(params):
    """Highest vibrational quantum number n_r_max; -1 when there are no bound states."""
    _require(params, Case.I)
    delta, k = _case_i_constants(scale(params))
    return largest_integer_below(math.sqrt(k) - delta)


def energy_closed_case_i(params):
    regime = _require(params, Case.I)
    sp = scale(params)
    delta, k = _case_i_constants(sp)
    n_max = largest_integer_below(math.sqrt(k) - delta)
    states = []
    for n in range(n_max + 1):
        big_n = n + delta
        # (n + delta - K/(n + delta)) / 2 = -lambda
        lam = (k - big_n * big_n) / (2.0 * big_n)
        E = params.D - sp.conv * sp.bh**2 * lam * lam
        states.append(BoundState(n, E, scale_energy(sp, E), exponents_at(sp, E), CLOSED_FORM,
                                 params.D - E < MARGINAL * params.D))
    return SpectrumReport(params, regime, states, n_max, CLOSED_FORM)


def _case_i_level(params, n_r):
    sp = scale(params)
    delta, k = _case_i_constants(sp)
    n_max = largest_integer_below(math.sqrt(k) - delta)
    if not (int(n_r) == n_r and 0 <= n_r <= n_max):
        raise DomainError(f"n_r must be an integer in [0, {n_max}], got {n_r}")
    big_n = n_r + delta
    return sp, delta, (k - big_n * big_n) / (2.0 * big_n)


def norm_case_i(params, n_r):
    """Log of the squared normalization constant of the case-I state n_r."""
    _require(params, Case.I)
    sp, delta, lam = _case_i_level(params, n_r)
    n = int(n_r)
    return (math.log(2.0 * sp.bh * lam * (n + lam + delta) / (n + delta))
            + ln_gamma(n + 1.0) + ln_gamma(n + 2 * lam + 2 * delta)
            - ln_gamma(n + 2 * lam + 1.0) - ln_gamma(n + 2 * delta))


def _log_wave_case_i(params, n_r, r):
    regime = _require(params, Case.I)
    sp, delta, lam = _case_i_level(params, n_r)
    rr = _radii(r)
    if np.any(rr <= regime.r0):
        raise DomainError(f"case-I wavefunction is defined for r > r0 = {regime.r0}")
    log_s = math.log(sp.ch) - sp.bh * (rr - sp.re)
    s = np.exp(log_s)
    poly = jacobi_p(int(n_r), 2 * lam, 2 * delta - 1, 1.0 - 2.0 * s)
    with np.errstate(divide="ignore"):
        log_abs = 0.5 * norm_case_i(params, n_r) + lam * log_s + delta * np.log1p(-s) + np.log(np.abs(poly))
    return log_abs, np.sign(poly)


def wavefunction_case_i(params, n_r, r):
    """Normalized case-I radial function on (r0, inf); ``r`` may be an array."""
    return _values(*_log_wave_case_i(params, n_r, r), r)


def _radii(r):
    rr = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(~np.isfinite(rr)) or np.any(rr < 0):
        raise DomainError("radius must be finite and non-negative")
    return rr


def _values(log_abs, sign, r):
    with np.errstate(over="ignore", under="ignore"):
        value = sign * np.exp(log_abs)
    return float(value[0]) if np.ndim(r) == 0 else value


# ---------------------------------------------------------------------------
# cases III and IV


def _hyper_args_iii(sp, E):
    """2F1 parameters (a, b, c) of case III at energy E.

    a = lam + d+ - g is formed without the cancellation between d+ and g,
    both of order 1/c_h.
    """
    eps = scale_energy(sp, E)
    d, bh, c = sp.d_tilde, sp.bh, sp.ch
    lam = math.sqrt(d - eps) / bh
    gam = math.sqrt(d / (c * c) - eps) / bh
    root = math.sqrt(0.25 + d / bh**2 * (1.0 - 1.0 / c) ** 2)
    a = lam + 0.5 + (0.25 + (d * (1.0 - 2.0 / c) + eps) / bh**2) / (root + gam)
    return a, lam + 0.5 + root + gam, 2.0 * lam + 1.0


def _hyper_args_iv(sp, E):
    """2F1 parameters of case IV; a = 1 + lam + g - db without cancellation."""
    eps = scale_energy(sp, E)
    d, bh, c = sp.d_tilde, sp.bh, abs(sp.ch)
    lam = math.sqrt(d - eps) / bh
    gam = math.sqrt(d / (c * c) - eps) / bh
    root = math.sqrt(0.25 + d / bh**2 * (1.0 + 1.0 / c) ** 2)
    a = 0.5 + lam - (0.25 + (eps + d * (1.0 + 2.0 / c)) / bh**2) / (gam + root)
    return a, lam + gam + 0.5 + root, 2.0 * lam + 1.0


def _z0_iii(sp):
    return sp.ch * math.exp(sp.bh * sp.re)


def _z0_iv(sp):
    c = abs(sp.ch)
    return c / (math.exp(-sp.bh * sp.re) + c)


def z0_case_iii(params):
    """Argument c_h e^{b_h r_e} of the case-III quantization function; in (0, 1)."""
    _require(params, Case.III)
    return _z0_iii(scale(params))


def z0_case_iv(params):
    """Argument |c_h| / (e^{-b_h r_e} + |c_h|) of the case-IV quantization function."""
    _require(params, Case.IV)
    return _z0_iv(scale(params))


def transcend_value_case_iii(params, E, *, rtol=RTOL):
    _require(params, Case.III)
    _require_energy(params, E)
    sp = scale(params)
    return gauss_2f1(*_hyper_args_iii(sp, E), _z0_iii(sp), rtol=rtol)


def transcend_value_case_iv(params, E, *, rtol=RTOL):
    _require(params, Case.IV)
    _require_energy(params, E)
    sp = scale(params)
    return gauss_2f1(*_hyper_args_iv(sp, E), _z0_iv(sp), rtol=rtol)


def find_roots(scan, lo, hi, n_scan=SCAN_POINTS, *, refine=None, rtol=ROOT_RTOL, maxiter=ROOT_MAXITER):
    """Roots of a continuous function on [lo, hi] by a uniform sign scan.

    ``scan`` is sampled on ``n_scan`` points; each sign change is refined by
    Brent's method on ``refine`` (default: ``scan``), which must agree with
    ``scan`` in sign.  Returns ``(roots, diagnostics)``.
    """
    refine = refine or scan
    grid = np.linspace(lo, hi, n_scan)
    values = [scan(x) for x in grid]
    roots, diagnostics = [], []
    for x0, x1, f0, f1 in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if f0 == 0.0:
            roots.append(float(x0))
            diagnostics.append(RootDiagnostic((x0, x0), 0, 0, True, "exact zero on scan grid"))
            continue
        if (f0 > 0) == (f1 > 0) or f1 == 0.0:
            continue
        g0, g1 = refine(x0), refine(x1)
        if g0 == 0.0 or g1 == 0.0:
            x = x0 if g0 == 0.0 else x1
            roots.append(float(x))
            diagnostics.append(RootDiagnostic((x0, x1), 0, 2, True, "exact zero at bracket end"))
            continue
        if (g0 > 0) == (g1 > 0):
            diagnostics.append(RootDiagnostic((x0, x1), 0, 2, False, "scan and refinement disagree in sign"))
            continue
        try:
            x, info = optimize.brentq(refine, x0, x1, xtol=1e-300, rtol=rtol, maxiter=maxiter,
                                      full_output=True, disp=False)
        except (ConvergenceError, ValueError) as exc:
            diagnostics.append(RootDiagnostic((x0, x1), 0, 0, False, f"refinement failed: {exc}"))
            continue
        roots.append(float(x))
        diagnostics.append(RootDiagnostic((x0, x1), info.iterations, info.function_calls + 2,
                                          info.converged, "" if info.converged else info.flag))
    return roots, diagnostics


def _signed(series_at, rtol):
    return lambda E: series_at(E, rtol).signed_log1p()


def oracle_levels(params, n_points=40_000, refine=2):
    """Numerov levels below D as (E, nodes) pairs, on the regime's domain."""
    sp = scale(params)
    grid = oracle.GridSpec.for_molecule(params, n_points)
    return oracle.numerov_eigen(lambda r: potential_th(params, r), grid, sp.conv,
                                e_ceiling=params.D, refine=refine)


def _oracle_count(params, ceiling):
    sp = scale(params)
    grid = oracle.GridSpec.for_molecule(params)
    return oracle.level_count(lambda r: potential_th(params, r), grid, sp.conv, ceiling)


def _transcendental(params, case, method, args, z0_of, wave):
    regime = _require(params, case)
    sp = scale(params)
    z0 = z0_of(sp)

    def series_at(E, rtol):
        return gauss_2f1(*args(sp, E), z0, rtol=rtol)

    lo, hi = SCAN_EDGE * params.D, params.D * (1.0 - SCAN_EDGE)
    roots, diagnostics = find_roots(_signed(series_at, SCAN_RTOL), lo, hi,
                                    refine=_signed(series_at, ROOT_RTOL))
    warnings = []
    expected = _oracle_count(params, hi)
    if len(roots) != expected:
        warnings.append(f"scan found {len(roots)} roots, oracle counts {expected}; rescanning 10x denser")
        roots, diagnostics = find_roots(_signed(series_at, SCAN_RTOL), lo, hi, 10 * (SCAN_POINTS - 1) + 1,
                                        refine=_signed(series_at, ROOT_RTOL))
        if len(roots) != expected:
            warnings.append(f"completeness: {len(roots)} roots against {expected} oracle levels")
    warnings.extend(f"root in [{d.bracket[0]:.6g}, {d.bracket[1]:.6g}]: {d.note}"
                    for d in diagnostics if not d.converged)
    states = []
    for n, E in enumerate(sorted(roots)):
        nodes = node_count(params, E, wave)
        if nodes != n:
            warnings.append(f"state {n} at E = {E:.10e} has {nodes} nodes")
        states.append(BoundState(n, E, scale_energy(sp, E), exponents_at(sp, E), method,
                                 params.D - E < MARGINAL * params.D, nodes))
    return SpectrumReport(params, regime, states, len(states) - 1, method, diagnostics, warnings, expected)


def energy_roots_case_iii(params):
    return _transcendental(params, Case.III, TRANSCEND_III, _hyper_args_iii, _z0_iii, wavefunction_case_iii)


def energy_roots_case_iv(params):
    return _transcendental(params, Case.IV, TRANSCEND_IV, _hyper_args_iv, _z0_iv, wavefunction_case_iv)


def _log_wave(prefactor_log, a, b, c, s_values, rtol):
    """(log|R|, sign) with R = exp(prefactor_log) * 2F1(a, b; c; s) per point."""
    log_abs = np.empty(len(s_values))
    sign = np.empty(len(s_values))
    for i, (lp, s) in enumerate(zip(prefactor_log, s_values)):
        f = gauss_2f1(a, b, c, s, rtol=rtol)
        log_abs[i] = lp + f.log_abs
        sign[i] = f.sign
    return log_abs, sign


def _log_wave_case_iii(params, E, r, rtol=RTOL):
    _require(params, Case.III)
    _require_energy(params, E)
    sp = scale(params)
    rr = _radii(r)
    a, b, c = _hyper_args_iii(sp, E)
    lam = (c - 1.0) / 2.0
    delta = 0.5 + math.sqrt(0.25 + sp.d_tilde / sp.bh**2 * (1.0 - 1.0 / sp.ch) ** 2)
    log_s = math.log(sp.ch) - sp.bh * (rr - sp.re)
    s = np.exp(log_s)
    return _log_wave(lam * log_s + delta * np.log1p(-s), a, b, c, s, rtol)


def _log_wave_case_iv(params, E, r, rtol=RTOL):
    _require(params, Case.IV)
    _require_energy(params, E)
    sp = scale(params)
    rr = _radii(r)
    a, b, c = _hyper_args_iv(sp, E)
    lam = (c - 1.0) / 2.0
    gam = math.sqrt(sp.d_tilde / sp.ch**2 - scale_energy(sp, E)) / sp.bh
    x = sp.bh * (rr - sp.re)
    log_1ms = -np.log1p(abs(sp.ch) * np.exp(-x))  # log(1 - s)
    log_s = math.log(abs(sp.ch)) - x + log_1ms
    return _log_wave(lam * log_s + gam * log_1ms, a, b, c, np.exp(log_s), rtol)


def wavefunction_case_iii(params, E, r, *, rtol=RTOL):
    """Case-III radial function with unit prefactor; ``r`` may be an array.

    Values can underflow for deep wells; :func:`normalized_wavefunction`
    works in log space and does not.
    """
    return _values(*_log_wave_case_iii(params, E, r, rtol), r)


def wavefunction_case_iv(params, E, r, *, rtol=RTOL):
    """Case-IV radial function with unit prefactor; s = |c| / (e^{b(r - re)} + |c|)."""
    return _values(*_log_wave_case_iv(params, E, r, rtol), r)


# ---------------------------------------------------------------------------
# case V


def _morse_constants(params):
    sp = scale(params)
    beta = morse_beta(params.b_h, params.c_h)
    return sp, beta, math.sqrt(sp.d_tilde) / beta


def energy_morse(params):
    regime = _require(params, Case.V)
    sp, beta, x = _morse_constants(params)
    n_max = largest_integer_below(x - 0.5)
    states = []
    for n in range(n_max + 1):
        E = params.D - sp.conv * beta**2 * (n + 0.5 - x) ** 2
        states.append(BoundState(n, E, scale_energy(sp, E), exponents_at(sp, E), MORSE_CLOSED,
                                 params.D - E < MARGINAL * params.D))
    return SpectrumReport(params, regime, states, n_max, MORSE_CLOSED)


def _log_wave_morse(params, n_r, r, rtol=RTOL):
    _require(params, Case.V)
    sp, beta, x = _morse_constants(params)
    n_max = largest_integer_below(x - 0.5)
    if not (int(n_r) == n_r and 0 <= n_r <= n_max):
        raise DomainError(f"n_r must be an integer in [0, {n_max}], got {n_r}")
    n = int(n_r)
    lam = x - n - 0.5
    rr = _radii(r)
    log_abs = np.empty(rr.shape)
    sign = np.empty(rr.shape)
    for i, ri in enumerate(rr):
        y = 2.0 * x * math.exp(-beta * (ri - sp.re))
        # first parameter 1/2 + lam - x is exactly -n
        f = kummer_1f1(-float(n), 2.0 * lam + 1.0, y, rtol=rtol)
        log_abs[i] = -beta * lam * (ri - sp.re) - 0.5 * y + f.log_abs
        sign[i] = f.sign
    return log_abs, sign


def wavefunction_morse(params, n_r, r, *, rtol=RTOL):
    """Morse radial function with unit prefactor; ``r`` may be an array."""
    return _values(*_log_wave_morse(params, n_r, r, rtol), r)


# ---------------------------------------------------------------------------
# shared helpers


def _log_wave_state(params, state, r, rtol=RTOL):
    case = classify_regime(params).case_id
    if case is Case.I:
        return _log_wave_case_i(params, state.n_r, r)
    if case is Case.III:
        return _log_wave_case_iii(params, state.E, r, rtol)
    if case is Case.IV:
        return _log_wave_case_iv(params, state.E, r, rtol)
    return _log_wave_morse(params, state.n_r, r, rtol)


def wavefunction(params, state, r, *, rtol=RTOL):
    """Radial function of ``state`` in whatever normalization its case provides."""
    return _values(*_log_wave_state(params, state, r, rtol), r)


def turning_points(params, E):
    """Classical turning points (r_in, r_out) at energy E.

    ``r_in`` is the left end of the domain when the potential there stays
    below E; ``r_out`` is capped at r_e + 60 / b_h.
    """
    _require_energy(params, E)
    regime = classify_regime(params)
    left = regime.domain_lo * (1 + 1e-9) + 1e-9 if regime.r0 is not None and regime.case_id is Case.I else 0.0
    far = params.r_e + 60.0 / params.b_h

    def excess(r):
        return potential_th(params, r) - E

    r_in = optimize.brentq(excess, left, params.r_e, xtol=1e-14) if excess(left) > 0 else left
    r_out = optimize.brentq(excess, params.r_e, far, xtol=1e-14) if excess(far) > 0 else far
    return r_in, r_out


def _wkb_cut(params, E, start, end, target):
    """Point between ``start`` and ``end`` where the integral of kappa reaches ``target``."""
    sp = scale(params)
    r = np.linspace(start, end, 4001)
    kappa = np.sqrt(np.maximum(potential_th(params, r) - E, 0.0) / sp.conv)
    phase = np.abs(integrate.cumulative_trapezoid(kappa, r, initial=0.0))
    if phase[-1] < target:
        return end
    return float(np.interp(target, phase, r))


def node_grid(params, E, n_samples=NODE_SAMPLES, cut=NODE_CUT):
    """Radii spanning the allowed region plus forbidden tails of depth ``cut``.

    The tails end where the WKB decay exp(-integral of kappa) reaches
    exp(-cut), so the samples exclude the region where a float-precision
    eigenvalue leaves a growing remnant.
    """
    regime = classify_regime(params)
    r_in, r_out = turning_points(params, E)
    left = regime.domain_lo * (1 + 1e-9) + 1e-9 if regime.case_id is Case.I else 0.0
    far = params.r_e + 60.0 / params.b_h
    lo = _wkb_cut(params, E, r_in, left, cut) if r_in > left else left
    hi = _wkb_cut(params, E, r_out, far, cut)
    return np.linspace(lo, hi, n_samples)


def node_count(params, E, wave, n_samples=NODE_SAMPLES):
    r = node_grid(params, E, n_samples)
    values = wave(params, E, r, rtol=SCAN_RTOL)
    return oracle.count_nodes(values, NODE_FLOOR * float(np.max(np.abs(values))))


@functools.lru_cache(maxsize=256)
def log_norm(params, state, cut=NORM_CUT):
    """Natural log of the integral of R^2 for ``state``, by adaptive quadrature.

    The integrand is scaled by its peak on the sampling grid so deep wells,
    whose unit-prefactor values underflow, still integrate.  Forbidden tails
    beyond WKB depth ``cut`` are left out; their weight is below exp(-2 cut)
    relative to the peak.  Results are cached per state.
    """
    r = node_grid(params, state.E, NODE_SAMPLES, cut)
    peak = float(np.max(_log_wave_state(params, state, r)[0]))

    def scaled(x):
        log_abs, sign = _log_wave_state(params, state, x)
        return float(sign[0] * math.exp(log_abs[0] - peak))

    integral = oracle.quad_norm(scaled, float(r[0]), float(r[-1]),
                                points=list(turning_points(params, state.E)) + [params.r_e])
    return 2.0 * peak + math.log(integral)


def normalized_wavefunction(params, state, r):
    """R / sqrt(integral of R^2); the case-I constant is analytic, others numeric."""
    if classify_regime(params).case_id is Case.I:
        return wavefunction_case_i(params, state.n_r, r)
    log_abs, sign = _log_wave_state(params, state, r)
    return _values(log_abs - 0.5 * log_norm(params, state), sign, r)


def solve(params):
    """Spectrum of ``params`` with the solver its regime calls for."""
    case = classify_regime(params).case_id
    if case is Case.I:
        return energy_closed_case_i(params)
    if case is Case.III:
        return energy_roots_case_iii(params)
    if case is Case.IV:
        return energy_roots_case_iv(params)
    if case is Case.V:
        return energy_morse(params)
    raise DomainError(f"case {case.value} has no bound-state solver")
