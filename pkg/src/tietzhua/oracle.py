"""Reference eigensolver for the s-wave radial equation.

    -conv * y''(r) + V(r) y(r) = E y(r),   y(r_lo) = y(r_hi) = 0

is discretised with Numerov's scheme.  In the variable F_n = (1 - T_n) y_n,
T_n = h^2 (V_n - E) / (12 conv), the scheme reads

    F_{n+1} = U_n F_n - F_{n-1},   U_n = (2 + 10 T_n) / (1 - T_n).

The ratios d_n = F_n / F_{n-1} obey d_n = U_n - 1/d_{n-1}; they are the LDL
pivots of the tridiagonal Numerov matrix, so the number of negative d_n is
both the node count of the outward solution and the number of eigenvalues
below E.  Levels are located by bisection on that count.

Nothing here uses the analytic machinery of :mod:`tietzhua.spectrum`.
"""

import math
import warnings
from dataclasses import dataclass

import numba
import numpy as np
from scipy import integrate

from .errors import DomainError, OracleError
from .model import Case, classify_regime

__all__ = [
    "GridSpec",
    "numerov_eigen",
    "level_count",
    "numerov_state",
    "quad_norm",
    "count_nodes",
]

# grid points whose T at the bottom of the well exceeds this are dropped
# (the wavefunction is negligible there and 1 - T must stay positive)
_T_TRIM = 0.02
_BISECT_RTOL = 1e-12
_REFINE_WIDTH = 1e-4


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid with hard walls at both ends."""

    r_lo: float
    r_hi: float
    n_points: int = 20_000

    def __post_init__(self):
        if not (math.isfinite(self.r_lo) and math.isfinite(self.r_hi)) or not self.r_lo < self.r_hi:
            raise DomainError(f"grid needs r_lo < r_hi, got ({self.r_lo}, {self.r_hi})")
        if self.n_points < 1000:
            raise DomainError(f"grid needs at least 1000 points, got {self.n_points}")

    @classmethod
    def for_molecule(cls, params, n_points=40_000, r_hi=None):
        # the far wall must sit well past the outer turning point of levels
        # within ~1e-4 D of the dissociation limit
        regime = classify_regime(params)
        if regime.case_id is Case.I:
            r_lo = regime.r0 * (1 + 1e-9) + 1e-9
        else:
            r_lo = 0.0  # R(0) = 0 is the physical boundary condition
        if r_hi is None:
            r_hi = params.r_e + 80.0 / params.b_h
        return cls(r_lo, r_hi, n_points)

    def radii(self):
        return np.linspace(self.r_lo, self.r_hi, self.n_points)

    def refined(self, factor=2):
        return GridSpec(self.r_lo, self.r_hi, (self.n_points - 1) * factor + 1)


@numba.njit(cache=True)
def _pivot_count(g, h2, e):
    # carries rho = d - 1; U - 2 ~ h^2 is lost to rounding if d is formed directly
    count = 0
    rho = 0.0
    for i in range(g.shape[0]):
        t = h2 * (g[i] - e) / 12.0
        w = 12.0 * t / (1.0 - t)
        if i == 0:
            rho = 1.0 + w
        else:
            d = 1.0 + rho
            if d == 0.0:
                d = 1e-300
            rho = w + rho / d
        if rho < -1.0:
            count += 1
    return count


@numba.njit(cache=True)
def _ratios(g, h2, e, reverse):
    """rho_i = F_i / F_{i-1} - 1 (outward) or F_i / F_{i+1} - 1 (inward)."""
    n = g.shape[0]
    out = np.empty(n)
    rho = 0.0
    for j in range(n):
        i = n - 1 - j if reverse else j
        t = h2 * (g[i] - e) / 12.0
        w = 12.0 * t / (1.0 - t)
        if j == 0:
            rho = 1.0 + w
        else:
            d = 1.0 + rho
            if d == 0.0:
                d = 1e-300
            rho = w + rho / d
        out[i] = rho
    return out


def _log_abs_ratio(rho):
    with np.errstate(divide="ignore"):
        return np.where(rho > -1.0, np.log1p(np.maximum(rho, -1.0)), np.log(np.abs(1.0 + rho)))


class _Discretised:
    """Potential sampled on the interior grid points, trimmed on the left."""

    def __init__(self, potential, grid, conv):
        r = grid.radii()
        h = r[1] - r[0]
        with np.errstate(all="ignore"):
            v = np.asarray(potential(r[1:-1]), dtype=float)
        if v.shape != r[1:-1].shape or not np.all(np.isfinite(v)):
            raise DomainError("potential must be finite at every interior grid point")
        g = v / conv
        self.h2 = h * h
        t0 = self.h2 * (g - g.min()) / 12.0
        self.start = int(np.argmax(t0 <= _T_TRIM))
        self.g = np.ascontiguousarray(g[self.start:])
        self.r = r[1 + self.start:-1]
        self.conv = conv
        self.v_min = float(v.min())

    def count(self, E):
        return _pivot_count(self.g, self.h2, E / self.conv)


def _bisect(disc, k, lo, hi, tol):
    steps = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if disc.count(mid) > k:
            hi = mid
        else:
            lo = mid
        steps += 1
        if steps > 200:
            raise OracleError(f"bisection for level {k} did not converge in [{lo}, {hi}]")
    return lo, hi


def _solve_levels(disc, n_levels, e_lo, e_ceiling, tol, guesses=None):
    levels = []
    for k in range(n_levels):
        lo, hi = e_lo, e_ceiling
        if guesses is not None:
            guess = 0.5 * sum(guesses[k])
            width = _REFINE_WIDTH * max(abs(guess), tol)
            glo, ghi = guess - width, guess + width
            if disc.count(glo) <= k < disc.count(ghi):
                lo, hi = glo, ghi
        if levels:
            lo = max(lo, levels[-1][1])
        if not disc.count(lo) <= k < disc.count(hi):
            raise OracleError(f"level {k} is not bracketed by [{lo}, {hi}]")
        levels.append(_bisect(disc, k, lo, hi, tol))
    return levels


def numerov_eigen(potential, grid, conv, max_states=None, *, e_ceiling=None, refine=2):
    """All levels below ``e_ceiling`` as a list of ``(E, nodes)``.

    ``potential`` maps an array of radii (angstrom) to cm^-1.  The ceiling
    defaults to the potential at ``r_hi``.  After the pass on ``grid`` the
    levels are recomputed ``refine`` times, doubling the point count each
    time; the finest values are returned.
    """
    if e_ceiling is None:
        e_ceiling = float(potential(np.array([grid.r_hi]))[0])
    disc = _Discretised(potential, grid, conv)
    n_levels = disc.count(e_ceiling)
    if max_states is not None:
        n_levels = min(n_levels, max_states)
    tol = _BISECT_RTOL * abs(e_ceiling)
    levels = _solve_levels(disc, n_levels, disc.v_min, e_ceiling, tol)
    for _ in range(refine):
        grid = grid.refined()
        disc = _Discretised(potential, grid, conv)
        n_levels = min(n_levels, disc.count(e_ceiling))
        levels = _solve_levels(disc, n_levels, disc.v_min, e_ceiling, tol, guesses=levels)
    # nodes: sign changes of the outward solution just below each level
    return [(0.5 * (lo + hi), disc.count(lo)) for lo, hi in levels]


def level_count(potential, grid, conv, E):
    """Number of grid levels strictly below E."""
    return _Discretised(potential, grid, conv).count(E)


def numerov_state(potential, grid, conv, E):
    """Grid eigenvector at energy E, normalised so that the integral of y^2 is 1.

    Outward and inward ratio sweeps are joined at the outermost point where
    E >= V, which keeps both sweeps in their stable direction.  Returns
    ``(r, y)`` on the interior points that survive trimming.
    """
    disc = _Discretised(potential, grid, conv)
    e = E / conv
    allowed = np.nonzero(disc.g <= e)[0]
    if allowed.size == 0:
        raise OracleError(f"energy {E} lies below the potential everywhere on the grid")
    m = min(int(allowed[-1]), disc.g.shape[0] - 2)
    out = _ratios(disc.g, disc.h2, e, False)
    inw = _ratios(disc.g, disc.h2, e, True)
    n = disc.g.shape[0]
    log_f = np.zeros(n)
    sign = np.ones(n)
    # left of m: F_i = F_{i+1} / (1 + rho_{i+1}); right of m: F_i = F_{i-1} / (1 + rho'_{i-1})
    left = out[1:m + 1][::-1]
    log_f[:m][::-1] = -np.cumsum(_log_abs_ratio(left))
    sign[:m][::-1] = np.cumprod(np.where(left < -1.0, -1.0, 1.0))
    right = inw[m:n - 1]
    log_f[m + 1:] = -np.cumsum(_log_abs_ratio(right))
    sign[m + 1:] = np.cumprod(np.where(right < -1.0, -1.0, 1.0))
    t = disc.h2 * (disc.g - e) / 12.0
    log_y = log_f - np.log(1.0 - t)
    y = sign * np.exp(log_y - log_y.max())
    h = math.sqrt(disc.h2)
    y /= math.sqrt(np.sum(y * y) * h)
    return disc.r.copy(), y


def quad_norm(f, a, b, *, points=None, epsabs=1e-10, limit=500):
    """Integral of f(r)^2 over [a, b] by adaptive quadrature; ``b`` may be inf."""
    kwargs = {"epsabs": epsabs, "epsrel": 1e-12, "limit": limit}
    if points is not None and math.isfinite(b):
        kwargs["points"] = [p for p in points if a < p < b]
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, err = integrate.quad(lambda r: f(r) ** 2, a, b, **kwargs)
        except integrate.IntegrationWarning as exc:
            raise OracleError(f"quadrature did not converge: {exc}") from exc
    if not math.isfinite(value) or err > max(epsabs, 1e-12 * abs(value)):
        raise OracleError(f"quadrature error estimate {err} exceeds tolerance")
    return value


def count_nodes(values, floor=0.0):
    """Sign changes in an ordered sequence, skipping entries with |v| <= floor."""
    count = 0
    last = 0
    for v in values:
        if not abs(v) > floor:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count
