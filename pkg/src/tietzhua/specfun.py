"""Special functions for the bound-state solvers.

Log-gamma, the Gauss hypergeometric function 2F1, Kummer's 1F1 and Jacobi
polynomials.  The quantization conditions evaluate 2F1 with parameters in
the hundreds to millions and arguments close to 1, so the hypergeometric
routines work in two stages:

1. a double-precision series with compensated (Neumaier) summation;
2. if that result cannot be trusted (cancellation, overflow), the same
   algorithm re-run with an arbitrary-precision integer accumulator whose
   working precision grows until the error estimate meets the tolerance.

Every evaluation returns a :class:`SeriesResult`, which carries the value,
an error estimate and ``log_abs``/``sign`` so magnitudes beyond the double
range survive.
"""

import math
import sys
from dataclasses import dataclass

import mpmath
import numba
import numpy as np
from mpmath.libmp import to_fixed

from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "SeriesResult",
    "TERM_CAP",
    "RTOL",
    "ln_gamma",
    "gauss_2f1",
    "kummer_1f1",
    "jacobi_p",
]

TERM_CAP = 20_000
RTOL = 1e-12

# Escalate once the summed term magnitudes exceed the result by this factor.
CANCELLATION_LIMIT = 1e4
# Half-width of the band around integer c-a-b treated as degenerate.
DEGENERATE_BAND = 1e-9

_EPS = sys.float_info.epsilon
_START_PREC = 128
_MAX_PREC = 1 << 14
_LOG_DBL_MAX_EXACT = math.log(sys.float_info.max)


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a hypergeometric evaluation.

    ``value`` is the double-precision result (``+-inf`` if it overflows);
    ``log_abs`` and ``sign`` describe the same number without range limits.
    """

    value: float
    est_abs_error: float
    terms_used: int
    escalated: bool
    log_abs: float
    sign: int

    @classmethod
    def from_float(cls, value, err, terms, escalated=False):
        sign = (value > 0) - (value < 0)
        log_abs = math.log(abs(value)) if value else -math.inf
        return cls(float(value), float(err), int(terms), escalated, log_abs, sign)

    @classmethod
    def from_log(cls, log_abs, sign, rel_err, terms):
        if log_abs > _LOG_DBL_MAX_EXACT:
            value = math.copysign(math.inf, sign)
        else:
            value = math.copysign(math.exp(log_abs), sign)
        return cls(value, abs(value) * rel_err, int(terms), False, log_abs, sign)

    @classmethod
    def from_mpf(cls, value, err, terms):
        sign = int(mpmath.sign(value))
        log_abs = float(mpmath.log(abs(value))) if value else -math.inf
        return cls(_mpf_to_float(value), _mpf_to_float(abs(err)), int(terms), True, log_abs, sign)

    def signed_log1p(self):
        """``sign * log(1 + |value|)``: monotone in the value and never overflows."""
        if self.sign == 0:
            return 0.0
        if self.log_abs > 36.0:
            return self.sign * (self.log_abs + math.log1p(math.exp(-self.log_abs)))
        return self.sign * math.log1p(math.exp(self.log_abs))


def _mpf_to_float(x):
    if not x:
        return 0.0
    if mpmath.log(abs(x), 2) > 1023:
        return math.copysign(math.inf, float(mpmath.sign(x)))
    return float(x)


# ---------------------------------------------------------------------------
# log-gamma

_EULER_GAMMA = 0.5772156649015329
_HALF_LOG_2PI = 0.9189385332046728
# B_2 .. B_14
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6)


def _zeta_minus_one(k):
    """zeta(k) - 1 for integer k >= 2 via Euler-Maclaurin with a cut at n = 10."""
    cut = 10
    head = math.fsum(n ** -k for n in range(2, cut))
    tail = cut ** (1 - k) / (k - 1) + 0.5 * cut ** -k
    rising = k  # (k)_{2j-1}
    factorial = 2  # (2j)!
    for j, b2j in enumerate(_BERNOULLI, start=1):
        tail += b2j / factorial * rising * cut ** (-k - 2 * j + 1)
        rising *= (k + 2 * j - 1) * (k + 2 * j)
        factorial *= (2 * j + 1) * (2 * j + 2)
    return head + tail


# ln Gamma(2 + t) = (1 - gamma_E) t + sum_{k>=2} (-1)^k (zeta(k) - 1) t^k / k
_LG2_COEFFS = tuple((-1) ** k * _zeta_minus_one(k) / k for k in range(2, 40))


def _ln_gamma_near_two(x):
    """ln Gamma(x) for 1.5 <= x < 2.5; relative accuracy holds through the zero at 2."""
    t = x - 2.0
    acc = 0.0
    for coeff in reversed(_LG2_COEFFS):
        acc = acc * t + coeff
    return t * ((1.0 - _EULER_GAMMA) + t * acc)


def _ln_gamma_stirling(x):
    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    power = inv
    for j, b2j in enumerate(_BERNOULLI, start=1):
        series += b2j / (2 * j * (2 * j - 1)) * power
        power *= inv2
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + series


def ln_gamma(x):
    """Natural log of Gamma(x) for real x > 0.

    Stirling's series above 10, downward recurrence into [1.5, 2.5) and a
    Taylor series about 2 below that, so the zeros at 1 and 2 keep full
    relative accuracy.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"ln_gamma needs a finite positive argument, got {x!r}")
    if x >= 10.0:
        return _ln_gamma_stirling(x)
    if x >= 2.5:
        prod = 1.0
        while x >= 2.5:
            x -= 1.0
            prod *= x
        return _ln_gamma_near_two(x) + math.log(prod)
    if x >= 1.5:
        return _ln_gamma_near_two(x)
    if x >= 0.5:
        return _ln_gamma_near_two(x + 1.0) - math.log1p(x - 1.0)
    return _ln_gamma_near_two(x + 2.0) - math.log1p(x) - math.log(x)


def _is_nonpositive_integer(x):
    return x <= 0 and x == int(x)


def _lgamma_signed(x):
    """(log|Gamma(x)|, sign) for real x that is not a non-positive integer."""
    if x > 0:
        return ln_gamma(x), 1
    n = round(x)
    sin_pix = math.sin(math.pi * (x - n)) * (-1.0 if n % 2 else 1.0)
    return math.log(math.pi) - math.log(abs(sin_pix)) - ln_gamma(1.0 - x), (1 if sin_pix > 0 else -1)


# ---------------------------------------------------------------------------
# generic hypergeometric series  sum_k prod(num)_k / prod(den)_k z^k / k!


class _Escalate(Exception):
    """Double precision is not enough; ``condition`` is sum(|terms|) / |result|."""

    def __init__(self, condition=math.inf, direct=False):
        super().__init__()
        self.condition = condition
        self.direct = direct


def _terminating_length(num):
    """Index of the first vanishing term if a numerator parameter is a non-positive integer."""
    stops = [-int(p) + 1 for p in num if _is_nonpositive_integer(p)]
    return min(stops) if stops else None


class _TailBound:
    """Upper bound on |ratio_j| over j >= k for the term ratio

        R(j) = z * prod(p + j) / ((j + 1) * prod(q + j)).

    Past the last denominator pole the supremum is attained at k, at a real
    critical point of R beyond k, or at infinity, so it is exact rather than
    a monotonicity guess.
    """

    def __init__(self, num, den, z):
        self.num = [float(p) for p in num]
        self.den = [float(q) for q in den]
        self.z = float(z)
        self.start = max([0.0] + [-q for q in self.den]) + 1.0
        top = np.poly1d([1.0])
        for p in self.num:
            top = top * np.poly1d([1.0, p])
        bottom = np.poly1d([1.0, 1.0])
        for q in self.den:
            bottom = bottom * np.poly1d([1.0, q])
        crit = top.deriv() * bottom - top * bottom.deriv()
        self.crit = []
        if crit.order > 0 or crit.coeffs[0] != 0:
            for root in np.atleast_1d(crit.roots):
                if abs(root.imag) <= 1e-7 * (1.0 + abs(root.real)) and root.real > self.start - 1.0:
                    j = root.real
                    self.crit.append((j, abs(_ratio(self.num, self.den, self.z, j)) * (1.0 + 1e-6)))
        self.limit = abs(self.z) if len(self.num) > len(self.den) else 0.0

    def sup(self, k):
        """Bound for k past the poles, or inf when k is still before them."""
        if k < self.start:
            return math.inf
        r = max(abs(_ratio(self.num, self.den, self.z, k)), self.limit)
        for j, v in self.crit:
            if j > k and v > r:
                r = v
        return r


def _ratio(num, den, z, k):
    r = z / (k + 1)
    for p in num:
        r *= p + k
    for q in den:
        r /= q + k
    return r


# the double-precision sum is rescaled by 2**-_RESCALE_BITS whenever it grows
# past 2**_RESCALE_BITS, so results far beyond the double range stay exact
_RESCALE_BITS = 900


@numba.njit(cache=True)
def _series_kernel(num, den, z, rtol, max_terms, stop, start, limit, crit_j, crit_v):
    # returns (sum, sum |terms|, terms, tail bound, binary scale, status)
    # status: 0 converged, 1 term cap reached, 2 overflow
    eps = 2.220446049250313e-16
    up = 2.0 ** _RESCALE_BITS
    down = 2.0 ** -_RESCALE_BITS
    term = 1.0
    total = 1.0
    comp = 0.0
    magnitude = 1.0
    bound = 0.0
    scale = 0
    k = 0
    while stop < 0 or k < stop:
        if k >= max_terms:
            return total + comp, magnitude, k, bound, scale, 1
        r = z / (k + 1.0)
        for p in num:
            r *= p + k
        for q in den:
            r /= q + k
        term *= r
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        magnitude += abs(term)
        k += 1
        if not np.isfinite(magnitude):
            return total + comp, magnitude, k, bound, scale, 2
        if magnitude > up:
            term *= down
            total *= down
            comp *= down
            magnitude *= down
            scale += _RESCALE_BITS
        if stop < 0 and k >= start:
            rr = z / (k + 1.0)
            for p in num:
                rr *= p + k
            for q in den:
                rr /= q + k
            rr = max(abs(rr), limit)
            for i in range(crit_j.shape[0]):
                if crit_j[i] > k and crit_v[i] > rr:
                    rr = crit_v[i]
            if rr < 1.0:
                bound = abs(term) * rr / (1.0 - rr)
                if bound <= rtol * abs(total + comp) or bound <= eps * magnitude:
                    break
    return total + comp, magnitude, k, bound, scale, 0


_NO_CRIT = np.empty(0)


def _ldexp_or_inf(x, e):
    try:
        return math.ldexp(x, e)
    except OverflowError:
        return math.copysign(math.inf, x)


def _series_float(num, den, z, rtol, max_terms):
    """Double-precision series.

    Returns (sum, sum of |terms|, terms, tail bound, scale); the first, second
    and fourth entries are in units of 2**scale.
    """
    stop = _terminating_length(num)
    if stop is None:
        tail = _TailBound(num, den, z)
        start, limit = tail.start, tail.limit
        crit_j = np.array([j for j, _ in tail.crit]) if tail.crit else _NO_CRIT
        crit_v = np.array([v for _, v in tail.crit]) if tail.crit else _NO_CRIT
        stop = -1
    else:
        start, limit, crit_j, crit_v = 0.0, 0.0, _NO_CRIT, _NO_CRIT
    total, magnitude, k, bound, scale, status = _series_kernel(
        np.array(num, dtype=float), np.array(den, dtype=float), float(z), float(rtol),
        int(max_terms), int(stop), float(start), float(limit), crit_j, crit_v)
    if status == 1:
        raise ConvergenceError(
            f"series not converged after {max_terms} terms",
            partial=_ldexp_or_inf(total, scale),
            terms=k)
    if status == 2:
        raise _Escalate
    return total, magnitude, k, bound, scale


def _to_fixed(x, prec):
    return to_fixed(mpmath.mpf(x)._mpf_, prec)


def _series_ext(num, den, z, prec, max_terms):
    """Arbitrary-precision version of :func:`_series_float`.

    Terms are held as ``mantissa * 2**exp`` with a ``prec``-bit integer
    mantissa; the running sum is a fixed-point integer.  The tail is cut at
    the working precision, not at the caller's tolerance, because results
    may still be combined with cancellation.  Returns mpf values (sum, sum of
    |terms|, terms, error bound).
    """
    stop = _terminating_length(num)
    tail = None if stop is not None else _TailBound(num, den, z)

    top = [_to_fixed(p, prec) for p in num]
    bottom = [_to_fixed(q, prec) for q in den]
    zfix = _to_fixed(z, prec)
    grow = prec * (1 + len(num) - len(den))
    frac = prec + 32
    mant, expo = 1 << prec, -prec
    total = magnitude = 1 << frac
    bound_log2 = -math.inf
    k = 0
    while stop is None or k < stop:
        if k >= max_terms:
            raise ConvergenceError(
                f"series not converged after {max_terms} terms",
                partial=_mpf_to_float(mpmath.mpf((total, -frac))), terms=k)
        shift_k = k << prec
        numer = mant * zfix
        for p in top:
            numer *= p + shift_k
        denom = k + 1
        for q in bottom:
            denom *= q + shift_k
        if numer == 0:
            bound_log2 = -math.inf
            break
        negative = (numer < 0) != (denom < 0)
        numer, denom = abs(numer), abs(denom)
        sh = prec + 2 + denom.bit_length() - numer.bit_length()
        if sh >= 0:
            mant = (numer << sh) // denom
        else:
            mant = numer // (denom << -sh)
        expo -= grow + sh
        pos = expo + frac
        add = mant << pos if pos >= 0 else mant >> -pos
        if negative:
            mant, add = -mant, -add
        total += add
        magnitude += abs(add)
        k += 1
        if tail is not None:
            r = tail.sup(k)
            if r < 1.0:
                bound_log2 = abs(mant).bit_length() + expo + math.log2(r / (1.0 - r)) if r else -math.inf
                size_log2 = abs(total).bit_length() - frac if total else -math.inf
                if bound_log2 <= max(size_log2, magnitude.bit_length() - frac) - prec:
                    break
    total_mp = mpmath.mpf((total, -frac))
    magnitude_mp = mpmath.mpf((magnitude, -frac))
    err = magnitude_mp * (k + 2) * mpmath.ldexp(1, 2 - prec) + (k + 1) * mpmath.ldexp(1, -frac)
    if bound_log2 > -math.inf:
        err += mpmath.ldexp(1, math.ceil(bound_log2))
    return total_mp, magnitude_mp, k, err


def _rounding_error(terms, magnitude):
    return 4.0 * _EPS * math.sqrt(terms + 1.0) * magnitude


def _check_trust(rel_err, cancellation, rtol):
    if not (math.isfinite(rel_err) and math.isfinite(cancellation)):
        raise _Escalate
    # a looser tolerance than RTOL tolerates proportionally more cancellation
    limit = CANCELLATION_LIMIT * max(1.0, rtol / RTOL)
    if cancellation > limit or rel_err > rtol:
        raise _Escalate(cancellation)


_LN2 = math.log(2.0)


def _escalate(evaluate, rtol):
    """Re-run ``evaluate(prec)`` with growing precision until its error estimate passes."""
    prec = _START_PREC
    while True:
        with mpmath.workprec(prec + 64):
            value, err, terms = evaluate(prec)
        if value and err <= rtol * abs(value):
            break
        if prec >= _MAX_PREC:
            break
        if value:
            needed = int(mpmath.log(err / (rtol * abs(value)), 2)) + 64
        else:
            needed = prec
        prec = min(_MAX_PREC, prec + max(needed, 64))
    return SeriesResult.from_mpf(value, err, terms)


# ---------------------------------------------------------------------------
# Gauss 2F1


def _alternation(*params):
    # a numerator parameter p < 0 flips the term sign for about |p| terms,
    # whether or not it also ends the series there
    return sum(-p for p in params if p < 0)


def _euler_helps(a, b, c):
    """Whether 2F1(c-a, c-b; c; z) is the better series to sum.

    Fewer sign alternations wins; otherwise the smaller |a| + |b|.
    """
    if _is_nonpositive_integer(a) or _is_nonpositive_integer(b):
        return False
    before, after = _alternation(a, b), _alternation(c - a, c - b)
    if abs(before - after) > 1.0:
        return after < before
    return abs(c - a) + abs(c - b) < abs(a) + abs(b)


def _unpole(a, b, c):
    """Nudge c so that c - a - b sits DEGENERATE_BAND away from an integer."""
    m = c - a - b
    offset = m - round(m)
    if abs(offset) < DEGENERATE_BAND:
        c = c - offset + DEGENERATE_BAND
    return c


def _validate_2f1(a, b, c, z):
    for name, v in (("a", a), ("b", b), ("c", c), ("z", z)):
        if not math.isfinite(v):
            raise DomainError(f"2F1 parameter {name} must be finite, got {v!r}")
    if _is_nonpositive_integer(c):
        raise PoleError(f"2F1 is undefined for c = {c} (non-positive integer)")
    if not 0.0 <= z < 1.0:
        raise DomainError(f"2F1 is evaluated only for 0 <= z < 1, got z = {z}")


def _direct_reachable(z, max_terms):
    # z**max_terms must be far below double precision for the plain series to finish
    return -math.log(z) * max_terms > 50.0


def _f21_float(a, b, c, z, rtol, max_terms):
    pre_log = 0.0
    if _euler_helps(a, b, c):
        pre_log = (c - a - b) * math.log1p(-z)
        a, b = c - a, c - b
    if z <= 0.5 or _is_nonpositive_integer(a) or _is_nonpositive_integer(b):
        try:
            return _f21_direct_float(a, b, c, z, pre_log, rtol, max_terms)
        except _Escalate as exc:
            raise _Escalate(exc.condition, direct=True) from None
    try:
        return _f21_connection_float(a, b, c, z, pre_log, rtol, max_terms)
    except _Escalate as exc:
        connection = exc.condition
    if not _direct_reachable(z, max_terms):
        raise _Escalate(connection)
    # Large |c - a - b| makes the two connection terms cancel; the plain
    # series often has no such problem for moderate z.
    try:
        return _f21_direct_float(a, b, c, z, pre_log, rtol, max_terms)
    except _Escalate as exc:
        raise _Escalate(min(connection, exc.condition), direct=exc.condition < connection) from None
    except ConvergenceError:
        raise _Escalate(connection) from None


def _f21_direct_float(a, b, c, z, pre_log, rtol, max_terms):
    s, magnitude, k, bound, scale = _series_float((a, b), (c,), z, rtol, max_terms)
    if s == 0.0:
        raise _Escalate
    rel_err = (bound + _rounding_error(k, magnitude)) / abs(s) + 4 * _EPS * (abs(pre_log) + 1)
    _check_trust(rel_err, magnitude / abs(s), rtol)
    return math.log(abs(s)) + scale * _LN2 + pre_log, (1 if s > 0 else -1), rel_err, k


def _f21_connection_float(a, b, c, z, pre_log, rtol, max_terms):
    # 2F1(a,b;c;z) = A 2F1(a,b;a+b-c+1;1-z) + B (1-z)^(c-a-b) 2F1(c-a,c-b;c-a-b+1;1-z)
    w = 1.0 - z
    c = _unpole(a, b, c)
    m = c - a - b
    lw = math.log(w)
    pieces = []
    if not (_is_nonpositive_integer(c - a) or _is_nonpositive_integer(c - b)):
        logs = [_lgamma_signed(c), _lgamma_signed(m), _lgamma_signed(c - a), _lgamma_signed(c - b)]
        log_coef = logs[0][0] + logs[1][0] - logs[2][0] - logs[3][0] + pre_log
        sign = logs[0][1] * logs[1][1] * logs[2][1] * logs[3][1]
        spread = sum(abs(v) for v, _ in logs) + abs(pre_log)
        pieces.append((log_coef, sign, spread, _series_float((a, b), (1.0 - m,), w, rtol, max_terms)))
    if not (_is_nonpositive_integer(a) or _is_nonpositive_integer(b)):
        logs = [_lgamma_signed(c), _lgamma_signed(-m), _lgamma_signed(a), _lgamma_signed(b)]
        log_coef = logs[0][0] + logs[1][0] - logs[2][0] - logs[3][0] + m * lw + pre_log
        sign = logs[0][1] * logs[1][1] * logs[2][1] * logs[3][1]
        spread = sum(abs(v) for v, _ in logs) + abs(m * lw) + abs(pre_log)
        pieces.append((log_coef, sign, spread, _series_float((c - a, c - b), (1.0 + m,), w, rtol, max_terms)))
    # common scale: the largest |coefficient| * sum|terms|
    top = max(lc + sc * _LN2 + math.log(mag) for lc, _, _, (_, mag, _, _, sc) in pieces)
    value = err = magnitude = 0.0
    terms = 0
    for log_coef, sign, spread, (s, mag, k, bound, sc) in pieces:
        coef = math.exp(log_coef + sc * _LN2 - top)
        value += sign * coef * s
        magnitude += coef * mag
        err += coef * (bound + _rounding_error(k, mag)) + coef * abs(s) * 8 * _EPS * (spread + 1)
        terms += k
    if value == 0.0:
        raise _Escalate
    _check_trust(err / abs(value), magnitude / abs(value), rtol)
    return top + math.log(abs(value)), (1 if value > 0 else -1), err / abs(value), terms


def _f21_mp(a, b, c, z, prec, max_terms, direct=False):
    mpf = mpmath.mpf
    pre = mpf(1)
    if _euler_helps(a, b, c):
        pre = mpmath.power(1 - mpf(z), mpf(c) - a - b)
        a, b = mpf(c) - a, mpf(c) - b
    a, b, c, z = mpf(a), mpf(b), mpf(c), mpf(z)
    plain = z <= 0.5 or _is_nonpositive_integer(a) or _is_nonpositive_integer(b)
    if direct or plain:
        try:
            s, _, k, err = _series_ext((a, b), (c,), z, prec, max_terms)
            return pre * s, abs(pre) * err, k
        except ConvergenceError:
            # the working-precision tail needs more terms than the double one did
            if plain:
                raise
    w = 1 - z
    c = mpf(_unpole(float(a), float(b), float(c))) if _near_integer(c - a - b) else c
    m = c - a - b
    value = err = mpf(0)
    terms = 0
    if not (_is_nonpositive_integer(c - a) or _is_nonpositive_integer(c - b)):
        coef = mpmath.gamma(c) * mpmath.gamma(m) * mpmath.rgamma(c - a) * mpmath.rgamma(c - b)
        s, _, k, e = _series_ext((a, b), (1 - m,), w, prec, max_terms)
        value += coef * s
        err += abs(coef) * e
        terms += k
    if not (_is_nonpositive_integer(a) or _is_nonpositive_integer(b)):
        coef = mpmath.gamma(c) * mpmath.gamma(-m) * mpmath.rgamma(a) * mpmath.rgamma(b) * mpmath.power(w, m)
        s, _, k, e = _series_ext((c - a, c - b), (1 + m,), w, prec, max_terms)
        value += coef * s
        err += abs(coef) * e
        terms += k
    value *= pre
    err = abs(pre) * err + abs(value) * mpmath.ldexp(1, 8 - prec)
    return value, err, terms


def _near_integer(x):
    return abs(x - mpmath.nint(x)) < DEGENERATE_BAND


def gauss_2f1(a, b, c, z, *, rtol=RTOL, max_terms=TERM_CAP):
    """Gauss hypergeometric function 2F1(a, b; c; z) for real parameters, 0 <= z < 1.

    Terminating series (a or b a non-positive integer) are summed exactly as
    polynomials.  Otherwise the Euler transformation is applied first when it
    shrinks |a| + |b|; z <= 0.5 uses the power series and z > 0.5 the
    connection formula in 1 - z.  Raises :class:`PoleError` for c in
    {0, -1, -2, ...}, :class:`DomainError` for z outside [0, 1) and
    :class:`ConvergenceError` when ``max_terms`` is exhausted.
    """
    a, b, c, z = float(a), float(b), float(c), float(z)
    _validate_2f1(a, b, c, z)
    if z == 0.0:
        return SeriesResult.from_float(1.0, 0.0, 0)
    try:
        return SeriesResult.from_log(*_f21_float(a, b, c, z, rtol, max_terms))
    except _Escalate as exc:
        direct = exc.direct
    return _escalate(lambda prec: _f21_mp(a, b, c, z, prec, max_terms, direct), rtol)


# ---------------------------------------------------------------------------
# Kummer 1F1


def _f11_float(a, c, z, rtol, max_terms):
    pre_log = 0.0
    if z < 0 and not _is_nonpositive_integer(a):
        # Kummer's transformation keeps the series free of alternating signs.
        pre_log, a, z = z, c - a, -z
    s, magnitude, k, bound, scale = _series_float((a,), (c,), z, rtol, max_terms)
    if s == 0.0:
        raise _Escalate
    rel_err = (bound + _rounding_error(k, magnitude)) / abs(s) + 4 * _EPS * (abs(pre_log) + 1)
    _check_trust(rel_err, magnitude / abs(s), rtol)
    return math.log(abs(s)) + scale * _LN2 + pre_log, (1 if s > 0 else -1), rel_err, k


def _f11_mp(a, c, z, prec, max_terms):
    pre = mpmath.mpf(1)
    if z < 0 and not _is_nonpositive_integer(a):
        pre, a, z = mpmath.exp(z), c - a, -z
    s, _, k, err = _series_ext((a,), (c,), z, prec, max_terms)
    return pre * s, pre * err, k


def kummer_1f1(a, c, z, *, rtol=RTOL, max_terms=TERM_CAP):
    """Confluent hypergeometric function 1F1(a; c; z) for real arguments."""
    a, c, z = float(a), float(c), float(z)
    for name, v in (("a", a), ("c", c), ("z", z)):
        if not math.isfinite(v):
            raise DomainError(f"1F1 parameter {name} must be finite, got {v!r}")
    if _is_nonpositive_integer(c):
        raise PoleError(f"1F1 is undefined for c = {c} (non-positive integer)")
    if z == 0.0:
        return SeriesResult.from_float(1.0, 0.0, 0)
    try:
        return SeriesResult.from_log(*_f11_float(a, c, z, rtol, max_terms))
    except _Escalate:
        pass
    return _escalate(lambda prec: _f11_mp(a, c, z, prec, max_terms), rtol)


# ---------------------------------------------------------------------------
# Jacobi polynomials


def jacobi_p(n, alpha, beta, x):
    """Jacobi polynomial P_n^(alpha, beta)(x) by the three-term recurrence.

    ``x`` may be a scalar or a numpy array with entries in [-1, 1].
    """
    if int(n) != n or n < 0:
        raise DomainError(f"Jacobi degree must be a non-negative integer, got {n!r}")
    if not (alpha > -1 and beta > -1):
        raise DomainError(f"Jacobi parameters need alpha, beta > -1, got ({alpha}, {beta})")
    xs = np.asarray(x, dtype=float)
    if np.any(np.abs(xs) > 1.0) or not np.all(np.isfinite(xs)):
        raise DomainError("Jacobi argument must lie in [-1, 1]")
    n = int(n)
    scalar = xs.ndim == 0
    prev = np.ones_like(xs)
    if n == 0:
        return float(prev) if scalar else prev
    cur = (alpha + 1) + (alpha + beta + 2) * (xs - 1) / 2
    ab2 = alpha * alpha - beta * beta
    for k in range(2, n + 1):
        s = 2 * k + alpha + beta
        lead = 2 * k * (k + alpha + beta) * (s - 2)
        lin = (s - 1) * (s * (s - 2) * xs + ab2)
        back = 2 * (k + alpha - 1) * (k + beta - 1) * s
        prev, cur = cur, (lin * cur - back * prev) / lead
    return float(cur) if scalar else cur
