"""
Growth-law and decay-law regression.

The subdiffusive law E(t) = A0 t + A1 t**alpha is linear in (A0, A1) for
fixed alpha, so alpha is profiled on a fixed grid with non-negative
least squares at every node and then refined by golden-section search
around the best node.
"""
import logging
import math
from dataclasses import replace

import numpy as np
from scipy.optimize import minimize_scalar, nnls

from analysis.models import UNIDENTIFIABLE, F0DecayFit, FitResult
from core.exceptions import DomainError, InsufficientDataError

logger = logging.getLogger(__name__)

ALPHA_GRID = np.round(np.arange(0.05, 1.5 + 1e-9, 0.005), 6)
MIN_POINTS = 8
UNIDENTIFIABLE_RATIO = 1e-6

_TINY = np.finfo(float).tiny


def aicc(rss, n_points, n_params):
    """Corrected Akaike criterion for Gaussian residuals."""
    n, k = n_points, n_params
    if n - k - 1 <= 0:
        raise InsufficientDataError(
            f'{n} points cannot support {k} parameters'
        )
    return (n * math.log(max(rss, _TINY) / n) + 2 * k
            + 2 * k * (k + 1) / (n - k - 1))


def _window(times, values, t_min, t_max, sigma=None):
    """Points with t_min <= t <= t_max and t > 0."""
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    if t_max is None:
        t_max = times.max()
    keep = (times >= t_min) & (times <= t_max) & (times > 0)
    if np.count_nonzero(keep) < MIN_POINTS:
        raise InsufficientDataError(
            f'need at least {MIN_POINTS} points in [{t_min}, {t_max}], '
            f'got {np.count_nonzero(keep)}'
        )
    weights = np.ones(np.count_nonzero(keep))
    if sigma is not None:
        sigma = np.asarray(sigma, dtype=float)[keep]
        if np.all(sigma > 0):
            weights = 1.0 / sigma
    t = times[keep]
    return t, values[keep], weights, float(t[0]), float(t[-1])


def _profile(t, energy, weights, alpha):
    """NNLS of (A0, A1) at fixed alpha; returns (coefficients, rss)."""
    design = np.column_stack((t, t ** alpha)) * weights[:, None]
    coeffs, norm = nnls(design, energy * weights)
    return coeffs, norm ** 2


def fit_energy_growth(curve, t_min=10, t_max=None, weighted=False):
    """Fit E(t) = A0 t + A1 t**alpha with A0, A1 >= 0.

    Pure linear data leaves alpha undetermined; the result then carries
    the 'alpha-unidentifiable' flag and alpha is NaN.
    """
    sigma = curve.std_E if weighted else None
    t, energy, weights, lo, hi = _window(
        curve.times, curve.mean_E, t_min, t_max, sigma
    )
    if np.any(energy <= 0):
        raise DomainError('mean energy must be positive in the fit window')

    def rss_at(alpha):
        return _profile(t, energy, weights, alpha)[1]

    grid_rss = np.array([rss_at(a) for a in ALPHA_GRID])
    best = int(np.argmin(grid_rss))
    alpha = float(ALPHA_GRID[best])
    if 0 < best < len(ALPHA_GRID) - 1 \
            and grid_rss[best] < min(grid_rss[best - 1], grid_rss[best + 1]):
        refined = minimize_scalar(
            rss_at,
            bracket=(ALPHA_GRID[best - 1], alpha, ALPHA_GRID[best + 1]),
            method='golden',
            tol=1e-10,
        )
        if refined.fun <= grid_rss[best]:
            alpha = float(refined.x)

    (a0, a1), rss = _profile(t, energy, weights, alpha)
    n = len(t)
    slope, sigma_a0, linear_rss = _origin_slope(t, energy, weights)
    no_gain = linear_rss - rss <= 1e-12 * np.sum((weights * energy) ** 2)
    if no_gain or a1 * np.max(t ** alpha) \
            <= UNIDENTIFIABLE_RATIO * np.max(energy):
        rss = linear_rss
        logger.debug('Energy growth is linear; alpha is unidentifiable')
        return FitResult(
            model_name='energy_growth',
            params={'A0': slope, 'A1': 0.0, 'alpha': math.nan},
            sigmas={'A0': sigma_a0, 'A1': 0.0, 'alpha': math.nan},
            rss=rss,
            aicc=aicc(rss, n, 2),
            t_min=lo,
            t_max=hi,
            n_points=n,
            flags=(UNIDENTIFIABLE,),
        )

    jacobian = np.column_stack(
        (t, t ** alpha, a1 * t ** alpha * np.log(t))
    ) * weights[:, None]
    s2 = rss / (n - 3)
    cov = s2 * np.linalg.pinv(jacobian.T @ jacobian)
    sigmas = np.sqrt(np.clip(np.diag(cov), 0.0, None))
    logger.debug('Energy growth fit: alpha=%.4f, A0=%.4g, A1=%.4g',
                 alpha, a0, a1)
    return FitResult(
        model_name='energy_growth',
        params={'A0': float(a0), 'A1': float(a1), 'alpha': alpha},
        sigmas={'A0': float(sigmas[0]), 'A1': float(sigmas[1]),
                'alpha': float(sigmas[2])},
        rss=float(rss),
        aicc=aicc(rss, n, 3),
        t_min=lo,
        t_max=hi,
        n_points=n,
    )


def _origin_slope(t, energy, weights):
    """Weighted least-squares slope through the origin."""
    wt = t * weights
    slope = float(np.dot(wt, energy * weights) / np.dot(wt, wt))
    rss = float(np.sum((weights * (energy - slope * t)) ** 2))
    sigma = math.sqrt(rss / (len(t) - 1) / np.dot(wt, wt))
    return slope, sigma, rss


def fit_linear_growth(curve, t_min=10, t_max=None, weighted=False):
    """Fit E(t) = A2 t."""
    sigma = curve.std_E if weighted else None
    t, energy, weights, lo, hi = _window(
        curve.times, curve.mean_E, t_min, t_max, sigma
    )
    slope, sigma_a2, rss = _origin_slope(t, energy, weights)
    return FitResult(
        model_name='linear_growth',
        params={'A2': slope},
        sigmas={'A2': sigma_a2},
        rss=rss,
        aicc=aicc(rss, len(t), 1),
        t_min=lo,
        t_max=hi,
        n_points=len(t),
    )


def fit_growth_constants(curve, alpha, t_min=10, t_max=None, weighted=False):
    """Refit the growth-law constants at a fixed alpha.

    alpha < 1: A0, A1 >= 0 of A0 t + A1 t**alpha
    alpha >= 1: A2 of A2 t
    """
    if not alpha > 0:
        raise DomainError(f'alpha must be positive, got {alpha!r}')
    if alpha >= 1:
        fit = fit_linear_growth(curve, t_min, t_max, weighted)
        return replace(fit, model_name='growth_law')

    sigma = curve.std_E if weighted else None
    t, energy, weights, lo, hi = _window(
        curve.times, curve.mean_E, t_min, t_max, sigma
    )
    (a0, a1), rss = _profile(t, energy, weights, alpha)
    design = np.column_stack((t, t ** alpha)) * weights[:, None]
    cov = rss / (len(t) - 2) * np.linalg.pinv(design.T @ design)
    sigmas = np.sqrt(np.clip(np.diag(cov), 0.0, None))
    return FitResult(
        model_name='growth_law',
        params={'A0': float(a0), 'A1': float(a1)},
        sigmas={'A0': float(sigmas[0]), 'A1': float(sigmas[1])},
        rss=float(rss),
        aicc=aicc(rss, len(t), 2),
        t_min=lo,
        t_max=hi,
        n_points=len(t),
    )


def _line(x, y, model_name, names, lo, hi):
    """Straight-line fit y = intercept + slope x with uncertainties."""
    coeffs, cov = np.polyfit(x, y, 1, cov='unscaled')
    rss = float(np.sum((y - np.polyval(coeffs, x)) ** 2))
    scale = rss / (len(x) - 2)
    sigmas = np.sqrt(np.diag(cov) * scale)
    slope, intercept = coeffs
    slope_name, intercept_name, slope_sign = names
    return FitResult(
        model_name=model_name,
        params={intercept_name: float(intercept),
                slope_name: float(slope_sign * slope)},
        sigmas={intercept_name: float(sigmas[1]),
                slope_name: float(sigmas[0])},
        rss=rss,
        aicc=aicc(rss, len(x), 2),
        t_min=lo,
        t_max=hi,
        n_points=len(x),
    )


def fit_growth_exponent(curve, t_min=10, t_max=None):
    """Single power law E = A t**gamma by log-log least squares.

    params holds log_A and gamma.
    """
    t, energy, _, lo, hi = _window(curve.times, curve.mean_E, t_min, t_max)
    if np.any(energy <= 0):
        raise DomainError('mean energy must be positive in the fit window')
    return _line(np.log(t), np.log(energy), 'power_law_growth',
                 ('gamma', 'log_A', 1.0), lo, hi)


def fit_f0_decay(series, t_min=1, t_max=None):
    """Exponential against power-law decay of f(0), chosen by AICc.

    exponential: log f0 = log_c - rate t
    power_law:   log f0 = log_c - exponent log t
    """
    f0 = np.asarray(series.f0, dtype=float)
    if np.any(f0 <= 0):
        raise DomainError('f(0) must be positive to fit a decay law')
    t, f0, _, lo, hi = _window(series.times, f0, max(t_min, 1), t_max)
    log_f0 = np.log(f0)
    exponential = _line(t, log_f0, 'f0_exponential',
                        ('rate', 'log_c', -1.0), lo, hi)
    power_law = _line(np.log(t), log_f0, 'f0_power_law',
                      ('exponent', 'log_c', -1.0), lo, hi)
    preferred = 'exponential' \
        if exponential.aicc <= power_law.aicc else 'power_law'
    logger.debug('f(0) decay: AICc exponential=%.2f, power law=%.2f',
                 exponential.aicc, power_law.aicc)
    return F0DecayFit(preferred, exponential, power_law)
