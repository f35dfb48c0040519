"""
Mittag-Leffler function E_alpha(z) = sum_k z**k / Gamma(alpha k + 1)
for real z and 0 < alpha <= 2.

Evaluation routes, chosen on s = |z|**(1/alpha):

* s >= ASYMPTOTIC_THRESHOLD: asymptotic expansion, exponential part
  (1/alpha) exp(z**(1/alpha)) for z > 0, conjugate saddle pair for
  z < 0 and alpha > 1, plus the algebraic tail -sum z**-k/Gamma(1-alpha k).
* z < 0, alpha < 1: Laplace representation with a positive integrand,
  free of the cancellation that ruins the alternating series.
* otherwise: power series summed in log space with exact summation.
"""
import math

import numpy as np
from scipy.integrate import quad
from scipy.special import gammaln, rgamma

from core.exceptions import AccuracyError, DomainError
from special.models import MLEvalOptions

ASYMPTOTIC_THRESHOLD = 40.0

# exp(s) must stay finite for positive arguments.
OVERFLOW_EXPONENT = 700.0

SERIES_CHUNK = 256
MAX_ASYMPTOTIC_TERMS = 2000

_EPS = np.finfo(float).eps
_LOG_NEGLIGIBLE = math.log(_EPS) - 5.0

DEFAULT_OPTIONS = MLEvalOptions()


def mittag_leffler(alpha, z, opts=DEFAULT_OPTIONS):
    """Return E_alpha(z) to relative accuracy opts.rel_tol."""
    if not 0 < alpha <= 2:
        raise DomainError(f'alpha must lie in (0, 2], got {alpha!r}')
    z = float(z)
    if math.isnan(z):
        raise DomainError('z must be a real number')
    if z == 0.0:
        return 1.0

    scale = abs(z) ** (1.0 / alpha)
    if z > 0 and scale > OVERFLOW_EXPONENT:
        raise DomainError(
            f'E_{alpha}({z}) overflows: |z|**(1/alpha) = {scale:.1f} '
            f'exceeds {OVERFLOW_EXPONENT}'
        )
    if alpha == 1.0:
        return math.exp(z)

    # E_2(-x) = cos(sqrt(x)) is exactly the saddle pair
    if scale >= ASYMPTOTIC_THRESHOLD or (z < 0 and alpha == 2.0):
        value, bound = _asymptotic(alpha, z)
        if bound <= opts.rel_tol * abs(value):
            return value
        if z > 0 or alpha > 1:
            raise AccuracyError(
                'asymptotic expansion not accurate enough', value, bound
            )
    if z < 0 and alpha < 1:
        value, bound = _laplace_integral(alpha, -z, opts)
    else:
        value, bound = _series(alpha, z, opts)
    if bound > opts.rel_tol * abs(value):
        raise AccuracyError(
            f'E_{alpha}({z}) lost accuracy to cancellation', value, bound
        )
    return value


def log_mittag_leffler(alpha, z, opts=DEFAULT_OPTIONS):
    """Return log E_alpha(z) for real z with E_alpha(z) > 0.

    On the positive axis past the asymptotic threshold the exponential
    part stays in log space, so the result is finite where E_alpha(z)
    itself overflows a float.
    """
    if not 0 < alpha <= 2:
        raise DomainError(f'alpha must lie in (0, 2], got {alpha!r}')
    z = float(z)
    if z > 0 and z ** (1.0 / alpha) >= ASYMPTOTIC_THRESHOLD:
        scale = z ** (1.0 / alpha)
        algebraic, bound = _algebraic_tail(alpha, z)
        # E = exp(s) / alpha * (1 + alpha exp(-s) algebraic)
        damping = alpha * math.exp(-scale)
        if bound * damping > opts.rel_tol:
            raise AccuracyError(
                f'log E_{alpha}({z}) not accurate enough',
                scale - math.log(alpha), bound * damping,
            )
        return scale - math.log(alpha) + math.log1p(damping * algebraic)
    value = mittag_leffler(alpha, z, opts)
    if not value > 0:
        raise DomainError(
            f'E_{alpha}({z}) = {value!r} has no real logarithm'
        )
    return math.log(value)


def _series(alpha, z, opts):
    """Power series; returns (value, error bound)."""
    log_abs_z = math.log(abs(z))
    chunks = []
    sizes = []
    peak = -math.inf
    start = 0
    converged = False
    while start < opts.max_terms:
        k = np.arange(start, min(start + SERIES_CHUNK, opts.max_terms))
        powers = k * log_abs_z
        gammas = gammaln(alpha * k + 1.0)
        log_terms = powers - gammas
        chunks.append(log_terms)
        sizes.append(np.abs(powers) + np.abs(gammas))
        peak = max(peak, log_terms.max())
        start = int(k[-1]) + 1
        past_peak = alpha * start > abs(z) ** (1.0 / alpha) + 1.0
        if past_peak and log_terms[-1] < peak + _LOG_NEGLIGIBLE:
            converged = True
            break

    log_terms = np.concatenate(chunks)
    terms = np.exp(log_terms - peak)
    if z < 0:
        terms[1::2] = -terms[1::2]
    total = math.fsum(terms)
    # each term carries the rounding of its own log-space evaluation
    rounding = math.fsum(
        np.abs(terms) * _EPS * (4.0 + np.concatenate(sizes))
    )
    bound = rounding + abs(terms[-1])
    factor = math.exp(peak)
    if not converged:
        raise AccuracyError(
            f'series for E_{alpha}({z}) did not converge within '
            f'{opts.max_terms} terms',
            total * factor,
            bound * factor,
        )
    return total * factor, bound * factor


def _algebraic_tail(alpha, z):
    """-sum_k z**-k / Gamma(1 - alpha k), optimally truncated.

    Returns (sum, first omitted term); terms at poles of Gamma vanish.
    """
    inverse = 1.0 / z
    power = 1.0
    total = 0.0
    previous = math.inf
    for k in range(1, MAX_ASYMPTOTIC_TERMS):
        power *= inverse
        term = -power * rgamma(1.0 - alpha * k)
        size = abs(term)
        if size == 0.0:
            continue
        if size > previous:
            return total, size
        total += term
        if size <= _EPS * abs(total):
            return total, size
        previous = size
    if previous == math.inf:
        return total, 0.0
    return total, previous


def _asymptotic(alpha, z):
    """Large-|z| expansion; returns (value, error bound)."""
    scale = abs(z) ** (1.0 / alpha)
    algebraic, bound = _algebraic_tail(alpha, z)
    if z > 0:
        exponential = math.exp(scale) / alpha
    elif alpha > 1:
        angle = math.pi / alpha
        exponential = (2.0 / alpha) * math.exp(scale * math.cos(angle)) \
            * math.cos(scale * math.sin(angle))
    else:
        exponential = 0.0
    value = exponential + algebraic
    return value, bound + _EPS * abs(value)


def _laplace_integral(alpha, x, opts):
    """E_alpha(-x) for 0 < alpha < 1 and x > 0.

    E_alpha(-x) = sin(pi a)/(pi a) * int_0^inf exp(-(s x)**(1/a))
                  / (s**2 + 2 s cos(pi a) + 1) ds
    """
    exponent = 1.0 / alpha
    cos_term = 2.0 * math.cos(math.pi * alpha)

    def integrand(s):
        return math.exp(-(s * x) ** exponent) / (s * s + cos_term * s + 1.0)

    split = min(1.0, 1.0 / x)
    epsrel = max(opts.rel_tol * 1e-2, 1e-13)
    head, head_err = quad(integrand, 0.0, split, epsabs=0.0,
                          epsrel=epsrel, limit=200)
    tail, tail_err = quad(integrand, split, np.inf, epsabs=0.0,
                          epsrel=epsrel, limit=200)
    prefactor = math.sin(math.pi * alpha) / (math.pi * alpha)
    value = prefactor * (head + tail)
    return value, prefactor * (head_err + tail_err)
