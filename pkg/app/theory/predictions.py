"""
Closed-form decoherence and energy growth predictions.
"""
import math
from dataclasses import dataclass

import numpy as np

from core.exceptions import AccuracyError, DomainError
from special.mittag_leffler import DEFAULT_OPTIONS, log_mittag_leffler

Q_FACTOR_TOL = 1e-8


def q_factor(K_prime, hbar_s, n_terms=40):
    """Phase-averaged kick overlap q(K'/hbar_s).

    Partial sum of sum_k (-1)**k x**(2k)/(2k)! * binom(2k, k)/4**k with
    x = K'/hbar_s; the uniform averages of cos(x)**(2k) turn the series
    into that of J0(x).
    """
    if not hbar_s > 0:
        raise DomainError(f'hbar_s must be positive, got {hbar_s!r}')
    if n_terms < 2:
        raise DomainError(f'n_terms must be at least 2, got {n_terms!r}')
    x = K_prime / hbar_s
    step = -(x / 2.0) ** 2
    terms = [1.0]
    for k in range(1, n_terms):
        terms.append(terms[-1] * step / (k * k))
    value = math.fsum(terms)
    omitted = abs(terms[-1] * step / (n_terms * n_terms))
    bound = omitted + np.finfo(float).eps * math.fsum(map(abs, terms))
    if bound > Q_FACTOR_TOL:
        raise AccuracyError(
            f'q({x:.4g}) needs more than {n_terms} terms', value, bound
        )
    return value


@dataclass(frozen=True)
class DecoherenceFactor:
    """D(t, 0); limit_case marks the alpha = 1 exponential limit."""
    value: float
    limit_case: bool = False


def decoherence_factor(t, params, opts=DEFAULT_OPTIONS):
    """Decoherence factor D(t, 0), normalized to D(0) = 1.

    alpha < 1: exp(-(1-q**2) t) E_alpha(s (1-q**2) sin(pi a)/(pi a) t**a)
    alpha = 1: exp(-(1-q**2) t), flagged as the limit case
    alpha > 1: exp(-(1-q**2) (1 - 1/tau_bar) t)
    with s = params.ml_sign.
    """
    if not t >= 0:
        raise DomainError(f't must be non-negative, got {t!r}')
    rate = 1.0 - params.q ** 2
    alpha = params.alpha
    if alpha == 1:
        return DecoherenceFactor(math.exp(-rate * t), limit_case=True)
    if alpha > 1:
        return DecoherenceFactor(
            math.exp(-rate * (1.0 - 1.0 / params.tau_bar) * t)
        )
    weight = math.sin(math.pi * alpha) / (math.pi * alpha)
    argument = params.ml_sign * rate * weight * t ** alpha
    return DecoherenceFactor(
        math.exp(-rate * t + log_mittag_leffler(alpha, argument, opts))
    )


def decoherence_curve(times, params, opts=DEFAULT_OPTIONS):
    """D(t, 0) at every time in times."""
    return np.array([
        decoherence_factor(float(t), params, opts).value for t in times
    ])


def predicted_energy(t, params):
    """A0 t + A1 t**alpha for alpha < 1, A2 t otherwise; t >= 1."""
    times = np.asarray(t, dtype=float)
    if np.any(times < 1):
        raise DomainError('energy growth laws hold for t >= 1')
    if params.alpha < 1:
        energy = params.A0 * times + params.A1 * times ** params.alpha
    else:
        energy = params.A2 * times
    return float(energy) if energy.ndim == 0 else energy
