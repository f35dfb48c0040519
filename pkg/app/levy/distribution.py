"""
Discrete Lévy waiting-time distribution.

    w(tau) = alpha * Gamma(tau) * Gamma(alpha + 1) / Gamma(tau + alpha + 1)

for tau = 1, 2, ...  The tail decays as tau**(-alpha - 1), so the mean
waiting time diverges for alpha <= 1.  Large-argument Gamma ratios are
never formed directly; everything runs off the ratio recursion

    w(tau + 1) / w(tau) = tau / (tau + alpha + 1).
"""
import math

import numpy as np
from scipy.special import gammaln

from core.exceptions import DomainError

# Walk length after which sampling switches to bisection on the
# closed-form survival function.
WALK_LIMIT = 10 ** 6


def _check_tau(tau, minimum=1):
    if int(tau) != tau or tau < minimum:
        raise DomainError(
            f'tau must be an integer >= {minimum}, got {tau!r}'
        )
    return int(tau)


def levy_pmf(params, tau):
    """Return w(tau) via the ratio recursion from w(1) = alpha/(alpha+1)."""
    tau = _check_tau(tau)
    alpha = params.alpha
    w = alpha / (alpha + 1.0)
    for t in range(1, tau):
        w *= t / (t + alpha + 1.0)
    return w


def levy_pmf_table(params, tau_max):
    """Return w(1..tau_max) as an array, same recursion as levy_pmf."""
    tau_max = _check_tau(tau_max)
    alpha = params.alpha
    t = np.arange(1, tau_max, dtype=float)
    ratios = np.concatenate(([alpha / (alpha + 1.0)], t / (t + alpha + 1.0)))
    return np.cumprod(ratios)


def survival(params, tau):
    """Return P(waiting time > tau) = G(a+1) G(tau+1) / G(tau+a+1)."""
    tau = _check_tau(tau, minimum=0)
    alpha = params.alpha
    return math.exp(
        gammaln(alpha + 1.0) + gammaln(tau + 1.0) - gammaln(tau + alpha + 1.0)
    )


def mean_waiting_time(params):
    """Mean waiting time alpha/(alpha - 1), or None when it diverges."""
    if params.alpha <= 1:
        return None
    return params.alpha / (params.alpha - 1.0)


def _log_survival(alpha, tau):
    return (gammaln(alpha + 1.0) + gammaln(tau + 1.0)
            - gammaln(tau + alpha + 1.0))


def _bisect_tail(alpha, target, lo):
    """Smallest tau > lo with survival(tau) <= target."""
    log_target = math.log(target)
    hi = 2 * lo
    while _log_survival(alpha, hi) > log_target:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _log_survival(alpha, mid) > log_target:
            lo = mid
        else:
            hi = mid
    return hi


def waiting_time_for_uniform(params, u, limit=None):
    """Invert the CDF: smallest tau >= 1 with CDF(tau) >= u.

    The walk tracks 1 - CDF(tau) through its ratio recursion, which keeps
    full relative precision deep in the tail.  With a limit, any tau beyond
    it is reported as limit + 1.
    """
    if not 0.0 <= u < 1.0:
        raise DomainError(f'u must lie in [0, 1), got {u!r}')
    alpha = params.alpha
    target = 1.0 - u
    tail = 1.0
    tau = 0
    while True:
        tau += 1
        tail *= tau / (tau + alpha)
        if tail <= target:
            return tau
        if limit is not None and tau >= limit:
            return limit + 1
        if tau >= WALK_LIMIT:
            return _bisect_tail(alpha, target, tau)


def sample_waiting_time(params, rng, limit=None):
    """Draw one waiting time from w(tau); consumes one uniform from rng."""
    return waiting_time_for_uniform(params, rng.random(), limit=limit)


class WaitingTimeTable:
    """The inverse-CDF walk tabulated up to a fixed limit.

    lookup(u) agrees exactly with waiting_time_for_uniform(params, u, limit).
    """

    def __init__(self, params, limit):
        self.params = params
        self.limit = _check_tau(limit)
        taus = np.arange(1, self.limit + 1, dtype=float)
        self._neg_tail = -np.cumprod(taus / (taus + params.alpha))

    def lookup(self, u):
        u = np.asarray(u, dtype=float)
        if np.any((u < 0.0) | (u >= 1.0)):
            raise DomainError('uniform draws must lie in [0, 1)')
        return np.searchsorted(self._neg_tail, -(1.0 - u), side='left') + 1

    def sample(self, rng, size):
        """Draw size waiting times; values above the limit read limit + 1."""
        return self.lookup(rng.random(size))
