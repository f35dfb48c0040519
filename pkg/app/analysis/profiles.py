"""
Exponential against Gaussian classification of momentum profiles.
"""
import logging
import math

import numpy as np

from analysis.models import ProfileClass
from core.exceptions import InsufficientDataError

logger = logging.getLogger(__name__)

MIN_BINS = 10


def _log_fit(x, log_f):
    """Line through (x, log f); returns (slope, rss)."""
    coeffs = np.polyfit(x, log_f, 1)
    rss = float(np.sum((log_f - np.polyval(coeffs, x)) ** 2))
    return float(coeffs[0]), rss


def classify_profile(profile, floor=1e-4):
    """Pick the lower-residual shape for the log density.

    exponential: log f = c - |p| / xi
    gaussian:    log f = c - p**2 / (2 sigma**2)

    Only bins with f >= floor take part.
    """
    usable = profile.f >= floor
    n_bins = int(np.count_nonzero(usable))
    if n_bins < MIN_BINS:
        raise InsufficientDataError(
            f'profile at t={profile.time} has {n_bins} bins above '
            f'{floor}, need {MIN_BINS}'
        )
    p = np.asarray(profile.p_values, dtype=float)[usable]
    log_f = np.log(profile.f[usable])

    slope, exp_rss = _log_fit(np.abs(p), log_f)
    xi = -1.0 / slope if slope < 0 else math.inf
    slope, gauss_rss = _log_fit(p ** 2, log_f)
    sigma = math.sqrt(-0.5 / slope) if slope < 0 else math.inf

    if not math.isfinite(xi):
        exp_rss = math.inf
    if not math.isfinite(sigma):
        gauss_rss = math.inf
    if exp_rss <= gauss_rss:
        kind, width = 'exponential', xi
    else:
        kind, width = 'gaussian', sigma
    if not math.isfinite(width):
        raise InsufficientDataError(
            f'profile at t={profile.time} does not decay with |p|'
        )
    logger.debug('Profile t=%s: %s, width %.3g (rss %.3g vs %.3g)',
                 profile.time, kind, width, exp_rss, gauss_rss)
    return ProfileClass(
        kind=kind,
        width=width,
        exponential_rss=exp_rss,
        gaussian_rss=gauss_rss,
        n_bins=n_bins,
    )
