"""
Tests for momentum profile classification.
"""
import numpy as np

from django.test import SimpleTestCase

from analysis.profiles import classify_profile
from core.exceptions import InsufficientDataError
from rotor.models import MomentumProfile

P_GRID = np.arange(-200, 201) * 2.09


def normalized(f):
    return f / f.sum()


class ClassifyProfileTests(SimpleTestCase):
    """Test exponential against Gaussian classification."""

    def test_exponential_profile(self):
        """Test a discretized exponential is recognised with its width."""
        f = normalized(np.exp(-np.abs(P_GRID) / 10.0))

        result = classify_profile(MomentumProfile(P_GRID, f, 70))

        self.assertEqual(result.kind, 'exponential')
        self.assertAlmostEqual(result.width / 10.0, 1.0, delta=0.02)
        self.assertLess(result.exponential_rss, result.gaussian_rss)

    def test_gaussian_profile(self):
        """Test a discretized Gaussian is recognised with its width."""
        f = normalized(np.exp(-P_GRID ** 2 / (2.0 * 15.0 ** 2)))

        result = classify_profile(MomentumProfile(P_GRID, f, 70))

        self.assertEqual(result.kind, 'gaussian')
        self.assertAlmostEqual(result.width / 15.0, 1.0, delta=0.02)
        self.assertLess(result.gaussian_rss, result.exponential_rss)

    def test_floor_excludes_far_bins(self):
        """Test only bins above the floor are used."""
        f = normalized(np.exp(-np.abs(P_GRID) / 10.0))

        result = classify_profile(MomentumProfile(P_GRID, f, 70))

        self.assertEqual(result.n_bins, int(np.count_nonzero(f >= 1e-4)))

    def test_too_few_bins(self):
        """Test a narrow profile raises an insufficient-data error."""
        f = normalized(np.exp(-np.abs(P_GRID) / 0.5))

        with self.assertRaises(InsufficientDataError):
            classify_profile(MomentumProfile(P_GRID, f, 3))
