"""
Split-step Floquet evolution of the kicked rotor in momentum space.

One period applies the kick exp(-i K cos(x) / hbar_s) on a position grid
and then the free phase exp(-i p**2 d / (2 hbar_s)) on the momentum
ladder.  The position grid has the smallest power of two >= 2(2M + 1)
points so the Bessel sidebands of a kick do not alias back onto the
ladder.
"""
import logging

import numpy as np

from core.exceptions import ConfigurationError, GridOverflowError
from rotor.models import MomentumProfile, QuantumState, Trajectory

logger = logging.getLogger(__name__)

BOUNDARY_LIMIT = 1e-6


def position_grid_size(M):
    """Smallest power of two holding at least 2(2M + 1) points."""
    n = 1
    while n < 2 * (2 * M + 1):
        n *= 2
    return n


class FloquetPropagator:
    """Precomputed kick and free phases for one ladder size.

    Works on bare amplitude arrays so a trajectory never allocates a
    QuantumState per period.
    """

    def __init__(self, M, hbar_s, beta=0.0):
        self.M = M
        self.hbar_s = hbar_s
        self.beta = beta
        self.n_x = position_grid_size(M)
        self._index = np.arange(-M, M + 1) % self.n_x
        x = 2.0 * np.pi * np.arange(self.n_x) / self.n_x
        self._cos_x = np.cos(x)
        # p**2 / (2 hbar_s) per unit duration
        self._free_rate = (np.arange(-M, M + 1) + beta) ** 2 * hbar_s / 2.0
        self._kick_cache = {}
        self._free_cache = {}

    def kick_phase(self, effective_K):
        phase = self._kick_cache.get(effective_K)
        if phase is None:
            phase = np.exp(-1j * effective_K * self._cos_x / self.hbar_s)
            if len(self._kick_cache) < 4:
                self._kick_cache[effective_K] = phase
        return phase

    def free_phase(self, duration):
        phase = self._free_cache.get(duration)
        if phase is None:
            phase = np.exp(-1j * self._free_rate * duration)
            if len(self._free_cache) < 4:
                self._free_cache[duration] = phase
        return phase

    def kick(self, amplitudes, effective_K):
        if effective_K == 0:
            return amplitudes.copy()
        coeffs = np.zeros(self.n_x, dtype=complex)
        coeffs[self._index] = amplitudes
        psi = np.fft.ifft(coeffs) * self.kick_phase(effective_K)
        return np.fft.fft(psi)[self._index]

    def free(self, amplitudes, duration):
        return amplitudes * self.free_phase(duration)


def init_gaussian_state(config, beta=0.0):
    """Gaussian wavepacket a_m ~ exp(-p**2 / (4 sigma_p**2)), normalized."""
    m = np.arange(-config.grid_M, config.grid_M + 1)
    p = (m + beta) * config.hbar_s
    amplitudes = np.exp(-p ** 2 / (4.0 * config.initial_sigma_p ** 2))
    amplitudes = amplitudes.astype(complex)
    amplitudes /= np.sqrt(np.sum(np.abs(amplitudes) ** 2))
    state = QuantumState(amplitudes, config.hbar_s, beta)
    if state.boundary_occupation >= BOUNDARY_LIMIT:
        raise ConfigurationError([
            f'initial_sigma_p: Gaussian of width {config.initial_sigma_p} '
            f'does not fit a ladder of grid_M = {config.grid_M}'
        ])
    return state


def apply_kick(state, effective_K):
    """Multiply the wavefunction by exp(-i K cos(x) / hbar_s)."""
    propagator = FloquetPropagator(state.M, state.hbar_s, state.beta)
    return QuantumState(
        propagator.kick(state.amplitudes, effective_K),
        state.hbar_s,
        state.beta,
    )


def free_evolve(state, duration):
    """Advance every ladder site by its free phase over duration periods."""
    propagator = FloquetPropagator(state.M, state.hbar_s, state.beta)
    return QuantumState(
        propagator.free(state.amplitudes, duration),
        state.hbar_s,
        state.beta,
    )


def _observe(amplitudes, p_squared, M):
    probs = np.abs(amplitudes) ** 2
    return probs, float(np.sum(probs * p_squared) / 2.0), float(probs[M])


def evolve_trajectory(config, schedule, beta=0.0):
    """Run one realization through its kick schedule.

    Period n applies a kick of strength K * amplitudes[n-1] when
    mask[n-1] is set, then evolves freely for durations[n-1].
    Observables are taken at config.record_times, with t = 0 the
    initial state.
    """
    if schedule.horizon != config.horizon:
        raise ConfigurationError([
            f'horizon: schedule covers {schedule.horizon} periods, '
            f'config asks for {config.horizon}'
        ])
    state = init_gaussian_state(config, beta)
    M = config.grid_M
    propagator = FloquetPropagator(M, config.hbar_s, beta)
    p_squared = state.p ** 2
    # profiles bin p = (m + beta) hbar_s into the bin centred at m hbar_s
    p_grid = np.arange(-M, M + 1) * config.hbar_s
    record = set(config.record_times)
    keep = set(config.profile_times)

    times, energy, f0, profiles = [], [], [], {}

    def take(t, amplitudes):
        probs, e, zero = _observe(amplitudes, p_squared, M)
        times.append(t)
        energy.append(e)
        f0.append(zero)
        if t in keep:
            profiles[t] = MomentumProfile(p_grid, probs / probs.sum(), t)

    amplitudes = state.amplitudes
    if 0 in record:
        take(0, amplitudes)
    for n in range(1, config.horizon + 1):
        if schedule.mask[n - 1]:
            strength = config.K * schedule.amplitudes[n - 1]
            amplitudes = propagator.kick(amplitudes, strength)
        amplitudes = propagator.free(amplitudes, schedule.durations[n - 1])
        edge = abs(amplitudes[0]) ** 2 + abs(amplitudes[-1]) ** 2
        if edge >= BOUNDARY_LIMIT:
            raise GridOverflowError(n, edge)
        if n in record:
            take(n, amplitudes)

    return Trajectory(
        times=np.array(times),
        energy=np.array(energy),
        f0=np.array(f0),
        profiles=profiles,
    )
