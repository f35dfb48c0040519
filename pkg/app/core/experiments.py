"""
Experiment pipelines: noise, engine, analysis, files.
"""
import logging
import math
import time
from dataclasses import replace
from functools import singledispatch
from pathlib import Path

import django
import numpy as np
import rest_framework
import scipy
from django.conf import settings
from django.utils import timezone

from analysis.fitting import (
    fit_energy_growth,
    fit_f0_decay,
    fit_growth_constants,
    fit_growth_exponent,
    fit_linear_growth,
)
from analysis.profiles import classify_profile
from classical.engine import classical_ensemble
from core import output
from core.exceptions import (
    ConfigurationError,
    DomainError,
    InsufficientDataError,
)
from core.models import (
    ClassicalSection,
    EnergyGrowth,
    F0Decay,
    MomentumProfiles,
    RunManifest,
    TheoryOverlay,
)
from core.serializers import load_config
from levy.models import Levy
from levy.schedule import mean_kick_counts
from rotor.ensemble import ensemble_run
from rotor.models import EnergyCurve
from special.models import MLEvalOptions
from theory.predictions import decoherence_curve, predicted_energy

logger = logging.getLogger(__name__)


def versions():
    return {
        'django': django.get_version(),
        'djangorestframework': rest_framework.VERSION,
        'numpy': np.__version__,
        'scipy': scipy.__version__,
    }


def fit_rows(fits):
    """fit.csv rows of several FitResults, each closed by its AICc."""
    rows = []
    for fit in fits:
        rows += fit.rows()
        rows.append((fit.model_name, 'aicc', fit.aicc, math.nan))
    return rows


def energy_fits(curve, t_min, t_max=None, weighted=False):
    """Subdiffusive, linear and single power law fits of curve.

    A model that cannot be fitted on the window is left out.
    """
    fits = []
    for fit in (fit_energy_growth, fit_linear_growth):
        try:
            fits.append(fit(curve, t_min, t_max, weighted=weighted))
        except (InsufficientDataError, DomainError) as err:
            logger.warning('Skipping %s: %s', fit.__name__, err)
    try:
        fits.append(fit_growth_exponent(curve, t_min, t_max))
    except (InsufficientDataError, DomainError) as err:
        logger.warning('Skipping fit_growth_exponent: %s', err)
    return fits


def renewal_fits(config, curve, seeds, t_min, t_max=None, weighted=False):
    """Diagnostics of a Lévy run against its generating alpha.

    growth_law: A0, A1 refitted with alpha held at the generating value.
    kick_count_growth: the growth-law fit of the mean number of kicks
    of the same schedules, i.e. the exponent the kick sequence alone
    produces on the window.
    """
    alpha = config.noise_mode.alpha
    kicks = mean_kick_counts(config.noise_mode, config.horizon, seeds,
                             curve.times)
    counts = EnergyCurve(curve.times, kicks, np.zeros(len(kicks)),
                         len(seeds))
    fits = []
    try:
        fits.append(fit_growth_constants(curve, alpha, t_min, t_max,
                                         weighted=weighted))
    except (InsufficientDataError, DomainError) as err:
        logger.warning('Skipping growth_law: %s', err)
    try:
        fit = fit_energy_growth(counts, t_min, t_max)
    except (InsufficientDataError, DomainError) as err:
        logger.warning('Skipping kick_count_growth: %s', err)
    else:
        fits.append(replace(fit, model_name='kick_count_growth'))
        logger.info('Kick counts grow with alpha=%.3f (generating %.3f)',
                    fit.params['alpha'], alpha)
    return fits


def fit_window(values):
    t_min = values.get('fit_t_min', settings.SIMULATION['FIT_T_MIN'])
    return t_min, values.get('fit_t_max')


@singledispatch
def execute(spec, serializer, out_dir, workers):
    """Run spec; returns (seeds, artifact names)."""
    raise NotImplementedError(f'No pipeline for {spec!r}')


@execute.register
def _(spec: EnergyGrowth, serializer, out_dir, workers):
    result = ensemble_run(serializer.instance, workers)
    t_min, t_max = fit_window(serializer.validated_data)
    fits = energy_fits(result.energy, t_min, t_max, spec.weighted)
    config = serializer.instance
    if isinstance(config.noise_mode, Levy):
        fits += renewal_fits(config, result.energy, result.seeds, t_min,
                             t_max, spec.weighted)
    for fit in fits:
        if fit.alpha_unidentifiable:
            logger.warning('%s: alpha is not identifiable on [%g, %g]',
                           fit.model_name, fit.t_min, fit.t_max)
    return result.seeds, [
        output.write_energy_curve(out_dir, result.energy),
        output.write_fit_rows(out_dir, fit_rows(fits)),
    ]


@execute.register
def _(spec: MomentumProfiles, serializer, out_dir, workers):
    result = ensemble_run(serializer.instance, workers)
    floor = spec.floor or settings.SIMULATION['PROFILE_FLOOR']
    artifacts = [output.write_energy_curve(out_dir, result.energy)]
    rows = []
    for profile in result.profiles:
        artifacts.append(output.write_profile(out_dir, profile))
        try:
            shape = classify_profile(profile, floor)
        except InsufficientDataError as err:
            logger.warning('Profile at t=%d not classified: %s',
                           profile.time, err)
            continue
        logger.info('Profile at t=%d is %s (width %.4g)',
                    profile.time, shape.kind, shape.width)
        model = f'profile_{profile.time}'
        rows += [
            (model, f'{shape.kind}_width', shape.width, math.nan),
            (model, 'exponential_rss', shape.exponential_rss, math.nan),
            (model, 'gaussian_rss', shape.gaussian_rss, math.nan),
        ]
    artifacts.append(output.write_fit_rows(out_dir, rows))
    return result.seeds, artifacts


@execute.register
def _(spec: F0Decay, serializer, out_dir, workers):
    result = ensemble_run(serializer.instance, workers)
    _, t_max = fit_window(serializer.validated_data)
    decay = fit_f0_decay(result.f0, t_max=t_max)
    logger.info('f(0) decay: %s preferred', decay.preferred)
    rows = fit_rows(decay.fits)
    for fit in decay.fits:
        chosen = fit.model_name == f'f0_{decay.preferred}'
        rows.append((fit.model_name, 'preferred', int(chosen), math.nan))
    return result.seeds, [
        output.write_f0(out_dir, result.f0),
        output.write_fit_rows(out_dir, rows),
    ]


@execute.register
def _(spec: ClassicalSection, serializer, out_dir, workers):
    config = serializer.instance
    result = classical_ensemble(config)
    t_min, t_max = fit_window(serializer.validated_data)
    fits = []
    try:
        fits.append(fit_growth_exponent(result.energy, t_min, t_max))
    except (InsufficientDataError, DomainError) as err:
        logger.warning('Skipping fit_growth_exponent: %s', err)
    return result.seeds, [
        output.write_energy_curve(out_dir, result.energy),
        output.write_section(out_dir, result.section),
        output.write_fit_rows(out_dir, fit_rows(fits)),
    ]


@execute.register
def _(spec: TheoryOverlay, serializer, out_dir, workers):
    params = serializer.instance
    times = np.array(serializer.times(), dtype=float)
    opts = MLEvalOptions(
        rel_tol=settings.SIMULATION['ML_REL_TOL'],
        max_terms=settings.SIMULATION['ML_MAX_TERMS'],
    )
    decoherence = decoherence_curve(times, params, opts)
    energy = np.full(len(times), math.nan)
    late = times >= 1
    if np.any(late):
        energy[late] = predicted_energy(times[late], params)
    rows = [
        ('theory', 'alpha', params.alpha, math.nan),
        ('theory', 'q', params.q, math.nan),
    ]
    if params.tau_bar is not None:
        rows.append(('theory', 'tau_bar', params.tau_bar, math.nan))
    return [], [
        output.write_table(
            Path(out_dir) / 'theory.csv', ['t', 'D', 'E'],
            [times, decoherence, energy],
        ),
        output.write_fit_rows(out_dir, rows),
    ]


def run_experiment(spec, config_path, out_dir, workers=None, seed=None,
                   command='simulate'):
    """Run spec on the config at config_path and write out_dir.

    seed overrides master_seed. Returns the RunManifest, also written to
    out_dir as manifest.json.
    """
    started_at = timezone.now()
    clock = time.perf_counter()
    overrides = {} if seed is None else {'master_seed': seed}
    serializer = load_config(config_path, spec.shape, overrides)
    missing = spec.missing_bindings(serializer.initial_data)
    if missing:
        raise ConfigurationError(missing)

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    workers = workers or settings.SIMULATION['WORKERS']
    logger.info('Running %s from %s into %s', spec.name, config_path, out_dir)
    seeds, artifacts = execute(spec, serializer, out_dir, workers)

    manifest = RunManifest(
        experiment=spec.name,
        command=command,
        config=dict(serializer.initial_data),
        seeds=[int(s) for s in seeds],
        artifacts=artifacts + [output.MANIFEST],
        started_at=started_at,
        finished_at=timezone.now(),
        wall_clock_seconds=time.perf_counter() - clock,
        versions=versions(),
    )
    output.write_manifest(out_dir, manifest)
    logger.info('Finished %s in %.1f s', spec.name,
                manifest.wall_clock_seconds)
    return manifest
