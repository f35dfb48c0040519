"""
CSV and manifest files of a run.

CSV files hold data only: a header row and numbers printed with a fixed
number of significant digits. Timestamps go to manifest.json so that
reruns reproduce the CSV files byte for byte.
"""
from pathlib import Path

import numpy as np
from django.conf import settings

from core.serializers import render_manifest
from rotor.models import EnergyCurve

MANIFEST = 'manifest.json'


def number_format():
    return f'%.{settings.SIMULATION["CSV_SIGNIFICANT_DIGITS"]}g'


def write_table(path, header, columns):
    """Write equal-length numeric columns as CSV."""
    np.savetxt(
        path, np.column_stack(columns), fmt=number_format(),
        delimiter=',', header=','.join(header), comments='',
    )
    return Path(path).name


def write_energy_curve(out_dir, curve, name='energy_curve.csv'):
    counts = np.full(len(curve.times), curve.n_realizations)
    return write_table(
        Path(out_dir) / name, ['t', 'mean_E', 'std_E', 'n_realizations'],
        [curve.times, curve.mean_E, curve.std_E, counts],
    )


def read_energy_curve(path):
    """Read an energy_curve.csv back into an EnergyCurve."""
    data = np.loadtxt(path, delimiter=',', skiprows=1, ndmin=2)
    return EnergyCurve(
        times=data[:, 0],
        mean_E=data[:, 1],
        std_E=data[:, 2],
        n_realizations=int(data[0, 3]),
    )


def write_profile(out_dir, profile):
    return write_table(
        Path(out_dir) / f'profile_{profile.time}.csv', ['p', 'f'],
        [profile.p_values, profile.f],
    )


def write_f0(out_dir, series):
    return write_table(
        Path(out_dir) / 'f0.csv', ['t', 'f0', 'f0_std'],
        [series.times, series.f0, series.f0_std],
    )


def write_section(out_dir, section):
    return write_table(
        Path(out_dir) / 'section.csv', ['x', 'p', 't'],
        [section.x, section.p, section.t],
    )


def write_fit_rows(out_dir, rows, name='fit.csv'):
    """Write (model, param, value, sigma) rows."""
    fmt = number_format()
    path = Path(out_dir) / name
    np.savetxt(
        path, np.array(rows, dtype=object).reshape(-1, 4),
        fmt=['%s', '%s', fmt, fmt], delimiter=',',
        header='model,param,value,sigma', comments='',
    )
    return path.name


def write_manifest(out_dir, manifest):
    path = Path(out_dir) / MANIFEST
    path.write_bytes(render_manifest(manifest))
    return path.name
