"""
Run configuration files.

A run config is flat `key = value` text; `#` starts a comment and blank
lines are ignored. Values stay strings here and are typed by the
serializers in core.serializers.
"""
from pathlib import Path

from core.exceptions import ConfigurationError


def parse_config_text(text):
    """Parse config text into an ordered {key: raw value} dict."""
    values = {}
    problems = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition('=')
        key, value = key.strip(), value.strip()
        if not sep or not key:
            problems.append(f'line {lineno}: expected `key = value`')
        elif key in values:
            problems.append(f'{key}: given more than once')
        else:
            values[key] = value
    if problems:
        raise ConfigurationError(problems)
    return values


def read_config(path):
    """Read and parse a config file; I/O errors propagate."""
    return parse_config_text(Path(path).read_text())


def parse_times(text):
    """Parse a time list such as `0:10, 20, 50:200`.

    `a:b` is the inclusive range a..b. Order is kept as written; sorting
    and range checks belong to the config validation.
    """
    times = []
    for item in str(text).split(','):
        item = item.strip()
        if not item:
            continue
        start, sep, stop = item.partition(':')
        if sep:
            times.extend(range(int(start), int(stop) + 1))
        else:
            times.append(int(item))
    return times
