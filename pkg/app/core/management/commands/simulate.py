"""
Django command to run a quantum kicked rotor ensemble
"""
from core.management.base import ExperimentCommand


class Command(ExperimentCommand):
    """Quantum ensemble: energy growth, momentum profiles or f(0)."""
    help = 'Run a quantum kicked rotor experiment.'
    experiments = ('energy_growth', 'momentum_profiles', 'f0_decay')
