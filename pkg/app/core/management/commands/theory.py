"""
Django command to evaluate the theory curves
"""
from core.management.base import ExperimentCommand


class Command(ExperimentCommand):
    """Decoherence factor and predicted energy at the record times."""
    help = 'Evaluate the predicted decoherence factor and energy growth.'
    experiments = ('theory_overlay',)
