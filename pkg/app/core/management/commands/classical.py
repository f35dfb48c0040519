"""
Django command to run a classical standard map ensemble
"""
from core.management.base import ExperimentCommand


class Command(ExperimentCommand):
    help = 'Run the classical standard map ensemble.'
    experiments = ('classical_section',)
