"""
Django command to validate a run config
"""
from django.core.management.base import BaseCommand, CommandError

from core.management.base import EXIT_CONFIGURATION, exit_codes
from core.models import EXPERIMENTS, experiment_for
from core.serializers import validate_config


class Command(BaseCommand):
    """Check a config against the shape of an experiment; runs nothing."""
    help = 'Validate a run config file.'

    def add_arguments(self, parser):
        parser.add_argument('--config', required=True)
        parser.add_argument('--experiment', choices=list(EXPERIMENTS),
                            default='energy_growth')

    def handle(self, *args, **options):
        """Entry point for command"""
        with exit_codes():
            spec = experiment_for(options['experiment'])
            violations = validate_config(options['config'], spec.shape)

        if violations:
            raise CommandError(
                'Invalid configuration:\n  ' + '\n  '.join(violations),
                returncode=EXIT_CONFIGURATION,
            )
        self.stdout.write(self.style.SUCCESS(
            f'{options["config"]}: ok for {spec.name}'
        ))
