"""
Shared base for the simulation commands.
"""
from contextlib import contextmanager

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import (
    AccuracyError,
    ConfigurationError,
    DomainError,
    GridOverflowError,
)
from core.experiments import run_experiment
from core.models import experiment_for

EXIT_CONFIGURATION = 2
EXIT_GRID_OVERFLOW = 3
EXIT_ACCURACY = 4


@contextmanager
def exit_codes():
    """Translate simulation errors into CommandErrors with exit codes."""
    try:
        yield
    except ConfigurationError as err:
        raise CommandError(
            'Invalid configuration:\n  ' + '\n  '.join(err.violations),
            returncode=EXIT_CONFIGURATION,
        )
    except GridOverflowError as err:
        raise CommandError(str(err), returncode=EXIT_GRID_OVERFLOW)
    except AccuracyError as err:
        raise CommandError(str(err), returncode=EXIT_ACCURACY)
    except DomainError as err:
        raise CommandError(
            f'Parameter out of range: {err}', returncode=EXIT_CONFIGURATION
        )
    except OSError as err:
        raise CommandError(str(err))


class ExperimentCommand(BaseCommand):
    """Run one of a command's experiments from a config file."""
    experiments = ()

    def add_arguments(self, parser):
        parser.add_argument('--config', required=True,
                            help='Run config file (key = value lines).')
        parser.add_argument('--out', required=True,
                            help='Directory for the CSV files and manifest.')
        parser.add_argument('--workers', type=int,
                            help='Worker processes; defaults to all CPUs.')
        parser.add_argument('--seed', type=int,
                            help='Overrides master_seed of the config.')
        parser.add_argument('--experiment', choices=self.experiments,
                            default=self.experiments[0])

    def handle(self, *args, **options):
        """Entry point for command"""
        if options['workers'] is not None and options['workers'] < 1:
            raise CommandError('--workers must be at least 1',
                               returncode=EXIT_CONFIGURATION)
        with exit_codes():
            spec = experiment_for(options['experiment'])
            self.stdout.write(f'Running {spec.name}...')
            manifest = run_experiment(
                spec,
                options['config'],
                options['out'],
                workers=options['workers'],
                seed=options['seed'],
                command=self.command_name(),
            )

        self.stdout.write(self.style.SUCCESS(
            f'Wrote {", ".join(manifest.artifacts)} to {options["out"]} '
            f'in {manifest.wall_clock_seconds:.1f} s'
        ))

    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]
