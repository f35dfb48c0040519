"""
Django command to fit an existing energy curve
"""
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand

from core import output
from core.experiments import energy_fits, fit_rows, fit_window
from core.management.base import exit_codes
from core.models import EXPERIMENTS, experiment_for
from core.serializers import load_config


class Command(BaseCommand):
    """Fit the growth laws to <out>/energy_curve.csv into <out>/fit.csv.

    The fit window comes from the config when one is given.
    """
    help = 'Fit energy growth laws to an existing energy_curve.csv.'

    def add_arguments(self, parser):
        parser.add_argument('--out', required=True,
                            help='Directory holding energy_curve.csv.')
        parser.add_argument('--config',
                            help='Run config supplying fit_t_min/fit_t_max.')
        parser.add_argument('--experiment', choices=list(EXPERIMENTS),
                            default='energy_growth')
        parser.add_argument('--weighted', action='store_true',
                            help='Weight points by 1/std_E.')

    def handle(self, *args, **options):
        """Entry point for command"""
        out_dir = Path(options['out'])
        with exit_codes():
            t_min, t_max = settings.SIMULATION['FIT_T_MIN'], None
            if options['config']:
                spec = experiment_for(options['experiment'])
                serializer = load_config(options['config'], spec.shape)
                t_min, t_max = fit_window(serializer.validated_data)
            curve = output.read_energy_curve(out_dir / 'energy_curve.csv')
            fits = energy_fits(curve, t_min, t_max, options['weighted'])
            name = output.write_fit_rows(out_dir, fit_rows(fits))

        for fit in fits:
            params = ', '.join(f'{k}={v:.6g}' for k, v in fit.params.items())
            self.stdout.write(f'{fit.model_name}: {params}')
        self.stdout.write(self.style.SUCCESS(f'Wrote {out_dir / name}'))
