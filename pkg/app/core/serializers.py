"""
Serializers for run configs and run manifests.
"""
from django.conf import settings

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from classical.models import ClassicalEnsembleConfig
from core.config import parse_times, read_config
from core.exceptions import ConfigurationError, DomainError
from levy.models import Amplitude, Levy, Periodic, StationaryTiming
from rotor.models import SimConfig, check_times
from theory.models import TheoryParams

SIMULATION = settings.SIMULATION

NOISE_MODES = ['periodic', 'levy', 'stn', 'amplitude']


def violations_to_errors(violations):
    """Turn `field: message` strings into a DRF error dict."""
    errors = {}
    for violation in violations:
        name, _, message = violation.partition(': ')
        errors.setdefault(name, []).append(message)
    return errors


def errors_to_violations(errors):
    """Flatten a DRF error dict into `field: message` strings."""
    return [
        f'{name}: {message}'
        for name, messages in errors.items()
        for message in messages
    ]


class TimesField(serializers.Field):
    """Integer times written as comma lists and `a:b` ranges."""
    default_error_messages = {
        'invalid': 'expected integers and start:stop ranges.',
    }

    def to_internal_value(self, data):
        if isinstance(data, (list, tuple)):
            return [int(t) for t in data]
        try:
            return parse_times(data)
        except ValueError:
            self.fail('invalid')

    def to_representation(self, value):
        return list(value)


class DomainSerializer(serializers.Serializer):
    """Base for config shapes that build a frozen domain object.

    build() turns validated values into the domain object; its
    violations are reported field by field like the serializer's own.
    """

    def build(self, attrs):
        raise NotImplementedError

    def validate(self, attrs):
        try:
            self.build(attrs)
        except ConfigurationError as err:
            raise serializers.ValidationError(
                violations_to_errors(err.violations)
            )
        return attrs

    def create(self, validated_data):
        """Create and return the domain object."""
        return self.build(validated_data)


class NoisyRunSerializer(DomainSerializer):
    """Fields shared by the quantum and classical ensembles."""
    K = serializers.FloatField(min_value=0)
    horizon = serializers.IntegerField(min_value=1)
    noise_mode = serializers.ChoiceField(choices=NOISE_MODES,
                                         default='periodic')
    alpha = serializers.FloatField(required=False)
    delta_max = serializers.FloatField(required=False)
    eps_max = serializers.FloatField(required=False)
    master_seed = serializers.IntegerField(min_value=0, default=0)
    record_times = TimesField(required=False)
    fit_t_min = serializers.FloatField(default=SIMULATION['FIT_T_MIN'])
    fit_t_max = serializers.FloatField(required=False)

    def validate_alpha(self, value):
        if not value > 0:
            raise serializers.ValidationError('must be positive.')
        return value

    def build_noise_mode(self, attrs):
        """The NoiseMode named by noise_mode with its parameter."""
        name = attrs.get('noise_mode', 'periodic')
        required = {'levy': 'alpha', 'stn': 'delta_max',
                    'amplitude': 'eps_max'}.get(name)
        if required and required not in attrs:
            raise ConfigurationError(
                [f'{required}: required for noise_mode {name}']
            )
        try:
            if name == 'levy':
                return Levy(attrs['alpha'])
            if name == 'stn':
                return StationaryTiming(attrs['delta_max'])
            if name == 'amplitude':
                return Amplitude(attrs['eps_max'])
        except DomainError as err:
            raise ConfigurationError([f'{required}: {err}'])
        return Periodic()


class QuantumConfigSerializer(NoisyRunSerializer):
    """Serializer for quantum ensemble configs."""
    hbar_s = serializers.FloatField()
    grid_M = serializers.IntegerField(min_value=1)
    ensemble_size = serializers.IntegerField(min_value=1, default=1)
    initial_sigma_p = serializers.FloatField(default=2.0)
    beta_spread = serializers.FloatField(default=0.0)
    profile_times = TimesField(default=list)

    def build(self, attrs):
        return SimConfig(
            K=attrs['K'],
            hbar_s=attrs['hbar_s'],
            grid_M=attrs['grid_M'],
            horizon=attrs['horizon'],
            noise_mode=self.build_noise_mode(attrs),
            ensemble_size=attrs.get('ensemble_size', 1),
            master_seed=attrs.get('master_seed', 0),
            initial_sigma_p=attrs.get('initial_sigma_p', 2.0),
            beta_spread=attrs.get('beta_spread', 0.0),
            record_times=attrs.get('record_times'),
            profile_times=attrs.get('profile_times', ()),
        )


class ClassicalConfigSerializer(NoisyRunSerializer):
    """Serializer for classical standard map configs."""
    n_particles = serializers.IntegerField(min_value=1)
    initial_sigma_p = serializers.FloatField(default=1.0)
    section_particles = serializers.IntegerField(
        min_value=0, default=SIMULATION['SECTION_PARTICLES'],
    )

    def build(self, attrs):
        return ClassicalEnsembleConfig(
            K=attrs['K'],
            noise_mode=self.build_noise_mode(attrs),
            horizon=attrs['horizon'],
            n_particles=attrs['n_particles'],
            master_seed=attrs.get('master_seed', 0),
            sigma_p=attrs.get('initial_sigma_p', 1.0),
            record_times=attrs.get('record_times'),
            section_particles=attrs.get(
                'section_particles', SIMULATION['SECTION_PARTICLES']
            ),
        )


class TheoryConfigSerializer(DomainSerializer):
    """Serializer for theory overlay configs.

    q comes from K and hbar_s; tau_bar from alpha.
    """
    K = serializers.FloatField(min_value=0)
    hbar_s = serializers.FloatField()
    alpha = serializers.FloatField()
    horizon = serializers.IntegerField(min_value=1)
    record_times = TimesField(required=False)
    A0 = serializers.FloatField(min_value=0, default=0.0)
    A1 = serializers.FloatField(min_value=0, default=0.0)
    A2 = serializers.FloatField(min_value=0, default=0.0)
    t_b = serializers.FloatField(required=False)
    ml_sign = serializers.ChoiceField(choices=[1, -1], default=1)

    def validate_hbar_s(self, value):
        if not value > 0:
            raise serializers.ValidationError('must be positive.')
        return value

    def validate_alpha(self, value):
        if not value > 0:
            raise serializers.ValidationError('must be positive.')
        return value

    def build(self, attrs):
        problems = check_times('record_times', attrs.get('record_times', ()),
                               attrs['horizon'])
        if problems:
            raise ConfigurationError(problems)
        try:
            return TheoryParams.for_kicks(
                attrs['alpha'], attrs['K'], attrs['hbar_s'],
                n_terms=SIMULATION['Q_FACTOR_TERMS'],
                A0=attrs.get('A0', 0.0),
                A1=attrs.get('A1', 0.0),
                A2=attrs.get('A2', 0.0),
                t_b=attrs.get('t_b'),
                ml_sign=int(attrs.get('ml_sign', 1)),
            )
        except DomainError as err:
            raise ConfigurationError([f'non_field_errors: {err}'])

    def times(self):
        """Evaluation times: record_times, or every period 0..horizon."""
        times = self.validated_data.get('record_times')
        if times is None:
            times = range(self.validated_data['horizon'] + 1)
        return list(times)


CONFIG_SHAPES = {
    'quantum': QuantumConfigSerializer,
    'classical': ClassicalConfigSerializer,
    'theory': TheoryConfigSerializer,
}

KNOWN_KEYS = {
    name
    for shape in CONFIG_SHAPES.values()
    for name in shape().fields
}


def load_config(path, shape='quantum', overrides=None):
    """Read, validate and build the config at path.

    Returns the saved serializer: `instance` is the domain object,
    `validated_data` the typed values and `initial_data` the raw
    key/value snapshot. Keys of other shapes are accepted so one file
    can drive several commands; unknown keys are violations.
    """
    raw = read_config(path)
    raw.update({k: str(v) for k, v in (overrides or {}).items()})
    unknown = [f'{key}: unknown configuration key'
               for key in raw if key not in KNOWN_KEYS]
    serializer = CONFIG_SHAPES[shape](data=raw)
    if not serializer.is_valid() or unknown:
        raise ConfigurationError(
            unknown + errors_to_violations(serializer.errors)
        )
    serializer.save()
    return serializer


def validate_config(path, shape='quantum'):
    """Violations of the config at path; an empty list means ok.

    Nothing is run and nothing is written.
    """
    try:
        load_config(path, shape)
    except ConfigurationError as err:
        return err.violations
    return []


class ManifestSerializer(serializers.Serializer):
    """Serializer for the run manifest."""
    experiment = serializers.CharField()
    command = serializers.CharField()
    config = serializers.DictField(child=serializers.CharField())
    seeds = serializers.ListField(child=serializers.IntegerField())
    artifacts = serializers.ListField(child=serializers.CharField())
    started_at = serializers.DateTimeField()
    finished_at = serializers.DateTimeField()
    wall_clock_seconds = serializers.FloatField()
    versions = serializers.DictField(child=serializers.CharField())


def render_manifest(manifest):
    """manifest.json bytes of a RunManifest."""
    return JSONRenderer().render(
        ManifestSerializer(manifest).data,
        renderer_context={'indent': 2},
    )
