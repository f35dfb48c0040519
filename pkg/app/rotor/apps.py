from django.apps import AppConfig


class RotorConfig(AppConfig):
    name = 'rotor'
    verbose_name = 'Quantum kicked rotor engine'
