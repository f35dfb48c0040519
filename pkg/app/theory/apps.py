from django.apps import AppConfig


class TheoryConfig(AppConfig):
    name = 'theory'
    verbose_name = 'Closed-form decoherence and energy predictions'
