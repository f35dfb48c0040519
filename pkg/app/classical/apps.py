from django.apps import AppConfig


class ClassicalConfig(AppConfig):
    name = 'classical'
    verbose_name = 'Classical standard-map ensemble'
