from django.apps import AppConfig


class LevyConfig(AppConfig):
    name = 'levy'
    verbose_name = 'Lévy waiting-time noise and kick schedules'
