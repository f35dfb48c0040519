"""
Django settings for the levy-rotor project.

The project has no web surface and no database: Django provides the
settings layer, logging configuration, management commands and the test
runner for the simulation apps.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/3.2/ref/settings/
"""
import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'changeme')

DEBUG = bool(int(os.environ.get('DEBUG', 0)))

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'core',
    'levy',
    'special',
    'rotor',
    'classical',
    'theory',
    'analysis',
]

MIDDLEWARE = []

# Simulation runs never touch a database.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}


# Numerical defaults shared by the apps and the management commands.
# Run-specific parameters come from the run config file, never from here.

SIMULATION = {
    'WORKERS': None,
    'ML_REL_TOL': 1e-10,
    'ML_MAX_TERMS': 20000,
    'Q_FACTOR_TERMS': 40,
    'PROFILE_FLOOR': 1e-4,
    'FIT_T_MIN': 10,
    'CSV_SIGNIFICANT_DIGITS': 12,
    'SECTION_PARTICLES': 500,
}


# Logging
# https://docs.djangoproject.com/en/3.2/topics/logging/

LOG_LEVEL = 'DEBUG' if DEBUG else 'INFO'

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        name: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for name in ('core', 'levy', 'rotor', 'classical', 'analysis')
    },
}
