"""
Django settings for the endoring project.

Only the pieces the command-line tools need are configured: the endoapp
application, logging and the oracle budgets. Nothing is persisted, so no
database is declared.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Nothing is signed, but Django refuses to start without a key.
SECRET_KEY = config('SECRET_KEY', default='endoring-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)


# Application definition

INSTALLED_APPS = [
    'endoapp.apps.EndoappConfig',
]

# No models, no sessions: the ring lives in memory for one process.
DATABASES = {}


# Logging
# https://docs.djangoproject.com/en/5.2/topics/logging/
# Handlers write to stderr; stdout carries evaluation results only.

LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
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
        'endoapp': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}


# Oracle budgets

# Pairwise searches are quadratic in the ring size.
ENDORING_PAIR_BUDGET = config('ENDORING_PAIR_BUDGET', default=2048, cast=int)

# Randomized checks run by `endoring verify`.
ENDORING_RANDOM_TRIALS = config('ENDORING_RANDOM_TRIALS', default=10_000, cast=int)
ENDORING_RANDOM_SEED = config('ENDORING_RANDOM_SEED', default=0, cast=int)
