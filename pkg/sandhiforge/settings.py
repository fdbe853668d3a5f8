"""
Django settings for the sandhiforge project.

The project ships no web surface: Django provides configuration, logging,
the management-command CLI and the ORM used for evaluation history.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
from decouple import config
import dj_database_url

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='sandhiforge-local-only-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1', cast=lambda v: [s.strip() for s in v.split(',')])


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',

    # Local apps
    'sandhi.apps.SandhiConfig',
]


# Database
# Evaluation history lives here; DATABASE_URL switches to PostgreSQL.
DATABASES = {
    'default': dj_database_url.config(
        default=config('DATABASE_URL', default=f'sqlite:///{BASE_DIR / "db.sqlite3"}')
    )
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# ==============================================================================
# TOOLKIT SETTINGS
# ==============================================================================

# Seeds are arbitrary but fixed so that every command is reproducible.
SANDHI_SYNTH_SEED = config('SANDHI_SYNTH_SEED', default=7, cast=int)
SANDHI_CV_SEED = config('SANDHI_CV_SEED', default=1, cast=int)
SANDHI_CV_FOLDS = config('SANDHI_CV_FOLDS', default=10, cast=int)

# Folds evaluated concurrently by `eval`; 1 keeps evaluation in-process.
SANDHI_CV_WORKERS = config('SANDHI_CV_WORKERS', default=1, cast=int)

SANDHI_C45_CONFIDENCE = config('SANDHI_C45_CONFIDENCE', default=0.25, cast=float)
SANDHI_C45_MIN_LEAF = config('SANDHI_C45_MIN_LEAF', default=2, cast=int)
SANDHI_LAPLACE = config('SANDHI_LAPLACE', default=1.0, cast=float)
SANDHI_AODE_FREQ_LIMIT = config('SANDHI_AODE_FREQ_LIMIT', default=1, cast=int)
SANDHI_FOREST_TREES = config('SANDHI_FOREST_TREES', default=10, cast=int)

# Optional `stem full-u|overshort-u` file consulted by the rule oracle.
SANDHI_EXCEPTION_LEXICON = config('SANDHI_EXCEPTION_LEXICON', default='')


# ==============================================================================
# LOGGING CONFIGURATION
# ==============================================================================

LOG_DIR = Path(config('LOG_DIR', default=str(BASE_DIR / 'logs')))
LOG_LEVEL = config('LOG_LEVEL', default='DEBUG' if DEBUG else 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '[{levelname}] {asctime} {name} {module} {funcName} - {message}',
            'style': '{',
            'datefmt': '%Y-%m-%d %H:%M:%S',
        },
        'simple': {
            'format': '[{levelname}] {asctime} - {message}',
            'style': '{',
            'datefmt': '%Y-%m-%d %H:%M:%S',
        },
    },
    'handlers': {
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'level': 'DEBUG',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_DIR / 'sandhiforge.log',
            'maxBytes': 1024 * 1024 * 10,  # 10 MB
            'backupCount': 5,
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'level': 'INFO',
            'propagate': False,
        },
        'sandhi': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}

# Create logs directory if it doesn't exist
if not LOG_DIR.exists():
    LOG_DIR.mkdir(parents=True, exist_ok=True)
