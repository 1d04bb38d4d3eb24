"""
Django settings for the zgamma project.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-zgamma-local-development-key')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv('DJANGO_DEBUG', 'True') == 'True'

ALLOWED_HOSTS = ['localhost', '127.0.0.1', 'testserver']


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'utils',
    'network',
    'states',
    'measurement',
    'fock_oracle',
    'heterodyne',
    'cli',
    'reports',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'backend.urls'

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [
                "django.template.context_processors.request",
                "django.contrib.auth.context_processors.auth",
                "django.contrib.messages.context_processors.messages",
            ],
        },
    },
]


# Database
# The run ledger is the only persisted model.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv('ZGAMMA_DATABASE', str(BASE_DIR / 'db.sqlite3')),
    }
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Static files (admin only)

STATIC_URL = '/static/'
STATIC_ROOT = BASE_DIR / 'staticfiles'

# Default primary key field type

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Z-gamma numerical defaults
# ==========================

# Outcome grids
ZGAMMA_GRID_SIZE = int(os.getenv('ZGAMMA_GRID_SIZE', '256'))
ZGAMMA_GRID_SIGMAS = float(os.getenv('ZGAMMA_GRID_SIGMAS', '6.0'))
ZGAMMA_COVERAGE_SIGMAS = float(os.getenv('ZGAMMA_COVERAGE_SIGMAS', '3.0'))
ZGAMMA_MASS_TOLERANCE = float(os.getenv('ZGAMMA_MASS_TOLERANCE', '1e-3'))

# Number-diagonal weights
ZGAMMA_WEIGHT_TAIL = float(os.getenv('ZGAMMA_WEIGHT_TAIL', '1e-12'))

# Network
ZGAMMA_UNITARITY_TOLERANCE = float(os.getenv('ZGAMMA_UNITARITY_TOLERANCE', '1e-10'))

# Fock-space oracle
ZGAMMA_ORACLE_NMAX = int(os.getenv('ZGAMMA_ORACLE_NMAX', '12'))
ZGAMMA_ORACLE_BUFFER = int(os.getenv('ZGAMMA_ORACLE_BUFFER', '3'))
ZGAMMA_ORACLE_TAIL = float(os.getenv('ZGAMMA_ORACLE_TAIL', '1e-6'))
ZGAMMA_OPERATOR_TOLERANCE = float(os.getenv('ZGAMMA_OPERATOR_TOLERANCE', '1e-8'))
ZGAMMA_POLAR_TOLERANCE = float(os.getenv('ZGAMMA_POLAR_TOLERANCE', '1e-6'))
ZGAMMA_DEFECT_TOLERANCE = float(os.getenv('ZGAMMA_DEFECT_TOLERANCE', '1e-4'))
ZGAMMA_DENSITY_L1_TOLERANCE = float(os.getenv('ZGAMMA_DENSITY_L1_TOLERANCE', '1e-2'))

# Heterodyne
ZGAMMA_PHASE_BINS = int(os.getenv('ZGAMMA_PHASE_BINS', '360'))

# Result files
ZGAMMA_OUTPUT_DIR = os.getenv('ZGAMMA_OUTPUT_DIR', 'runs')


# Logging
# =======

ZGAMMA_LOG_LEVEL = os.getenv('ZGAMMA_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': ZGAMMA_LOG_LEVEL,
    },
}
