"""
Django settings for sgws_certifier project.

The project has no database-backed models: the apps are numerical services
(`cmatrix`, `sgws`, `sep`, `ent2q`) plus the `cli` app that exposes them as
management commands and as a small JSON API.

Environment is read through python-decouple; every value has a development
default so `python manage.py test` runs without a .env file.
"""

from pathlib import Path
from decouple import config, Csv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config("SECRET_KEY", default="sgws-certifier-development-only")

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config("DEBUG", default=False, cast=bool)

ALLOWED_HOSTS = config("ALLOWED_HOSTS", default="localhost,127.0.0.1", cast=Csv())


# Application definition

INSTALLED_APPS = [
    "django.contrib.auth",
    "django.contrib.contenttypes",
    "rest_framework",
    "drf_spectacular",
    "cmatrix",
    "sgws",
    "sep",
    "ent2q",
    "cli",
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
]

ROOT_URLCONF = "sgws_certifier.urls"

TEMPLATES = []

WSGI_APPLICATION = "sgws_certifier.wsgi.application"


# Database
# Nothing is persisted; sqlite keeps `manage.py check` and the test runner happy.

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}


LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# Numerical limits and tolerances

SGWS_MAX_DIMENSION = config("SGWS_MAX_DIMENSION", default=1024, cast=int)
SGWS_MAX_TERMS = config("SGWS_MAX_TERMS", default=2**20, cast=int)
SGWS_MAX_PHASE_DIMENSION = config("SGWS_MAX_PHASE_DIMENSION", default=6, cast=int)

# "jacobi" (cyclic complex Jacobi) or "lapack" (numpy.linalg.eigh)
SGWS_EIGENSOLVER = config("SGWS_EIGENSOLVER", default="jacobi")
SGWS_JACOBI_TOLERANCE = config("SGWS_JACOBI_TOLERANCE", default=1e-13, cast=float)
SGWS_JACOBI_MAX_SWEEPS = config("SGWS_JACOBI_MAX_SWEEPS", default=100, cast=int)

SGWS_TOLERANCES = {
    "hermitian": 1e-12,
    "psd": 1e-10,
    "normalization": 1e-12,
    "nonzero": 1e-12,
    "reconstruction": 1e-10,
    "weight_sum": 1e-12,
    "cauchy_schwarz": 1e-12,
    "bisection_v": 1e-8,
    "decomposition_slack": 1e-12,
    "closed_form_concurrence": 1e-8,
}

SGWS_BISECTION_ITERATIONS = 60


LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {name} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        app: {
            "handlers": ["console"],
            "level": config("SGWS_LOG_LEVEL", default="WARNING"),
            "propagate": False,
        }
        for app in ("cmatrix", "sgws", "sep", "ent2q", "cli")
    },
}


REST_FRAMEWORK = {
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": [
        "rest_framework.permissions.AllowAny",
    ],
    "UNAUTHENTICATED_USER": None,
    "DEFAULT_RENDERER_CLASSES": [
        "rest_framework.renderers.JSONRenderer",
    ],
    "DEFAULT_SCHEMA_CLASS": "drf_spectacular.openapi.AutoSchema",
}


SPECTACULAR_SETTINGS = {
    "TITLE": "SGWS Certifier API",
    "DESCRIPTION": "Separability certification for special generalized Werner states",
    "VERSION": "1.0.0",
    "SERVE_INCLUDE_SCHEMA": False,
}
