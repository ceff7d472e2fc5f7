"""
Django settings for the SortedAlgebra project.

There is no web surface; the settings configure the installed apps, the
management commands and the size bounds every bounded operation respects.
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# SECURITY WARNING: nothing is served, but django insists on a key
SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY", "sorted-algebra-not-a-secret")

DEFAULT_AUTO_FIELD = "django.db.models.AutoField"

DEBUG = False

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    "django.contrib.auth",
    "django.contrib.contenttypes",
    "rest_framework",
    "sorted_core",
    "signature_terms",
    "finite_algebra",
    "translations",
    "syntactic",
    "formations",
    "workspace",
]

# Database
# No app defines models; django still wants a default connection.

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": os.path.join(BASE_DIR, "db.sqlite3"),
    }
}

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

# Size bounds
# Each can be overridden from the environment, and per command with flags.

# total carrier size for congruence enumeration, isomorphism search and products
ALGEBRA_MAX_CARRIER = int(os.environ.setdefault("ALGEBRA_MAX_CARRIER", "8"))

# bound on |B|^|A| when enumerating homomorphisms A -> B
ALGEBRA_MAX_HOMS = int(os.environ.setdefault("ALGEBRA_MAX_HOMS", "1000000"))

# default total carrier bound of an algebra pool
FORMATION_MAX_CARRIER = int(os.environ.setdefault("FORMATION_MAX_CARRIER", "4"))

# maximal number of algebras in a pool
FORMATION_MAX_ALGEBRAS = int(os.environ.setdefault("FORMATION_MAX_ALGEBRAS", "256"))

# maximal number of raw operation tables tried when generating all algebras
FORMATION_MAX_CANDIDATES = int(
    os.environ.setdefault("FORMATION_MAX_CANDIDATES", "200000")
)

# number of sampled languages, contexts and substitutions in language checks
EILENBERG_SAMPLE_BUDGET = int(os.environ.setdefault("EILENBERG_SAMPLE_BUDGET", "2000"))

# Logging
# Reports go to stdout, so all log output goes to stderr.

ALGEBRA_LOG_LEVEL = os.environ.setdefault("ALGEBRA_LOG_LEVEL", "WARNING")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "{levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "stderr": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "loggers": {
        app: {
            "handlers": ["stderr"],
            "level": ALGEBRA_LOG_LEVEL,
            "propagate": False,
        }
        for app in INSTALLED_APPS
        if "." not in app and app != "rest_framework"
    },
}

# Import Local settings if available
try:
    from .local_settings import *
except ImportError:
    pass
