"""
Django Testing settings for the SortedAlgebra project.
"""

# import the default settings
from .settings import *

# the tests rely on these exact bounds, not on the environment
ALGEBRA_MAX_CARRIER = 8
ALGEBRA_MAX_HOMS = 1000000
FORMATION_MAX_CARRIER = 4
FORMATION_MAX_ALGEBRAS = 256
FORMATION_MAX_CANDIDATES = 200000
EILENBERG_SAMPLE_BUDGET = 400

# keep the test output quiet
ALGEBRA_LOG_LEVEL = "ERROR"
for logger in LOGGING["loggers"].values():
    logger["level"] = ALGEBRA_LOG_LEVEL

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": ":memory:",
    }
}
