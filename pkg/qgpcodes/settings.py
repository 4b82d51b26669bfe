"""
Django settings for the qgpcodes project.

The project has no web surface and no database. Django provides the
application registry, the configuration layer, logging and the
management-command CLI (construct, verify, table, kl_check, export).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""

from pathlib import Path
import json
import os
from dotenv import load_dotenv

# Load environment variables from '.env' file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Django refuses to start without a secret key, even without sessions.
SECRET_KEY = os.getenv("SECRET_KEY", "qgpcodes-local-only")

DEBUG = os.getenv("DEBUG", "False") == "True"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "main.apps.MainConfig",  # Shared helpers and the CLI commands
    "classical.apps.ClassicalConfig",  # Binary codes and the search engine
    "quantum.apps.QuantumConfig",  # Stabilizer and union stabilizer codes
]

# No models are defined, so no database is configured.
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = "en-us"  # Default language code

TIME_ZONE = "CET"  # Default time zone

USE_I18N = False

USE_TZ = True


# ------------------------------------------
# Code construction and verification settings
# ------------------------------------------

# Default seed of every randomized command and sampling routine.
QGP_SEED = int(os.getenv("QGP_SEED", "20240"))

# Default number of worker processes for batched coset searches.
QGP_WORKERS = int(os.getenv("QGP_WORKERS", "1"))

# Maximum number of error patterns (table side + stream side) that a single
# bounded minimum-weight search is allowed to enumerate.
QGP_SEARCH_BUDGET = int(os.getenv("QGP_SEARCH_BUDGET", "10000000"))

# Maximum log2 of the enumeration cost of the exact union-code distance.
QGP_EXACT_LOG2_BUDGET = int(os.getenv("QGP_EXACT_LOG2_BUDGET", "24"))

# Optional override of the primitive modulus table, e.g. '{"5": "0x3b"}'.
QGP_PRIMITIVE_POLYNOMIALS = {
    int(w): int(value, 16)
    for w, value in json.loads(os.getenv("QGP_PRIMITIVE_POLYNOMIALS", "{}")).items()
}

# Search radii, one below each claimed distance.
QGP_RADII = {
    "goethals": int(os.getenv("QGP_RADIUS_G", "7")),
    "preparata": int(os.getenv("QGP_RADIUS_P", "5")),
    "reed_muller": int(os.getenv("QGP_RADIUS_RM", "3")),
}

# Default directory for manifests and reports.
QGP_OUTPUT_DIR = Path(os.getenv("QGP_OUTPUT_DIR", BASE_DIR / "output"))


# ------------------------------------------
# Logging
# ------------------------------------------

LOG_DIR = BASE_DIR / "logs"
LOG_DIR.mkdir(exist_ok=True)

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(levelname)s %(asctime)s %(module)s %(message)s",
        },
        "simple": {
            "format": "%(levelname)s %(message)s",
        },
    },
    "handlers": {
        "console": {
            "level": "WARNING",
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
        "classical_logfile": {
            "level": "DEBUG",
            "class": "logging.FileHandler",
            "filename": os.path.join(LOG_DIR, "classical.log"),
            "formatter": "verbose",
        },
        "quantum_logfile": {
            "level": "DEBUG",
            "class": "logging.FileHandler",
            "filename": os.path.join(LOG_DIR, "quantum.log"),
            "formatter": "verbose",
        },
        "main_logfile": {
            "level": "DEBUG",
            "class": "logging.FileHandler",
            "filename": os.path.join(LOG_DIR, "main.log"),
            "formatter": "verbose",
        },
    },
    "loggers": {
        "classical": {
            "handlers": ["classical_logfile", "console"],
            "level": "DEBUG",
            "propagate": False,
        },
        "quantum": {
            "handlers": ["quantum_logfile", "console"],
            "level": "DEBUG",
            "propagate": False,
        },
        "main": {
            "handlers": ["main_logfile", "console"],
            "level": "DEBUG",
            "propagate": False,
        },
    },
}
