"""
File location; .../classical/apps.py
Description: This file contains the configuration for the classical app.
(c) 2024 QGPCodes - all rights reserved
"""

# Django imports
from django.apps import AppConfig

# ------------------------------------------
# Define the configuration here
# ------------------------------------------


class ClassicalConfig(AppConfig):
    name = "classical"
    verbose_name = "Binary codes and bounded search"
