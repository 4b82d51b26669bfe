"""
File location; .../main/apps.py
Description: This file contains the configuration for the main app.
(c) 2024 QGPCodes - all rights reserved
"""

# Django imports
from django.apps import AppConfig


class MainConfig(AppConfig):
    name = "main"
    verbose_name = "Manifests, validation and commands"
