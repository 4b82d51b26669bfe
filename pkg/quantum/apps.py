"""
File location; .../quantum/apps.py
Description: This file contains the configuration for the quantum app.
(c) 2024 QGPCodes - all rights reserved
"""

# Django imports
from django.apps import AppConfig

# ------------------------------------------
# Define the configuration here
# ------------------------------------------


class QuantumConfig(AppConfig):
    name = "quantum"
    verbose_name = "Stabilizer and union stabilizer codes"
