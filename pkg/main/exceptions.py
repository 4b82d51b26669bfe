"""
File location; .../main/exceptions.py
Description: This file contains the exceptions shared by all apps.
(c) 2024 QGPCodes - all rights reserved
"""

# Django imports
from django.core.exceptions import ValidationError

# ------------------------------------------
# Domain exceptions
# ------------------------------------------


class ConstructionError(ValidationError):
    """
    A construction was asked for with violated preconditions, or one of
    its internal consistency checks failed.
    """


class BudgetError(ValidationError):
    """
    An enumeration would exceed its configured budget.
    """


class SearchError(ValidationError):
    """
    A search witness failed its independent re-verification.
    """
