"""
File location; .../main/validators.py
Description: This file contains the validators for user supplied values.
(c) 2024 QGPCodes - all rights reserved
"""

# Django imports
from django.core.exceptions import ValidationError

# Application imports
from main.constants import FAMILIES, MANIFEST_SCHEMA

# ------------------------------------------
# Custom validators
# ------------------------------------------


def validate_m(value: int) -> None:
    """
    Validate the parameter m of the Goethals-Preparata family.
    m must be even and at least 6. For m = 4 the exponent r = 2 lies in the
    cyclotomic coset of 1, so C_G and C_P coincide and the enlargement
    has no room (k' > k + 1 fails).

    Parameters:
    value (int): The parameter m.

    Raises:
    ValidationError: If m is odd or smaller than 6.
    """

    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"m must be an integer, got {value!r}.")
    if value % 2 != 0:
        raise ValidationError(f"m must be even, got m={value}.")
    if value < 6:
        raise ValidationError(f"m must be at least 6, got m={value}.")


def validate_family(value: str) -> None:
    """
    Validate the code family name.

    Parameters:
    value (str): The family name.

    Raises:
    ValidationError: If the family is not known.
    """

    if value not in FAMILIES:
        raise ValidationError(
            f"Unknown family {value!r}. Allowed families are: "
            f"{', '.join(FAMILIES)}."
        )


def validate_workers(value: int) -> None:
    """
    Validate the size of the worker pool.

    Raises:
    ValidationError: If fewer than one worker is requested.
    """

    if value < 1:
        raise ValidationError(f"At least one worker is needed, got {value}.")


def validate_radius(radius: int, length: int) -> None:
    """
    Validate a search radius against the code length.

    Parameters:
    radius (int): The search radius.
    length (int): The number of positions of the code.

    Raises:
    ValidationError: If the radius is negative or exceeds the length.
    """

    if radius < 0 or radius > length:
        raise ValidationError(
            f"Search radius {radius} is outside of [0, {length}]."
        )


def validate_manifest(manifest: dict) -> None:
    """
    Validate the header of a JSON manifest.

    Parameters:
    manifest (dict): The decoded manifest.

    Raises:
    ValidationError: If the schema version or the family is not supported.
    """

    if manifest.get("schema") != MANIFEST_SCHEMA:
        raise ValidationError(
            f"Unsupported manifest schema {manifest.get('schema')!r}, "
            f"expected {MANIFEST_SCHEMA}."
        )
    validate_family(manifest.get("family"))
    validate_m(manifest.get("m"))
