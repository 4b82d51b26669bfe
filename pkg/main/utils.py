"""
File location; .../main/utils.py
Description: This file contains the helpers shared by the management
            commands: JSON manifests, the text matrix format, the parameter
            table, tabular rendering and the mapping of domain errors to
            command exit codes.
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
from pathlib import Path
from typing import Iterable, Optional, Union
import json
from . import logger

# Django imports
from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

# Application imports
from classical.cosetcode import goethals, preparata
from classical.lincode import BitVector
from main.constants import (
    CITED_ENLARGED_BCH_K,
    CITED_GOETHALS_LOG2_DIM,
    EXIT_BUDGET,
    EXIT_IO,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    MANIFEST_SCHEMA,
)
from main.exceptions import BudgetError, SearchError
from main.validators import validate_family, validate_m, validate_manifest
from quantum.unioncode import build_gp_code, gp_components

# Third-party imports
import pandas as pd

# ------------------------------------------
# Exit codes
# ------------------------------------------


def as_command_error(error: Exception) -> CommandError:
    """
    Translate a domain error into a CommandError carrying its exit code.
    """

    if isinstance(error, BudgetError):
        code = EXIT_BUDGET
    elif isinstance(error, SearchError):
        code = EXIT_VERIFICATION_FAILED
    elif isinstance(error, OSError):
        code = EXIT_IO
    else:
        code = EXIT_USAGE
    if isinstance(error, ValidationError):
        message = " ".join(error.messages)
    else:
        message = str(error)
    logger.error(f"Command failed with exit code {code}: {message}")
    return CommandError(message, returncode=code)


# ------------------------------------------
# Manifests
# ------------------------------------------


def default_path(name: str) -> Path:
    return Path(settings.QGP_OUTPUT_DIR) / name


def build_manifest(family: str, m: int, seed: Optional[int] = None) -> dict:
    """
    Construct a code of the given family and describe it as a JSON-ready
    dictionary. Vectors are hex strings with coordinate i at bit i.

    Parameters:
    family (str): goethals, preparata, stabilizer or gp-quantum.
    m (int): Even parameter, at least 6.
    seed (int): Recorded for reproducibility. Default is settings.QGP_SEED.

    Returns:
    manifest (dict): The manifest, deterministic for given arguments.
    """

    validate_family(family)
    validate_m(m)
    manifest = {
        "schema": MANIFEST_SCHEMA,
        "family": family,
        "m": m,
        "n": 2**m,
        "seed": settings.QGP_SEED if seed is None else seed,
    }
    if family in ("goethals", "preparata"):
        code = goethals(m) if family == "goethals" else preparata(m)
        manifest.update(
            k=code.base.k,
            K=len(code.reps),
            size_log2=code.size_log2,
            generator=[row.to_hex() for row in code.base.generator.rows],
            reps=[t.to_hex() for t in code.reps],
        )
        return manifest

    components = gp_components(m)
    U = build_gp_code(m, components)
    manifest.update(k=U.base.k, components=components.to_manifest(), stab=U.base.to_dict()["stab"])
    if family == "gp-quantum":
        manifest.update(K2=U.K, log2_dim=U.log2_dim)
    return manifest


def write_manifest(manifest: dict, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(manifest, sort_keys=True, indent=2) + "\n")
    logger.info(f"Wrote {manifest.get('family', 'report')} to {path}")
    return path


def read_manifest(path: Union[str, Path]) -> dict:
    """
    Read and validate a manifest.

    Raises:
    OSError: If the file cannot be read.
    ValidationError: If the content is not a supported manifest.
    """

    try:
        manifest = json.loads(Path(path).read_text())
    except json.JSONDecodeError as error:
        raise ValidationError(f"{path} is not valid JSON: {error}") from error
    if not isinstance(manifest, dict):
        raise ValidationError(f"{path} does not hold a JSON object.")
    validate_manifest(manifest)
    return manifest


# ------------------------------------------
# Text matrix format
# ------------------------------------------


def format_matrix(rows: Iterable[BitVector], length: int) -> str:
    """A header line n=<length> followed by one hex row per line."""
    lines = [f"n={length}"]
    for row in rows:
        if row.length != length:
            raise ValidationError(f"Row of length {row.length} in a matrix of length {length}.")
        lines.append(row.to_hex())
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> list[BitVector]:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValidationError("Matrix text must start with an n=<length> header.")
    try:
        length = int(lines[0][2:])
        return [BitVector.from_hex(length, line) for line in lines[1:]]
    except ValueError as error:
        raise ValidationError(f"Malformed matrix text: {error}") from error


def write_matrix(path: Union[str, Path], rows: Iterable[BitVector], length: int) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_matrix(rows, length))
    return path


def read_matrix(path: Union[str, Path]) -> list[BitVector]:
    return parse_matrix(Path(path).read_text())


# ------------------------------------------
# Tables
# ------------------------------------------


def parameter_row(m: int) -> dict:
    """
    Parameters of the quantum Goethals-Preparata code and of its base code,
    with the cited comparison values where known.
    """

    n = 2**m
    cited_goethals = CITED_GOETHALS_LOG2_DIM.get(m)
    cited_bch = CITED_ENLARGED_BCH_K.get(m)
    return {
        "m": m,
        "GP code": f"(({n}, 2^{n - 5 * m + 1}, 8))",
        "base code": f"[[{n}, {n - 7 * m + 3}, 8]]",
        "Goethals union (cited)": f"(({n}, 2^{cited_goethals}, 8))" if cited_goethals else "-",
        "enlarged BCH (cited)": f"[[{n}, {cited_bch}, 8]]" if cited_bch else "-",
    }


def render(records: list[dict], fmt: str = "text") -> str:
    """Render records as an aligned text table or as JSON."""
    if fmt == "json":
        return json.dumps(records, sort_keys=True, indent=2)
    if not records:
        return ""
    return pd.DataFrame.from_records(records).to_string(index=False)
