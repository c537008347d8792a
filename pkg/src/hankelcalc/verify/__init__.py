"""Verification catalog: one named, parameterized check per result being reproduced."""

from . import checks as _checks  # noqa: F401  (registers the catalog)
from .registry import (
    CheckFailed,
    CheckReport,
    CheckSpec,
    ParamSet,
    catalog,
    list_checks,
    run_check,
)

CATALOG_ORDER = _checks.CATALOG_ORDER

__all__ = [
    "CATALOG_ORDER",
    "CheckFailed",
    "CheckReport",
    "CheckSpec",
    "ParamSet",
    "catalog",
    "list_checks",
    "run_check",
]
