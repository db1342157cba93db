"""Symmetric self-dual codes over odd prime fields."""

from pathlib import Path

from . import _sdcodes
from ._sdcodes import (
    Error,
    LinearCode,
    ParseError,
    PreconditionError,
    SymmetricSD,
    admissible_steps,
    apply_transform,
    circulant_code,
    extend,
    fingerprint,
    is_equivalent,
    min_weight,
    min_weight_exhaustive,
    qr_extended,
    random_transform,
    read_code_file,
    reduce,
    roots_of_minus_one,
    search_chain,
    write_code_file,
)

__all__ = [
    "Error",
    "LinearCode",
    "ParseError",
    "PreconditionError",
    "SymmetricSD",
    "admissible_steps",
    "apply_transform",
    "catalog_entry",
    "catalog_path",
    "circulant_code",
    "extend",
    "fingerprint",
    "is_equivalent",
    "min_weight",
    "min_weight_exhaustive",
    "qr_extended",
    "random_transform",
    "read_code_file",
    "reduce",
    "roots_of_minus_one",
    "search_chain",
    "verify_catalog",
    "write_code_file",
]


def catalog_path():
    """Catalog shipped with the package, if present."""
    bundled = Path(__file__).with_name("catalog.json")
    return str(bundled) if bundled.exists() else None


def catalog_entry(entry_id, catalog=None):
    return _sdcodes.catalog_entry(entry_id, catalog or catalog_path())


def verify_catalog(catalog=None):
    return _sdcodes.verify_catalog(catalog or catalog_path())
