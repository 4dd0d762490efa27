"""Minimize counting functions on free monoids and free groups and decide equivalence."""

from ._core import (
    List,
    OracleTooLarge,
    ParseError,
    PreconditionError,
    cohomologous,
    equivalent,
    oracle_equivalent,
    oracle_minimal_depth,
)

__all__ = [
    "List",
    "OracleTooLarge",
    "ParseError",
    "PreconditionError",
    "cohomologous",
    "equivalent",
    "oracle_equivalent",
    "oracle_minimal_depth",
    "load",
]


def load(path):
    """Read a qmlist v1 file."""
    with open(path, encoding="utf-8") as fh:
        return List.parse(fh.read())
