"""G3SDM / G3DM proof search, interpolation, translations and finite algebras."""

from ._core import (
    ParseError,
    check_embedding,
    check_proof,
    corpus,
    derivable,
    derivable_within_height,
    enumerate_algebras,
    interpolate,
    min_height,
    prove,
    refute,
    render,
    translate,
    valid,
)

__all__ = [
    "ParseError",
    "check_embedding",
    "check_proof",
    "corpus",
    "derivable",
    "derivable_within_height",
    "enumerate_algebras",
    "interpolate",
    "min_height",
    "prove",
    "refute",
    "render",
    "translate",
    "valid",
]
