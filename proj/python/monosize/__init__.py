"""Size of monomial ideals, polarization and generic deformations."""

import json

from ._core import (
    Ideal,
    MonosizeError,
    apply_deformation,
    decompose,
    find_generic_deformation,
    intersect,
    is_generic,
    is_strongly_generic,
    recompose,
    top_bases,
    validate_deformation,
)
from . import _core

__all__ = [
    "Ideal",
    "MonosizeError",
    "apply_deformation",
    "decompose",
    "examples",
    "find_generic_deformation",
    "fuzz",
    "intersect",
    "is_generic",
    "is_strongly_generic",
    "polarization_sizes",
    "polarize",
    "predict_equality",
    "recompose",
    "size",
    "size_under_deformation",
    "top_bases",
    "validate_deformation",
    "verify_equality",
]


def _ideal(value, vars=None):
    return value if isinstance(value, Ideal) else Ideal(value, vars)


def size(ideal, covers=False):
    return json.loads(_core.size_json(_ideal(ideal), covers))


def polarize(ideal):
    return json.loads(_core.polarize_json(_ideal(ideal)))


def polarization_sizes(ideal):
    return json.loads(_core.polarization_sizes_json(_ideal(ideal)))


def predict_equality(ideal):
    return json.loads(_core.predict_equality_json(_ideal(ideal)))


def verify_equality(ideal):
    return json.loads(_core.verify_equality_json(_ideal(ideal)))


def size_under_deformation(ideal, eps):
    return json.loads(_core.size_under_deformation_json(_ideal(ideal), eps))


def fuzz(seed=0, count=500, max_vars=4, max_gens=4, max_exp=3, skip=()):
    return json.loads(_core.fuzz_json(seed, count, max_vars, max_gens, max_exp, list(skip)))


def examples():
    return json.loads(_core.examples_json())
