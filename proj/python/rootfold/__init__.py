"""Python access to the rootfold C++ core."""

import json

from ._core import (
    InputError,
    ResourceError,
    TheoremViolation,
    admissible_size,
    hecke_parameters,
    kl_polynomial,
    preset_names,
    verify_json,
)
from ._core import weyl_dimension as _weyl_dimension


def verify(presets=None, mu_bound=None, run_kl=True, threads=0):
    """Run the verification checks and return the parsed report."""
    return json.loads(verify_json(list(presets or []), mu_bound, run_kl, threads))


def weyl_dimension(type_, isogeny, highest):
    return int(_weyl_dimension(type_, isogeny, list(highest)))


__all__ = [
    "InputError",
    "ResourceError",
    "TheoremViolation",
    "admissible_size",
    "hecke_parameters",
    "kl_polynomial",
    "preset_names",
    "verify",
    "verify_json",
    "weyl_dimension",
]
