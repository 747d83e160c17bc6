"""Orbit and periodic representations of semicrossed products."""

from ._core import (
    Element,
    SemicrossedError,
    System,
    adjoint,
    bilateral_rep,
    checks,
    classify,
    element,
    lift,
    load_config,
    multiply,
    norm,
    orbit_rep,
    periodic_rep,
    preimages,
    spectral_norm,
    verify,
)

__all__ = [
    "Element",
    "SemicrossedError",
    "System",
    "adjoint",
    "bilateral_rep",
    "checks",
    "classify",
    "element",
    "lift",
    "load_config",
    "multiply",
    "norm",
    "orbit_rep",
    "periodic_rep",
    "preimages",
    "spectral_norm",
    "verify",
]
