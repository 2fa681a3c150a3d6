"""Numerical tolerance bundles shared by every module."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

__all__ = ["Tolerances", "DEFAULT", "PROFILES", "resolve", "from_environment"]

ENV_VAR = "TSL_TOLERANCE_PROFILE"


@dataclass(frozen=True)
class Tolerances:
    """Tolerances turning exact algebra into floating point decisions.

    Attributes
    ----------
    coeff : float
        Relative threshold below which trailing coefficients are trimmed.
    res : float
        Relative residual accepted for identities such as ``a*u + b*v == 1``.
    root : float
        Residual threshold for the simultaneous root iteration.
    cluster : float
        Distance under which approximate roots merge into one multiple root.
    circle : float
        Half-width of the band around ``|z| = 1`` treated as "on the circle".
    max_iters : int
        Iteration cap for the root finder.
    """

    coeff: float = 1e-12
    res: float = 1e-9
    root: float = 1e-10
    cluster: float = 1e-6
    circle: float = 1e-8
    max_iters: int = 200

    def __post_init__(self):
        for name in ("coeff", "res", "root", "cluster", "circle"):
            if not getattr(self, name) > 0:
                raise ValueError(f"tolerance {name!r} must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")

    def with_(self, **changes) -> "Tolerances":
        changes = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **changes)


DEFAULT = Tolerances()

PROFILES = {
    "default": DEFAULT,
    "strict": Tolerances(coeff=1e-14, res=1e-11, root=1e-12, cluster=1e-8, circle=1e-10, max_iters=400),
    "loose": Tolerances(coeff=1e-10, res=1e-7, root=1e-8, cluster=1e-4, circle=1e-6),
}


def resolve(tol: Tolerances | None) -> Tolerances:
    return DEFAULT if tol is None else tol


def from_environment(environ=None) -> Tolerances:
    """Profile named by ``TSL_TOLERANCE_PROFILE`` (``default`` when unset)."""
    environ = os.environ if environ is None else environ
    name = environ.get(ENV_VAR, "default").strip() or "default"
    try:
        return PROFILES[name]
    except KeyError:
        raise ValueError(f"unknown tolerance profile {name!r}; choose from {sorted(PROFILES)}") from None
