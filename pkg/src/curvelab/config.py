"""Runtime policy knobs: extension-degree bound and blow-up depth cap."""

from __future__ import annotations

import os

DEFAULT_EXT_DEGREE = 6
DEFAULT_DEPTH_CAP = 64
DEFAULT_SURFACE_DEGREE_CAP = 6


def ext_degree(override: int | None = None) -> int:
    """Maximum degree of the single simple extension Q(a) the engine will build.
    CURVELAB_EXT_DEGREE overrides the default."""
    if override is not None:
        return override
    env = os.environ.get("CURVELAB_EXT_DEGREE")
    if env:
        return int(env)
    return DEFAULT_EXT_DEGREE


def depth_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    return DEFAULT_DEPTH_CAP
