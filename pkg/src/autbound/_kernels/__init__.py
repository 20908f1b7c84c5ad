"""Kernel backend selection.

The compiled backend is preferred when its extension imported cleanly;
AUTBOUND_BACKEND=python|c forces a choice, and force() overrides both for
tests and benchmarks.
"""

from __future__ import annotations

import contextlib
import os

from . import pyback

try:
    from . import cyback
except ImportError:
    cyback = None

_override: str | None = None


def available() -> tuple[str, ...]:
    return ("python", "c") if cyback is not None else ("python",)


def _resolve(name: str):
    if name == "python":
        return pyback
    if name == "c":
        if cyback is None:
            raise RuntimeError("compiled kernel backend is not available")
        return cyback
    raise ValueError(f"unknown kernel backend {name!r}")


def get():
    """Active backend module."""
    if _override is not None:
        return _resolve(_override)
    env = os.environ.get("AUTBOUND_BACKEND")
    if env:
        return _resolve(env)
    return cyback if cyback is not None else pyback


@contextlib.contextmanager
def force(name: str):
    """Temporarily pin the backend (tests, benchmarks)."""
    global _override
    _resolve(name)  # validate before entering
    prev = _override
    _override = name
    try:
        yield
    finally:
        _override = prev
