"""Runtime caps and environment overrides."""

from __future__ import annotations

import os

# Hard ceiling on group order: dense uint16 tables, 2000^2 entries = 8 MB.
MAX_ORDER_DEFAULT = 2000

# Automorphism enumeration is only attempted below these.
AUT_MAX_GROUP_ORDER = 256
AUT_MAX_ELEMENTS = 1 << 18

# Endomorphism counting is exponential in the generator count; desk scale.
END_MAX_GROUP_ORDER = 24

# Naive all-bijections oracle: (order-1)! candidate maps.
NAIVE_AUT_MAX_ORDER = 8

# Bound values are materialized only below this exact bit size; larger
# comparisons run by clamped square-and-multiply without materializing.
MATERIALIZE_MAX_BITS = 400_000


def max_order() -> int:
    """Current order cap; AUTBOUND_MAX_ORDER overrides the default."""
    raw = os.environ.get("AUTBOUND_MAX_ORDER")
    if raw is None:
        return MAX_ORDER_DEFAULT
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"AUTBOUND_MAX_ORDER must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"AUTBOUND_MAX_ORDER must be positive, got {value}")
    return value
