"""Shared exception types and the capacity-override switch."""

import os
import sys

CAPACITY_ENV_VAR = "SHUFFLE_CAPACITY_OVERRIDE"

_warned = False


class CapacityError(RuntimeError):
    """Requested computation exceeds a configured capacity guard."""


class DegenerateSpecError(ValueError):
    """Shuffle specification has no transpositions (|T_A| = 0)."""


def capacity_override() -> bool:
    """True when SHUFFLE_CAPACITY_OVERRIDE is set; warns loudly once."""
    global _warned
    if not os.environ.get(CAPACITY_ENV_VAR):
        return False
    if not _warned:
        print(
            f"WARNING: {CAPACITY_ENV_VAR} is set; capacity guards disabled. "
            "Runs beyond the guarded sizes are unsupported and may exhaust "
            "memory or never finish.",
            file=sys.stderr,
        )
        _warned = True
    return True


def check_capacity(condition: bool, message: str) -> None:
    """Raise CapacityError unless `condition` holds or the override is set."""
    if not condition and not capacity_override():
        raise CapacityError(message)
