"""Size caps for the exhaustive and exact code paths.

Every cap can be overridden through an environment variable named
``BRUHATLAB_<CAP>`` (for example ``BRUHATLAB_EXTENSION_DP=22``).  Caps exist
to turn runaway exponential work into a clean error instead of an apparent
hang; raising one is a statement that you know what you are asking for.
"""

from __future__ import annotations

import os

ENV_PREFIX = "BRUHATLAB_"

# name -> default ceiling
DEFAULT_CAPS: dict[str, int] = {
    # largest permutation size accepted at construction time
    "PERM_SIZE": 10**6,
    # partition enumeration, psi sweeps, Plancherel sums
    "PARTITION_ENUM": 80,
    # exact big-integer standard-tableau counts
    "SYT_EXACT": 2000,
    # linear-extension counting by the order-ideal DP
    "EXTENSION_DP": 20,
    # weak_down_count by direct scan over all of S_n
    "WEAK_SCAN": 10,
    # weak census, pairwise containment scan (n = 8 is extended mode)
    "WEAK_PAIRWISE": 8,
    # weak census, sum of linear-extension counts
    "WEAK_EXTENSION": 9,
    # strong census, pairwise dominance scan
    "STRONG_CENSUS": 7,
    # exhaustive union-of-increasing-subsequences oracle
    "GREENE_ORACLE": 8,
    # exhaustive union-of-antichains search behind the GKF profile
    "ANTICHAIN_ORACLE": 8,
    # exhaustive walk-vs-dominance equivalence sweep
    "WALK_EQUIVALENCE": 6,
    # balanced-factorial exchange verification (composition count explodes)
    "BALANCING_N": 14,
    "BALANCING_T": 6,
}


class CapExceeded(ValueError):
    """An operation was asked to run past its configured cap."""


def cap(name: str) -> int:
    """Current value of the named cap, honoring environment overrides."""
    default = DEFAULT_CAPS[name]
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"{ENV_PREFIX}{name} must be an integer, got {raw!r}"
        ) from None
    if value < 1:
        raise ValueError(f"{ENV_PREFIX}{name} must be positive, got {value}")
    return value


def check_cap(name: str, value: int, what: str) -> int:
    """Raise CapExceeded if value is above the named cap, else return it."""
    limit = cap(name)
    if value > limit:
        raise CapExceeded(
            f"{what} {value} exceeds the {name} cap of {limit}; "
            f"set {ENV_PREFIX}{name} to override"
        )
    return value
