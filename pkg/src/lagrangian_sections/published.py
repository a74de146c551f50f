"""Published block counts and ranks, kept for side-by-side comparison.

Rank tables map a characteristic to a value; a key like ``">=5"`` covers every
prime from that bound up.
"""

from __future__ import annotations

PUBLISHED = {
    4: {
        "plane_census": {3: 4, 2: 24},
    },
    5: {
        "census": {3: 5, 2: 7},
        "ranks": {
            "B": {0: 27, 2: 22, ">=3": 27},
            "L3": {0: 4, 2: 3, ">=3": 4},
        },
    },
    6: {
        "census": {4: 1, 3: 60, 2: 240},
        "plane_census": {4: 15, 3: 240, 2: 240},
        "q_counts": {2: 60, 3: 240, 4: 240},
        "ranks": {
            "B": {0: 495, 2: 430, 3: 494, ">=5": 495},
            "L4": {0: 15, 2: 10, 3: 14, ">=5": 15},
        },
    },
    7: {
        "census": {4: 7, 3: 301, 2: 693},
        "ranks": {
            "B": {0: 2002, 2: 1666, 3: 1995, ">=5": 2002},
            # published under an L3 heading
            "L3": {0: 15, 2: 10, 3: 14, ">=5": 15},
        },
    },
}


def published_rank(table: dict, p: int) -> int | None:
    if p in table:
        return table[p]
    if p == 0:
        return None
    for key, value in table.items():
        if isinstance(key, str) and key.startswith(">=") and p >= int(key[2:]):
            return value
    return None
