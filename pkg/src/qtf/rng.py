"""Counter-based deterministic random sampling (splitmix64 core).

Every draw is a pure function of (seed, counter), so sample i of a run
can be produced in any order, on any number of workers, and always comes
out the same.  That property is what the simulation determinism
contract rests on.
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def raw64(seed: int, counter: int) -> int:
    """The counter-th 64-bit output of splitmix64 seeded with ``seed``."""
    return _mix64((seed + (counter + 1) * _GOLDEN) & _MASK64)


def unit_uniform(seed: int, counter: int) -> float:
    """Uniform draw in [0, 1) with 53-bit resolution."""
    return (raw64(seed, counter) >> 11) * 2.0**-53


def unit_uniform_open(seed: int, counter: int) -> float:
    """Uniform draw in (0, 1]; safe to pass to log()."""
    return ((raw64(seed, counter) >> 11) + 1) * 2.0**-53


def std_normal(seed: int, counter: int) -> float:
    """Standard normal draw via Box-Muller; consumes counters 2i, 2i+1."""
    u1 = unit_uniform_open(seed, 2 * counter)
    u2 = unit_uniform(seed, 2 * counter + 1)
    return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)
