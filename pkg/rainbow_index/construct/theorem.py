"""Closed form of the 3-rainbow index of K_{2,t}."""

from dataclasses import dataclass
from math import isqrt

# (k, t_min, t_max) for the regimes below the general formula
_SMALL_INTERVALS = ((2, 1, 2), (3, 3, 4), (4, 5, 8), (5, 9, 20))


@dataclass(frozen=True)
class ValueInterval:
    """The inclusive range t_min..t_max of t with rx3(K_{2,t}) = k."""

    k: int
    t_min: int
    t_max: int

    def __post_init__(self):
        if self.t_min > self.t_max:
            raise ValueError(f"Empty interval {self.t_min}..{self.t_max}")

    def __contains__(self, t) -> bool:
        return self.t_min <= t <= self.t_max


def rx3_interval(k: int) -> ValueInterval:
    """Range of t for which exactly k colors are needed.

    Args:
        k (int): Number of colors, at least 2.
    """
    if k < 2:
        raise ValueError(f"The 3-rainbow index of K_2,t is at least 2, got k={k}")
    for k_small, t_min, t_max in _SMALL_INTERVALS:
        if k == k_small:
            return ValueInterval(k, t_min, t_max)
    return ValueInterval(k, (k - 1) * (k - 2) + 1, k * (k - 1))


def rx3_value(t: int) -> int:
    """rx3(K_{2,t}) for any t >= 1.

    For t >= 21 this is the largest k with (k-1)(k-2)+1 <= t, read off the
    quadratic with an integer square root.
    """
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    for k, t_min, t_max in _SMALL_INTERVALS:
        if t_min <= t <= t_max:
            return k
    k = (3 + isqrt(4 * t - 3)) // 2
    while (k - 1) * (k - 2) + 1 > t:
        k -= 1
    while k * (k - 1) < t:
        k += 1
    return k
