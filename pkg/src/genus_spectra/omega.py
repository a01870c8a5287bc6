"""The sets Omega_N(p) of values h*p^N + sum_i (p^N - p^(N-i))/2 * x_i."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .padic import check_odd_prime, digit_sum, tau, truncated_expansion


@dataclass(frozen=True)
class OmegaLevel:
    p: int
    level: int

    def __post_init__(self) -> None:
        check_odd_prime(self.p)
        if self.level < 0:
            raise ValueError("level must be nonnegative")


@dataclass(frozen=True)
class OmegaSolution:
    h: int
    x: tuple[int, ...]

    def value(self, lev: OmegaLevel) -> int:
        return self.h * lev.p**lev.level + sum(
            w * xi for w, xi in zip(omega_weights(lev.p, lev.level), self.x)
        )


def omega_weights(p: int, level: int) -> tuple[int, ...]:
    """Coefficients of x_1..x_N."""
    top = p**level
    return tuple((top - p ** (level - i)) // 2 for i in range(1, level + 1))


def omega_contains(lev: OmegaLevel, y: int) -> bool:
    """Digit-sum membership test."""
    if y < 0:
        return False
    if lev.level == 0 or y == 0:
        return True
    p, big_n = lev.p, lev.level
    s = digit_sum(truncated_expansion(2 * y, p, big_n))
    return s >= (big_n - tau(y, p, big_n)) * (p - 1)


def _coins(p: int, level: int) -> tuple[int, ...]:
    return (p**level, *omega_weights(p, level))


@lru_cache(maxsize=64)
def _reach_table(p: int, level: int, limit: int) -> tuple[int, ...]:
    # last_coin[y] = index of a coin used in some representation of y, -1 if none
    coins = _coins(p, level)
    last = [-1] * (limit + 1)
    last[0] = len(coins)
    for y in range(1, limit + 1):
        for ci, c in enumerate(coins):
            if c <= y and last[y - c] != -1:
                last[y] = ci
                break
    return tuple(last)


def _table_for(p: int, level: int, y: int) -> tuple[int, ...]:
    limit = 1024
    while limit < y:
        limit *= 2
    return _reach_table(p, level, limit)


def omega_brute(lev: OmegaLevel, y: int) -> OmegaSolution | None:
    """Exhaustive search; every x_i is bounded by 2y/(p^N - p^(N-i)) and h by y/p^N."""
    if y < 0:
        return None
    p, big_n = lev.p, lev.level
    if big_n == 0:
        return OmegaSolution(y, ())
    last = _table_for(p, big_n, y)
    if last[y] == -1:
        return None
    coins = _coins(p, big_n)
    counts = [0] * len(coins)
    rest = y
    while rest:
        ci = last[rest]
        counts[ci] += 1
        rest -= coins[ci]
    return OmegaSolution(counts[0], tuple(counts[1:]))


def omega_members(lev: OmegaLevel, upto: int) -> list[int]:
    return [y for y in range(upto + 1) if omega_contains(lev, y)]


def sigma_stable(p: int, e: int) -> int:
    """Closed form for the least s with [s, inf) inside Omega_e(p)."""
    check_odd_prime(p)
    if e < 1:
        raise ValueError("e must be at least 1")
    return (e * (p - 1) * p**e - 3 * (p**e - 1)) // 2


def stable_point_brute(p: int, e: int, margin: int | None = None) -> int:
    """Least s such that every y in [s, s + margin] is representable, found by search."""
    margin = p**e if margin is None else margin
    run = 0
    y = 0
    lev = OmegaLevel(p, e)
    while True:
        if omega_brute(lev, y) is not None:
            run += 1
            if run > margin:
                return y - margin
        else:
            run = 0
        y += 1
