"""Base-p arithmetic: truncated expansions, digit sums, first nonzero digit, order classes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime


def check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")


@dataclass(frozen=True)
class TruncatedExpansion:
    """Digits a_0..a_level of m with a_i < p below the top index; the top digit absorbs the rest."""

    p: int
    level: int
    digits: tuple[int, ...]

    def value(self) -> int:
        return sum(d * self.p**i for i, d in enumerate(self.digits))


def truncated_expansion(m: int, p: int, level: int) -> TruncatedExpansion:
    check_odd_prime(p)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if level < 0:
        raise ValueError("level must be nonnegative")
    digits = []
    rest = m
    for _ in range(level):
        rest, d = divmod(rest, p)
        digits.append(d)
    digits.append(rest)
    return TruncatedExpansion(p, level, tuple(digits))


def digit_sum(x: TruncatedExpansion) -> int:
    return sum(x.digits)


def tau(value: int, p: int, level: int) -> int:
    """Index of the first nonzero digit in the truncated expansion of 2*value."""
    if value <= 0:
        raise ValueError("tau is defined only for positive values")
    digits = truncated_expansion(2 * value, p, level).digits
    return next(i for i, d in enumerate(digits) if d)


@lru_cache(maxsize=None)
def order_class_index(i: int, p: int, n: int) -> int:
    """The k >= -1 with i + k(p-1) <= n-p < i + (k+1)(p-1); elements of G_i minus G_{i+1} have order p^(k+2)."""
    check_odd_prime(p)
    if n < p + 2:
        raise ValueError("order classes are defined for n >= p+2")
    if not 1 <= i <= n - 1:
        raise ValueError("i must lie in [1, n-1]")
    return (n - p - i) // (p - 1)


def exponent_from_order(p: int, n: int) -> int:
    """The e with 1 + (e-2)(p-1) <= n-p < 1 + (e-1)(p-1), valid for n >= p+2."""
    check_odd_prime(p)
    if n < p + 2:
        raise ValueError("requires n >= p+2")
    return (n - p - 1) // (p - 1) + 2
