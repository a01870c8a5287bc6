"""The grid of profiles used for cross-checks: primes x exponents x types x ed classes x flags."""

from __future__ import annotations

from itertools import product

from .profile import TYPES, GroupProfile, needed_flags, validate


def _orders_for(p: int, e: int) -> list[tuple[int, int | None]]:
    """Representative (n, exp_g1) choices covering each table regime for this (p, e)."""
    if e == 2:
        return [(p + 2, None), (p + 1, p), (p + 1, p * p)]
    return [(2 + (e - 1) * (p - 1), None), (3 + (e - 1) * (p - 1), None)]


def profile_matrix(primes=(3, 5, 7), exponents=(2, 3)) -> list[GroupProfile]:
    out = []
    for p, e in product(primes, exponents):
        for (n, g1), t in product(_orders_for(p, e), TYPES):
            base = GroupProfile.of(p, n, e, t, exp_g1=g1)
            if validate(base):
                continue
            flags = sorted(needed_flags(base))
            for values in product((False, True), repeat=len(flags)):
                gp = GroupProfile.of(p, n, e, t, exp_g1=g1, **dict(zip(flags, values)))
                if not validate(gp):
                    out.append(gp)
    return out
