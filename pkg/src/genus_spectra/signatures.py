"""Signatures (h; m_1..m_e), genus maps, levels and cones."""

from __future__ import annotations

from dataclasses import dataclass

from .omega import OmegaLevel, omega_contains
from .padic import check_odd_prime


@dataclass(frozen=True)
class PrimeProfile:
    """Order p^n and exponent p^e."""

    p: int
    n: int
    e: int

    def violations(self) -> list[str]:
        p, n, e = self.p, self.n, self.e
        out = []
        try:
            check_odd_prime(p)
        except ValueError as exc:
            return [str(exc)]
        if n < 4:
            out.append("n must be at least 4")
        if not 2 <= e <= n:
            out.append("e must satisfy 2 <= e <= n")
        if n >= p + 2 and not (2 + (e - 1) * (p - 1) <= n <= 1 + e * (p - 1)):
            out.append(f"n = {n} is incompatible with exponent p^{e}: need 2+(e-1)(p-1) <= n <= 1+e(p-1)")
        if n == p + 1 and e != 2:
            out.append("order p^(p+1) forces e = 2")
        if n < p + 1:
            out.append("maximal class tables need n >= p+1")
        return out


@dataclass(frozen=True)
class Signature:
    h: int
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", tuple(self.m))
        if self.h < 0 or any(x < 0 for x in self.m):
            raise ValueError("signature entries must be nonnegative")

    def __str__(self) -> str:
        return f"({self.h}; {','.join(map(str, self.m))})"

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse '(h; m1,m2,...)' or 'h;m1,m2'."""
        body = text.strip().strip("()")
        head, _, tail = body.partition(";")
        ms = tuple(int(t) for t in tail.replace(" ", "").split(",") if t)
        return cls(int(head), ms)


def level(sig: Signature) -> int:
    """Index of the last nonzero m_i, or 0."""
    for i in range(len(sig.m), 0, -1):
        if sig.m[i - 1]:
            return i
    return 0


def _check_length(sig: Signature, profile: PrimeProfile) -> None:
    if len(sig.m) != profile.e:
        raise ValueError(f"signature has {len(sig.m)} elliptic entries, profile needs e = {profile.e}")


def reduced_genus(sig: Signature, profile: PrimeProfile) -> int:
    _check_length(sig, profile)
    p, e = profile.p, profile.e
    top = p**e
    return (sig.h - 1) * top + sum((top - p ** (e - i)) // 2 * mi for i, mi in enumerate(sig.m, start=1))


def genus(sig: Signature, profile: PrimeProfile) -> int:
    return profile.p ** (profile.n - profile.e) * reduced_genus(sig, profile) + 1


def cone_contains(base: Signature, candidate: Signature) -> bool:
    """Candidate dominates base entrywise at the same level."""
    if len(base.m) != len(candidate.m):
        raise ValueError("signatures of different length")
    if level(base) != level(candidate):
        return False
    return candidate.h >= base.h and all(c >= b for b, c in zip(base.m, candidate.m))


def cone_reaches(base: Signature, profile: PrimeProfile, target: int) -> bool:
    """Whether some signature in the cone of base has the given reduced genus."""
    big_n = level(base)
    diff = target - reduced_genus(base, profile)
    scale = profile.p ** (profile.e - big_n)
    if diff < 0 or diff % scale:
        return False
    return omega_contains(OmegaLevel(profile.p, big_n), diff // scale)
