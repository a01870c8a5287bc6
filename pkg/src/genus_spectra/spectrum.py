"""Reduced genus spectra computed two ways, plus minimum genus and stable upper genus."""

from __future__ import annotations

from dataclasses import dataclass

from .fsets import f_sets
from .omega import OmegaLevel, omega_contains, sigma_stable
from .profile import AT_LEAST_TWO, ONE, GroupProfile, matching_rows, require_valid
from .signatures import Signature, level


class WindowTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class SpectrumWindow:
    profile: GroupProfile
    bound: int
    reduced_values: tuple[int, ...]
    min_reduced: int | None
    stable_reduced: int | None
    stable_confirmed: bool
    gaps: tuple[int, ...]

    def full_genera(self) -> list[int]:
        scale = self.profile.p ** (self.profile.n - self.profile.e)
        return [scale * v + 1 for v in self.reduced_values]


def _window(gp: GroupProfile, bound: int, values: set[int]) -> SpectrumWindow:
    vals = tuple(sorted(v for v in values if 1 <= v <= bound))
    if not vals:
        return SpectrumWindow(gp, bound, (), None, None, False, ())
    present = set(vals)
    s = bound + 1
    while s - 1 >= 1 and (s - 1) in present:
        s -= 1
    stable = s if s <= bound else None
    confirmed = stable is not None and bound - stable >= gp.p**gp.e
    lo = vals[0]
    gaps = tuple(v for v in range(lo, bound + 1) if v not in present)
    return SpectrumWindow(gp, bound, vals, lo, stable, confirmed, gaps)


def assembled_values(gp: GroupProfile, bound: int, errata: bool = False) -> set[int]:
    """Union over N of p^(e-N) (F_N + Omega_N(p)), clipped to [1, bound]."""
    fam = f_sets(gp, errata=errata)
    p, e = gp.p, gp.e
    out: set[int] = set()
    for big_n in range(e + 1):
        scale = p ** (e - big_n)
        top = bound // scale
        lev = OmegaLevel(p, big_n)
        omega = [w for w in range(top + 1) if omega_contains(lev, w)]
        for f in fam[big_n]:
            for w in omega:
                if f + w > top:
                    break
                out.add(scale * (f + w))
    out.discard(0)
    return out


def assemble(gp: GroupProfile, bound: int, errata: bool = False) -> SpectrumWindow:
    require_valid(gp)
    return _window(gp, bound, assembled_values(gp, bound, errata))


def admissible_signatures(gp: GroupProfile, bound: int, errata: bool = False):
    """Yield (signature, reduced genus) for admissible signatures with 1 <= reduced genus <= bound."""
    require_valid(gp)
    p, e = gp.p, gp.e
    top = p**e
    weights = [(top - p ** (e - i)) // 2 for i in range(1, e + 1)]

    def fill(i: int, partial: int, ms: list[int]):
        if i == e:
            yield tuple(ms), partial
            return
        w = weights[i]
        k = 0
        while partial + k * w <= bound:
            ms.append(k)
            yield from fill(i + 1, partial + k * w, ms)
            ms.pop()
            k += 1

    h = 0
    while (h - 1) * top <= bound:
        for ms, g in fill(0, (h - 1) * top, []):
            if g < 1:
                continue
            sig = Signature(h, ms)
            if matching_rows(gp, sig, errata):
                yield sig, g
        h += 1


def enumerated_values(gp: GroupProfile, bound: int, errata: bool = False) -> set[int]:
    return {g for _, g in admissible_signatures(gp, bound, errata)}


def enumerate_window(gp: GroupProfile, bound: int, errata: bool = False) -> SpectrumWindow:
    return _window(gp, bound, enumerated_values(gp, bound, errata))


def default_bound(gp: GroupProfile) -> int:
    return 2 * sigma_stable(gp.p, gp.e)


def derived_f_sets(gp: GroupProfile, bound: int | None = None, errata: bool = False) -> list[list[int]]:
    """Smallest F_0..F_e reproducing the enumerated spectrum: per level N, the admissible values
    p^(e-N) f that are not f' + Omega_N for a smaller admissible f' of the same level."""
    bound = default_bound(gp) if bound is None else bound
    p, e = gp.p, gp.e
    by_level: list[set[int]] = [set() for _ in range(e + 1)]
    for sig, g in admissible_signatures(gp, bound, errata):
        big_n = level(sig)
        by_level[big_n].add(g // p ** (e - big_n))
    out = []
    for big_n, vals in enumerate(by_level):
        lev = OmegaLevel(p, big_n)
        minimal: list[int] = []
        for v in sorted(vals):
            if not any(omega_contains(lev, v - f) for f in minimal):
                minimal.append(v)
        out.append(minimal)
    return out


def min_genus_closed_form(gp: GroupProfile) -> int | None:
    """Reduced minimum genus for n >= p+2 and e >= 3; None outside that regime."""
    p, e = gp.p, gp.e
    if gp.n < p + 2 or e < 3:
        return None
    t = gp.type_class
    if p == 3 and t == "I":
        return 3 ** (e - 1)
    if t in ("I", "III"):
        return (p - 3) * p ** (e - 1) // 2
    if t == "II":
        return (p * p - 3) * p ** (e - 2) // 2
    if t == "IV":
        return (p * p - p - 2) * p ** (e - 2) // 2
    return (p * p - 2 * p - 1) * p ** (e - 2) // 2


def min_genus(gp: GroupProfile) -> int:
    require_valid(gp)
    closed = min_genus_closed_form(gp)
    if closed is not None:
        return closed
    w = enumerate_window(gp, gp.p**gp.e)
    if w.min_reduced is None:
        raise ValueError("no admissible signature up to p^e")
    return w.min_reduced


def stable_closed_form(gp: GroupProfile) -> int | None:
    """Predicted reduced stable upper genus where a closed form is known, else None."""
    p, e = gp.p, gp.e
    if gp.n < p + 2 or e < 3:
        return None
    if (gp.ed_class == AT_LEAST_TWO and p >= 5) or (gp.ed_class == ONE and p >= 7):
        return sigma_stable(p, e) - p**e
    if gp.ed_class == ONE and p == 5 and gp.type_class in ("I", "III", "V"):
        return (e * (p - 1) - 4) // 2 * p**e - (p - 1) // 2 * p ** (e - 1) + 1
    return None


def stable_upper(gp: GroupProfile, bound: int) -> int:
    w = enumerate_window(gp, bound)
    if not w.stable_confirmed:
        raise WindowTooSmall(f"window too small: no stable run of length p^e = {gp.p**gp.e} below {bound}")
    return w.stable_reduced
