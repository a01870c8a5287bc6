"""The nine acceptance checks, shared by the test suite and the ``acceptance`` CLI command.

Each check returns a ``CheckResult``. Checks that exercise the admissibility tables run on the
printed layer (the default everywhere) and also report what the errata layer gives.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .fsets import MissingRow
from .matrix import profile_matrix
from .omega import OmegaLevel, omega_brute, omega_contains, sigma_stable, stable_point_brute
from .profile import GroupProfile
from .spectrum import (assembled_values, default_bound, enumerate_window, enumerated_values,
                       min_genus_closed_form, stable_closed_form)


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    summary: str
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        return f"criterion {self.number}: {'PASS' if self.passed else 'FAIL'}  {self.title}: {self.summary}"

    def to_json_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "summary": self.summary, "details": self.details, "seconds": round(self.seconds, 1)}


def _timed(fn):
    def run(*args, **kw) -> CheckResult:
        t = time.perf_counter()
        res = fn(*args, **kw)
        res.seconds = time.perf_counter() - t
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _tag(gp: GroupProfile) -> str:
    flags = "".join(f" {k}={v}" for k, v in (("exp_g1", gp.exp_g1), ("ppp", gp.ppp_type),
                                                ("p2t", gp.p2_triple_type)) if v is not None)
    return f"p={gp.p} n={gp.n} e={gp.e} type {gp.type_class} ed {gp.ed_class}{flags}"


@_timed
def omega_criterion(primes=(3, 5, 7), levels=(1, 2, 3, 4), top: int = 5000) -> CheckResult:
    """Digit-sum membership against exhaustive search, witnesses re-evaluated."""
    bad = []
    checked = 0
    for p in primes:
        for big_n in levels:
            lev = OmegaLevel(p, big_n)
            for y in range(top + 1):
                sol = omega_brute(lev, y)
                if sol is not None and sol.value(lev) != y:
                    bad.append(f"p={p} N={big_n} y={y}: witness evaluates to {sol.value(lev)}")
                if omega_contains(lev, y) != (sol is not None):
                    bad.append(f"p={p} N={big_n} y={y}: criterion {omega_contains(lev, y)}, search {sol is not None}")
                checked += 1
    return CheckResult(1, "Omega membership vs brute force", not bad,
                       f"{checked} values, {len(bad)} mismatches", bad[:20])


PINNED_SIGMA = {(3, 2): 6, (5, 2): 64, (5, 3): 564}


@_timed
def sigma_criterion(primes=(3, 5, 7), exponents=(1, 2, 3)) -> CheckResult:
    bad = []
    for p in primes:
        for e in exponents:
            closed, found = sigma_stable(p, e), stable_point_brute(p, e)
            if closed != found:
                bad.append(f"p={p} e={e}: closed form {closed}, search {found}")
    for (p, e), v in PINNED_SIGMA.items():
        if sigma_stable(p, e) != v:
            bad.append(f"p={p} e={e}: expected {v}, got {sigma_stable(p, e)}")
    return CheckResult(2, "stable point of Omega_e", not bad,
                       f"{len(primes) * len(exponents)} (p, e) pairs and {len(PINNED_SIGMA)} pinned values, "
                       f"{len(bad)} mismatches", bad)


def _two_route_failures(profiles, errata: bool) -> list[str]:
    out = []
    for gp in profiles:
        bound = default_bound(gp)
        try:
            a = assembled_values(gp, bound, errata)
        except MissingRow as exc:
            out.append(f"{_tag(gp)}: {exc}")
            continue
        en = enumerated_values(gp, bound, errata)
        if a != en:
            out.append(f"{_tag(gp)}: assembled only {sorted(a - en)[:6]}, enumerated only {sorted(en - a)[:6]}")
    return out


@_timed
def two_route_criterion(primes=(3, 5, 7), exponents=(2, 3)) -> CheckResult:
    profiles = profile_matrix(primes, exponents)
    printed = _two_route_failures(profiles, errata=False)
    corrected = _two_route_failures(profiles, errata=True)
    summary = (f"{len(profiles)} profiles; printed tables disagree on {len(printed)}, "
               f"errata layer disagrees on {len(corrected)}")
    details = [f"printed: {d}" for d in printed] + [f"errata: {d}" for d in corrected]
    return CheckResult(3, "assembled spectrum equals enumerated spectrum", not printed, summary, details)


MIN_GENUS_EXAMPLES = (
    (GroupProfile.of(5, 10, 3, "II"), 55),
    (GroupProfile.of(5, 10, 3, "IV"), 45),
    (GroupProfile.of(3, 6, 3, "I"), 9),
)


@_timed
def min_genus_criterion(primes=(3, 5, 7), exponents=(3,)) -> CheckResult:
    bad = []
    count = 0
    profiles = [(gp, None) for gp in profile_matrix(primes, exponents)] + list(MIN_GENUS_EXAMPLES)
    for gp, pinned in profiles:
        closed = min_genus_closed_form(gp)
        if closed is None:
            continue
        count += 1
        found = enumerate_window(gp, gp.p**gp.e).min_reduced
        if found != closed:
            bad.append(f"{_tag(gp)}: enumeration {found}, closed form {closed}")
        if pinned is not None and found != pinned:
            bad.append(f"{_tag(gp)}: enumeration {found}, expected {pinned}")
    return CheckResult(4, "minimum reduced genus", not bad, f"{count} checks, {len(bad)} mismatches", bad)


@_timed
def stable_criterion(primes=(5, 7), e: int = 3) -> CheckResult:
    bad, skipped = [], []
    count = 0
    for gp in profile_matrix(primes, (e,)):
        closed = stable_closed_form(gp)
        if closed is None:
            skipped.append(_tag(gp))
            continue
        count += 1
        w = enumerate_window(gp, default_bound(gp))
        if not w.stable_confirmed:
            bad.append(f"{_tag(gp)}: window does not confirm a stable point")
        elif w.stable_reduced != closed:
            bad.append(f"{_tag(gp)}: window {w.stable_reduced}, closed form {closed}")
    details = bad + [f"no closed form: {s}" for s in skipped]
    return CheckResult(5, "stable upper reduced genus", not bad, f"{count} checks, {len(bad)} mismatches", details)


def _engine_groups(sizes):
    from .engine.presentation import Group
    from .engine.sweep import sweep_params
    for p, n in sizes:
        for prm in sweep_params(p, n):
            yield Group(prm)


@_timed
def engine_criterion(sizes=((3, 4), (3, 5), (3, 6), (5, 6)), samples: int = 2000) -> CheckResult:
    from .engine.audit import verify_relations
    from .engine.presentation import Group, MiechParams

    bad = []
    count = 0
    for G in _engine_groups(sizes):
        count += 1
        rep = verify_relations(G, samples=samples)
        if not rep.ok:
            bad.append(f"{G.params.label()}: {rep.failures}")
    p = 3
    for w in range(p):
        for z in range(p):
            G = Group(MiechParams(3, 5, 1, {4: 1}, w, z))
            s, s1 = G.gen(0), G.gen(1)
            for zeta in range(p):
                exponent = (w + z * zeta + G.params.psi * zeta * zeta) % p
                predicted = p if exponent == 0 else p * p
                got = G.element_order(G.mul(s, G.pow(s1, zeta)))
                if got != predicted:
                    bad.append(f"w={w} z={z} zeta={zeta}: order {got}, predicted {predicted}")
    return CheckResult(6, "group construction audit", not bad,
                       f"{count} groups audited plus 27 order predictions, {len(bad)} failures", bad[:20])


@_timed
def zclass_criterion(sizes=((3, 4), (3, 5), (3, 6))) -> CheckResult:
    from .engine.classify import classify_full

    bad = []
    count = 0
    for G in _engine_groups(sizes):
        count += 1
        cl = classify_full(G, flags=False)
        expect = G.p - 1 if cl.profile.c_zero else G.p
        if len(cl.z_classes) != expect:
            bad.append(f"{G.params.label()}: {len(cl.z_classes)} classes, expected {expect}")
        loose = [z.zeta for z in cl.z_classes if z.constant is not True]
        if loose:
            bad.append(f"{G.params.label()}: classes {loose} are not order-constant")
    return CheckResult(7, "uniform z-classes", not bad, f"{count} groups, {len(bad)} failures", bad)


@_timed
def oracle_criterion(budget: int = 50_000_000) -> CheckResult:
    """Realizability against admissibility on every swept group of order 81, 243 and 729."""
    from .engine.sweep import compare_with_tables, signature_box, sweep_params
    from .engine.presentation import Group

    small_box = signature_box(2, 1, (4, 3))
    big_box = signature_box(3, 0, (4, 4, 4), 4)
    groups = [(Group(prm), small_box) for n in (4, 5) for prm in sweep_params(3, n)]
    groups += [(Group(prm), big_box) for prm in sweep_params(3, 6)]
    lines = {False: [], True: []}
    checked = 0
    for G, box in groups:
        for errata in (False, True):
            cmp = compare_with_tables(G, box, budget, errata)
            if errata is False:
                checked += cmp.checked
            if not cmp.ok:
                sigs = [f"{m['signature']} realizable={m['realizable']} table={m['admissible']}" for m in cmp.mismatches]
                lines[errata].append(f"{G.params.label()} (order {G.order}, type {cmp.profile['type']}): "
                                     f"{sigs + [f'unknown {u}' for u in cmp.unknown]}")
    summary = (f"{len(groups)} groups, {checked} signatures; printed tables disagree for {len(lines[False])} groups, "
               f"errata layer for {len(lines[True])}")
    details = [f"printed: {d}" for d in lines[False]] + [f"errata: {d}" for d in lines[True]]
    return CheckResult(8, "realizability oracle vs tables", not lines[False], summary, details)


@_timed
def nonexistence_criterion() -> CheckResult:
    from .engine.classify import classify_full

    found = {}
    for p, n in ((5, 7), (7, 9), (3, 5)):
        found[(p, n)] = sum(1 for G in _engine_groups([(p, n)])
                            if classify_full(G, flags=False).profile.exceptional == "p2")
    ok = found[(5, 7)] == 0 and found[(7, 9)] == 0 and found[(3, 5)] > 0
    summary = ", ".join(f"p={p} n={n}: {c} p^2-exceptional" for (p, n), c in found.items())
    return CheckResult(9, "p^2-exceptional groups", ok, summary)


CHECKS = {
    1: omega_criterion,
    2: sigma_criterion,
    3: two_route_criterion,
    4: min_genus_criterion,
    5: stable_criterion,
    6: engine_criterion,
    7: zclass_criterion,
    8: oracle_criterion,
    9: nonexistence_criterion,
}


def run_checks(numbers=None) -> list[CheckResult]:
    return [CHECKS[k]() for k in (numbers or sorted(CHECKS))]
