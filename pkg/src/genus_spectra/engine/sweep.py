"""Parameter sweeps, censuses and the realizability-versus-tables comparison."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from ..profile import admissible, validate
from ..signatures import Signature, reduced_genus
from .audit import verify_relations
from .classify import classify
from .presentation import Group, MiechParams
from .realize import realizable


def sweep_params(p: int, n: int) -> Iterator[MiechParams]:
    """Every k, every nonzero leading a_{n-k}, every w and z; the remaining a_j are zero."""
    for k in range(0, min(p - 2, n - 4) + 1):
        leads = [0] if k == 0 else range(1, p)
        for lead, w, z in product(leads, range(p), range(p)):
            yield MiechParams(p, n, k, {n - k: lead} if k else {}, w, z)


def signature_box(e: int, h_max: int = 1, m_max: tuple[int, ...] = (4, 3), total: int | None = None) -> list[Signature]:
    """Signatures with h <= h_max, m_i <= m_max[i] (zero above len(m_max)) and optional sum bound."""
    bounds = list(m_max) + [0] * max(0, e - len(m_max))
    bounds = bounds[:e]
    out = []
    for h in range(h_max + 1):
        for ms in product(*(range(b + 1) for b in bounds)):
            if total is not None and sum(ms) > total:
                continue
            out.append(Signature(h, ms))
    return out


@dataclass
class Comparison:
    params: MiechParams
    profile: dict
    checked: int = 0
    skipped: int = 0
    unknown: list[str] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.unknown

    def to_json_dict(self) -> dict:
        return {"params": self.params.to_json_dict(), "profile": self.profile, "checked": self.checked,
                "skipped_low_genus": self.skipped, "unknown": self.unknown, "mismatches": self.mismatches,
                "ok": self.ok}


def compare_with_tables(G: Group, box: list[Signature], budget: int = 50_000_000, errata: bool = False) -> Comparison:
    """Realizability against table admissibility on every box signature of genus at least 2."""
    gp = classify(G)
    cmp = Comparison(G.params, gp.to_json_dict())
    for sig in box:
        if reduced_genus(sig, gp.prime_profile) < 1:
            cmp.skipped += 1
            continue
        verdict = realizable(G, sig, budget).verdict
        if verdict == "unknown":
            cmp.unknown.append(str(sig))
            continue
        cmp.checked += 1
        table = admissible(gp, sig, errata)
        if (verdict == "yes") != table:
            cmp.mismatches.append({"signature": str(sig), "realizable": verdict, "admissible": table})
    return cmp


@dataclass
class Census:
    p: int
    n: int
    total: int = 0
    rejected: list[str] = field(default_factory=list)
    invalid_profiles: list[str] = field(default_factory=list)
    types: Counter = field(default_factory=Counter)
    by_class: Counter = field(default_factory=Counter)
    examples: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "parameter_sets": self.total, "rejected": self.rejected,
                "invalid_profiles": self.invalid_profiles, "types": dict(sorted(self.types.items())),
                "classes": {k: v for k, v in sorted(self.by_class.items())},
                "examples": {k: v for k, v in sorted(self.examples.items())}}


def census(p: int, n: int, samples: int = 2000) -> Census:
    out = Census(p, n)
    for prm in sweep_params(p, n):
        out.total += 1
        G = Group(prm)
        rep = verify_relations(G, samples=samples)
        if not rep.ok:
            out.rejected.append(prm.label())
            continue
        gp = classify(G)
        if validate(gp):
            out.invalid_profiles.append(f"{prm.label()}: {'; '.join(validate(gp))}")
        out.types[gp.type_class] += 1
        key = f"{gp.type_class} e={gp.e} ed={gp.ed_class}" + (f" expG1={gp.exp_g1}" if gp.exp_g1 else "")
        out.by_class[key] += 1
        out.examples.setdefault(gp.type_class, prm.to_json_dict())
    return out


def default_box(e: int) -> list[Signature]:
    if e == 2:
        return signature_box(2, 1, (4, 3))
    return signature_box(e, 0, (4,) * e, 4)


def verify_tables(p: int, n: int, box: list[Signature] | None = None, *, errata: bool = False,
                  oracle_max_order: int = 729, samples: int = 2000, budget: int = 50_000_000) -> dict:
    """Audit, classify and (for small orders) compare every swept group against the tables."""
    cen = Census(p, n)
    groups = []
    for prm in sweep_params(p, n):
        cen.total += 1
        G = Group(prm)
        if not verify_relations(G, samples=samples).ok:
            cen.rejected.append(prm.label())
            continue
        gp = classify(G)
        if validate(gp):
            cen.invalid_profiles.append(f"{prm.label()}: {'; '.join(validate(gp))}")
        cen.types[gp.type_class] += 1
        key = f"{gp.type_class} e={gp.e} ed={gp.ed_class}" + (f" expG1={gp.exp_g1}" if gp.exp_g1 else "")
        cen.by_class[key] += 1
        cen.examples.setdefault(gp.type_class, prm.to_json_dict())
        if G.order <= oracle_max_order:
            cmp = compare_with_tables(G, box if box is not None else default_box(gp.e), budget, errata)
            groups.append(cmp.to_json_dict())
    failed = [g for g in groups if not g["ok"]]
    return {"census": cen.to_json_dict(), "oracle_checked": len(groups),
            "oracle_skipped": cen.total - len(cen.rejected) - len(groups),
            "oracle_failures": failed, "errata": errata,
            "ok": not failed and not cen.rejected and not cen.invalid_profiles}
