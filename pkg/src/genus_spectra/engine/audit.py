"""Relation audit for constructed groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .presentation import Group


@dataclass
class RelationReport:
    label: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append((name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    @property
    def failures(self) -> list[str]:
        return [f"{name}: {detail}" if detail else name for name, passed, detail in self.checks if not passed]

    def to_json_dict(self) -> dict:
        return {"group": self.label, "ok": self.ok,
                "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in self.checks]}


def _level(g: tuple[int, ...]) -> int:
    """Largest i with g in G_i, using G_0 = G, G_1 = <s1, G2>, G_i = <s_i, ...> (n for the identity)."""
    for i, d in enumerate(g):
        if d:
            return i
    return len(g)


def _predicted_g2_exponent(p: int, n: int) -> int:
    t = n - 2
    q, r = divmod(t, p - 1)
    return p ** (q + 1) if r else p**q


def verify_relations(group: Group, samples: int = 10_000, seed: int = 0, closure_limit: int = 10**6) -> RelationReport:
    G = group
    p, n, m = G.p, G.n, G.m
    prm = G.params
    rep = RelationReport(prm.label())
    one = G.identity
    s, s1 = G.gen(0), G.gen(1)
    gens = [G.gen(i) for i in range(n)]

    # defining relations
    chain = [i for i in range(2, n) if G.comm(gens[i - 1], s) != gens[i]]
    rep.record("commutator chain [s_(i-1), s] = s_i", not chain and G.comm(gens[n - 1], s) == one,
               f"fails at i = {chain}" if chain else "")
    noncomm = [(i, j) for i in range(2, n) for j in range(i + 1, n) if G.comm(gens[i], gens[j]) != one]
    rep.record("G2 abelian", not noncomm, f"{noncomm[:3]}" if noncomm else "")
    target = G.word([0, 0] + [prm.a.get(j, 0) for j in range(2, n)])
    rep.record("[s1, s2] = prod s_j^a_j", G.comm(s1, gens[2]) == target)
    rep.record("s^p = s_(n-1)^w", G.pow(s, p) == G.pow(gens[n - 1], prm.w))
    lhs = G.pow(s1, p)
    for t in range(2, p + 1):
        if t < n:
            lhs = G.mul(lhs, G.pow(gens[t], comb(p, t)))
    rep.record("s1 power relation", lhs == G.pow(gens[n - 1], prm.z))
    bad_pow = []
    for i in range(2, n):
        prod = one
        for t in range(1, p + 1):
            if i + t - 1 < n:
                prod = G.mul(prod, G.pow(gens[i + t - 1], comb(p, t)))
        if prod != one:
            bad_pow.append(i)
    rep.record("G2 power relations", not bad_pow, f"fails at i = {bad_pow}" if bad_pow else "")

    # well-definedness of the extension: the actions respect the relation lattice and each other
    ident = G._identity_map()
    def same(f, g):
        return all(G.normalize(x) == G.normalize(y) for x, y in zip(f, g))
    sig_p, tau_p = ident, ident
    for _ in range(p):
        sig_p, tau_p = G.compose(G.sigma, sig_p), G.compose(G.tau, tau_p)
    rep.record("conjugation by s^p is trivial on G2", same(sig_p, ident))
    rep.record("conjugation by s1^p is trivial on G2", same(tau_p, ident))
    rep.record("actions of s and s1 commute on G2", same(G.compose(G.sigma, G.tau), G.compose(G.tau, G.sigma)))
    lattice_bad = []
    for i in range(m):
        rel = [0] * m
        rel[i] = p
        for j, c in G._carry[i]:
            rel[j] += c
        for name, endo in (("sigma", G.sigma), ("tau", G.tau)):
            out = [0] * m
            for coeff, img in zip(rel, endo):
                for j, v in enumerate(img):
                    out[j] += coeff * v
            if any(G.normalize(out)):
                lattice_bad.append((name, i + 2))
    rep.record("actions preserve the power relations", not lattice_bad, f"{lattice_bad[:4]}" if lattice_bad else "")
    u_p = G.add(G.apply(G.sigma, G.u[p - 1]), G._unit(0))
    rep.record("s1 commutes with s^p", not any(u_p))
    rep.record("s1 commutes with s1^p", G.apply(G.tau, G.s1_power) == G.s1_power)
    norm = [0] * m
    for j in range(p):
        norm = G.add(norm, G.apply(G.tau_pow[j], G._unit(0)))
    rep.record("s conjugates s1^p consistently", G.apply(G.sigma, G.s1_power) == G.add(G.s1_power, norm))
    rep.record("s^p is central", G.apply(G.sigma, G.s_power) == G.s_power and G.apply(G.tau, G.s_power) == G.s_power)

    # sampled group axioms (vectorized)
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, G.order, size=(3, samples), dtype=np.int64)
    x, y, z = (G.decode_many(r) for r in idx)
    left = G.mul_many(G.mul_many(x, y), z)
    right = G.mul_many(x, G.mul_many(y, z))
    bad = int(np.count_nonzero(np.any(left != right, axis=1)))
    rep.record(f"associativity on {samples} random triples", bad == 0, f"{bad} failures" if bad else "")
    scalar_bad = 0
    for row in range(min(samples, 300)):
        g, h = tuple(int(v) for v in x[row]), tuple(int(v) for v in y[row])
        if G.mul(g, h) != tuple(int(v) for v in G.mul_many(x[row], y[row])[0]):
            scalar_bad += 1
    rep.record("scalar and vectorized products agree", scalar_bad == 0, f"{scalar_bad} mismatches" if scalar_bad else "")
    inv_bad = 0
    for row in range(min(samples, 200)):
        g = tuple(int(v) for v in x[row])
        gi = G.inv(g)
        if G.mul(g, gi) != one or G.mul(gi, g) != one:
            inv_bad += 1
    rep.record("inverses", inv_bad == 0, f"{inv_bad} failures" if inv_bad else "")

    # generation: s and s1 reach every normal form
    if G.order <= closure_limit:
        seen = np.zeros(G.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0], dtype=np.int64)
        gen_rows = np.array([s, s1], dtype=np.int64)
        while frontier.size:
            elems = G.decode_many(frontier)
            nxt = np.concatenate([G.encode_many(G.mul_many(elems, g)) for g in gen_rows])
            nxt = np.unique(nxt)
            nxt = nxt[~seen[nxt]]
            seen[nxt] = True
            frontier = nxt
        reached = int(seen.sum())
        rep.record("<s, s1> has p^n elements", reached == G.order, f"reached {reached} of {G.order}")
    else:
        rep.record("<s, s1> has p^n elements", True, "closure skipped above limit; s_i = [s_(i-1), s] checked")

    # lower central series G_i = <s_i, ..., s_(n-1)> with factors of order p
    lcs_bad = []
    for j in range(1, n):
        for h in (s, s1):
            c = G.comm(gens[j], h)
            if _level(c) < j + 1:
                lcs_bad.append((j, "s" if h == s else "s1"))
    central = G.comm(gens[n - 1], s) == one and G.comm(gens[n - 1], s1) == one
    rep.record("lower central series has factors of order p and length n-1", not lcs_bad and central and gens[n - 1] != one,
               f"{lcs_bad[:4]}" if lcs_bad else "")

    # (s s1^zeta)^p = s_(n-1)^(w + z zeta + psi zeta^2)
    quad_bad = []
    for zeta in range(p):
        g = G.mul(s, G.pow(s1, zeta))
        expect = G.pow(gens[n - 1], (prm.w + prm.z * zeta + prm.psi * zeta * zeta) % p)
        if G.pow(g, p) != expect:
            quad_bad.append(zeta)
    rep.record("quadratic order law for s s1^zeta", not quad_bad, f"fails at zeta = {quad_bad}" if quad_bad else "")

    if n >= p + 2:
        pw_bad = 0
        for row in range(min(samples, 500)):
            g = list(int(v) for v in x[row])
            i = 1 + row % (n - p)
            g = tuple([0] * i + [g[i] or 1] + g[i + 1:])
            lev = _level(G.pow(g, p))
            if lev != i + p - 1:
                pw_bad += 1
        rep.record("x in G_i \\ G_(i+1) has x^p in G_(i+p-1) \\ G_(i+p) for i <= n-p", pw_bad == 0,
                   f"{pw_bad} sampled failures" if pw_bad else "")
        exp2 = max(G.g2_order(G._unit(i)) for i in range(m))
        want = _predicted_g2_exponent(p, n)
        rep.record("exp(G2) matches the abelian normal subgroup shape", exp2 == want, f"exp(G2) = {exp2}, predicted {want}")
    return rep
