"""Classification of constructed groups: two-step centralizers, z-classes, exponents, flags.

Orders on a coset gG2 (g outside G2) are handled exactly: (g x)^p = g^p * N(x) where N is the
endomorphism sum_{j<p} rho^j of G2 and rho is conjugation by g. Every element of order at most p^t
forms a subgroup of G2, so the largest order on the coset is p * max(|g^p|, |N(e_i)|) over basis
vectors e_i. When every |N(e_i)| is below |g^p| all elements of the coset share that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..profile import AT_LEAST_TWO, ONE, GroupProfile, _type_of
from .presentation import Elem, Group


class NotMaximalClass(ValueError):
    pass


@dataclass(frozen=True)
class CosetOrders:
    """Orders of the elements of a maximal subgroup lying outside G2."""

    largest: int
    smallest: int | None  # None when not determined exactly
    constant: bool | None
    method: str


@dataclass(frozen=True)
class ZClass:
    zeta: int | None  # representative s*s1^zeta; None for the line of s1
    representative: Elem
    element_order: int
    constant: bool | None
    method: str

    def members(self, p: int) -> str:
        return f"union over j=1..{p - 1} of (rep)^j G2"

    def to_json_dict(self, p: int) -> dict:
        return {"zeta": self.zeta, "representative": list(self.representative), "order": self.element_order,
                "order_constant": self.constant, "check": self.method, "members": self.members(p)}


@dataclass
class Classification:
    profile: GroupProfile
    g1_line: int
    centralizer_line: int
    lines: dict[int, CosetOrders]
    z_classes: list[ZClass]
    exp_g2: int
    exp_g1: int
    exponent: int
    kappa: int
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self, p: int) -> dict:
        return {
            "profile": self.profile.to_json_dict(),
            "g1_line": _line_name(self.g1_line, p),
            "centralizer_line": _line_name(self.centralizer_line, p),
            "exp_G2": self.exp_g2,
            "exp_G1": self.exp_g1,
            "exponent": self.exponent,
            "kappa": self.kappa,
            "z_classes": [z.to_json_dict(p) for z in self.z_classes],
            "notes": list(self.notes),
        }


def _line_name(line: int, p: int) -> str:
    return "s1" if line == p else f"s*s1^{line}"


def line_of(p: int, g: Elem) -> int | None:
    """Line of G/G2 containing g: zeta for <s s1^zeta>, p for <s1>, None inside G2."""
    a, b = g[0] % p, g[1] % p
    if a == 0:
        return None if b == 0 else p
    return b * pow(a, -1, p) % p


def line_rep(G: Group, line: int) -> Elem:
    return G.gen(1) if line == G.p else G.mul(G.gen(0), G.pow(G.gen(1), line))


def conjugation_map(G: Group, g: Elem) -> list[list[int]]:
    gi = G.inv(g)
    return [list(G.mul(gi, G.mul(G.from_tail(G._unit(i)), g))[2:]) for i in range(G.m)]


def g2_orders_many(G: Group, x: np.ndarray) -> np.ndarray:
    x = np.array(x, dtype=np.int64)
    orders = np.ones(x.shape[0], dtype=np.int64)
    alive = np.any(x != 0, axis=1)
    while alive.any():
        orders[alive] *= G.p
        x[alive] = G.normalize_many(x[alive] * G.p)
        alive = np.any(x != 0, axis=1)
    return orders


def g2_elements(G: Group) -> np.ndarray:
    idx = np.arange(G.p**G.m, dtype=np.int64)
    out = np.empty((idx.size, G.m), dtype=np.int64)
    for i in range(G.m):
        out[:, i] = idx % G.p
        idx //= G.p
    return out


def coset_orders(G: Group, g: Elem, enumerate_limit: int = 10**5, samples: int = 2000, seed: int = 0) -> CosetOrders:
    p = G.p
    power = list(G.pow(g, p))
    assert power[0] == power[1] == 0, "p-th power must lie in G2"
    top = power[2:]
    rho = conjugation_map(G, g)
    norm = [[0] * G.m for _ in range(G.m)]
    term = G._identity_map()
    for _ in range(p):
        norm = [G.add(u, v) for u, v in zip(norm, term)]
        term = G.compose(rho, term)
    ord_top = G.g2_order(top)
    ord_norm = max(G.g2_order(v) for v in norm)
    largest = p * max(ord_top, ord_norm)
    if ord_norm < ord_top or ord_norm == 1:
        return CosetOrders(largest, largest, True, "exact")
    mat = np.array(norm, dtype=np.int64)
    if p**G.m <= enumerate_limit:
        xs = g2_elements(G)
        method = "enumerated"
    else:
        xs = np.random.default_rng(seed).integers(0, p, size=(samples, G.m), dtype=np.int64)
        method = "sampled"
    ys = G.normalize_many(xs @ mat + np.array(top, dtype=np.int64))
    orders = p * g2_orders_many(G, ys)
    lo, hi = int(orders.min()), int(orders.max())
    if method == "enumerated":
        return CosetOrders(largest, lo, lo == largest, method)
    return CosetOrders(largest, None, None if lo == largest else False, method)


def _centralizes(G: Group, g: Elem, target: Elem) -> bool:
    return G.comm(target, g) == G.identity


def _in_g4(g: Elem) -> bool:
    return not any(g[:4])


def _triple_search(G: Group, orders: dict[int, CosetOrders], uniform: set[int], q: int,
                   enumerate_limit: int) -> bool | None:
    """Is there a generating pair x, y with |x| = |y| = |xy| = q?

    Among x, y and (xy)^-1 the three lines are distinct and at most two are not uniform, so x may be
    taken uniform; a uniform element is conjugate to a power of its line representative. Uniform
    lines have constant order, so only products touching G1 or the centralizer line need enumeration.
    """
    p = G.p
    undecided = False

    def direction(line: int, lam: int) -> tuple[int, int]:
        return (0, lam) if line == p else (lam, lam * line % p)

    def line_of_dir(d: tuple[int, int]) -> int | None:
        return line_of(p, (d[0], d[1]))

    def possible(line: int) -> bool:
        c = orders[line]
        if c.constant:
            return c.largest == q
        lo = c.smallest if c.smallest is not None else p
        return lo <= q <= c.largest

    for lx in sorted(uniform):
        if orders[lx].largest != q:
            continue
        rx = line_rep(G, lx)
        for lam in range(1, p):
            x = G.pow(rx, lam)
            dx = direction(lx, lam)
            for ly in range(p + 1):
                if ly == lx or not possible(ly):
                    continue
                ry = line_rep(G, ly)
                for mu in range(1, p):
                    dy = direction(ly, mu)
                    lxy = line_of_dir(((dx[0] + dy[0]) % p, (dx[1] + dy[1]) % p))
                    if lxy is None or not possible(lxy):
                        continue
                    if ly in uniform and lxy in uniform:
                        return True
                    if p**G.m > enumerate_limit:
                        undecided = True
                        continue
                    y0 = G.pow(ry, mu)
                    tails = g2_elements(G)
                    ys = G.mul_many(np.array(y0, dtype=np.int64), np.column_stack(
                        [np.zeros((tails.shape[0], 2), dtype=np.int64), tails]))
                    xys = G.mul_many(np.array(x, dtype=np.int64), ys)
                    ok = (element_orders_many(G, ys) == q) & (element_orders_many(G, xys) == q)
                    if ok.any():
                        return True
    return None if undecided else False


def element_orders_many(G: Group, elems: np.ndarray) -> np.ndarray:
    """Orders of many elements by repeated p-th powers (vectorized)."""
    cur = np.array(elems, dtype=np.int64)
    orders = np.ones(cur.shape[0], dtype=np.int64)
    alive = np.any(cur != 0, axis=1)
    while alive.any():
        sub = cur[alive]
        acc = sub.copy()
        for _ in range(G.p - 1):
            acc = G.mul_many(acc, sub)
        cur[alive] = acc
        orders[alive] *= G.p
        alive = np.any(cur != 0, axis=1)
    return orders


def classify_full(G: Group, enumerate_limit: int = 10**5, flags: bool = True) -> Classification:
    p, n = G.p, G.n
    s2, top2 = G.gen(2), G.gen(n - 2)
    lines = list(range(p + 1))
    reps = {ln: line_rep(G, ln) for ln in lines}
    g1 = [ln for ln in lines if _in_g4(G.comm(s2, reps[ln]))]
    cent = [ln for ln in lines if _centralizes(G, reps[ln], top2)]
    if len(g1) != 1 or len(cent) != 1:
        raise NotMaximalClass(f"expected one two-step centralizer of each kind, found G1 lines {g1} and C lines {cent}")
    g1_line, c_line = g1[0], cent[0]
    orders = {ln: coset_orders(G, reps[ln], enumerate_limit) for ln in lines}
    exp_g2 = max(G.g2_order(G._unit(i)) for i in range(G.m))
    exp_g1 = max(exp_g2, orders[g1_line].largest)
    exponent = max(exp_g2, *(c.largest for c in orders.values()))
    e = 0
    while p**e < exponent:
        e += 1
    c_zero = c_line != g1_line
    notes = []
    outside_g1 = [ln for ln in lines if ln != g1_line]
    class_lines = [ln for ln in outside_g1 if not (c_zero and ln == c_line)]
    zcls = []
    for ln in class_lines:
        c = orders[ln]
        zcls.append(ZClass(None if ln == p else ln, reps[ln], c.largest, c.constant, c.method))
        if c.constant is False:
            notes.append(f"order varies on the class of {_line_name(ln, p)}")
    counted = [orders[ln].largest for ln in outside_g1]
    uniform_orders = frozenset(counted)
    exceptional = "none"
    if uniform_orders == {p, p * p}:
        n_p = counted.count(p)
        if n_p == 1:
            exceptional = "p"
        elif n_p == len(counted) - 1:
            exceptional = "p2"
    kappa = sum(1 for ln in class_lines if orders[ln].largest == p)
    if exp_g2 == exponent:
        ed = AT_LEAST_TWO
    elif n == p + 1:
        ed = ONE if exp_g1 == p * p else AT_LEAST_TWO
    else:
        ed = ONE
        if exp_g1 != exponent:
            notes.append("exp(G1) below exp(G)")
    ppp = p2t = None
    if flags:
        uniform = set(class_lines) - {c_line}
        ppp = _triple_search(G, orders, uniform, p, enumerate_limit)
        p2t = _triple_search(G, orders, uniform, p * p, enumerate_limit)
    type_class = _type_of(uniform_orders, exceptional, p)
    profile = GroupProfile(p, n, e, uniform_orders, exceptional, type_class, ed,
                           exp_g1 if n == p + 1 else None, ppp, p2t, c_zero)
    return Classification(profile, g1_line, c_line, orders, zcls, exp_g2, exp_g1, exponent, kappa, notes)


def classify(G: Group, **kw) -> GroupProfile:
    return classify_full(G, **kw).profile


def z_classes(G: Group) -> list[ZClass]:
    return classify_full(G, flags=False).z_classes
