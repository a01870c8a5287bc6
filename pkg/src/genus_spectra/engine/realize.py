"""Brute-force signature realizability.

A signature (h; m_1, ..., m_L) is realized when there are a_1, b_1, ..., a_h, b_h and elliptic elements
X of exact order p^i (m_i of them) with prod [a_k, b_k] * prod X = 1 whose images span G/G2.
The order in which elliptic elements appear does not matter (braid moves replace neighbours by
conjugates), so the search processes them level by level.

The search is an exact reachability computation over states (partial product, span of the images
seen so far), where the span is one of the p+3 subspaces of F_p^2. Each layer is a boolean array
of shape (|G|, p+3); witnesses are recovered by walking the layers backwards.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..signatures import Signature
from .classify import element_orders_many, line_of
from .presentation import Elem, Group

YES, NO, UNKNOWN = "yes", "no", "unknown"


class OversizedRequest(ValueError):
    pass


@dataclass
class GeneratingVector:
    hyperbolic: list[tuple[Elem, Elem]]
    elliptic: list[tuple[int, Elem]]

    def problems(self, G: Group) -> list[str]:
        out = []
        prod = G.identity
        for a, b in self.hyperbolic:
            prod = G.mul(prod, G.comm(a, b))
        for lev, x in self.elliptic:
            if G.element_order(x) != G.p**lev:
                out.append(f"elliptic element {x} does not have order p^{lev}")
            prod = G.mul(prod, x)
        if prod != G.identity:
            out.append("long relation fails")
        seen = {line_of(G.p, g) for pair in self.hyperbolic for g in pair} | {line_of(G.p, x) for _, x in self.elliptic}
        if len(seen - {None}) < 2:
            out.append("images do not span G/G2")
        return out

    def to_json_dict(self) -> dict:
        return {"hyperbolic": [[list(a), list(b)] for a, b in self.hyperbolic],
                "elliptic": [{"level": lev, "element": list(x)} for lev, x in self.elliptic]}


@dataclass
class Realization:
    verdict: str
    witness: GeneratingVector | None
    work: int

    def to_json_dict(self) -> dict:
        out = {"verdict": self.verdict, "work": self.work}
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        return out


class _Arena:
    """Element indices, right multiplication, inverses, lines and orders for one group."""

    def __init__(self, G: Group, table_limit: int):
        self.G = G
        self.elems = G.all_elements()
        self.size = G.order
        self.table = G.multiplication_table(table_limit) if G.order <= table_limit else None
        p = G.p
        a, b = self.elems[:, 0], self.elems[:, 1]
        inv_a = np.array([pow(int(v), -1, p) if v else 0 for v in range(p)])
        self.line = np.where(a == 0, np.where(b == 0, -1, p), (b * inv_a[a]) % p)
        self.orders = element_orders_many(G, self.elems)
        self.inverse = self._inverses()

    def _mul_many_idx(self, left: np.ndarray, right: int | np.ndarray) -> np.ndarray:
        if self.table is not None:
            return self.table[left, right]
        G = self.G
        rows = self.elems[right] if np.ndim(right) else self.elems[right][None, :]
        return G.encode_many(G.mul_many(self.elems[left], rows))

    def mul(self, left: np.ndarray, right) -> np.ndarray:
        return np.asarray(self._mul_many_idx(np.asarray(left), right), dtype=np.int64)

    def _inverses(self) -> np.ndarray:
        # g^-1 = g^(|g| - 1), found by stepping through powers
        out = np.zeros(self.size, dtype=np.int64)
        cur = np.arange(self.size, dtype=np.int64)
        steps = self.orders - 1
        done = steps == 0
        k = 0
        acc = np.zeros(self.size, dtype=np.int64)
        while not done.all():
            acc = self.mul(acc, cur) if self.table is None else self.table[acc, cur]
            k += 1
            hit = (~done) & (steps == k)
            out[hit] = acc[hit]
            done |= hit
        return out


def _subspace_tables(p: int) -> tuple[np.ndarray, int]:
    """Join table over subspace ids: 0 = zero, 1 + line, full = p + 2; line -1 maps to the zero space."""
    full = p + 2
    ids = range(p + 3)
    join = np.zeros((p + 3, p + 3), dtype=np.int64)
    for x in ids:
        for y in ids:
            if x == 0:
                join[x, y] = y
            elif y == 0:
                join[x, y] = x
            elif x == full or y == full or x != y:
                join[x, y] = full
            else:
                join[x, y] = x
    return join, full


def realizable(G: Group, sig: Signature, budget: int = 50_000_000, *, table_limit: int = 2187,
               max_order: int = 10**6, max_slots: int = 12) -> Realization:
    p = G.p
    slots = 2 * sig.h + sum(sig.m)
    if G.order > max_order:
        raise OversizedRequest(f"group order {G.order} exceeds {max_order}")
    if slots > max_slots:
        raise OversizedRequest(f"signature has {slots} generators, limit {max_slots}")
    if slots == 0:
        return Realization(NO, None, 0)
    arena = _Arena(G, table_limit)
    join, full = _subspace_tables(p)
    sub_of_line = np.where(arena.line < 0, 0, arena.line + 1)
    work = 0

    # moves: list of (kind, level, element indices, subspace id per element, extra)
    moves = []
    if sig.h:
        n = arena.size
        if n * n > budget:
            return Realization(UNKNOWN, None, n * n)
        work += n * n
        a = np.repeat(np.arange(n), n)
        b = np.tile(np.arange(n), n)
        ab = arena.mul(a, b) if arena.table is None else arena.table[a, b]
        ia, ib = arena.inverse[a], arena.inverse[b]
        iaib = arena.mul(ia, ib) if arena.table is None else arena.table[ia, ib]
        comm = arena.mul(iaib, ab) if arena.table is None else arena.table[iaib, ab]
        span = join[sub_of_line[a], sub_of_line[b]]
        key = comm * (p + 3) + span
        uniq, first = np.unique(key, return_index=True)
        hyper = (uniq // (p + 3), uniq % (p + 3), a[first], b[first])
        for _ in range(sig.h):
            moves.append(("h", 0, hyper[0], hyper[1], hyper))
    for lev, count in enumerate(sig.m, start=1):
        pick = np.nonzero(arena.orders == p**lev)[0]
        for _ in range(count):
            moves.append(("e", lev, pick, sub_of_line[pick], None))

    layers = []
    reach = np.zeros((arena.size, p + 3), dtype=bool)
    reach[0, 0] = True
    for kind, lev, targets, subs, _ in moves:
        layers.append(reach)
        new = np.zeros_like(reach)
        if targets.size == 0:
            reach = new
            break
        for sid in range(p + 3):
            src = np.nonzero(reach[:, sid])[0]
            if src.size == 0:
                continue
            work += src.size * targets.size
            if work > budget:
                return Realization(UNKNOWN, None, work)
            if arena.table is not None:
                prod = arena.table[np.ix_(src, targets)]
            else:
                prod = np.stack([arena.mul(src, int(t)) for t in targets], axis=1)
            new_sub = np.broadcast_to(join[sid, subs], prod.shape)
            new[prod.ravel(), new_sub.ravel()] = True
        reach = new
    if not reach[0, full]:
        return Realization(NO, None, work)

    # walk back from (identity, full)
    g, sid = 0, full
    hyp, ell = [], []
    for (kind, lev, targets, subs, extra), prev in zip(reversed(moves), reversed(layers)):
        found = False
        for j in range(targets.size):
            t = int(targets[j])
            g_prev = int(arena.mul(np.array([g]), int(arena.inverse[t]))[0])
            for s_prev in np.nonzero(prev[g_prev])[0]:
                if join[s_prev, subs[j]] == sid:
                    found = True
                    break
            if found:
                if kind == "e":
                    ell.append((lev, G.element(t)))
                else:
                    hyp.append((G.element(int(extra[2][j])), G.element(int(extra[3][j]))))
                g, sid = g_prev, int(s_prev)
                break
        assert found, "backtracking failed"
    witness = GeneratingVector(list(reversed(hyp)), list(reversed(ell)))
    bad = witness.problems(G)
    assert not bad, bad
    return Realization(YES, witness, work)
