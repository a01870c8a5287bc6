"""Metabelian maximal-class p-groups from Miech parameters, with exact normal-form arithmetic.

An element is the exponent vector (e0, e1, e2, ..., e_{n-1}) of the word
s^e0 s1^e1 s2^e2 ... s_{n-1}^e_{n-1} with every coordinate in [0, p).

The tail (e2, ..., e_{n-1}) lives in the abelian normal subgroup G2 = <s2, ..., s_{n-1}>. It is
treated additively: integer vectors modulo the triangular power relations
    p*s_j = -sum_{t=2..p} C(p,t) s_{j+t-1}     (generators with index >= n are trivial).
Conjugation by s and by s1 act on G2 as the endomorphisms
    sigma: s_j -> s_j + s_{j+1}
    tau:   s_j -> s_j + delta^(j-2) c,   delta = sigma - 1,   c = [s2, s1] = -sum a_j s_j
so a product of two normal words is computed with a handful of vector operations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from ..padic import check_odd_prime

Vec = list[int]
Elem = tuple[int, ...]


class InvalidParameters(ValueError):
    pass


@dataclass(frozen=True)
class MiechParams:
    p: int
    n: int
    k: int = 0
    a: dict[int, int] = field(default_factory=dict)
    w: int = 0
    z: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", {int(j): int(v) % self.p for j, v in dict(self.a).items()})

    def problems(self) -> list[str]:
        p, n, k = self.p, self.n, self.k
        try:
            check_odd_prime(p)
        except ValueError as exc:
            return [str(exc)]
        out = []
        if n < p + 1:
            out.append(f"n must be at least p+1 = {p + 1}")
        if not 0 <= k <= p - 2:
            out.append("k must satisfy 0 <= k <= p-2")
        if k > n - 4:
            out.append("k must be at most n-4 so that s1 centralizes G2/G4")
        if not (0 <= self.w < p and 0 <= self.z < p):
            out.append("w and z must be residues in [0, p)")
        allowed = set(range(n - k, n))
        if set(self.a) - allowed:
            out.append(f"a may only have indices in [{n - k}, {n - 1}]")
        if k == 0 and any(self.a.values()):
            out.append("k = 0 requires all a_j = 0")
        if k >= 1 and self.a.get(n - k, 0) % p == 0:
            out.append(f"a_{n - k} must be nonzero mod p when k >= 1")
        return out

    @property
    def psi(self) -> int:
        """Coefficient of zeta^2 in the exponent of (s s1^zeta)^p."""
        return self.a.get(self.n - self.k, 0) if self.k == self.p - 2 else 0

    def to_json_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "k": self.k,
                "a": {str(j): v for j, v in sorted(self.a.items()) if v}, "w": self.w, "z": self.z}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MiechParams":
        return cls(int(data["p"]), int(data["n"]), int(data.get("k", 0)),
                   {int(j): int(v) for j, v in (data.get("a") or {}).items()},
                   int(data.get("w", 0)), int(data.get("z", 0)))

    def label(self) -> str:
        avals = ",".join(f"a{j}={v}" for j, v in sorted(self.a.items()) if v)
        return f"p={self.p} n={self.n} k={self.k}" + (f" {avals}" if avals else "") + f" w={self.w} z={self.z}"

    def __str__(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


class Group:
    """Immutable group object; all tables are built once in the constructor."""

    def __init__(self, params: MiechParams, *, tau_override: Sequence[Vec] | None = None):
        bad = params.problems()
        if bad:
            raise InvalidParameters("; ".join(bad))
        self.params = params
        p, n = params.p, params.n
        self.p, self.n, self.m = p, n, n - 2
        self.order = p**n
        # carry[i] lists (target index, coefficient) for rewriting p*s_{i+2}
        self._carry = [[(i + t - 1, comb(p, t)) for t in range(2, p + 1) if i + t - 1 < self.m]
                       for i in range(self.m)]
        m = self.m
        basis = [self._unit(i) for i in range(m)]
        self.sigma =[self.normalize([1 if j in (i, i + 1) else 0 for j in range(m)]) for i in range(m)]
        c_vec = self.normalize([-params.a.get(j + 2, 0) for j in range(m)])
        self.comm_s2_s1 = tuple(c_vec)
        if tau_override is not None:
            self.tau = [self.normalize(list(v)) for v in tau_override]
        else:
            self.tau = []
            d = list(c_vec)
            for i in range(m):
                self.tau.append(self.add(basis[i], d))
                d = self.delta(d)
        self.sigma_pow = [self._identity_map()]
        self.tau_pow = [self._identity_map()]
        for _ in range(1, p):
            self.sigma_pow.append(self.compose(self.sigma, self.sigma_pow[-1]))
            self.tau_pow.append(self.compose(self.tau, self.tau_pow[-1]))
        # u[c] = sum_{j<c} sigma^j(s2):  s^-c s1 s^c = s1 * u[c]
        self.u = [[0] * m]
        for _ in range(1, p):
            self.u.append(self.add(self.apply(self.sigma, self.u[-1]), basis[0]))
        # shift[b][c] = sum_{j<b} tau^j(u[c]):  s1^b s^c = s^c s1^b * shift[b][c]
        self.shift = [[[0] * m for _ in range(p)] for _ in range(p)]
        for c in range(p):
            acc = [0] * m
            for b in range(1, p):
                acc = self.add(acc, self.apply(self.tau_pow[b - 1], self.u[c]))
                self.shift[b][c] = acc
        self.s_power = self.scale(basis[m - 1], params.w)
        s1_tail = [0] * m
        for t in range(2, p + 1):
            if t - 2 < m:
                s1_tail[t - 2] -= comb(p, t)
        s1_tail[m - 1] += params.z
        self.s1_power = self.normalize(s1_tail)
        self._np_ready = False

    # ---- G2 as an additive group -------------------------------------------------------------

    def _unit(self, i: int) -> Vec:
        v = [0] * self.m
        v[i] = 1
        return v

    def _identity_map(self) -> list[Vec]:
        return [self._unit(i) for i in range(self.m)]

    def normalize(self, v: Vec) -> Vec:
        p = self.p
        v = list(v)
        for i in range(self.m):
            q, r = divmod(v[i], p)
            if q:
                v[i] = r
                for j, c in self._carry[i]:
                    v[j] -= q * c
        return v

    def add(self, x: Vec, y: Vec) -> Vec:
        return self.normalize([a + b for a, b in zip(x, y)])

    def scale(self, x: Vec, t: int) -> Vec:
        return self.normalize([a * t for a in x])

    def neg(self, x: Vec) -> Vec:
        return self.scale(x, -1)

    def apply(self, endo: list[Vec], x: Vec) -> Vec:
        out = [0] * self.m
        for coeff, img in zip(x, endo):
            if coeff:
                for j, v in enumerate(img):
                    out[j] += coeff * v
        return self.normalize(out)

    def compose(self, outer: list[Vec], inner: list[Vec]) -> list[Vec]:
        return [self.apply(outer, img) for img in inner]

    def delta(self, x: Vec) -> Vec:
        return self.add(self.apply(self.sigma, x), self.neg(x))

    def g2_order(self, x: Vec) -> int:
        """Additive order of a G2 element."""
        order = 1
        while any(x):
            x = self.scale(x, self.p)
            order *= self.p
        return order

    # ---- elements ----------------------------------------------------------------------------

    @property
    def identity(self) -> Elem:
        return (0,) * self.n

    def gen(self, i: int) -> Elem:
        """s (i = 0), s1 (i = 1) or s_i."""
        v = [0] * self.n
        v[i] = 1
        return tuple(v)

    def from_tail(self, x: Vec) -> Elem:
        return (0, 0, *x)

    def mul(self, g: Elem, h: Elem) -> Elem:
        p = self.p
        a, b, x = g[0], g[1], list(g[2:])
        c, d, y = h[0], h[1], h[2:]
        t = self.apply(self.sigma_pow[c], x) if c else x
        if b and c:
            t = [u + v for u, v in zip(t, self.shift[b][c])]
        if d:
            t = self.apply(self.tau_pow[d], t)
        t = [u + v for u, v in zip(t, y)]
        ea, eb = a + c, b + d
        if ea >= p:
            ea -= p
            t = [u + v for u, v in zip(t, self.s_power)]
        if eb >= p:
            eb -= p
            t = [u + v for u, v in zip(t, self.s1_power)]
        return (ea, eb, *self.normalize(t))

    def pow(self, g: Elem, k: int) -> Elem:
        if k < 0:
            return self.pow(self.inv(g), -k)
        result, base = self.identity, g
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, g: Elem) -> int:
        """Least p^t with g^(p^t) = 1, by repeated p-th powers."""
        order, one = 1, self.identity
        while g != one:
            g = self.pow(g, self.p)
            order *= self.p
        return order

    def inv(self, g: Elem) -> Elem:
        return self.pow(g, self.element_order(g) - 1)

    def comm(self, g: Elem, h: Elem) -> Elem:
        """[g, h] = g^-1 h^-1 g h."""
        return self.mul(self.inv(self.mul(h, g)), self.mul(g, h))

    def conj(self, g: Elem, h: Elem) -> Elem:
        """g^h = h^-1 g h."""
        return self.mul(self.inv(h), self.mul(g, h))

    def word(self, exps: Iterable[int]) -> Elem:
        """Evaluate s^e0 s1^e1 s2^e2 ... for arbitrary integer exponents."""
        out = self.identity
        for i, e in enumerate(exps):
            if e:
                out = self.mul(out, self.pow(self.gen(i), e))
        return out

    # ---- integer encoding and batch arithmetic -----------------------------------------------

    def index(self, g: Elem) -> int:
        out = 0
        for d in reversed(g):
            out = out * self.p + d
        return out

    def element(self, idx: int) -> Elem:
        out = []
        for _ in range(self.n):
            idx, r = divmod(idx, self.p)
            out.append(r)
        return tuple(out)

    def _prepare_numpy(self) -> None:
        if self._np_ready:
            return
        m = self.m
        self._np_sigma = np.array(self.sigma_pow, dtype=np.int64).reshape(self.p, m, m)
        self._np_tau = np.array(self.tau_pow, dtype=np.int64).reshape(self.p, m, m)
        self._np_shift = np.array(self.shift, dtype=np.int64).reshape(self.p, self.p, m)
        self._np_s_power = np.array(self.s_power, dtype=np.int64)
        self._np_s1_power = np.array(self.s1_power, dtype=np.int64)
        self._np_weights = self.p ** np.arange(self.n, dtype=np.int64)
        self._np_ready = True

    def normalize_many(self, x: np.ndarray) -> np.ndarray:
        p = self.p
        for i in range(self.m):
            q = np.floor_divide(x[:, i], p)
            x[:, i] -= q * p
            for j, c in self._carry[i]:
                x[:, j] -= q * c
        return x

    def encode_many(self, arr: np.ndarray) -> np.ndarray:
        self._prepare_numpy()
        return arr @ self._np_weights

    def decode_many(self, idx: np.ndarray) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        out = np.empty((idx.shape[0], self.n), dtype=np.int64)
        rest = idx.copy()
        for i in range(self.n):
            out[:, i] = rest % self.p
            rest //= self.p
        return out

    def mul_many(self, g: np.ndarray, h: np.ndarray) -> np.ndarray:
        """Row-wise products of two (N, n) arrays of normal forms (broadcasts a single row)."""
        self._prepare_numpy()
        g, h = np.broadcast_arrays(np.atleast_2d(g), np.atleast_2d(h))
        p = self.p
        a, b, x = g[:, 0], g[:, 1], g[:, 2:]
        c, d, y = h[:, 0], h[:, 1], h[:, 2:]
        t = np.einsum("ni,nij->nj", x, self._np_sigma[c])
        t = t + self._np_shift[b, c]
        t = self.normalize_many(t)
        t = np.einsum("ni,nij->nj", t, self._np_tau[d]) + y
        ea, eb = a + c, b + d
        wrap_a, wrap_b = ea >= p, eb >= p
        t = t + np.outer(wrap_a, self._np_s_power) + np.outer(wrap_b, self._np_s1_power)
        t = self.normalize_many(t)
        return np.column_stack([ea - p * wrap_a, eb - p * wrap_b, t])

    def all_elements(self) -> np.ndarray:
        return self.decode_many(np.arange(self.order, dtype=np.int64))

    def multiplication_table(self, limit: int = 2187) -> np.ndarray:
        """Full Cayley table on integer indices; refused above `limit` elements."""
        if self.order > limit:
            raise ValueError(f"group of order {self.order} exceeds the table limit {limit}")
        if not hasattr(self, "_table"):
            elems = self.all_elements()
            table = np.empty((self.order, self.order), dtype=np.int32)
            for j in range(self.order):
                table[:, j] = self.encode_many(self.mul_many(elems, elems[j]))
            self._table = table
        return self._table

    def __repr__(self) -> str:
        return f"Group({self.params.label()})"


def construct(params: MiechParams, *, audit: bool = True) -> Group:
    """Build the group and, unless audit=False, refuse it when the relation audit finds a failure."""
    group = Group(params)
    if audit:
        from .audit import verify_relations

        report = verify_relations(group, samples=2000)
        if not report.ok:
            raise InvalidParameters(f"relation audit failed for {params.label()}: " + "; ".join(report.failures))
    return group
