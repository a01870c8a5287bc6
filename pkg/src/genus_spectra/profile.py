"""Classification records of maximal-class p-groups and the signature admissibility tables.

Each table is a tuple of ``Row`` records. A row names the orbit-genus range, the level range,
the group classes it covers and the condition on (m_1, m_2) that makes a signature admissible.
A signature is admissible exactly when some row of the selected table matches it.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable

from .signatures import PrimeProfile, Signature, level

TYPES = ("I", "II", "III", "IV", "V")
P_IN_ORDERS = frozenset({"I", "III", "IV", "V"})
MIXED = frozenset({"III", "IV", "V"})
ONE, AT_LEAST_TWO = "ONE", "AT_LEAST_TWO"


class FlagRequired(ValueError):
    """A table row depends on a (p,p,p) or (p^2,p^2,p^2) flag that the profile leaves unset."""


class InvalidProfile(ValueError):
    pass


def _type_of(orders: frozenset[int], exceptional: str, p: int) -> str:
    if orders == {p}:
        return "I"
    if orders == {p * p}:
        return "II"
    return {"none": "III", "p": "IV", "p2": "V"}[exceptional]


@dataclass(frozen=True)
class GroupProfile:
    p: int
    n: int
    e: int
    uniform_orders: frozenset[int]
    exceptional: str
    type_class: str
    ed_class: str
    exp_g1: int | None = None
    ppp_type: bool | None = None
    p2_triple_type: bool | None = None
    c_zero: bool | None = None

    @classmethod
    def of(
        cls,
        p: int,
        n: int,
        e: int,
        type_class: str,
        ed_class: str | None = None,
        *,
        exp_g1: int | None = None,
        ppp_type: bool | None = None,
        p2_triple_type: bool | None = None,
        c_zero: bool | None = None,
    ) -> "GroupProfile":
        """Build a profile from its type, deriving the order set and exceptional status."""
        orders, exc = {
            "I": ({p}, "none"),
            "II": ({p * p}, "none"),
            "III": ({p, p * p}, "none"),
            "IV": ({p, p * p}, "p"),
            "V": ({p, p * p}, "p2"),
        }[type_class]
        if ed_class is None:
            if n == p + 1:
                ed_class = ONE if exp_g1 == p * p else AT_LEAST_TWO
            else:
                ed_class = ONE if n == 2 + (e - 1) * (p - 1) else AT_LEAST_TWO
        return cls(p, n, e, frozenset(orders), exc, type_class, ed_class, exp_g1, ppp_type, p2_triple_type, c_zero)

    @property
    def prime_profile(self) -> PrimeProfile:
        return PrimeProfile(self.p, self.n, self.e)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "e": self.e,
            "uniform_orders": sorted(self.uniform_orders),
            "exceptional": self.exceptional,
            "type": self.type_class,
            "ed": self.ed_class,
            "exp_g1": self.exp_g1,
            "ppp_type": self.ppp_type,
            "p2_triple_type": self.p2_triple_type,
            "c_zero": self.c_zero,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "GroupProfile":
        p, n, e = int(data["p"]), int(data["n"]), int(data["e"])
        if "uniform_orders" in data and "exceptional" in data:
            orders = frozenset(int(x) for x in data["uniform_orders"])
            exc = data["exceptional"]
            type_class = data.get("type") or _type_of(orders, exc, p)
            ed = data.get("ed")
            base = cls.of(p, n, e, type_class, ed, exp_g1=data.get("exp_g1"))
            return cls(p, n, e, orders, exc, type_class, base.ed_class, data.get("exp_g1"),
                       data.get("ppp_type"), data.get("p2_triple_type"), data.get("c_zero"))
        return cls.of(p, n, e, data["type"], data.get("ed"), exp_g1=data.get("exp_g1"),
                      ppp_type=data.get("ppp_type"), p2_triple_type=data.get("p2_triple_type"),
                      c_zero=data.get("c_zero"))

    def describe(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def validate(gp: GroupProfile) -> list[str]:
    out = gp.prime_profile.violations()
    if out and "odd prime" in out[0]:
        return out
    p, n, e = gp.p, gp.n, gp.e
    if gp.type_class not in TYPES:
        out.append(f"unknown type {gp.type_class!r}")
        return out
    if gp.exceptional not in ("none", "p", "p2"):
        out.append(f"unknown exceptional status {gp.exceptional!r}")
    if gp.ed_class not in (ONE, AT_LEAST_TWO):
        out.append(f"unknown ed class {gp.ed_class!r}")
    allowed = ({p}, {p * p}, {p, p * p})
    if set(gp.uniform_orders) not in allowed:
        out.append("uniform_orders must be {p}, {p^2} or {p,p^2}")
    elif _type_of(gp.uniform_orders, gp.exceptional, p) != gp.type_class:
        out.append(f"type {gp.type_class} does not match uniform orders and exceptional status")
    if gp.uniform_orders != {p, p * p} and gp.exceptional != "none":
        out.append("exceptional status needs uniform orders {p,p^2}")
    if gp.type_class == "III" and p < 5:
        out.append("type III requires p ≥ 5")
    if n >= p + 2:
        want = ONE if n == 2 + (e - 1) * (p - 1) else AT_LEAST_TWO
        if gp.ed_class != want:
            out.append(f"ed class must be {want} for (p,n,e) = ({p},{n},{e})")
    if n == p + 1:
        if gp.exp_g1 not in (p, p * p):
            out.append("order p^(p+1) needs exp_g1 in {p, p^2}")
        elif gp.type_class == "I" and gp.exp_g1 != p * p:
            out.append("type I at order p^(p+1) has exp(G_1) = p^2 (exponent p^2 must be attained)")
        elif (gp.ed_class == ONE) != (gp.exp_g1 == p * p):
            out.append("at order p^(p+1), ed = 1 exactly when exp(G_1) = p^2")
    if gp.c_zero and n != p + 1:
        out.append("c(G) = 0 only occurs at order p^(p+1)")
    if gp.ppp_type is not None:
        if gp.uniform_orders == {p} and not gp.ppp_type:
            out.append("uniform orders {p} force (p,p,p)-type")
        if gp.exceptional == "p2" and p >= 5 and n >= p + 2 and not gp.ppp_type:
            out.append("p^2-exceptional with p ≥ 5 forces (p,p,p)-type")
        if gp.ppp_type and (gp.uniform_orders == {p * p} or gp.exceptional == "p"
                            or (p == 3 and gp.uniform_orders != {3})) and n >= p + 2:
            out.append("at most two z-classes of order p exclude (p,p,p)-type")
    return out


def require_valid(gp: GroupProfile) -> None:
    bad = validate(gp)
    if bad:
        raise InvalidProfile("; ".join(bad))


# ---------------------------------------------------------------------------
# Conditions on (m_1, m_2): disjunction of conjunctions of atoms "quantity >= bound" or "quantity == bound".

Atom = tuple[str, str, int]


@dataclass(frozen=True)
class Cond:
    alternatives: tuple[tuple[Atom, ...], ...]

    def holds(self, values: dict[str, int]) -> bool:
        def atom(a: Atom) -> bool:
            q, op, b = a
            v = values[q]
            return v >= b if op == ">=" else v == b

        return any(all(atom(a) for a in alt) for alt in self.alternatives)

    def __str__(self) -> str:
        if not self.alternatives or self.alternatives == ((),):
            return "-"
        return " or ".join(", ".join(f"{q} {op} {b}" for q, op, b in alt) for alt in self.alternatives)


def cond(*alts: str) -> Cond:
    """cond("m1>=2,m2>=1", "m1>=3") builds (m1>=2 and m2>=1) or (m1>=3); cond() is always true."""
    parsed = []
    for alt in alts or ("",):
        atoms = []
        for piece in filter(None, (s.strip() for s in alt.split(","))):
            op = ">=" if ">=" in piece else "=="
            q, b = piece.split(op)
            atoms.append((q.strip(), op, int(b)))
        parsed.append(tuple(atoms))
    return Cond(tuple(parsed))


ALWAYS = cond()


@dataclass(frozen=True)
class Applies:
    """Which group classes a row covers. None means unconstrained."""

    types: frozenset[str] = frozenset(TYPES)
    p_min: int | None = None
    p_is: int | None = None
    exp_g1: str | None = None  # "p" or "p2"
    ppp: bool | None = None
    p2_triple: bool | None = None

    def matches(self, gp: GroupProfile) -> bool:
        if gp.type_class not in self.types:
            return False
        if self.p_min is not None and gp.p < self.p_min:
            return False
        if self.p_is is not None and gp.p != self.p_is:
            return False
        if self.exp_g1 is not None:
            want = gp.p if self.exp_g1 == "p" else gp.p * gp.p
            if gp.exp_g1 != want:
                return False
        if self.ppp is not None:
            if gp.ppp_type is None:
                raise FlagRequired("flag required: ppp_type ((p,p,p)-type) must be set for this profile")
            if gp.ppp_type != self.ppp:
                return False
        if self.p2_triple is not None:
            if gp.p2_triple_type is None:
                raise FlagRequired("flag required: p2_triple_type ((p^2,p^2,p^2)-type) must be set for this profile")
            if gp.p2_triple_type != self.p2_triple:
                return False
        return True


def only(*types: str, **kw) -> Applies:
    return Applies(types=frozenset(types), **kw)


@dataclass(frozen=True)
class Row:
    """h in [h_lo, h_hi]; level in the named range; group in `applies`; then `condition` decides."""

    h_lo: int
    h_hi: int | None
    levels: str  # "0", "1", "2", "e", "mid" (2..e-1), "low" (1..e-1), "pos" (>= 1)
    condition: Cond
    applies: Applies = field(default_factory=Applies)
    note: str = ""

    def level_ok(self, big_n: int, e: int) -> bool:
        return {
            "0": big_n == 0,
            "1": big_n == 1,
            "2": big_n == 2,
            "e": big_n == e,
            "mid": 2 <= big_n <= e - 1,
            "low": 1 <= big_n <= e - 1,
            "pos": big_n >= 1,
        }[self.levels]

    def h_ok(self, h: int) -> bool:
        return h >= self.h_lo and (self.h_hi is None or h <= self.h_hi)


# Table: ed >= 2 and exp >= p^3.
ED2_EXP3 = (
    Row(2, None, "0", ALWAYS),
    Row(2, None, "pos", ALWAYS),
    Row(1, 1, "e", ALWAYS),
    Row(1, 1, "mid", cond("m1>=2"), only("I")),
    Row(1, 1, "mid", cond("m2>=2"), only("II")),
    Row(1, 1, "mid", cond("m1>=2", "m2>=2"), only("III", "IV", "V")),
    Row(1, 1, "1", cond("m1>=2"), Applies(types=P_IN_ORDERS)),
    Row(0, 0, "e", cond("m1>=2"), only("I")),
    Row(0, 0, "e", cond("m2>=2"), only("II")),
    Row(0, 0, "e", cond("m1+m2>=2"), only("III")),
    Row(0, 0, "e", cond("m1>=1,m2>=1", "m2>=2"), only("IV")),
    Row(0, 0, "e", cond("m1>=1,m2>=1", "m1>=2"), only("V")),
    Row(0, 0, "low", cond("m1>=3"), only("I")),
    Row(0, 0, "low", cond("m2>=3"), only("II")),
    Row(0, 0, "low", cond("m1+m2>=3"), only("III"), note="table cell as printed; a narrower (m1>=1,m2>=2) or (m1>=2,m2>=1) reading also exists"),
    Row(0, 0, "low", cond("m1>=1,m2>=2"), only("IV")),
    Row(0, 0, "low", cond("m1>=2,m2>=1"), only("V")),
)

# Table: ed >= 2 and exp = p^2 (so p+2 <= n <= 2p-1).
ED2_EXP2 = (
    Row(2, None, "0", ALWAYS),
    Row(2, None, "pos", ALWAYS),
    Row(1, 1, "2", ALWAYS),
    Row(1, 1, "1", cond("m1>=2"), Applies(types=P_IN_ORDERS)),
    Row(0, 0, "2", cond("m1>=2"), only("I")),
    Row(0, 0, "2", cond("m2>=3"), only("II")),
    Row(0, 0, "2", cond("m1+m2>=3"), only("III")),
    Row(0, 0, "2", cond("m2>=2,m1+m2>=3"), only("IV")),
    Row(0, 0, "2", cond("m1>=2,m1+m2>=3"), only("V")),
    Row(0, 0, "1", cond("m1>=3"), only("I")),
    Row(0, 0, "1", cond("m1>=3"), only("V", p_min=5)),
    Row(0, 0, "1", cond("m1>=3"), only("III", p_min=5, ppp=True)),
    Row(0, 0, "1", cond("m1>=4"), only("III", p_min=5, ppp=False)),
    Row(0, 0, "1", cond("m1>=4"), only("V", p_is=3), note="single-group evidence at order 243"),
)

# Table: ed = 1 and n >= p+2, rows with h >= 1 (h = 0 reuses ED2_EXP3).
ED1_H1 = (
    Row(2, None, "0", ALWAYS),
    Row(1, None, "e", cond("mN>=2")),
    Row(1, None, "e", cond("mN==1,m1>=2"), only("I")),
    Row(1, None, "e", cond("mN==1,m2>=2"), only("II")),
    Row(1, None, "e", cond("mN==1,m1+m2>=2"), only("III")),
    Row(1, None, "e", cond("mN==1,m1+m2>=2,m2>=1"), only("IV")),
    Row(1, None, "e", cond("mN==1,m1+m2>=2,m1>=1"), only("V")),
    Row(2, None, "mid", ALWAYS),
    Row(1, 1, "mid", cond("m1>=2"), only("I")),
    Row(1, 1, "mid", cond("m2>=2"), only("II")),
    Row(1, 1, "mid", cond("m1>=2", "m2>=2"), only("III", "IV", "V")),
    Row(2, None, "1", ALWAYS),
    Row(1, 1, "1", cond("m1>=2"), Applies(types=P_IN_ORDERS)),
)

# Table: order p^(p+1), e = 2. Rows printed with h = 1 hold for every h >= 1.
ORDER_P_PLUS_1 = (
    Row(2, None, "0", ALWAYS),
    Row(1, None, "2", cond("m2>=2")),
    Row(1, None, "2", cond("m2==1,m1>=2"), only("I", "III", "V"), note="m2 = 1 and ||G*_0|| != {p^2}"),
    Row(1, None, "2", cond("m2==1,m1>=2"), only("IV", exp_g1="p"), note="p-exceptional excluded only when exp(G_1) = p^2"),
    Row(1, None, "1", ALWAYS),
    # h = 0, N = 2; every row also needs m1 + m2 >= 3
    Row(0, 0, "2", cond("m1>=2,m2>=1"), only("I")),
    Row(0, 0, "2", cond("m1>=2,m2>=1"), only("V", exp_g1="p")),
    Row(0, 0, "2", cond("m1+m2>=3,m2>=2"), only("II", exp_g1="p")),
    Row(0, 0, "2", cond("m2>=3"), only("II", exp_g1="p2")),
    Row(0, 0, "2", cond("m1+m2>=3"), only("IV", exp_g1="p", p_min=5)),
    Row(0, 0, "2", cond("m1>=1,m1+m2>=3", "m1==0,m2>=4"), only("IV", exp_g1="p", p_is=3)),
    Row(0, 0, "2", cond("m1+m2>=3,m2>=2"), only("IV", exp_g1="p2")),
    Row(0, 0, "2", cond("m1>=1,m1+m2>=3", "m1==0,m2>=4"), only("V", exp_g1="p2")),
    Row(0, 0, "2", cond("m1+m2>=3"), only("III", exp_g1="p", p2_triple=True)),
    Row(0, 0, "2", cond("m1>=1,m1+m2>=3", "m1==0,m2>=4"), only("III", exp_g1="p", p2_triple=False)),
    Row(0, 0, "2", cond("m1+m2>=3"), only("III", exp_g1="p2")),
    # h = 0, N = 1
    Row(0, 0, "1", cond("m1>=3"), only("I")),
    Row(0, 0, "1", cond("m1>=3"), only("V", exp_g1="p")),
    Row(0, 0, "1", cond("m1>=3"), only("V", exp_g1="p2", p_min=5)),
    Row(0, 0, "1", cond("m1>=3"), only("III", exp_g1="p")),
    Row(0, 0, "1", cond("m1>=3"), only("III", exp_g1="p2", ppp=True)),
    Row(0, 0, "1", cond("m1>=4"), only("IV", exp_g1="p")),
    Row(0, 0, "1", cond("m1>=4"), only("V", exp_g1="p2", p_is=3)),
    Row(0, 0, "1", cond("m1>=4"), only("III", exp_g1="p2", ppp=False)),
)

TABLES = {
    "ed2_exp_ge_p3": ED2_EXP3,
    "ed2_exp_p2": ED2_EXP2,
    "ed1": ED1_H1,
    "order_p_plus_1": ORDER_P_PLUS_1,
}

# Corrections backed by exhaustive realizability search; applied only on request.
# Each entry is (table, printed row to replace or None to append, corrected row, reason).
# Most stem from generating vectors (a, b, b^-1, a^-1) with a and b on different lines of G/G2.
TABLE_ERRATA: list[tuple[str, Row | None, Row, str]] = [
    ("ed2_exp_p2", ED2_EXP2[8], Row(0, 0, "2", cond("m1>=1,m1+m2>=3"), only("V")),
     "(s, s1, (s s1)^-1) with |s| = p and s s1 in the order-p^2 class realizes (0; 1, 2)"),
    ("ed2_exp_ge_p3", None, Row(0, 0, "e", cond("m1>=2,mN>=2"), only("IV")),
     "a of order p outside G1, b in G1 of order p^e"),
    ("ed2_exp_ge_p3", None, Row(0, 0, "e", cond("m2>=2,mN>=2"), only("V")),
     "a of order p^2 outside G1, b in G1 of order p^e"),
    ("ed2_exp_ge_p3", None, Row(0, 0, "low", cond("m2>=4"), only("IV")),
     "a, b of order p^2 in two different z-classes"),
    ("ed2_exp_ge_p3", None, Row(0, 0, "low", cond("m1>=4"), only("V")),
     "a, b of order p in two different z-classes"),
]
assert ED2_EXP2[8].applies.types == {"V"} and ED2_EXP2[8].levels == "2"


def table_rows(name: str, errata: bool = False) -> tuple[Row, ...]:
    rows = TABLES[name]
    if not errata:
        return rows
    mine = [(old, new) for table, old, new, _ in TABLE_ERRATA if table == name]
    swap = {id(old): new for old, new in mine if old is not None}
    return tuple(swap.get(id(row), row) for row in rows) + tuple(new for old, new in mine if old is None)


def select_table(gp: GroupProfile, h: int) -> str:
    """Name of the table that decides signatures with orbit genus h for this profile."""
    if gp.n == gp.p + 1:
        return "order_p_plus_1"
    if gp.e == 2:
        return "ed2_exp_p2"
    if gp.ed_class == AT_LEAST_TWO or h == 0:
        return "ed2_exp_ge_p3"
    return "ed1"


def matching_rows(gp: GroupProfile, sig: Signature, errata: bool = False) -> list[Row]:
    if len(sig.m) != gp.e:
        raise ValueError(f"signature length {len(sig.m)} does not match e = {gp.e}")
    big_n = level(sig)
    m = sig.m
    values = {
        "m1": m[0],
        "m2": m[1] if gp.e >= 2 else 0,
        "m1+m2": m[0] + (m[1] if gp.e >= 2 else 0),
        "mN": m[big_n - 1] if big_n else 0,
    }
    rows = table_rows(select_table(gp, sig.h), errata)
    hits = []
    for row in rows:
        if not (row.h_ok(sig.h) and row.level_ok(big_n, gp.e)):
            continue
        if row.applies.matches(gp) and row.condition.holds(values):
            hits.append(row)
    return hits


def admissible(gp: GroupProfile, sig: Signature, errata: bool = False) -> bool:
    require_valid(gp)
    return bool(matching_rows(gp, sig, errata))


def needed_flags(gp: GroupProfile) -> set[str]:
    """Flags that some row of this profile's tables would consult."""
    names = {select_table(gp, 0), select_table(gp, 1)}
    out = set()
    for name in names:
        for row in TABLES[name]:
            a = row.applies
            if gp.type_class in a.types and (a.p_min is None or gp.p >= a.p_min) and (a.p_is is None or gp.p == a.p_is):
                if a.exp_g1 is not None and gp.exp_g1 != (gp.p if a.exp_g1 == "p" else gp.p**2):
                    continue
                if a.ppp is not None:
                    out.add("ppp_type")
                if a.p2_triple is not None:
                    out.add("p2_triple_type")
    return out


def render_table(name: str) -> Iterable[str]:
    for row in TABLES[name]:
        hi = "" if row.h_hi == row.h_lo else ("+" if row.h_hi is None else f"..{row.h_hi}")
        a = row.applies
        who = ",".join(sorted(a.types, key=TYPES.index))
        extra = [f"{k}={v}" for k, v in asdict(a).items() if k != "types" and v is not None]
        yield f"h={row.h_lo}{hi} N={row.levels} [{who}{' ' + ' '.join(extra) if extra else ''}] {row.condition}"
