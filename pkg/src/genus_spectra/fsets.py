"""Finite sets F_0..F_e whose Omega-translates make up the reduced genus spectrum.

Entries are stored symbolically as (sum_j c_j p^(N-j) + const) / den and evaluated at a
concrete level N, so a single row serves every prime.
"""

from __future__ import annotations

from dataclasses import dataclass

from .profile import AT_LEAST_TWO, FlagRequired, GroupProfile, require_valid


class MissingRow(ValueError):
    """No F-set row is printed for this profile."""


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Expr:
    """(sum c * p^(N - shift) + const) / den."""

    terms: tuple[tuple[int, int], ...]
    const: int = 0
    den: int = 1

    def at(self, p: int, big_n: int) -> int:
        num = sum(c * p ** (big_n - sh) for c, sh in self.terms) + self.const
        q, r = divmod(num, self.den)
        if r:
            raise ArithmeticError(f"non-integral F-set entry {num}/{self.den}")
        return q

    def __str__(self) -> str:
        parts = []
        for c, sh in self.terms:
            power = "p^N" if sh == 0 else f"p^(N-{sh})"
            parts.append(f"{c:+d}*{power}")
        if self.const:
            parts.append(f"{self.const:+d}")
        body = " ".join(parts)
        return body if self.den == 1 else f"({body})/{self.den}"


def half(a: int, b: int = 0, c: int = 0, const: int = -1) -> Expr:
    """(a p^N - b p^(N-1) - c p^(N-2) + const) / 2."""
    terms = tuple(t for t in ((a, 0), (-b, 1), (-c, 2)) if t[0])
    return Expr(terms, const, 2)


def power(const: int = 0) -> Expr:
    """p^N + const."""
    return Expr(((1, 0),), const, 1)


def literal(v: int) -> Expr:
    return Expr((), v, 1)


def abc(triples) -> tuple[Expr, ...]:
    return tuple(half(a, b, c) for a, b, c in triples)


# Level keys: "e", "0", "1", "2", "2..e-1", "3..e-1".
FRow = dict[str, tuple[Expr, ...]]

EMPTY: tuple[Expr, ...] = ()
ZERO = (literal(0),)

# --- exponent at least p^3 -------------------------------------------------------------
TABLE_EXP3: dict[tuple[str, str], FRow] = {
    ("I", "ge2"): {
        "e": (power(), half(1), half(1, 2)),
        "1": (power(-1), half(1, const=-3)),
        "0": EMPTY,
        "2..e-1": (half(3, 2), half(2, 3)),
    },
    ("I", "one"): {
        "e": (power(-1), half(3, 2), half(1, 2)),
        "1": (power(-1), half(3), half(1, const=-3)),
        "0": ZERO,
        "2..e-1": (half(3), half(3, 2), half(2, 3)),
    },
    ("II", "ge2"): {
        "e": (power(), half(1), half(1, 0, 2)),
        "2": (power(-1), half(1, const=-3)),
        "1": EMPTY,
        "0": EMPTY,
        "2..e-1": (half(3, 0, 2), half(2, 0, 3)),
    },
    ("II", "one"): {
        "e": (power(-1), half(3, 0, 2), half(1, 0, 2)),
        "2": (power(-1), half(3), half(1, const=-3)),
        "1": (half(3),),
        "0": ZERO,
        "3..e-1": (half(3), half(3, 0, 2), half(2, 0, 3)),
    },
    ("III", "ge2"): {
        "e": (power(), half(1), *abc([(1, 0, 2), (1, 1, 1), (1, 2, 0)])),
        "3..e-1": abc([(a, b, c) for a in (2, 3) for b in range(6) for c in range(6)
                       if a + b + c == 5 and (b, c) != (1, 1)]),
        # printed "(a p^2 - b p - c)/2 : b+c=3, c>=1" with a unspecified; read as a = 1
        "2": (power(-1), half(3, 2), *(half(1, b, 0, const=-c) for b, c in ((2, 1), (1, 2), (0, 3)))),
        "1": (half(1, const=-3),),
        "0": EMPTY,
    },
    ("III", "one"): {
        "e": (power(-1), *abc([(a, b, c) for a in (1, 3) for b, c in ((2, 0), (1, 1), (0, 2))])),
        "3..e-1": abc([(3, 0, 0), (3, 2, 0), (3, 0, 2), (2, 3, 0), (2, 2, 1), (2, 1, 2), (2, 0, 3)]),
        "2": (power(-1), half(3), half(3, 2), *(half(1, b, 0, const=-c) for b, c in ((2, 1), (1, 2), (0, 3)))),
        "1": (power(-1), half(3), half(1, const=-3)),
        "0": ZERO,
    },
    ("IV", "ge2"): {
        "e": (power(), half(1), half(1, 1, 1), half(1, 0, 2)),
        "2": (power(-1), half(3, 2), half(1, 1, const=-2)),
        "1": (power(-1),),
        "0": EMPTY,
        "3..e-1": abc([(3, 0, 2), (3, 2, 0), (2, 1, 2)]),
    },
    ("IV", "one"): {
        "e": (power(-1), *abc([(a, b, c) for a in (1, 3) for b, c in ((1, 1), (0, 2))])),
        "2": (power(-1), half(3), half(3, 2), half(1, 1, const=-2)),
        "3..e-1": abc([(3, 0, 0), (3, 2, 0), (3, 0, 2), (2, 1, 2)]),
        "1": (power(-1), half(3)),
        "0": ZERO,
    },
    ("V", "ge2"): {
        "e": (power(), half(1), half(1, 1, 1), half(1, 2)),
        "2": (power(-1), half(3, 2), half(1, 2)),
        "1": (power(-1),),
        "0": EMPTY,
        "3..e-1": abc([(3, 0, 2), (3, 2, 0), (2, 2, 1)]),
    },
    ("V", "one"): {
        "e": (power(-1), *abc([(a, b, c) for a in (1, 3) for b, c in ((1, 1), (2, 0))])),
        "3..e-1": abc([(3, 0, 0), (3, 2, 0), (3, 0, 2), (2, 2, 1)]),
        "2": (power(-1), half(3), half(3, 2), half(1, 2)),
        "1": (power(-1), half(3)),
        "0": ZERO,
    },
}

# --- exponent p^2, ed >= 2 ------------------------------------------------------------
_ab = lambda pairs: tuple(half(1, a, 0, const=-b) for a, b in pairs)  # (p^2 - a p - b)/2

TABLE_EXP2: dict[tuple, FRow] = {
    ("I",): {"2": (power(), half(1), half(1, 2)), "1": (power(-1), half(1, const=-3)), "0": EMPTY},
    ("II",): {"2": (power(), half(1), half(1, const=-3)), "1": EMPTY, "0": EMPTY},
    ("III", "ppp"): {"2": (power(), half(1), *_ab([(2, 1), (1, 2), (0, 3)])),
                     "1": (power(-1), half(1, const=-3)), "0": EMPTY},
    ("III", "not ppp"): {"2": (power(), half(1), *_ab([(2, 1), (1, 2), (0, 3)])),
                         "1": (power(-1), power(-2)), "0": EMPTY},
    ("IV",): {"2": (power(), half(1), *_ab([(1, 2), (0, 3)])), "1": (power(-1),), "0": EMPTY},
    ("V", "p>=5"): {"2": (power(), half(1), half(1, 2)), "1": (power(-1), half(1, const=-3)), "0": EMPTY},
    ("V", "p=3"): {"2": tuple(map(literal, (9, 4, 1))), "1": tuple(map(literal, (2, 1))), "0": EMPTY},
}

# --- order p^(p+1) ----------------------------------------------------------------------
_halfp = lambda c: Expr(((1, 0),), c, 2)  # (p + c)/2 at N = 1
TABLE_P_PLUS_1: dict[tuple, FRow | str] = {
    ("I", "p2"): {"2": (power(-1), half(3, 2), half(1, 2)), "1": (_halfp(-1), _halfp(-3)), "0": ZERO},
    ("II", "p"): {"2": (power(-1), *_ab([(0, 3), (1, 2)])), "1": (_halfp(-1),), "0": ZERO},
    ("II", "p2"): {"2": (power(-1), half(1, const=-3)), "1": (_halfp(-1),), "0": ZERO},
    ("III", "p", "p2_triple"): {"2": (power(-1), power(-2), half(3, 2), *_ab([(0, 3), (1, 2), (2, 1)])),
                                "1": (_halfp(-1), _halfp(-3)), "0": ZERO},
    ("III", "p", "not p2_triple"): {"2": (power(-1), power(-2), half(3, 2), *_ab([(1, 2), (2, 1)])),
                                    "1": (_halfp(-1), _halfp(-3)), "0": ZERO},
    ("III", "p2", "ppp"): {"2": (power(-1), half(3, 2), *_ab([(0, 3), (1, 2), (2, 1)])),
                           "1": (_halfp(-1), _halfp(-3)), "0": ZERO},
    ("III", "p2", "not ppp"): {"2": (power(-1), half(3, 2), *_ab([(0, 3), (1, 2), (2, 1)])),
                               "1": (power(-2), _halfp(-1)), "0": ZERO},
    ("IV", "p", "p=3"): {"2": tuple(map(literal, (1, 2, 7, 8, 10))), "1": (literal(1),), "0": ZERO},
    # cross references, resolved at lookup time
    ("IV", "p2"): "same:II,p",
    ("V", "p"): "same:I,p2",
    ("V", "p2", "p>=5"): "same:III,p,not p2_triple",
    ("V", "p2", "p=3"): "same:IV,p,p=3",
}


@dataclass(frozen=True)
class FSetFamily:
    p: int
    e: int
    sets: tuple[frozenset[int], ...]  # index N = 0..e
    source: str

    def __getitem__(self, big_n: int) -> frozenset[int]:
        return self.sets[big_n]


def _row_key(gp: GroupProfile) -> tuple[str, tuple]:
    p = gp.p
    t = gp.type_class
    if gp.n == p + 1:
        g1 = "p" if gp.exp_g1 == p else "p2"
        if t == "III":
            if g1 == "p":
                if gp.p2_triple_type is None:
                    raise FlagRequired("flag required: p2_triple_type ((p^2,p^2,p^2)-type) must be set for this profile")
                return "order p^(p+1)", ("III", "p", "p2_triple" if gp.p2_triple_type else "not p2_triple")
            if gp.ppp_type is None:
                raise FlagRequired("flag required: ppp_type ((p,p,p)-type) must be set for this profile")
            return "order p^(p+1)", ("III", "p2", "ppp" if gp.ppp_type else "not ppp")
        if t == "IV" and g1 == "p":
            return "order p^(p+1)", ("IV", "p", "p=3" if p == 3 else "p>=5")
        if t == "V" and g1 == "p2":
            return "order p^(p+1)", ("V", "p2", "p=3" if p == 3 else "p>=5")
        if t == "I" and g1 == "p":
            raise MissingRow("no printed F-set row: type I at order p^(p+1) with exp(G_1) = p")
        return "order p^(p+1)", (t, g1)
    if gp.e == 2:
        if not p + 2 <= gp.n <= 2 * p - 1:
            raise OutOfRange("out of table range: exponent p^2 needs p+2 <= n <= 2p-1")
        if t == "III":
            if gp.ppp_type is None:
                raise FlagRequired("flag required: ppp_type ((p,p,p)-type) must be set for this profile")
            return "exponent p^2", ("III", "ppp" if gp.ppp_type else "not ppp")
        if t == "V":
            return "exponent p^2", ("V", "p=3" if p == 3 else "p>=5")
        return "exponent p^2", (t,)
    if gp.n < 2 * p:
        raise OutOfRange("out of table range: exponent >= p^3 table is stated for n >= 2p")
    return "exponent >= p^3", (t, "ge2" if gp.ed_class == AT_LEAST_TWO else "one")


def printed_row(gp: GroupProfile) -> tuple[str, tuple, FRow]:
    table, key = _row_key(gp)
    source = {"order p^(p+1)": TABLE_P_PLUS_1, "exponent p^2": TABLE_EXP2, "exponent >= p^3": TABLE_EXP3}[table]
    if key not in source:
        raise MissingRow(f"no printed F-set row for {key} in the {table} table")
    row = source[key]
    while isinstance(row, str):
        key = tuple(row.removeprefix("same:").split(","))
        if key not in source:
            raise MissingRow(f"cross reference to missing row {key}")
        row = source[key]
    if not row:
        raise MissingRow(f"F-set row {key} is blank in the {table} table")
    return table, key, row


# Vectors (a, b, b^-1, a^-1) with a, b on different lines, realized by the group engine at order 3^6.
_GAP_IV_NOTE = ("F_e gains p^e-p^(e-1)-1 from (0; 2, 0, ..., 2); F_2 gains p^2-2 from (0; 0, 4, 0, ...); "
                "F_N (3 <= N < e) gains (3p^N-4p^(N-2)-1)/2 from (0; 0, 4, ..., 1)")
_GAP_IV: FRow = {"e": (half(2, 2, const=-2),), "2": (power(-2),), "3..e-1": (half(3, 0, 4),)}
_GAP_V_NOTE = ("F_e gains p^e-p^(e-2)-1 from (0; 0, 2, ..., 2); F_1 gains p-2 from (0; 4, 0, ...); "
               "F_N (3 <= N < e) gains (3p^N-4p^(N-1)-1)/2 from (0; 4, ..., 1)")
_GAP_V: FRow = {"e": (half(2, 0, 2, const=-2),), "1": (power(-2),), "3..e-1": (half(3, 4),)}

# Corrections found by comparing the printed rows against signature enumeration; opt-in only.
ERRATA: dict[tuple[str, tuple], tuple[str, FRow]] = {
    ("exponent >= p^3", ("III", "ge2")): (
        "F_1 gains p-1, the value of (1; 2, 0, ..., 0)",
        {"1": (power(-1),)},
    ),
    ("exponent p^2", ("V", "p>=5")): (
        "F_2 gains (p^2-p-2)/2, the value of (0; 1, 2)",
        {"2": (half(1, 1, const=-2),)},
    ),
    ("exponent p^2", ("V", "p=3")): (
        "F_2 gains 2, the value of (0; 1, 2)",
        {"2": (literal(2),)},
    ),
    ("exponent >= p^3", ("IV", "ge2")): (_GAP_IV_NOTE, _GAP_IV),
    ("exponent >= p^3", ("IV", "one")): (_GAP_IV_NOTE, _GAP_IV),
    ("exponent >= p^3", ("V", "ge2")): (_GAP_V_NOTE, _GAP_V),
    ("exponent >= p^3", ("V", "one")): (_GAP_V_NOTE, _GAP_V),
    ("order p^(p+1)", ("IV", "p", "p>=5")): (
        "blank row filled from enumeration (checked for p = 5, 7, 11)",
        {"2": (power(-1), half(1, const=-3), half(1, 1, const=-2), half(1, 2)),
         "1": (_halfp(-1), power(-2)), "0": ZERO},
    ),
}


def printed_or_corrected_row(gp: GroupProfile, errata: bool) -> tuple[str, tuple, FRow, str]:
    try:
        table, key, row = printed_row(gp)
    except MissingRow:
        if not errata:
            raise
        table, key = _row_key(gp)
        note, extra = ERRATA[(table, key)]
        return table, key, extra, note
    if errata and (table, key) in ERRATA:
        note, extra = ERRATA[(table, key)]
        merged = dict(row)
        for spec, exprs in extra.items():
            merged[spec] = tuple(merged.get(spec, ())) + tuple(exprs)
        return table, key, merged, note
    return table, key, row, ""


def f_sets(gp: GroupProfile, errata: bool = False) -> FSetFamily:
    """F_0..F_e for the profile; errata=True applies the documented corrections in ERRATA."""
    require_valid(gp)
    table, key, row, note = printed_or_corrected_row(gp, errata)
    p, e = gp.p, gp.e
    sets: list[set[int]] = [set() for _ in range(e + 1)]
    for spec, exprs in row.items():
        if spec == "e":
            levels = [e]
        elif spec == "2..e-1":
            levels = list(range(2, e))
        elif spec == "3..e-1":
            levels = list(range(3, e))
        else:
            levels = [int(spec)]
        for big_n in levels:
            for ex in exprs:
                sets[big_n].add(ex.at(p, big_n))
    for big_n, s in enumerate(sets):
        if any(v < 0 for v in s):
            raise ArithmeticError(f"negative entry in F_{big_n}: {sorted(s)}")
    source = f"{table}: {', '.join(key)}" + (f" [erratum: {note}]" if note else "")
    return FSetFamily(p, e, tuple(frozenset(s) for s in sets), source)
