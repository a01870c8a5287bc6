"""Command-line front end. Every command prints deterministic JSON (or text/CSV) to stdout."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .fsets import MissingRow, OutOfRange, f_sets
from .omega import OmegaLevel, omega_brute, omega_contains, sigma_stable, stable_point_brute
from .profile import AT_LEAST_TWO, ONE, TYPES, FlagRequired, GroupProfile, InvalidProfile, require_valid
from .signatures import PrimeProfile, Signature, genus, level, reduced_genus
from .spectrum import SpectrumWindow, assemble, default_bound, enumerate_window

SCHEMA = "gst-1"
RUNLENGTH_THRESHOLD = 10**4


class UsageError(ValueError):
    pass


# --- output -------------------------------------------------------------------------------------

def emit_json(payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=2))


def emit_csv(header: list[str], rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def runlength(values) -> list[list[int]]:
    """Maximal runs of consecutive integers as [first, last] pairs."""
    runs: list[list[int]] = []
    for v in values:
        if runs and v == runs[-1][1] + 1:
            runs[-1][1] = v
        else:
            runs.append([v, v])
    return runs


def window_json(w: SpectrumWindow, full: bool) -> dict:
    out = {
        "profile": w.profile.to_json_dict(),
        "bound": w.bound,
        "count": len(w.reduced_values),
        "min_reduced": w.min_reduced,
        "stable_reduced": w.stable_reduced,
        "stable_confirmed": w.stable_confirmed,
        "gaps": list(w.gaps),
        "values_runlength": runlength(w.reduced_values),
        "genus_scale": w.profile.p ** (w.profile.n - w.profile.e),
    }
    if full or len(w.reduced_values) <= RUNLENGTH_THRESHOLD:
        out["values"] = list(w.reduced_values)
    return out


# --- input --------------------------------------------------------------------------------------

def load_json_arg(text: str) -> dict:
    """Inline JSON or a path to a JSON file."""
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"not a JSON object or readable file: {text!r} ({exc.msg})") from None


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"range must look like A..B, got {text!r}")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise UsageError("empty range")
    return range(lo_i, hi_i + 1)


def parse_bool(text: str) -> bool:
    low = text.lower()
    if low in ("1", "true", "yes", "y"):
        return True
    if low in ("0", "false", "no", "n"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def profile_from_args(args) -> GroupProfile:
    inline = args.profile is not None
    flags = any(getattr(args, k) is not None for k in ("p", "n", "e", "type"))
    if inline == flags:
        raise UsageError("give exactly one profile source: --profile JSON, or -p -n -e --type")
    if inline:
        return GroupProfile.from_json_dict(load_json_arg(args.profile))
    missing = [k for k in ("p", "n", "e", "type") if getattr(args, k) is None]
    if missing:
        raise UsageError(f"missing profile options: {', '.join(missing)}")
    return GroupProfile.of(args.p, args.n, args.e, args.type, args.ed, exp_g1=args.exp_g1,
                           ppp_type=args.ppp, p2_triple_type=args.p2_triple, c_zero=args.c_zero)


def params_from_args(args):
    from .engine.presentation import MiechParams

    inline = args.params is not None
    flags = args.p is not None or args.n is not None
    if inline == flags:
        raise UsageError("give exactly one group source: --params JSON, or -p -n [-k --a -w -z]")
    if inline:
        return MiechParams.from_json_dict(load_json_arg(args.params))
    if args.p is None or args.n is None:
        raise UsageError("both -p and -n are required")
    a = {}
    for item in filter(None, (args.a or "").split(",")):
        j, sep, v = item.partition("=")
        if not sep:
            raise UsageError(f"--a entries look like INDEX=VALUE, got {item!r}")
        a[int(j)] = int(v)
    return MiechParams(args.p, args.n, args.k, a, args.w, args.z)


def build_group(args, audit: bool = True):
    from .engine.presentation import InvalidParameters, construct

    prm = params_from_args(args)
    bad = prm.problems()
    if bad:
        raise InvalidParameters("; ".join(bad))
    return construct(prm, audit=audit)


# --- commands -----------------------------------------------------------------------------------

def cmd_omega(args) -> int:
    if (args.y is None) == (args.range is None):
        raise UsageError("give exactly one of -y or --range")
    ys = [args.y] if args.y is not None else parse_range(args.range)
    lev = OmegaLevel(args.p, args.N)
    rows = []
    for y in ys:
        sol = omega_brute(lev, y) if (args.brute or args.witness) else None
        member = sol is not None if args.brute else omega_contains(lev, y)
        row = {"y": y, "member": member}
        if args.witness and sol is not None:
            row["witness"] = {"h": sol.h, "x": list(sol.x)}
        rows.append(row)
    if args.format == "text":
        for r in rows:
            print(f"{r['y']}: {str(r['member']).lower()}")
    elif args.format == "csv":
        emit_csv(["y", "member"], [(r["y"], str(r["member"]).lower()) for r in rows])
    else:
        emit_json({"command": "omega", "p": args.p, "N": args.N, "method": "search" if args.brute else "digit sum",
                   "results": rows})
    return 0


def cmd_sigma_stable(args) -> int:
    value = sigma_stable(args.p, args.e)
    found = stable_point_brute(args.p, args.e) if args.brute else None
    if args.format == "text":
        print(value)
    else:
        payload = {"command": "sigma-stable", "p": args.p, "e": args.e, "sigma": value}
        if found is not None:
            payload["search"] = found
        emit_json(payload)
    return 0 if found is None or found == value else 1


def cmd_genus(args) -> int:
    prof = PrimeProfile(args.p, args.n, args.e)
    bad = prof.violations()
    if bad:
        raise InvalidProfile("; ".join(bad))
    sig = Signature.parse(args.sig)
    payload = {"command": "genus", "signature": str(sig), "p": args.p, "n": args.n, "e": args.e,
               "reduced_genus": reduced_genus(sig, prof), "genus": genus(sig, prof), "level": level(sig)}
    if args.format == "text":
        print(payload["genus"])
    else:
        emit_json(payload)
    return 0


def cmd_spectrum(args) -> int:
    gp = profile_from_args(args)
    require_valid(gp)
    bound = args.bound if args.bound is not None else default_bound(gp)
    if bound < 1:
        raise UsageError("bound must be positive")
    windows = {}
    if args.mode in ("assemble", "both"):
        windows["assembled"] = assemble(gp, bound, args.errata)
    if args.mode in ("enumerate", "both"):
        windows["enumerated"] = enumerate_window(gp, bound, args.errata)
    agree = None
    if args.mode == "both":
        a, b = set(windows["assembled"].reduced_values), set(windows["enumerated"].reduced_values)
        agree = a == b
    main = next(iter(windows.values()))
    if args.format == "csv":
        emit_csv(["reduced_genus", "genus"], zip(main.reduced_values, main.full_genera()))
    elif args.format == "text":
        if agree is not None:
            print("AGREE" if agree else "DISAGREE")
        print(f"min_reduced {main.min_reduced}")
        print(f"stable_reduced {main.stable_reduced}" + ("" if main.stable_confirmed else " (unconfirmed)"))
        print(f"gaps {' '.join(map(str, main.gaps))}")
    else:
        payload = {"command": "spectrum", "mode": args.mode, "errata": args.errata,
                   "f_sets_source": _fset_source(gp, args.errata)}
        for name, w in windows.items():
            payload[name] = window_json(w, args.full)
        if agree is not None:
            a, b = set(windows["assembled"].reduced_values), set(windows["enumerated"].reduced_values)
            payload["agreement"] = "AGREE" if agree else "DISAGREE"
            payload["assembled_only"] = sorted(a - b)
            payload["enumerated_only"] = sorted(b - a)
        emit_json(payload)
    return 0 if agree in (None, True) else 1


def _fset_source(gp: GroupProfile, errata: bool) -> str | None:
    try:
        return f_sets(gp, errata).source
    except (MissingRow, OutOfRange):
        return None


def cmd_fsets(args) -> int:
    gp = profile_from_args(args)
    fam = f_sets(gp, args.errata)
    sets = {str(i): sorted(s) for i, s in enumerate(fam.sets)}
    if args.format == "text":
        print(fam.source)
        for i, s in enumerate(fam.sets):
            print(f"F_{i}: {sorted(s)}")
    else:
        emit_json({"command": "fsets", "profile": gp.to_json_dict(), "source": fam.source, "sets": sets})
    return 0


def cmd_classify(args) -> int:
    from .engine.classify import classify_full

    G = build_group(args, audit=not args.no_audit)
    cl = classify_full(G)
    if args.format == "text":
        print(f"type {cl.profile.type_class}, e = {cl.profile.e}, ed {cl.profile.ed_class}")
    else:
        emit_json({"command": "classify", "params": G.params.to_json_dict(), **cl.to_json_dict(G.p)})
    return 0


def cmd_zclasses(args) -> int:
    from .engine.classify import z_classes

    G = build_group(args, audit=not args.no_audit)
    zs = z_classes(G)
    if args.format == "text":
        print(f"{len(zs)} classes, orders {[z.element_order for z in zs]}")
    else:
        emit_json({"command": "zclasses", "params": G.params.to_json_dict(), "count": len(zs),
                   "orders": [z.element_order for z in zs], "classes": [z.to_json_dict(G.p) for z in zs]})
    return 0


def cmd_verify_group(args) -> int:
    from .engine.audit import verify_relations

    G = build_group(args, audit=False)
    rep = verify_relations(G, samples=args.samples, seed=args.seed)
    if args.format == "text":
        print("PASS" if rep.ok else "FAIL")
        for f in rep.failures:
            print(f"  {f}")
    else:
        emit_json({"command": "verify-group", **rep.to_json_dict()})
    return 0 if rep.ok else 1


def cmd_realizable(args) -> int:
    from .engine.realize import realizable

    G = build_group(args, audit=not args.no_audit)
    sig = Signature.parse(args.sig)
    res = realizable(G, sig, args.budget)
    if args.format == "text":
        print(res.verdict)
    else:
        emit_json({"command": "realizable", "params": G.params.to_json_dict(), "signature": str(sig),
                   **res.to_json_dict()})
    return 0


def cmd_verify_tables(args) -> int:
    from .engine.sweep import signature_box, verify_tables

    box = None
    if args.box:
        head, _, tail = args.box.partition(";")
        bounds = tuple(int(t) for t in tail.split(",") if t)
        box = signature_box(len(bounds), int(head), bounds, args.box_total)
    limit = 0 if args.census_only else args.oracle_max_order
    report = verify_tables(args.p, args.n, box, errata=args.errata, oracle_max_order=limit,
                           samples=args.samples, budget=args.budget)
    if args.format == "text":
        cen = report["census"]
        print(f"{cen['parameter_sets']} parameter sets, {len(cen['rejected'])} rejected")
        for k, v in cen["classes"].items():
            print(f"  {k}: {v}")
        print(f"oracle: {report['oracle_checked']} groups checked, {len(report['oracle_failures'])} failing")
        print("PASS" if report["ok"] else "FAIL")
    else:
        emit_json({"command": "verify-tables", "p": args.p, "n": args.n, **report})
    return 0 if report["ok"] else 1


def cmd_acceptance(args) -> int:
    from .acceptance import CHECKS, run_checks

    numbers = sorted({int(t) for t in args.criteria.split(",")}) if args.criteria else sorted(CHECKS)
    unknown = [k for k in numbers if k not in CHECKS]
    if unknown:
        raise UsageError(f"unknown criteria {unknown}")
    results = []
    for res in run_checks(numbers):
        results.append(res)
        if args.format == "text":
            print(res.line(), flush=True)
            if args.verbose:
                for d in res.details:
                    print(f"    {d}")
    if args.format == "json":
        emit_json({"command": "acceptance", "results": [r.to_json_dict() for r in results]})
    return 0 if all(r.passed for r in results) else 1


# --- parser -------------------------------------------------------------------------------------

def _profile_options(sp) -> None:
    sp.add_argument("--profile", help="profile as inline JSON or a JSON file path")
    sp.add_argument("-p", type=int)
    sp.add_argument("-n", type=int)
    sp.add_argument("-e", type=int)
    sp.add_argument("--type", choices=TYPES)
    sp.add_argument("--ed", choices=(ONE, AT_LEAST_TWO))
    sp.add_argument("--exp-g1", dest="exp_g1", type=int)
    sp.add_argument("--ppp", type=parse_bool, help="(p,p,p)-type flag")
    sp.add_argument("--p2-triple", dest="p2_triple", type=parse_bool, help="(p^2,p^2,p^2)-type flag")
    sp.add_argument("--c-zero", dest="c_zero", type=parse_bool)
    sp.add_argument("--errata", action="store_true", help="apply the documented table corrections")


def _group_options(sp) -> None:
    sp.add_argument("--params", help="Miech parameters as inline JSON or a JSON file path")
    sp.add_argument("-p", type=int)
    sp.add_argument("-n", type=int)
    sp.add_argument("-k", type=int, default=0)
    sp.add_argument("--a", help="coefficients as INDEX=VALUE,...")
    sp.add_argument("-w", type=int, default=0)
    sp.add_argument("-z", type=int, default=0)
    sp.add_argument("--no-audit", action="store_true", help="skip the relation audit before use")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genus-spectra", description="Genus spectra of p-groups of maximal class.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, formats=("json", "text")):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.set_defaults(func=fn)
        return sp

    sp = add("omega", cmd_omega, "membership in Omega_N(p)", ("json", "text", "csv"))
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-N", type=int, required=True)
    sp.add_argument("-y", type=int)
    sp.add_argument("--range", help="A..B inclusive")
    sp.add_argument("--brute", action="store_true", help="use exhaustive search instead of the digit-sum test")
    sp.add_argument("--witness", action="store_true", help="include a representation for each member")

    sp = add("sigma-stable", cmd_sigma_stable, "least stable point of Omega_e(p)")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-e", type=int, required=True)
    sp.add_argument("--brute", action="store_true", help="also run the search and compare")

    sp = add("genus", cmd_genus, "genus of a signature")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-e", type=int, required=True)
    sp.add_argument("--sig", required=True, help="'(h; m1,...,me)'")

    sp = add("spectrum", cmd_spectrum, "reduced genus spectrum window", ("json", "text", "csv"))
    _profile_options(sp)
    sp.add_argument("--bound", type=int, help="window upper end (default 2*sigma_e(p))")
    sp.add_argument("--mode", choices=("assemble", "enumerate", "both"), default="both")
    sp.add_argument("--full", action="store_true", help="always list every value")

    sp = add("fsets", cmd_fsets, "F-sets for a profile")
    _profile_options(sp)

    for name, fn, text in (("classify", cmd_classify, "construct and classify a group"),
                           ("zclasses", cmd_zclasses, "uniform z-classes of a group"),
                           ("realizable", cmd_realizable, "search for a generating vector")):
        sp = add(name, fn, text)
        _group_options(sp)
        if name == "realizable":
            sp.add_argument("--sig", required=True)
            sp.add_argument("--budget", type=int, default=50_000_000)

    sp = add("verify-group", cmd_verify_group, "audit the defining relations")
    _group_options(sp)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("verify-tables", cmd_verify_tables, "sweep parameters and compare realizability with the tables")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--box", help="'HMAX;M1,M2,...' signature box (default depends on e)")
    sp.add_argument("--box-total", type=int, help="bound on m1+...+me inside the box")
    sp.add_argument("--census-only", action="store_true", help="skip realizability")
    sp.add_argument("--oracle-max-order", type=int, default=729)
    sp.add_argument("--errata", action="store_true")
    sp.add_argument("--samples", type=int, default=2000)
    sp.add_argument("--budget", type=int, default=50_000_000)

    sp = add("acceptance", cmd_acceptance, "run the acceptance checks", ("text", "json"))
    sp.add_argument("--criteria", help="comma-separated criterion numbers (default all)")
    sp.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    from .engine.presentation import InvalidParameters
    from .engine.realize import OversizedRequest
    from .spectrum import WindowTooSmall

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (InvalidProfile, InvalidParameters, FlagRequired, MissingRow, OutOfRange, OversizedRequest,
            WindowTooSmall, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
