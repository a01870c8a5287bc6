"""Realizability oracle against table admissibility for every swept group of order p^n."""

import argparse
import json
import time

from genus_spectra.engine.classify import classify
from genus_spectra.engine.presentation import Group
from genus_spectra.engine.sweep import compare_with_tables, default_box, signature_box, sweep_params


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-p", type=int, default=3)
    ap.add_argument("-n", type=int, default=5)
    ap.add_argument("--box", help="'HMAX;M1,M2,...' (default depends on e)")
    ap.add_argument("--box-total", type=int)
    ap.add_argument("--errata", action="store_true")
    ap.add_argument("--one-per-type", action="store_true", help="check only the first group of each type")
    ap.add_argument("--budget", type=int, default=2 * 10**9)
    args = ap.parse_args()
    box = None
    if args.box:
        head, _, tail = args.box.partition(";")
        bounds = tuple(int(t) for t in tail.split(","))
        box = signature_box(len(bounds), int(head), bounds, args.box_total)
    seen = set()
    for prm in sweep_params(args.p, args.n):
        G = Group(prm)
        gp = classify(G)
        if args.one_per_type and gp.type_class in seen:
            continue
        seen.add(gp.type_class)
        start = time.time()
        cmp = compare_with_tables(G, box or default_box(gp.e), args.budget, args.errata)
        print(json.dumps({"group": prm.label(), "type": gp.type_class, "ed": gp.ed_class, "checked": cmp.checked,
                          "mismatches": cmp.mismatches, "unknown": cmp.unknown,
                          "seconds": round(time.time() - start, 1)}, sort_keys=True), flush=True)


if __name__ == "__main__":
    main()
