"""Compare assembled and enumerated spectra over a profile matrix, on the printed or corrected tables."""

import argparse
import time

from genus_spectra.fsets import MissingRow
from genus_spectra.matrix import profile_matrix
from genus_spectra.spectrum import assembled_values, default_bound, derived_f_sets, enumerated_values


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", default="3,5,7")
    ap.add_argument("--exponents", default="2,3")
    ap.add_argument("--errata", action="store_true")
    args = ap.parse_args()
    primes = tuple(int(t) for t in args.primes.split(","))
    exps = tuple(int(t) for t in args.exponents.split(","))
    start = time.time()
    counts = {"AGREE": 0, "DIFF": 0, "MISSING": 0}
    for gp in profile_matrix(primes, exps):
        bound = default_bound(gp)
        tag = (f"p={gp.p} n={gp.n} e={gp.e} {gp.type_class} {gp.ed_class} exp_g1={gp.exp_g1} "
               f"ppp={gp.ppp_type} p2t={gp.p2_triple_type}")
        try:
            a = assembled_values(gp, bound, args.errata)
        except MissingRow as exc:
            counts["MISSING"] += 1
            print(f"MISSING {tag}: {exc}; derived F-sets {derived_f_sets(gp, bound, args.errata)}", flush=True)
            continue
        en = enumerated_values(gp, bound, args.errata)
        if a == en:
            counts["AGREE"] += 1
            print(f"AGREE   {tag}", flush=True)
        else:
            counts["DIFF"] += 1
            print(f"DIFF    {tag}: assembled only {sorted(a - en)[:8]}, enumerated only {sorted(en - a)[:8]}",
                  flush=True)
    print(counts, f"{time.time() - start:.1f}s")


if __name__ == "__main__":
    main()
