"""Minimum and stable reduced genus per profile (window 2*sigma_e(p)) next to the closed forms."""

import argparse

from genus_spectra.matrix import profile_matrix
from genus_spectra.spectrum import default_bound, enumerate_window, min_genus_closed_form, stable_closed_form


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", default="3,5,7")
    ap.add_argument("--exponents", default="3")
    ap.add_argument("--errata", action="store_true")
    args = ap.parse_args()
    primes = tuple(int(t) for t in args.primes.split(","))
    exps = tuple(int(t) for t in args.exponents.split(","))
    print("p  n  e  type ed            min  (closed)  stable  (closed)")
    for gp in profile_matrix(primes, exps):
        w = enumerate_window(gp, default_bound(gp), args.errata)
        mark = lambda got, want: "" if want is None or want == got else "  <-- differs"
        mc, sc = min_genus_closed_form(gp), stable_closed_form(gp)
        flags = "" if gp.ppp_type is None else f" ppp={gp.ppp_type}"
        print(f"{gp.p:<2} {gp.n:<2} {gp.e:<2} {gp.type_class:<4} {gp.ed_class:<13} {w.min_reduced:>5} ({mc})"
              f"  {w.stable_reduced} ({sc}){flags}{mark(w.min_reduced, mc)}{mark(w.stable_reduced, sc)}")


if __name__ == "__main__":
    main()
