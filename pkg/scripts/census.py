"""Audit and classify every swept parameter set for the given (p, n) pairs and print type counts."""

import argparse
import json
import time

from genus_spectra.engine.sweep import census


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("pairs", nargs="*", default=["3,4", "3,5", "3,6", "5,6", "5,7"], help="p,n pairs")
    ap.add_argument("--samples", type=int, default=2000)
    args = ap.parse_args()
    for pair in args.pairs:
        p, n = (int(t) for t in pair.split(","))
        start = time.time()
        report = census(p, n, args.samples).to_json_dict()
        report.pop("examples")
        report["seconds"] = round(time.time() - start, 1)
        print(json.dumps(report, sort_keys=True), flush=True)


if __name__ == "__main__":
    main()
