"""Lift a seeded corpus of random Artinian ideals and check every invariant.

    python3 scripts/run_corpus.py --size 200 --seed 20240611 --out corpus.json
"""

import argparse
import json
import time

from monolift.configuration import components_artinian, is_generalized_stick_figure
from monolift.corpus import CorpusConfig, artinian_corpus
from monolift.ideals import graded_betti, hilbert_series
from monolift.lifting import lift_taylor_complex, lifted_hilbert_function, tor_betti, vandermonde_lifting_matrix
from monolift.monomial import max_exponents
from monolift.osequence import difference


def check(J, t, degree_bound):
    lengths, _ = max_exponents(J)
    A = vandermonde_lifting_matrix(J.n, t, lengths)
    values, method = lifted_hilbert_function(J, A, degree_bound)
    h = hilbert_series(J).h_vector
    target = [h[d] if d < len(h) else 0 for d in range(degree_bound + 1)]
    V = components_artinian(J, lengths, t)
    return {
        "ideal": str(J),
        "t": t,
        "h_vector": list(h),
        "difference_identity": difference(values, t) == target,
        "component_count": len(V) == sum(h),
        "betti": tor_betti(lift_taylor_complex(J, A)) == graded_betti(J),
        "stick": is_generalized_stick_figure(V).passed,
        "hilbert_method": method,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=200)
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    ap.add_argument("--max-vars", type=int, default=4)
    ap.add_argument("--max-power", type=int, default=4)
    ap.add_argument("--degree-bound", type=int, default=10)
    ap.add_argument("--out", help="write per-ideal records here")
    args = ap.parse_args()

    config = CorpusConfig(size=args.size, max_vars=args.max_vars, max_power=args.max_power, seed=args.seed)
    start = time.time()
    records = [check(J, t, args.degree_bound) for J, t in artinian_corpus(config)]
    keys = ["difference_identity", "component_count", "betti", "stick"]
    failures = [r for r in records if not all(r[k] for k in keys)]
    print(f"{len(records)} ideals, {len(failures)} failures, {time.time() - start:.1f}s")
    for k in keys:
        print(f"  {k:20s} {sum(r[k] for r in records)}/{len(records)}")
    for r in failures[:10]:
        print("  FAIL", r["ideal"], "t =", r["t"])
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"config": vars(args), "records": records}, fh, indent=1)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
