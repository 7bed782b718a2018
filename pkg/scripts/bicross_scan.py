#!/usr/bin/env python3
"""Exhaustive scan of two-sided products with two 1-dim factors over F_p.

Every combination of factor squares (s, t) and action weights (wr, wl)
is tested twice: once through the matched-pair conditions and once by
checking the cube law directly on the 2-dim combined product.  The two
verdicts must agree on all p^4 combinations; the script reports the
matched count and a breakdown by factor shape.

    python3 scripts/bicross_scan.py
    python3 scripts/bicross_scan.py --p 7
"""

import argparse
import itertools
import time
from collections import Counter
from dataclasses import dataclass

from jalg import Algebra, Field, LeftAction, MatchedPair, RightAction, bicross_table


@dataclass(frozen=True)
class ScanConfig:
    p: int = 5


def run(config: ScanConfig) -> int:
    f = Field(config.p)
    p = config.p
    t0 = time.perf_counter()
    matched = 0
    disagreements = 0
    by_shape: Counter = Counter()
    for s, t, wr, wl in itertools.product(range(p), repeat=4):
        A = Algebra.from_products(f, ("a",), {("a", "a"): {"a": s}})
        V = Algebra.from_products(f, ("x",), {("x", "x"): {"x": t}})
        mp = MatchedPair(A, V, RightAction(V, A, [[[wr]]]), LeftAction(V, A, [[[wl]]]))
        pair_ok = mp.verify(stop_early=True).ok
        product_ok = bicross_table(mp).jordan_check().ok
        if pair_ok != product_ok:
            disagreements += 1
            print(f"DISAGREEMENT at (s,t,wr,wl) = {(s, t, wr, wl)}")
        if pair_ok:
            matched += 1
            # shape key: which of s, t are zero (idempotent vs null factor)
            by_shape[(s != 0, t != 0)] += 1
    elapsed = time.perf_counter() - t0

    print(f"p = {p}: {matched} matched pairs of {p ** 4} combinations ({elapsed:.2f}s)")
    print(f"verdict disagreements: {disagreements}")
    for (a_nonzero, v_nonzero), count in sorted(by_shape.items()):
        a_kind = "a^2 != 0" if a_nonzero else "a^2 = 0"
        v_kind = "x^2 != 0" if v_nonzero else "x^2 = 0"
        print(f"  {a_kind}, {v_kind}: {count}")
    return 1 if disagreements else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p", type=int, default=5, help="field characteristic (default 5)")
    args = parser.parse_args(argv)
    return run(ScanConfig(args.p))


if __name__ == "__main__":
    raise SystemExit(main())
