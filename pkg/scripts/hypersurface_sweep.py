#!/usr/bin/env python3
"""Sweep smooth degree-d hypersurfaces in CP^3 and report their topology.

For each degree prints the Euler characteristic, signature, middle betti
numbers, spin parity, and whether a stable metric of positive scalar
curvature exists on the underlying manifold.
"""

import argparse
import sys

from pscstab.catalog import hypersurface
from pscstab.jsonio import canonical_dumps
from pscstab.stabilization import stable_psc_from_signature


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-degree", type=int, default=12,
                        help="largest degree to include (default 12)")
    parser.add_argument("--json", action="store_true",
                        help="emit canonical JSON instead of a table")
    args = parser.parse_args(argv)
    if args.max_degree < 1:
        parser.error("--max-degree must be at least 1")

    rows = []
    for d in range(1, args.max_degree + 1):
        inv = hypersurface(d)
        psc = stable_psc_from_signature(inv.signature if inv.spin else 0,
                                        inv.spin)
        rows.append({
            "degree": d,
            "euler": inv.euler,
            "signature": inv.signature,
            "b2": inv.b2,
            "b2_plus": inv.b2_plus,
            "spin": inv.spin,
            "stable_psc": psc.stably_exists,
        })

    if args.json:
        print(canonical_dumps({"rows": rows}), end="")
        return 0

    header = (f"{'d':>3} {'euler':>7} {'sigma':>7} {'b2':>6} {'b2+':>6} "
              f"{'spin':>5} {'psc':>5}")
    print(header)
    print("-" * len(header))
    for r in rows:
        print(f"{r['degree']:>3} {r['euler']:>7} {r['signature']:>7} "
              f"{r['b2']:>6} {r['b2_plus']:>6} {str(r['spin']):>5} "
              f"{str(r['stable_psc']):>5}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
