#!/usr/bin/env python3
"""Survey every catalog entry's named isometries and tabulate invariants.

Prints one row per (entry, isometry) pair: determinant, corner signs,
the three-bit class, the mapping-torus obstruction, and whether product
stabilization is guaranteed at n=1 and n=2.
"""

import argparse
import json
import sys

from pscstab.catalog import get_entry, list_entries
from pscstab.isometries import delta_pm, iso_det
from pscstab.jsonio import canonical_dumps, encode_sign
from pscstab.mapping_torus import phi_invariant, w2w3_mapping_torus
from pscstab.quad_forms import is_even
from pscstab.stabilization import GUARANTEED, check_product_stabilization


def survey_rows():
    rows = []
    for name in list_entries():
        if "(" in name:
            continue  # parameterized template, not a concrete entry
        entry = get_entry(name)
        spin = is_even(entry.form)
        for iso_name, iso in entry.known_isometries:
            dp, dm = delta_pm(iso)
            phi = phi_invariant(iso)
            verdicts = {
                n: check_product_stabilization(iso, spin, n).verdict == GUARANTEED
                for n in (1, 2)
            }
            rows.append({
                "entry": name,
                "isometry": iso_name,
                "spin": spin,
                "det": encode_sign(iso_det(iso)),
                "delta_plus": encode_sign(dp),
                "delta_minus": encode_sign(dm),
                "phi": list(phi.bits()),
                "w2w3": w2w3_mapping_torus(iso),
                "stab_n1": verdicts[1],
                "stab_n2": verdicts[2],
            })
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true",
                        help="emit canonical JSON instead of a table")
    args = parser.parse_args(argv)

    rows = survey_rows()
    if args.json:
        print(canonical_dumps({"rows": rows}), end="")
        return 0

    header = (f"{'entry':<10} {'isometry':<22} {'det':>4} {'d+':>3} {'d-':>3} "
              f"{'phi':<9} {'w2w3':>4} {'n=1':>4} {'n=2':>4}")
    print(header)
    print("-" * len(header))
    for r in rows:
        phi = "".join(str(b) for b in r["phi"])
        print(f"{r['entry']:<10} {r['isometry']:<22} {r['det']:>4} "
              f"{r['delta_plus']:>3} {r['delta_minus']:>3} {phi:<9} "
              f"{r['w2w3']:>4} {str(r['stab_n1']):>4} {str(r['stab_n2']):>4}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
