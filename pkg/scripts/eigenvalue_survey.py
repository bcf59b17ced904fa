#!/usr/bin/env python3
"""Survey diagonal eigenvalues across every shipped construction.

For each code and inflation strategy this prints, per residue lambda,
the determinant of H_e + lambda*I and whether the transform is
invertible there. The eigenspace for any admissible lambda is the
kernel of H_e itself, so its dimension is listed once per code.

Usage:
    python3 scripts/eigenvalue_survey.py [--json]
"""

import argparse
import json
import sys

from perfectnt.codes import (
    cyclic_hamming_spec,
    golay_spec,
    hamming74_systematic,
    hamming_parity_check,
    shortened_hamming_6_3,
)
from perfectnt.matrix import kernel_basis
from perfectnt.transforms import (
    EXTENDED_GOLAY_COMBINATION_PAIRS,
    InflationStrategy,
    eigen_candidates,
    inflate,
)


def surveyed_constructions():
    null = InflationStrategy.null_rows()
    cyc = InflationStrategy.cyclic_shifts()
    combo = InflationStrategy.row_combinations(EXTENDED_GOLAY_COMBINATION_PAIRS)
    yield hamming74_systematic(), null
    yield hamming_parity_check(3, 3), null
    yield cyclic_hamming_spec(2, 3), cyc
    yield cyclic_hamming_spec(2, 4), cyc
    yield golay_spec("binary"), cyc
    yield golay_spec("ternary"), cyc
    yield golay_spec("ternary_systematic"), null
    yield golay_spec("extended_ternary"), combo
    yield shortened_hamming_6_3(), null


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    args = parser.parse_args(argv)

    rows = []
    for spec, strategy in surveyed_constructions():
        table = eigen_candidates(spec, strategy)
        dim = kernel_basis(inflate(spec, strategy)).rows
        admissible = [lam for lam, det in table if det != 0]
        rows.append(
            {
                "code": spec.label,
                "p": spec.field.p,
                "N": spec.N,
                "strategy": strategy.kind,
                "eigenspace_dim": dim,
                "candidates": [{"lambda": lam, "det": det} for lam, det in table],
                "admissible": admissible,
            }
        )

    if args.json:
        json.dump(rows, sys.stdout, indent=2)
        print()
        return 0

    for row in rows:
        print(f"{row['code']}  (GF({row['p']}), N={row['N']}, {row['strategy']})")
        for cand in row["candidates"]:
            verdict = "admissible" if cand["det"] != 0 else "unsuitable"
            print(f"  lambda={cand['lambda']}  det={cand['det']}  {verdict}")
        print(f"  eigenspace dim={row['eigenspace_dim']} at every admissible lambda")
        print()
    total = sum(len(r["admissible"]) for r in rows)
    print(f"{len(rows)} constructions, {total} admissible eigenvalues in total")
    return 0


if __name__ == "__main__":
    sys.exit(main())
