#!/usr/bin/env python3
"""Rebuild every stored reference matrix from scratch and diff it.

Each construction in perfectnt.reference is regenerated from its code
parameters alone and compared entry-for-entry against the stored
values. Prints MATCH/MISMATCH per matrix (and the matrix body unless
--quiet) and exits 1 on any mismatch.

Usage:
    python3 scripts/reproduce_reference_matrices.py [--quiet] [--only NAME]
"""

import argparse
import sys

from perfectnt import reference
from perfectnt.codes import cyclic_hamming_spec, golay_spec, hamming74_systematic, hamming_parity_check
from perfectnt.matrix import format_matrix_text
from perfectnt.transforms import (
    InflationStrategy,
    build_cyclic,
    build_extended_golay,
    build_standard,
    inflate,
)


def rebuilt_matrices():
    """(name, freshly built matrix, stored matrix) triples."""
    lam = reference.GOLDEN_LAMBDA
    h13 = hamming_parity_check(3, 3)
    h7 = cyclic_hamming_spec(2, 3)
    ext = build_extended_golay(lam)
    yield (
        "hamming74-transform",
        build_standard(hamming74_systematic(), lam).matrix,
        reference.matrix(2, reference.HAMMING74_TRANSFORM),
    )
    yield "hamming13-parity", h13.H, reference.matrix(3, reference.TERNARY_HAMMING13_PARITY)
    yield (
        "hamming13-transform",
        build_standard(h13, lam).matrix,
        reference.matrix(3, reference.TERNARY_HAMMING13_TRANSFORM),
    )
    yield "hamming7-parity", h7.H, reference.matrix(2, reference.CYCLIC_HAMMING7_PARITY)
    yield (
        "hamming7-inflated",
        inflate(h7, InflationStrategy.cyclic_shifts()),
        reference.matrix(2, reference.CYCLIC_HAMMING7_INFLATED),
    )
    yield (
        "hamming7-transform",
        build_cyclic(h7, lam).matrix,
        reference.matrix(2, reference.CYCLIC_HAMMING7_TRANSFORM),
    )
    yield (
        "golay23-transform",
        build_cyclic(golay_spec("binary"), lam).matrix,
        reference.matrix(2, reference.BINARY_GOLAY23_TRANSFORM),
    )
    yield (
        "golay11-cyclic-transform",
        build_cyclic(golay_spec("ternary"), lam).matrix,
        reference.matrix(3, reference.TERNARY_GOLAY11_CYCLIC_TRANSFORM),
    )
    yield (
        "golay11-systematic-transform",
        build_standard(golay_spec("ternary_systematic"), lam).matrix,
        reference.matrix(3, reference.TERNARY_GOLAY11_SYSTEMATIC_TRANSFORM),
    )
    yield (
        "extended-golay12-transform",
        ext.matrix,
        reference.matrix(3, reference.EXTENDED_GOLAY12_TRANSFORM),
    )
    yield (
        "extended-golay12-inverse",
        ext.inverse_matrix,
        reference.matrix(3, reference.EXTENDED_GOLAY12_INVERSE),
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="verdict lines only")
    parser.add_argument("--only", help="restrict to names containing this substring")
    args = parser.parse_args(argv)

    mismatched = []
    shown = 0
    for name, built, stored in rebuilt_matrices():
        if args.only and args.only not in name:
            continue
        shown += 1
        verdict = "MATCH" if built == stored else "MISMATCH"
        if verdict == "MISMATCH":
            mismatched.append(name)
        print(f"{verdict}  {name}  ({built.rows}x{built.cols} over GF({built.field.p}))")
        if not args.quiet:
            sys.stdout.write(format_matrix_text(built))
            print()
    if shown == 0:
        print(f"no reference matrix matches --only {args.only!r}", file=sys.stderr)
        return 1
    if mismatched:
        print(f"{len(mismatched)} mismatch(es): {', '.join(mismatched)}")
        return 1
    print(f"all {shown} matrices reproduced exactly")
    return 0


if __name__ == "__main__":
    sys.exit(main())
