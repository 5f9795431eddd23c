#!/usr/bin/env python3
"""Worked example: the full derivation pipeline for weight 92.

Walks through every stage the existence engine runs for the four-square
family at weight 92: the default decomposition into four squares, the odd
block-array plan, the power-of-two exponents, the coprime-combination
threshold N, and (optionally) the materialization of the odd-order seed
OD(3276; 4, 16, 36, 36) with full verification.

Usage:
    python3 scripts/worked_example.py            # arithmetic only, instant
    python3 scripts/worked_example.py --build    # also build the 3276-order seed
"""

from __future__ import annotations

import argparse
import time

from odforge.arith import decompose_four_squares, frobenius_representation
from odforge.constructions import goethals_seidel_od, odd_block_orders
from odforge.existence import bound_N


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--build",
        action="store_true",
        help="materialize and verify the order-3276 seed (about 20 s)",
    )
    parser.add_argument("--k", type=int, default=92, help="weight (default 92)")
    args = parser.parse_args()
    k = args.k

    print(f"== weight {k}: four-square family ==")
    quad = decompose_four_squares(k)
    print(f"a generic four-square decomposition: {quad}"
          f"  ({' + '.join(f'{v}^2' for v in quad)} = {sum(v * v for v in quad)})")
    print("(the engine prefers a square-extracted decomposition, which keeps")
    print(" the block orders small; both are shown in the derivation below)")

    derivation = bound_N(k, "four-square-4n")
    print()
    print(derivation.render())

    b_list, q = odd_block_orders(derivation.ks)
    print()
    print(f"odd seed: block-array levels b = {list(b_list)}, q = {q}, order 4q = {4 * q}")
    print(f"power-of-two seed order: {derivation.pow2_order}")
    rep = frobenius_representation(derivation.x, derivation.y, derivation.N)
    print(
        f"threshold N = {derivation.x} * {derivation.y} = {derivation.N}; "
        f"at t = N the split is t = {rep.a}*{derivation.x} + {rep.b}*{derivation.y}"
    )
    print(
        f"conclusion: a weighing matrix W({derivation.h}*t, {k}) exists for "
        f"every t >= {derivation.N}"
    )

    if args.build:
        print()
        print(f"building the order-{4 * q} seed (verification included)...")
        start = time.monotonic()
        witness = goethals_seidel_od(*derivation.ks)
        elapsed = time.monotonic() - start
        claim = witness.claim
        print(
            f"built and verified OD({claim.order}; "
            f"{','.join(str(s) for s in claim.type_tuple)}) in {elapsed:.1f} s"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
