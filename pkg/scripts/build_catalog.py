#!/usr/bin/env python3
"""Generate the packaged catalog of small all-ones designs.

Each entry is constructed, verified, and written as a .od matrix file plus a
MANIFEST.txt line recording how it came to be.  The four entries:

* order 2:  the explicit symmetric pattern [[x1, x2], [x2, -x1]]
* order 4:  quaternion left-multiplication family
* order 8:  octonion left-multiplication family (Fano-plane triple rule)
* order 16: lexicographically first Kronecker-word family from the bounded
            backtracking search

Run from anywhere; by default writes into src/odforge/data/catalog next to
this script's repository root.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

REPO_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO_ROOT / "src"))

from odforge.constructions import _search_monomial_design  # noqa: E402
from odforge.matfile import emit_matrix_file  # noqa: E402
from odforge.matrices import (  # noqa: E402
    ODType,
    SignedVarMatrix,
    structure_check,
    verify_od,
)

# Fano-plane triples defining the octonion products: for (a, b, c) the cyclic
# products are e_a e_b = e_c, e_b e_c = e_a, e_c e_a = e_b; reversing a pair
# flips the sign; e_i e_i = -e_0; e_0 is the unit.
TRIPLES = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 4, 7), (2, 5, 7), (3, 6, 5), (1, 7, 6))


def octonion_codes(dim: int) -> np.ndarray:
    """Variable codes of X = sum_i x_{i+1} L_{e_i} on the first dim units."""
    product: dict[tuple[int, int], tuple[int, int]] = {}
    for b in range(8):
        product[(0, b)] = (1, b)
        product[(b, 0)] = (1, b)
    for a in range(1, 8):
        product[(a, a)] = (-1, 0)
    for a, b, c in TRIPLES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            product[(x, y)] = (1, z)
            product[(y, x)] = (-1, z)
    codes = np.zeros((dim, dim), dtype=np.int64)
    for i in range(dim):
        for col in range(dim):
            sign, row = product[(i, col)]
            if row >= dim:
                raise AssertionError(f"unit {i} leaves the span at column {col}")
            if codes[row, col]:
                raise AssertionError(f"cell ({row}, {col}) written twice")
            codes[row, col] = sign * (i + 1)
    return codes


def build_entries(search_ms: int) -> list[tuple[str, SignedVarMatrix, ODType, str]]:
    entries = []

    two = SignedVarMatrix(np.array([[1, 2], [2, -1]], dtype=np.int64), 2)
    entries.append(
        (
            "od0002_ones2.od",
            two,
            ODType(2, (1, 1)),
            "explicit symmetric pattern [[x1, x2], [x2, -x1]]",
        )
    )

    entries.append(
        (
            "od0004_ones4.od",
            SignedVarMatrix(octonion_codes(4), 4),
            ODType(4, (1, 1, 1, 1)),
            "quaternion left-multiplication family",
        )
    )

    entries.append(
        (
            "od0008_ones8.od",
            SignedVarMatrix(octonion_codes(8), 8),
            ODType(8, (1,) * 8),
            "octonion left-multiplication family (Fano triple rule)",
        )
    )

    import time

    t16 = ODType(16, (1,) * 9)
    found = _search_monomial_design(t16, time.monotonic() + search_ms / 1000.0)
    if found is None:
        raise SystemExit("order-16 search failed; raise --search-ms")
    entries.append(
        (
            "od0016_ones9.od",
            found,
            t16,
            "lexicographically first Kronecker-word family from the bounded search",
        )
    )
    return entries


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        type=Path,
        default=REPO_ROOT / "src" / "odforge" / "data" / "catalog",
        help="output directory (default: the packaged data directory)",
    )
    parser.add_argument("--search-ms", type=int, default=30000)
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    manifest_lines = ["# catalog entries: <file>: <how it was built>"]
    for name, matrix, claim, provenance in build_entries(args.search_ms):
        report = verify_od(matrix, claim)
        if not report.ok:
            raise SystemExit(f"{name} failed verification: {report.message()}")
        shape = structure_check(matrix)
        flags = []
        if shape.symmetric:
            flags.append("sym")
        if shape.skew_symmetric:
            flags.append("skew")
        if shape.circulant:
            flags.append("circ")
        text = emit_matrix_file(matrix, claim, flags)
        (args.out / name).write_text(text)
        manifest_lines.append(f"{name}: {provenance}")
        print(f"wrote {name}: order {claim.order}, type {claim.type_tuple}, flags {flags}")
    (args.out / "MANIFEST.txt").write_text("\n".join(manifest_lines) + "\n")
    print(f"manifest with {len(manifest_lines) - 1} entries -> {args.out}")


if __name__ == "__main__":
    main()
