"""Shared test fixtures and independent oracles.

The oracles here deliberately avoid the library's own code paths (and numpy
where feasible) so that agreement between implementation and oracle is
meaningful evidence, not a tautology.
"""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "odforge",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    max_examples=60,
)
settings.load_profile("odforge")


def naive_matmul(a, b):
    """Triple-loop integer matrix product over Python ints."""
    rows, inner, cols = len(a), len(b), len(b[0])
    assert len(a[0]) == inner
    return [
        [sum(int(a[i][t]) * int(b[t][j]) for t in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def naive_gram(rows):
    """rows @ rows^T over Python ints."""
    transposed = [list(col) for col in zip(*rows)]
    return naive_matmul(rows, transposed)


def is_weighing_oracle(rows, k):
    """Definition-level weighing check, no linear algebra library."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        return False
    for r in rows:
        if any(int(v) not in (-1, 0, 1) for v in r):
            return False
    gram = naive_gram(rows)
    for i in range(n):
        for j in range(n):
            want = k if i == j else 0
            if gram[i][j] != want:
                return False
    return True


def three_squares_oracle(k):
    """Brute-force: is k a sum of three integer squares?"""
    import math

    for a in range(math.isqrt(k) + 1):
        rem_a = k - a * a
        for b in range(a, math.isqrt(rem_a) + 1):
            rem = rem_a - b * b
            c = math.isqrt(rem)
            if c * c == rem:
                return True
            if rem < b * b:
                break
    return False


def frobenius_oracle(x, y, n):
    """All (a, b) with a*x + b*y = n, by enumeration."""
    out = []
    for a in range(n // x + 1):
        rest = n - a * x
        if rest % y == 0:
            out.append((a, rest // y))
    return out


def paf_oracle(row, shift):
    """Periodic autocorrelation of a first row at a given shift."""
    n = len(row)
    return sum(int(row[i]) * int(row[(i + shift) % n]) for i in range(n))


@pytest.fixture
def rng():
    return np.random.default_rng(20260819)
