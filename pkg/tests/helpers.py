"""Shared test fixtures: descriptor sweeps and the published count tables."""

import itertools

from ncfkit import NcfDescriptor, PrimeField
from ncfkit.field import interval_sets

# Exhaustively sweepable descriptor spaces (4, 32, 24, and 576 descriptors).
EXHAUSTIVE = ((2, 1), (2, 2), (3, 1), (3, 2))

# Published counts for p=3 and p=5, n = 1..8.
TABLE_P3 = [12, 192, 5568, 219648, 10834944, 641335296, 44288360448, 3495313145856]
TABLE_P5 = [
    80,
    5120,
    547840,
    78561280,
    14082703360,
    3029304606720,
    760232846295040,
    218043057365319680,
]


def all_descriptors(p, n):
    """Every descriptor of the (p, n) space, in a fixed deterministic order."""
    field = PrimeField(p)
    for sigma in itertools.permutations(range(1, n + 1)):
        for sets in itertools.product(interval_sets(field), repeat=n):
            for head in itertools.product(range(p), repeat=n):
                for last in range(p):
                    if last != head[-1]:
                        yield NcfDescriptor(field, n, sigma, sets, head + (last,))
