"""Shared frozen expectations and small helpers for the test suite."""

from nearvec import is_prime

# Published multiplication tables for U(26)/<3> and U(24)/<5>, row/column
# order matching the ascending element lists.
G1_ELEMENTS = [1, 5, 7, 17]
G1_MUL_TABLE = [
    [1, 5, 7, 17],
    [5, 17, 1, 7],
    [7, 1, 17, 5],
    [17, 7, 5, 1],
]

G2_ELEMENTS = [1, 7, 13, 19]
G2_MUL_TABLE = [
    [1, 7, 13, 19],
    [7, 1, 19, 13],
    [13, 19, 1, 7],
    [19, 13, 7, 1],
]

# Published class-count grids for m = 4..8: {m: {N: classes}}.
G1_CLASS_GRID = {
    4: {1: 1, 2: 5, 3: 3, 4: 1},
    5: {1: 1, 2: 6, 3: 6, 4: 1},
    6: {1: 1, 2: 8, 3: 10, 4: 3},
    7: {1: 1, 2: 9, 3: 15, 4: 5},
    8: {1: 1, 2: 11, 3: 21, 4: 10},
}
G1_TOTALS = {4: 10, 5: 14, 6: 22, 7: 30, 8: 43}

G2_CLASS_GRID = {
    4: {1: 1, 2: 6, 3: 3, 4: 1},
    5: {1: 1, 2: 6, 3: 6, 4: 1},
    6: {1: 1, 2: 9, 3: 10, 4: 4},
    7: {1: 1, 2: 9, 3: 15, 4: 5},
    8: {1: 1, 2: 12, 3: 21, 4: 11},
}
G2_TOTALS = {4: 11, 5: 14, 6: 24, 7: 30, 8: 45}


def prime_powers(limit):
    """All (p, n, p**n) with p prime, n >= 1 and p**n <= limit, ascending."""
    out = []
    for p in range(2, limit + 1):
        if is_prime(p):
            n, q = 1, p
            while q <= limit:
                out.append((p, n, q))
                n += 1
                q *= p
    return sorted(out, key=lambda t: t[2])
