"""Perfect-matching counts of bipartite multigraphs.

The count equals the permanent of the multiplicity matrix, evaluated by
Ryser's inclusion-exclusion over column subsets:

    per(A) = (-1)**n * sum_{S subset of columns} (-1)**|S| prod_i rowsum_i(S)

Three routes are provided and cross-checked in the tests: an exact
Gray-code walk on Python ints (one column update per subset), a
vectorized modular evaluation over chunks of subsets, and a brute-force
sum over permutations that serves as the independent oracle.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import permutations

import numpy as np

from .graphs import BipartiteMultigraph

EXACT_CAP = 24
MOD_CAP = 32
BRUTEFORCE_CAP = 9
MAX_MODULUS = 2**31
_CHUNK = 1 << 14


def _square_side(g: BipartiteMultigraph) -> int:
    if g.n_u != g.n_v:
        raise ValueError(f"graph is not square ({g.n_u}x{g.n_v})")
    return g.n_u


def _ryser_exact_range(rows: tuple[tuple[int, ...], ...], n: int, start: int, stop: int) -> int:
    """Signed Ryser contribution of subset codes k in [start, stop), start >= 1."""
    gray = start ^ (start >> 1)
    sums = [0] * n
    g = gray
    j = 0
    while g:
        if g & 1:
            for i in range(n):
                sums[i] += rows[i][j]
        g >>= 1
        j += 1
    bits = bin(gray).count("1")
    total = 0
    for k in range(start, stop):
        if k != start:
            j = (k & -k).bit_length() - 1
            gray ^= 1 << j
            bits += 1 if gray & (1 << j) else -1
            if gray & (1 << j):
                for i in range(n):
                    sums[i] += rows[i][j]
            else:
                for i in range(n):
                    sums[i] -= rows[i][j]
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            total += -prod if (n - bits) & 1 else prod
    return total


def pm_exact(g: BipartiteMultigraph, max_n: int = EXACT_CAP, threads: int = 1) -> int:
    """Exact number of perfect matchings (parallel copies distinguished)."""
    n = _square_side(g)
    if n > max_n:
        raise ValueError(f"n={n} above exact-count cap {max_n}")
    if n == 0:
        return 1
    end = 1 << n
    if threads <= 1 or end < 4 * threads:
        return _ryser_exact_range(g.mult, n, 1, end)
    bounds = [1 + (end - 1) * t // threads for t in range(threads + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(
            lambda span: _ryser_exact_range(g.mult, n, span[0], span[1]),
            zip(bounds[:-1], bounds[1:]),
        )
        return sum(parts)


def _ryser_mod_range(a_t: np.ndarray, m: int, n: int, start: int, stop: int) -> int:
    """Ryser contribution mod m of subset codes in [start, stop)."""
    idx = np.arange(start, stop, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n, dtype=np.int64)) & 1
    sums = (bits @ a_t) % m
    acc = sums[:, 0].copy()
    for i in range(1, n):
        acc *= sums[:, i]
        acc %= m
    odd = ((n - bits.sum(axis=1)) & 1).astype(bool)
    return int((int(acc[~odd].sum()) - int(acc[odd].sum())) % m)


def pm_mod(g: BipartiteMultigraph, m: int, threads: int = 1) -> int:
    """Number of perfect matchings modulo m (2 <= m < 2**31)."""
    n = _square_side(g)
    if not 2 <= m < MAX_MODULUS:
        raise ValueError(f"modulus must be in [2, 2**31), got {m}")
    if n > MOD_CAP:
        raise ValueError(f"n={n} above modular-count cap {MOD_CAP}")
    if n == 0:
        return 1 % m
    a_t = (np.array(g.mult, dtype=np.int64) % m).T
    spans = [(s, min(s + _CHUNK, 1 << n)) for s in range(1, 1 << n, _CHUNK)]
    if threads <= 1 or len(spans) == 1:
        parts = [_ryser_mod_range(a_t, m, n, s, e) for s, e in spans]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda span: _ryser_mod_range(a_t, m, n, *span), spans))
    return sum(parts) % m


def pm_bruteforce(g: BipartiteMultigraph) -> int:
    """Oracle count: direct sum over all n! bijections."""
    n = _square_side(g)
    if n > BRUTEFORCE_CAP:
        raise ValueError(f"n={n} above brute-force cap {BRUTEFORCE_CAP}")
    rows = g.mult
    total = 0
    for perm in permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= rows[i][j]
            if not prod:
                break
        total += prod
    return total
