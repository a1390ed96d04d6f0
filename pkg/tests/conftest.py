"""Shared naive oracles, deliberately written as direct transcriptions of the
definitions (independent double loops, no hashing, no early exits) so the
optimized implementations have something dumb and trustworthy to agree with.
"""

from __future__ import annotations

import itertools


def naive_is_oa(rows, alphabets, t) -> bool:
    """Equal-frequency check by scanning every level tuple separately."""
    n = len(alphabets)
    r = len(rows)
    for cols in itertools.combinations(range(n), t):
        prod = 1
        for c in cols:
            prod *= alphabets[c]
        if r % prod:
            return False
        lam = r // prod
        for levels in itertools.product(*(range(alphabets[c]) for c in cols)):
            count = 0
            for row in rows:
                if all(row[c] == v for c, v in zip(cols, levels)):
                    count += 1
            if count != lam:
                return False
    return True


def naive_strength(rows, alphabets) -> int:
    best = 0
    for t in range(1, len(alphabets) + 1):
        if not naive_is_oa(rows, alphabets, t):
            break
        best = t
    return best


def naive_distance_set(rows) -> set[int]:
    out = set()
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            out.add(sum(1 for a, b in zip(rows[i], rows[j]) if a != b))
    return out


def naive_is_difference_scheme(rows, s, t, sub=None) -> bool:
    """Coset test: difference vectors against the last chosen column must be
    uniform over Z_s^(t-1) for every t-column subset.  `sub` overrides the
    group subtraction (cyclic by default)."""
    if sub is None:
        sub = lambda a, b: (a - b) % s
    c = len(rows[0])
    r = len(rows)
    if r % s ** (t - 1):
        return False
    lam = r // s ** (t - 1)
    for cols in itertools.combinations(range(c), t):
        counts = {}
        for row in rows:
            key = tuple(sub(row[cols[i]], row[cols[-1]]) for i in range(t - 1))
            counts[key] = counts.get(key, 0) + 1

        for key in itertools.product(range(s), repeat=t - 1):
            if counts.get(key, 0) != lam:
                return False
    return True


def naive_cross_counts(block_i, block_j, subset, n):
    """Reduction counts by brute-force double loop over ket pairs."""
    comp = [c for c in range(n) if c not in subset]
    counts = {}
    for u in block_i:
        for v in block_j:
            if all(u[c] == v[c] for c in comp):
                key = (tuple(u[c] for c in subset), tuple(v[c] for c in subset))
                counts[key] = counts.get(key, 0) + 1
    return counts
