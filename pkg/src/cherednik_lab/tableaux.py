"""Partition and standard-tableau combinatorics shared by the symmetric
group representations and the Hecke-algebra module."""

from __future__ import annotations

from functools import lru_cache


def normalize_partition(parts) -> tuple:
    p = tuple(sorted((int(x) for x in parts if int(x) != 0), reverse=True))
    if any(x < 0 for x in p):
        raise ValueError("partition parts must be positive")
    return p


def conjugate_partition(lam) -> tuple:
    lam = normalize_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def hook_partition(n: int, i: int) -> tuple:
    """Single-hook shape with arm n - 1 - i and leg i."""
    if not 0 <= i <= n - 1:
        raise ValueError("hook index out of range")
    return normalize_partition((n - i,) + (1,) * i)


@lru_cache(maxsize=None)
def standard_tableaux(lam) -> tuple:
    """All standard tableaux of the given shape.

    A tableau is a tuple of row tuples filled with 1..n, increasing along
    rows and down columns; the enumeration order is deterministic.
    """
    lam = normalize_partition(lam)
    n = sum(lam)
    results = []

    def grow(filled_rows, k):
        if k > n:
            results.append(tuple(tuple(r) for r in filled_rows))
            return
        for r in range(len(lam)):
            if len(filled_rows[r]) < lam[r]:
                col = len(filled_rows[r])
                if r > 0 and len(filled_rows[r - 1]) <= col:
                    continue
                filled_rows[r].append(k)
                grow(filled_rows, k + 1)
                filled_rows[r].pop()

    grow([[] for _ in lam], 1)
    return tuple(results)


def hook_length_count(lam) -> int:
    """Number of standard tableaux by the hook length formula."""
    lam = normalize_partition(lam)
    n = sum(lam)
    conj = conjugate_partition(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    assert fact % prod == 0
    return fact // prod


def tableau_position(t, value):
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            if x == value:
                return i, j
    raise ValueError("value not in tableau")


def apply_adjacent_swap(t, k):
    """Swap entries k and k+1; returns tuple-of-tuples (maybe nonstandard)."""
    out = [list(r) for r in t]
    for i, row in enumerate(out):
        for j, x in enumerate(row):
            if x == k:
                out[i][j] = k + 1
            elif x == k + 1:
                out[i][j] = k
    return tuple(tuple(r) for r in out)


def is_standard(t):
    for i, row in enumerate(t):
        for j in range(len(row)):
            if j + 1 < len(row) and row[j + 1] < row[j]:
                return False
            if i + 1 < len(t) and j < len(t[i + 1]) and t[i + 1][j] < row[j]:
                return False
    return True


def remove_rim_hook(lam, length, start_col=None):
    """Remove one rim hook of the given length if possible.

    Returns the smaller partition, or None.  With start_col set, only the
    rim hook whose rightmost column is start_col is tried (used to vary
    removal order).
    """
    lam = list(normalize_partition(lam))
    # beta-numbers (first-column hook lengths) encode rim hooks as moves
    beta = [lam[i] + len(lam) - 1 - i for i in range(len(lam))] if lam else []
    betaset = set(beta)
    candidates = []
    for b in beta:
        if b - length >= 0 and (b - length) not in betaset:
            candidates.append(b)
    if not candidates:
        return None
    if start_col is not None:
        candidates = sorted(candidates)
        b = candidates[start_col % len(candidates)]
    else:
        b = max(candidates)
    vals = sorted([x if x != b else b - length for x in beta], reverse=True)
    out = [vals[i] - (len(vals) - 1 - i) for i in range(len(vals))]
    return normalize_partition(out)


def e_core(lam, e, order=0):
    """e-core by repeated rim-hook removal.

    The result is independent of removal order; `order` selects which
    removable hook is taken first so tests can confirm that.
    """
    lam = normalize_partition(lam)
    step = 0
    while True:
        nxt = remove_rim_hook(lam, e, start_col=(step if order else None))
        if nxt is None:
            return lam
        lam = nxt
        step += 1


def is_e_regular(lam, e) -> bool:
    """No part repeated e or more times."""
    lam = normalize_partition(lam)
    return all(lam.count(p) < e for p in set(lam))


def partitions_of(n: int):
    """All partitions of n, descending-lex order."""
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxpart), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out
