"""Deterministic worst-case-linear selection.

``select_kth`` finds the k-th smallest element (0-based) under a caller
supplied three-way comparator, so the caller decides what gets counted.
The driver is a quickselect with median-of-three pivots; whenever two
consecutive rounds fail to shrink the candidate set to three quarters, it
switches to a classic median-of-medians pivot for the rest of the call.
No randomness anywhere, so repeated runs compare identical element pairs.
"""

from __future__ import annotations


def _insertion_sort(items, cmp):
    for i in range(1, len(items)):
        v = items[i]
        j = i - 1
        while j >= 0 and cmp(items[j], v) > 0:
            items[j + 1] = items[j]
            j -= 1
        items[j + 1] = v
    return items


def _median_of_medians(items, cmp):
    """A pivot value guaranteed to sit in the middle 40% of items."""
    if len(items) <= 5:
        return _insertion_sort(list(items), cmp)[(len(items) - 1) // 2]
    medians = []
    for i in range(0, len(items), 5):
        group = _insertion_sort(items[i : i + 5], cmp)
        medians.append(group[(len(group) - 1) // 2])
    return _median_of_medians(medians, cmp)


def _median_of_three(items, cmp):
    a, b, c = items[0], items[len(items) // 2], items[-1]
    if cmp(a, b) > 0:
        a, b = b, a
    if cmp(b, c) > 0:
        b = c if cmp(a, c) <= 0 else a
    return b


def select_kth(items, k: int, cmp):
    """Return the k-th smallest (0-based) of items under cmp(a, b) -> -1/0/1."""
    if not 0 <= k < len(items):
        raise IndexError(f"k={k} out of range for {len(items)} items")
    work = list(items)
    use_mom = False
    stale_rounds = 0
    while True:
        m = len(work)
        if m <= 5:
            return _insertion_sort(work, cmp)[k]
        pivot = _median_of_medians(work, cmp) if use_mom else _median_of_three(work, cmp)
        lows, highs, pivots = [], [], []
        for v in work:
            c = cmp(v, pivot)
            if c < 0:
                lows.append(v)
            elif c > 0:
                highs.append(v)
            else:
                pivots.append(v)
        if k < len(lows):
            nxt = lows
        elif k < len(lows) + len(pivots):
            return pivot
        else:
            k -= len(lows) + len(pivots)
            nxt = highs
        if not use_mom:
            stale_rounds = stale_rounds + 1 if len(nxt) * 4 > 3 * m else 0
            if stale_rounds >= 2:
                use_mom = True
        work = nxt
