"""The characteristic-0 McKay graph of SL_n: tensor-with-standard neighbours,
the explicit zero-to-Steinberg path, and exact bounded distance search.

Edges out of a dominant weight come in three kinds, labelled by strings:

* ``"a"``    -- add 1 to the first coordinate;
* ``"b(i)"`` -- subtract 1 at position i, add 1 at position i+1
  (1 <= i <= n-2);
* ``"c"``    -- subtract 1 from the last coordinate.

In the partition picture these are exactly the ways of adding one box to
the attached length-n partition (row 1, row i+1, row n respectively).
The graph is infinite, so the distance search takes a mandatory budget.
"""

from __future__ import annotations

from functools import lru_cache

from .weights import Weight, check_weight, f_value, steinberg_weight

_A = "a"
_C = "c"
_INF = float("inf")


def _b(i: int) -> str:
    return f"b({i})"


def lr_neighbors(w: Weight) -> set[tuple[str, Weight]]:
    """All (kind, weight) pairs reachable from ``w`` by tensoring with the
    standard module in characteristic 0.  Kinds are "a", "b(i)", "c";
    candidates that would leave the dominant cone are excluded."""
    check_weight(w)
    n = len(w) + 1
    out: set[tuple[str, Weight]] = set()
    out.add((_A, (w[0] + 1,) + w[1:]))
    for i in range(1, n):  # 1-based position giving up the box's worth
        if w[i - 1] < 1:
            continue
        if i <= n - 2:
            moved = list(w)
            moved[i - 1] -= 1
            moved[i] += 1
            out.add((_b(i), tuple(moved)))
        else:  # i == n-1: drop the last coordinate
            out.add((_C, w[:-1] + (w[-1] - 1,)))
    return out


@lru_cache(maxsize=None)
def canonical_path_char0(n: int, p: int) -> tuple[Weight, ...]:
    """The explicit path of "a" and "b" edges from the zero weight to
    (p-1,...,p-1).

    Stage j (j = 1..n-1) repeats p-1 times the block [one "a" edge, then
    "b(i)" edges for i = 1..n-j-1]; each repetition carries a 1 from the
    front to position n-j.  The total length is (p-1)(n^2-n)/2, and the
    result is memoized per (n, p).
    """
    if n < 2 or p < 2:
        raise ValueError("need n >= 2 and p >= 2")
    w = [0] * (n - 1)
    path = [tuple(w)]
    for stage in range(1, n):
        for _ in range(p - 1):
            w[0] += 1
            path.append(tuple(w))
            for i in range(1, n - stage):
                w[i - 1] -= 1
                w[i] += 1
                path.append(tuple(w))
    assert tuple(w) == steinberg_weight(n, p)
    return tuple(path)


def char0_distance(src: Weight, tgt: Weight, budget: int) -> int | None:
    """Exact directed distance from ``src`` to ``tgt`` in the
    characteristic-0 graph, or None if it exceeds ``budget``.

    Iterative-deepening search guided by h(w) = max(0, f(tgt) - f(w)),
    admissible because f grows by at most 1 per edge.  A per-threshold
    table of best depths keeps revisits cheap without affecting exactness.
    """
    check_weight(src)
    check_weight(tgt)
    if len(src) != len(tgt):
        raise ValueError(f"rank mismatch: {len(src) + 1} vs {len(tgt) + 1}")
    if budget < 0:
        raise ValueError("budget must be >= 0")
    if src == tgt:
        return 0

    f_tgt = f_value(tgt)

    def h(w: Weight) -> int:
        return max(0, f_tgt - f_value(w))

    def search(w: Weight, depth: int, threshold: int, best_seen: dict[Weight, int]):
        """Returns (distance, None) when found, else (None, smallest pruned
        estimate) for the next threshold."""
        est = depth + h(w)
        if est > threshold:
            return None, est
        if w == tgt:
            return depth, None
        prev = best_seen.get(w)
        if prev is not None and prev <= depth:
            return None, _INF
        best_seen[w] = depth
        next_threshold = _INF
        for _, nb in sorted(lr_neighbors(w)):
            found, nxt = search(nb, depth + 1, threshold, best_seen)
            if found is not None:
                return found, None
            if nxt < next_threshold:
                next_threshold = nxt
        return None, next_threshold

    threshold = h(src)
    while threshold <= budget:
        found, nxt = search(src, 0, threshold, {})
        if found is not None:
            return found
        if nxt > budget:
            return None
        threshold = nxt
    return None
