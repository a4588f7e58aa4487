"""Exact p-domination numbers and deficiency counts.

The search kernel works on fixed-size vertex subsets encoded as bitmasks.
It walks vertices in index order, branching include-before-exclude, so the
leaves of a size-``k`` search appear in lexicographic order of their sorted
vertex tuples. Two lower bounds prune the tree:

* per excluded vertex: its deficiency minus whatever its still-undecided
  neighbors could supply given the remaining slots;
* a counting bound: one extra vertex lowers the total deficiency by at most
  ``p + max_degree``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph


@dataclass(frozen=True)
class DominationResult:
    gamma_p: int
    witness: frozenset[int]

    def to_dict(self) -> dict:
        return {"gamma_p": self.gamma_p, "witness": sorted(self.witness)}


def _check_p(p: int) -> None:
    if p < 1:
        raise ValueError(f"p must be a positive integer, got {p}")


def _to_mask(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def deficiency_of_mask(g: Graph, p: int, mask: int) -> int:
    """Total deficiency ``sum_x max(0, p - |N(x) & X|)`` over ``x`` outside ``X``."""
    total = 0
    for v, nb in enumerate(g.masks):
        if not (mask >> v) & 1:
            short = p - (nb & mask).bit_count()
            if short > 0:
                total += short
    return total


def is_p_dominating(g: Graph, p: int, S: Iterable[int]) -> bool:
    """True iff every vertex outside ``S`` has at least ``p`` neighbors in ``S``."""
    _check_p(p)
    S = frozenset(S)
    for v in S:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return all(v in S or len(g.adjacency[v] & S) >= p for v in g.vertices)


def eta_vertex(g: Graph, p: int, x: int, X: Iterable[int]) -> int:
    """How many more ``X``-neighbors ``x`` needs; 0 for members of ``X``."""
    _check_p(p)
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range for n={g.n}")
    X = frozenset(X)
    if x in X:
        return 0
    return max(0, p - len(g.adjacency[x] & X))


def eta_set(g: Graph, p: int, S: Iterable[int], X: Iterable[int]) -> int:
    X = frozenset(X)
    return sum(eta_vertex(g, p, x, X) for x in set(S))


def forced_vertices(g: Graph, p: int) -> frozenset[int]:
    """Vertices of degree at most ``p - 1``; every p-dominating set contains them."""
    return frozenset(v for v in g.vertices if g.degree(v) < p)


class _SubsetSearch:
    """Branch and bound over subsets ``X`` with ``|X| == k`` and ``forced <= X``."""

    def __init__(self, g: Graph, p: int, k: int, forced: int = 0):
        self.n = g.n
        self.p = p
        self.k = k
        self.forced = forced
        self.masks = g.masks
        self.adj = [sorted(a) for a in g.adjacency]
        self.gain = p + g.max_degree
        full = (1 << self.n) - 1
        self.high = [full & ~((1 << i) - 1) for i in range(self.n + 1)]
        self.cnt = [0] * self.n
        self.excluded: list[int] = []

    def _lower_bound(self, i: int, slots: int) -> int:
        p, cnt, masks, high_i = self.p, self.cnt, self.masks, self.high[i]
        stuck = 0
        for v in self.excluded:
            need = p - cnt[v]
            if need > 0:
                avail = (masks[v] & high_i).bit_count()
                if avail > slots:
                    avail = slots
                if need > avail:
                    stuck += need - avail
        if slots:
            current = 0
            for v in range(self.n):
                if v < i and v not in self.excluded:
                    continue
                need = p - cnt[v]
                if need > 0:
                    current += need
            return max(stuck, current - slots * self.gain)
        return stuck

    def _leaf_value(self, chosen: int) -> int:
        p, cnt = self.p, self.cnt
        total = 0
        for v in range(self.n):
            if not (chosen >> v) & 1 and cnt[v] < p:
                total += p - cnt[v]
        return total

    def _include(self, i: int, delta: int) -> None:
        cnt = self.cnt
        for u in self.adj[i]:
            cnt[u] += delta

    def minimize(self, limit: int, floor: int = 0) -> tuple[int, int] | None:
        """Lexicographically first ``X`` of minimum deficiency, if below ``limit``.

        Stops early once a value ``<= floor`` is found (a known lower bound).
        """
        best_value = limit
        best_mask: int | None = None
        done = False

        def rec(i: int, c: int, chosen: int) -> None:
            nonlocal best_value, best_mask, done
            slots = self.k - c
            if self.n - i < slots:
                return
            if self._lower_bound(i, slots) >= best_value:
                return
            if slots == 0:
                value = self._leaf_value(chosen)
                if value < best_value:
                    best_value, best_mask = value, chosen
                    done = value <= floor
                return
            bit = 1 << i
            self._include(i, 1)
            rec(i + 1, c + 1, chosen | bit)
            self._include(i, -1)
            if done or self.forced & bit:
                return
            self.excluded.append(i)
            rec(i + 1, c, chosen)
            self.excluded.pop()

        if (self.forced.bit_count()) <= self.k <= self.n:
            rec(0, 0, 0)
        if best_mask is None:
            return None
        return best_value, best_mask

    def enumerate(self, limit: int) -> Iterator[int]:
        """Every ``X`` with deficiency ``<= limit``, in lexicographic order."""

        def rec(i: int, c: int, chosen: int) -> Iterator[int]:
            slots = self.k - c
            if self.n - i < slots:
                return
            if self._lower_bound(i, slots) > limit:
                return
            if slots == 0:
                if self._leaf_value(chosen) <= limit:
                    yield chosen
                return
            bit = 1 << i
            self._include(i, 1)
            yield from rec(i + 1, c + 1, chosen | bit)
            self._include(i, -1)
            if self.forced & bit:
                return
            self.excluded.append(i)
            yield from rec(i + 1, c, chosen)
            self.excluded.pop()

        if self.forced.bit_count() <= self.k <= self.n:
            yield from rec(0, 0, 0)


def _gamma_lower_bound(g: Graph, p: int, forced: int) -> int:
    n = g.n
    if n == 0:
        return 0
    # (n - k) outside vertices each need p edges into X; X sends at most k * Delta
    counting = -(-n * p // (g.max_degree + p))
    return max(forced.bit_count(), min(p, n), counting)


def _gamma_mask(g: Graph, p: int) -> tuple[int, int]:
    forced = _to_mask(forced_vertices(g, p), g.n)
    for k in range(_gamma_lower_bound(g, p, forced), g.n + 1):
        hit = _SubsetSearch(g, p, k, forced).minimize(limit=1, floor=0)
        if hit is not None:
            return k, hit[1]
    raise AssertionError("the full vertex set always p-dominates")  # pragma: no cover


def gamma_p(g: Graph, p: int) -> DominationResult:
    """Exact p-domination number with the lexicographically smallest witness."""
    _check_p(p)
    k, mask = _gamma_mask(g, p)
    return DominationResult(k, mask_to_set(mask))


def all_min_p_dominating_sets(g: Graph, p: int) -> Iterator[frozenset[int]]:
    _check_p(p)
    k, _ = _gamma_mask(g, p)
    forced = _to_mask(forced_vertices(g, p), g.n)
    for mask in _SubsetSearch(g, p, k, forced).enumerate(limit=0):
        yield mask_to_set(mask)
