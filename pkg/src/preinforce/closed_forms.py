"""Closed-form values for paths, cycles and complete multipartite graphs.

Multipartite formulas work on *position* subsets of the part list, so two
parts of equal size stay distinguishable; :func:`as_multiset` turns a
position subset back into the sorted part sizes for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence


class NotApplicable(ValueError):
    """The requested closed form does not cover this input."""


@dataclass(frozen=True)
class PartiteSpec:
    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(s) for s in parts)
        if len(parts) < 2:
            raise ValueError("need at least two parts")
        if any(s < 1 for s in parts):
            raise ValueError("part sizes must be positive")
        object.__setattr__(self, "parts", parts)

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def order(self) -> int:
        return sum(self.parts)


IndexSubset = tuple[int, ...]


def _spec(spec: PartiteSpec | Sequence[int]) -> PartiteSpec:
    return spec if isinstance(spec, PartiteSpec) else PartiteSpec(spec)


# -- paths and cycles ---------------------------------------------------------


def gamma_p_path(n: int, p: int) -> int:
    if n < 1:
        raise ValueError("path needs n >= 1")
    if p < 2:
        raise NotApplicable("no closed form for p = 1; use the exact solver")
    return n // 2 + 1 if p == 2 else n


def gamma_p_cycle(n: int, p: int) -> int:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    if p < 2:
        raise NotApplicable("no closed form for p = 1; use the exact solver")
    return -(-n // 2) if p == 2 else n


def r_p_path(n: int, p: int) -> int:
    if gamma_p_path(n, p) <= p:
        raise NotApplicable(f"gamma_{p}(P_{n}) <= p")
    if p == 2:
        return 2 if n % 2 else 1
    return p - 2


def r_p_cycle(n: int, p: int) -> int:
    if gamma_p_cycle(n, p) <= p:
        raise NotApplicable(f"gamma_{p}(C_{n}) <= p")
    if p == 2:
        return 2 if n % 2 else 4
    return p - 2


def r_1_path_cycle(n: int) -> int:
    """Classical reinforcement number of P_n and C_n: ``n mod 3`` mapped into {1,2,3}."""
    if n < 4:
        raise ValueError("defined for n >= 4")
    return (n - 1) % 3 + 1


# -- complete multipartite ----------------------------------------------------


def gamma_p_multipartite(spec: PartiteSpec | Sequence[int], p: int) -> int:
    """Exact gamma_p of K_{n_1..n_t} from per-part take counts.

    Taking ``s_i`` vertices of part ``i`` p-dominates iff every part that is
    not fully taken sees at least ``p`` chosen vertices in the other parts.
    """
    if p < 1:
        raise ValueError("p must be positive")
    parts = _spec(spec).parts
    best = sum(parts)
    for takes in product(*(range(s + 1) for s in parts)):
        total = sum(takes)
        if total >= best:
            continue
        if all(s == size or total - s >= p for s, size in zip(takes, parts)):
            best = total
    return best


def f(spec: PartiteSpec | Sequence[int], X: IndexSubset) -> int:
    parts = _spec(spec).parts
    return sum(parts[i] for i in X)


def as_multiset(spec: PartiteSpec | Sequence[int], X: IndexSubset) -> tuple[int, ...]:
    parts = _spec(spec).parts
    return tuple(sorted(parts[i] for i in X))


def script_X(spec: PartiteSpec | Sequence[int], p: int, gamma: int | None = None) -> list[IndexSubset]:
    """Position subsets whose part sizes sum to at least gamma_p."""
    spec = _spec(spec)
    if gamma is None:
        gamma = gamma_p_multipartite(spec, p)
    return [
        X
        for r in range(spec.t + 1)
        for X in combinations(range(spec.t), r)
        if f(spec, X) >= gamma
    ]


def f_star(spec: PartiteSpec | Sequence[int], p: int, X: IndexSubset) -> int:
    """Largest ``f(Y)`` below ``p`` over the subsets ``Y`` of ``X`` missing one part.

    An empty candidate set gives 0, e.g. for K_{2,2,10,17} and p = 11 the
    subset {2, 10, 17} has every 2-part sum >= 11 and so gets 0.
    """
    spec = _spec(spec)
    values = [f(spec, Y) for Y in combinations(X, len(X) - 1)] if X else []
    return max((v for v in values if v < p), default=0)


@dataclass(frozen=True)
class MultipartiteFormula:
    r_p: int
    gamma_p: int
    minimizer: IndexSubset
    terms: dict[IndexSubset, int]

    def minimizer_multiset(self, spec: PartiteSpec | Sequence[int]) -> tuple[int, ...]:
        return as_multiset(spec, self.minimizer)


def multipartite_formula(spec: PartiteSpec | Sequence[int], p: int) -> MultipartiteFormula:
    """Evaluate ``min (p - f*(X)) (f(X) - gamma_p + 1)`` over the family of X.

    Ties go to the first subset in (size, lexicographic) order. The value is
    an upper bound on r_p; it overshoots when the cheapest deficient set
    splits two parts (K_{5,5}, p = 2 gives 4 against the true 3), see
    :func:`r_p_multipartite_counts`.
    """
    spec = _spec(spec)
    gamma = gamma_p_multipartite(spec, p)
    if gamma <= p:
        raise NotApplicable(f"gamma_{p} = {gamma} <= p; r_p is 0 by convention")
    terms: dict[IndexSubset, int] = {}
    best: tuple[int, IndexSubset] | None = None
    for X in script_X(spec, p, gamma):
        value = (p - f_star(spec, p, X)) * (f(spec, X) - gamma + 1)
        terms[X] = value
        if best is None or value < best[0]:
            best = (value, X)
    assert best is not None, "the full index set always has f >= gamma_p"
    return MultipartiteFormula(best[0], gamma, best[1], terms)


def r_p_multipartite(spec: PartiteSpec | Sequence[int], p: int) -> int:
    return multipartite_formula(spec, p).r_p


def r_p_multipartite_counts(spec: PartiteSpec | Sequence[int], p: int) -> int:
    """Exact r_p of K_{n_1..n_t} as a minimum over per-part take counts.

    A set taking ``s_i`` vertices from part ``i`` (``sum s = gamma_p - 1``)
    leaves each untaken vertex of part ``i`` short by
    ``max(0, p - (gamma_p - 1 - s_i))``; r_p is the smallest total shortfall.
    """
    spec = _spec(spec)
    gamma = gamma_p_multipartite(spec, p)
    if gamma <= p:
        raise NotApplicable(f"gamma_{p} = {gamma} <= p; r_p is 0 by convention")
    size = gamma - 1
    best = None
    for takes in product(*(range(min(s, size) + 1) for s in spec.parts)):
        if sum(takes) != size:
            continue
        cost = sum((n - s) * max(0, p - (size - s)) for s, n in zip(takes, spec.parts))
        if best is None or cost < best:
            best = cost
    assert best is not None
    return best
