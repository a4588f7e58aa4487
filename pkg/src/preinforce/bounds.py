"""Private-neighbor upper bounds on r_p and a bound-versus-exact report."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph
from .pdomination import _check_p, all_min_p_dominating_sets, gamma_p
from .reinforcement import r_p


def _require_member(x: int, X: frozenset[int]) -> None:
    if x not in X:
        raise ValueError(f"vertex {x} is not in X")


def p_private_neighborhood(g: Graph, p: int, x: int, X: Iterable[int]) -> frozenset[int]:
    """Neighbors ``y`` of ``x`` outside ``X`` with exactly ``p`` neighbors in ``X``."""
    _check_p(p)
    X = frozenset(X)
    _require_member(x, X)
    return frozenset(
        y for y in g.adjacency[x] if y not in X and len(g.adjacency[y] & X) == p
    )


def mu_p_vertex(g: Graph, p: int, x: int, X: Iterable[int]) -> int:
    X = frozenset(X)
    private = p_private_neighborhood(g, p, x, X)
    return len(private) + max(0, p - len(g.adjacency[x] & X))


def mu_p_set(g: Graph, p: int, X: Iterable[int]) -> int:
    X = frozenset(X)
    if not X:
        raise ValueError("X must be non-empty")
    return min(mu_p_vertex(g, p, x, X) for x in X)


def mu_p(g: Graph, p: int) -> int:
    """Minimum of :func:`mu_p_set` over every minimum p-dominating set.

    The edgeless graph on zero vertices has no candidate and gives 0.
    """
    _check_p(p)
    if g.n == 0:
        return 0
    return min(mu_p_set(g, p, X) for X in all_min_p_dominating_sets(g, p))


def classical_mu(g: Graph) -> int:
    """Classical private-neighborhood parameter for ordinary domination.

    Independent reference for ``mu_p(g, 1)``: minimum dominating sets come
    from plain subset enumeration and private neighborhoods are
    ``N[x] - N[X - {x}]``.
    """
    closed = [g.adjacency[v] | {v} for v in g.vertices]
    everything = frozenset(g.vertices)
    for k in range(1, g.n + 1):
        best = None
        for X in combinations(g.vertices, k):
            if frozenset().union(*(closed[x] for x in X)) != everything:
                continue
            for x in X:
                others = frozenset().union(*(closed[w] for w in X if w != x))
                size = len(closed[x] - others)
                if best is None or size < best:
                    best = size
        if best is not None:
            return best
    return 0


@dataclass(frozen=True)
class BoundCheck:
    name: str
    value: int | None
    holds: bool
    tight: bool
    applicable: bool = True

    def line(self) -> str:
        if not self.applicable:
            return f"{self.name}: n/a"
        status = "holds" if self.holds else "VIOLATED"
        if self.tight:
            status += " (tight)"
        return f"{self.name}: {self.value} {status}"


@dataclass(frozen=True)
class BoundReport:
    p: int
    gamma_p: int
    r_p_exact: int
    mu_p: int
    delta_plus_p: int | None
    Delta_plus_p: int
    p_minus_max_degree: int | None
    all_hold: bool
    checks: tuple[BoundCheck, ...]

    def to_dict(self) -> dict:
        data = asdict(self)
        data["checks"] = [asdict(c) for c in self.checks]
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        head = [
            f"gamma_p: {self.gamma_p}",
            f"r_p: {self.r_p_exact}",
            f"mu_p: {self.mu_p}",
        ]
        return "\n".join(head + [c.line() for c in self.checks] + [f"all_hold: {self.all_hold}"])


def bound_report(g: Graph, p: int) -> BoundReport:
    _check_p(p)
    gamma = gamma_p(g, p).gamma_p
    r = r_p(g, p).r_p
    mu = mu_p(g, p)
    lo, hi = g.min_degree, g.max_degree
    delta_plus_p = lo + p if lo < p else None
    low_degree_value = p - hi if hi < p and gamma > p else None

    checks = [
        BoundCheck("r_p <= mu_p", mu, r <= mu, r == mu),
        BoundCheck("r_p = 1 implies mu_p = 1", mu, r != 1 or mu == 1, r == 1, applicable=r == 1),
        BoundCheck("r_p <= max_degree + p", hi + p, r <= hi + p, r == hi + p),
        BoundCheck(
            "r_p <= min_degree + p",
            delta_plus_p,
            delta_plus_p is None or r <= delta_plus_p,
            r == delta_plus_p,
            applicable=delta_plus_p is not None,
        ),
        BoundCheck(
            "r_p = p - max_degree",
            low_degree_value,
            low_degree_value is None or r == low_degree_value,
            low_degree_value is not None and r == low_degree_value,
            applicable=low_degree_value is not None,
        ),
    ]
    return BoundReport(
        p=p,
        gamma_p=gamma,
        r_p_exact=r,
        mu_p=mu,
        delta_plus_p=delta_plus_p,
        Delta_plus_p=hi + p,
        p_minus_max_degree=low_degree_value,
        all_hold=all(c.holds for c in checks),
        checks=tuple(checks),
    )
