"""p-reinforcement numbers via minimum total deficiency.

``r_p(G)`` equals the smallest total deficiency ``eta_p(V, X, G)`` over
vertex sets ``X`` of size ``gamma_p(G) - 1``; joining each deficient vertex
to enough non-adjacent members of such an ``X`` gives a witness edge set.
A separate brute-force routine minimises over added edge sets directly and
is used to cross-check the deficiency route.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .graph import Edge, Graph, add_edges, complement_nonedges, edge
from .pdomination import (
    _SubsetSearch,
    _check_p,
    gamma_p,
    is_p_dominating,
    mask_to_set,
)

ORACLE_EDGE_CAP = 6
ORACLE_MAX_VERTICES = 16


class ConventionCase(ValueError):
    """gamma_p(G) <= p, so r_p(G) = 0 by convention and eta_p is not used."""


class BudgetExhausted(RuntimeError):
    """No edge set within the budget lowers gamma_p."""


@dataclass(frozen=True)
class EtaResult:
    eta_p: int
    witness_X: frozenset[int]
    gamma_p: int


@dataclass(frozen=True)
class ReinforcementCertificate:
    r_p: int
    edges_B: tuple[Edge, ...]
    witness_X: frozenset[int]
    gamma_before: int
    gamma_after: int

    def to_dict(self) -> dict:
        return {
            "r_p": self.r_p,
            "B": [list(e) for e in self.edges_B],
            "X": sorted(self.witness_X),
            "gamma_before": self.gamma_before,
            "gamma_after": self.gamma_after,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> ReinforcementCertificate:
        return cls(
            r_p=int(data["r_p"]),
            edges_B=tuple(edge(int(u), int(v)) for u, v in data["B"]),
            witness_X=frozenset(int(x) for x in data["X"]),
            gamma_before=int(data["gamma_before"]),
            gamma_after=int(data["gamma_after"]),
        )

    @classmethod
    def from_json(cls, text: str) -> ReinforcementCertificate:
        return cls.from_dict(json.loads(text))


@dataclass
class Validation:
    ok: bool
    reason: str = "ok"
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def eta_p(g: Graph, p: int, *, all_sizes: bool = False) -> EtaResult:
    """Minimum total deficiency over sets of size ``gamma_p - 1``.

    With ``all_sizes`` every size below ``gamma_p`` is scanned instead, which
    only exists to double-check that smaller sets never do better.
    """
    _check_p(p)
    gamma = gamma_p(g, p).gamma_p
    if gamma <= p:
        raise ConventionCase(f"gamma_{p} = {gamma} <= p; r_p is 0 by convention")
    sizes = range(gamma - 1, -1, -1) if all_sizes else (gamma - 1,)
    best: tuple[int, int] | None = None
    for k in sizes:
        # any X of size < gamma misses someone, so 1 is a floor
        limit = best[0] + 1 if best is not None else g.n * p + 1
        hit = _SubsetSearch(g, p, k).minimize(limit=limit, floor=1)
        if hit is not None and (best is None or hit[0] < best[0]):
            best = hit
    assert best is not None
    return EtaResult(best[0], mask_to_set(best[1]), gamma)


def certificate_edges(g: Graph, p: int, X: Iterable[int]) -> list[Edge]:
    """Join each deficient vertex to its smallest-index non-neighbors in ``X``."""
    X = frozenset(X)
    members = sorted(X)
    B: list[Edge] = []
    for y in g.vertices:
        if y in X:
            continue
        need = p - len(g.adjacency[y] & X)
        if need <= 0:
            continue
        spare = [x for x in members if x not in g.adjacency[y]]
        assert len(spare) >= need, "|X| >= p leaves enough non-neighbors in X"
        B.extend(edge(y, x) for x in spare[:need])
    return sorted(B)


def r_p(g: Graph, p: int) -> ReinforcementCertificate:
    _check_p(p)
    dom = gamma_p(g, p)
    if dom.gamma_p <= p:
        return ReinforcementCertificate(0, (), dom.witness, dom.gamma_p, dom.gamma_p)
    eta = eta_p(g, p)
    B = certificate_edges(g, p, eta.witness_X)
    assert len(B) == eta.eta_p
    return ReinforcementCertificate(
        r_p=eta.eta_p,
        edges_B=tuple(B),
        witness_X=eta.witness_X,
        gamma_before=dom.gamma_p,
        gamma_after=len(eta.witness_X),
    )


def validate_certificate(g: Graph, p: int, cert: ReinforcementCertificate) -> Validation:
    _check_p(p)
    if any(not (0 <= x < g.n) for x in cert.witness_X):
        return Validation(False, "witness_out_of_range")
    nonedges = set(complement_nonedges(g))
    B = [edge(u, v) for u, v in cert.edges_B]
    if len(set(B)) != len(B):
        return Validation(False, "duplicate_edge")
    if not set(B) <= nonedges:
        return Validation(False, "edge_not_in_complement")
    if len(B) != cert.r_p:
        return Validation(False, "size_mismatch", {"len_B": len(B), "r_p": cert.r_p})
    gamma = gamma_p(g, p).gamma_p
    if gamma != cert.gamma_before:
        return Validation(False, "gamma_before_mismatch", {"gamma_p": gamma})
    if len(cert.witness_X) != cert.gamma_after:
        return Validation(False, "witness_size_mismatch")
    if not is_p_dominating(add_edges(g, B), p, cert.witness_X):
        return Validation(False, "witness_not_dominating")
    if gamma <= p:
        if cert.r_p != 0 or cert.gamma_after != gamma:
            return Validation(False, "convention_case_mismatch")
        return Validation(True, "convention")
    if cert.gamma_after >= cert.gamma_before:
        return Validation(False, "no_drop")
    return Validation(True)


def _all_subsets_matrix(n: int) -> np.ndarray:
    codes = np.arange(1 << n, dtype=np.int64)
    return ((codes[:, None] >> np.arange(n)) & 1).astype(np.int32)


def _brute_gamma(member: np.ndarray, adjacency: np.ndarray, p: int) -> int:
    counts = member @ adjacency
    ok = ((member == 1) | (counts >= p)).all(axis=1)
    return int(member[ok].sum(axis=1).min())


def r_p_definition_oracle(
    g: Graph, p: int, max_budget: int, *, cap: int | None = ORACLE_EDGE_CAP
) -> int:
    """Smallest ``|B|`` with ``gamma_p(G + B) < gamma_p(G)``, by exhaustion.

    Edge sets are tried in increasing size. ``gamma_p`` is recomputed here by
    enumerating all ``2^n`` subsets, independently of the search kernel.
    """
    _check_p(p)
    if g.n > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle is limited to {ORACLE_MAX_VERTICES} vertices")
    budget = max_budget if cap is None else min(max_budget, cap)
    A = np.zeros((g.n, g.n), dtype=np.int32)
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1
    member = _all_subsets_matrix(g.n)
    gamma = _brute_gamma(member, A, p)
    if gamma <= p:
        raise ConventionCase(f"gamma_{p} = {gamma} <= p")

    # gamma_p(G+B) < gamma iff some set of size gamma - 1 p-dominates G+B
    X = member[member.sum(axis=1) == gamma - 1]
    inside = X == 1
    base = X @ A
    nonedges = complement_nonedges(g)
    for size in range(1, budget + 1):
        for B in combinations(nonedges, size):
            counts = base.copy()
            for u, v in B:
                counts[:, u] += X[:, v]
                counts[:, v] += X[:, u]
            if ((counts >= p) | inside).all(axis=1).any():
                return size
    raise BudgetExhausted(f"no edge set of size <= {budget} lowers gamma_{p}")
