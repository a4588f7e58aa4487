"""3SAT to p-Reinforcement: gadget graphs and executable checks.

Vertex numbering of a gadget for ``n`` variables, ``m`` clauses and ``p``:
variable ``i`` (1-based) owns the block starting at ``(i - 1) * (2p + 2)``
laid out as ``u_i, ~u_i, v_i_1..v_i_p, ~v_i_1..~v_i_p``; clause vertices
``c_1..c_m`` follow, then the clique ``t_1..t_p``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .graph import Graph, serialize_edge_list
from .pdomination import deficiency_of_mask, gamma_p
from .reinforcement import r_p

SAT_MAX_VARS = 20
VERIFY_MAX_VERTICES = 30


class CnfFormatError(ValueError):
    pass


class LiteralCoverageWarning(UserWarning):
    """Some literal never occurs; the gadget is built but the equivalence is not claimed."""


class ReductionError(ValueError):
    """A proposed witness set breaks the structure every valid witness has."""


@dataclass(frozen=True)
class Cnf3:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        for clause in self.clauses:
            if len(clause) != 3 or len(set(clause)) != 3:
                raise ValueError(f"clause {clause} must have three distinct literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")

    @classmethod
    def of(cls, num_vars: int, clauses: Iterable[Iterable[int]]) -> Cnf3:
        return cls(num_vars, tuple(tuple(sorted(c, key=lambda l: (abs(l), l < 0))) for c in clauses))

    def missing_literals(self) -> list[int]:
        used = {lit for clause in self.clauses for lit in clause}
        return [
            lit
            for i in range(1, self.num_vars + 1)
            for lit in (i, -i)
            if lit not in used
        ]

    @property
    def covers_all_literals(self) -> bool:
        return not self.missing_literals()

    def satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in clause) for clause in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines.extend(" ".join(map(str, c)) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"


def parse_dimacs_cnf(text: str) -> Cnf3:
    num_vars = num_clauses = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf" or num_vars is not None:
                raise CnfFormatError(f"line {lineno}: bad problem line {line!r}")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise CnfFormatError(f"line {lineno}: bad problem line {line!r}") from None
            continue
        if num_vars is None:
            raise CnfFormatError(f"line {lineno}: clause before 'p cnf' header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise CnfFormatError(f"line {lineno}: bad literal {token!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise CnfFormatError("missing 'p cnf' header")
    if current:
        raise CnfFormatError("last clause is not terminated by 0")
    if len(clauses) != num_clauses:
        raise CnfFormatError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    for clause in clauses:
        if len(clause) != 3 or len(set(clause)) != 3:
            raise CnfFormatError(f"clause {clause} does not have three distinct literals")
        if any(abs(l) > num_vars for l in clause):
            raise CnfFormatError(f"clause {clause} mentions a variable beyond {num_vars}")
    cnf = Cnf3.of(num_vars, clauses)
    missing = cnf.missing_literals()
    if missing:
        warnings.warn(f"literals never used: {missing}", LiteralCoverageWarning, stacklevel=2)
    return cnf


@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    labels: tuple[str, ...]
    num_vars: int
    num_clauses: int
    p: int
    edge_insertions: int

    @property
    def block(self) -> int:
        return 2 * self.p + 2

    def u(self, i: int) -> int:
        return (i - 1) * self.block

    def ubar(self, i: int) -> int:
        return self.u(i) + 1

    def v(self, i: int, j: int) -> int:
        return self.u(i) + 1 + j

    def vbar(self, i: int, j: int) -> int:
        return self.u(i) + 1 + self.p + j

    def variable_block(self, i: int) -> range:
        return range(self.u(i), self.u(i) + self.block)

    def c(self, j: int) -> int:
        return self.num_vars * self.block + j - 1

    def t(self, k: int) -> int:
        return self.num_vars * self.block + self.num_clauses + k - 1

    @property
    def clause_vertices(self) -> range:
        start = self.num_vars * self.block
        return range(start, start + self.num_clauses)

    @property
    def clique_vertices(self) -> range:
        start = self.num_vars * self.block + self.num_clauses
        return range(start, start + self.p)

    def label_sidecar(self) -> str:
        return "".join(f"{v} {name}\n" for v, name in enumerate(self.labels))

    def edge_list(self) -> str:
        return serialize_edge_list(self.graph)


def build_gadget(cnf: Cnf3, p: int) -> GadgetGraph:
    if p < 2:
        raise ValueError("the gadget needs p >= 2")
    n, m = cnf.num_vars, len(cnf.clauses)
    block = 2 * p + 2
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        base = (i - 1) * block
        labels += [f"u{i}", f"~u{i}"]
        labels += [f"v{i}_{j}" for j in range(1, p + 1)]
        labels += [f"~v{i}_{j}" for j in range(1, p + 1)]
        # K_{2p+2} minus u~v_j and ~u v_j for j < p
        removed = set()
        for j in range(1, p):
            removed.add((base, base + 1 + p + j))
            removed.add((base + 1, base + 1 + j))
        edges += [e for e in combinations(range(base, base + block), 2) if e not in removed]
    first_clause = n * block
    first_t = first_clause + m
    labels += [f"c{j}" for j in range(1, m + 1)]
    labels += [f"t{k}" for k in range(1, p + 1)]
    for j, clause in enumerate(cnf.clauses):
        c = first_clause + j
        for lit in clause:
            literal_vertex = (abs(lit) - 1) * block + (0 if lit > 0 else 1)
            edges.append((literal_vertex, c))
        edges += [(c, first_t + k) for k in range(p)]
    edges += list(combinations(range(first_t, first_t + p), 2))
    graph = Graph.from_edges(n * block + m + p, edges)
    return GadgetGraph(graph, tuple(labels), n, m, p, len(edges))


def sat_bruteforce(cnf: Cnf3) -> tuple[bool, dict[int, bool] | None]:
    """Truth-table search; returns the first satisfying assignment found."""
    if cnf.num_vars > SAT_MAX_VARS:
        raise ValueError(f"truth-table search is limited to {SAT_MAX_VARS} variables")
    for values in product((False, True), repeat=cnf.num_vars):
        assignment = dict(enumerate(values, 1))
        if cnf.satisfied_by(assignment):
            return True, assignment
    return False, None


def extract_assignment(gadget: GadgetGraph, p: int, D_e: Iterable[int]) -> dict[int, bool]:
    """Read a truth assignment off a witness for a one-edge drop: ``u_i`` in ``D_e`` means true."""
    D = frozenset(D_e)
    for j, c in enumerate(gadget.clause_vertices, 1):
        if c in D:
            raise ReductionError(f"clause vertex c{j} is in the witness")
    for i in range(1, gadget.num_vars + 1):
        if gadget.u(i) in D and gadget.ubar(i) in D:
            raise ReductionError(f"both u{i} and ~u{i} are in the witness")
    if len(D) != p * (gadget.num_vars + 1) - 1:
        raise ReductionError(f"witness has {len(D)} vertices, expected p(n+1) - 1")
    mask = sum(1 << v for v in D)
    if deficiency_of_mask(gadget.graph, p, mask) != 1:
        raise ReductionError("witness is not one edge away from p-dominating")
    return {i: gadget.u(i) in D for i in range(1, gadget.num_vars + 1)}


@dataclass(frozen=True)
class ReductionCheck:
    satisfiable: bool
    gamma_p: int
    r_p: int
    assignment: dict[int, bool] | None
    holds: bool

    def __bool__(self) -> bool:
        return self.holds


def check_reduction(cnf: Cnf3, p: int, *, max_vertices: int = VERIFY_MAX_VERTICES) -> ReductionCheck:
    if not cnf.covers_all_literals:
        raise ValueError(f"literals never used: {cnf.missing_literals()}")
    gadget = build_gadget(cnf, p)
    if gadget.graph.n > max_vertices:
        raise ValueError(f"gadget has {gadget.graph.n} vertices, limit is {max_vertices}")
    satisfiable, _ = sat_bruteforce(cnf)
    gamma = gamma_p(gadget.graph, p).gamma_p
    cert = r_p(gadget.graph, p)
    assignment = None
    holds = gamma == p * (cnf.num_vars + 1) and satisfiable == (cert.r_p == 1)
    if cert.r_p == 1:
        assignment = extract_assignment(gadget, p, cert.witness_X)
        holds = holds and cnf.satisfied_by(assignment)
    return ReductionCheck(satisfiable, gamma, cert.r_p, assignment, holds)


def verify_reduction(cnf: Cnf3, p: int, *, max_vertices: int = VERIFY_MAX_VERTICES) -> bool:
    return check_reduction(cnf, p, max_vertices=max_vertices).holds
