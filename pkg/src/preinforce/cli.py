"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 size guard refused the run,
3 a sweep found a formula/bound disagreement.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import bounds, closed_forms, pdomination, reduction, reinforcement
from .graph import (
    Graph,
    GraphFormatError,
    complete_multipartite,
    cycle_graph,
    parse_edge_list,
    path_graph,
)

COMMANDS = ("gamma", "reinforce", "eta", "mu", "bounds", "formula", "reduce", "verify", "verify-cert", "sweep")

GUARDS = {
    "gamma": 24,
    "verify-cert": 24,
    "eta": 20,
    "reinforce": 20,
    "mu": 18,
    "bounds": 18,
    "sweep": 18,
}

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_MISMATCH = 0, 1, 2, 3


class InputError(Exception):
    pass


class GuardRefused(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    p: int = 1
    family: str | None = None
    cnf: str | None = None
    cert: str | None = None
    out: str | None = None
    format: str = "text"
    force: bool = False
    families: tuple[str, ...] = ()
    p_range: str | None = None

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.p < 1:
            raise InputError("p must be a positive integer")
        if self.format not in ("text", "json", "csv"):
            raise InputError(f"unknown format {self.format!r}")


# -- family mini-language ------------------------------------------------------


@dataclass(frozen=True)
class Family:
    kind: str
    arg: Any

    @property
    def name(self) -> str:
        if self.kind == "kpartite":
            return "kpartite:" + ",".join(map(str, self.arg))
        return f"{self.kind}:{self.arg}"

    def build(self) -> Graph:
        if self.kind == "path":
            return path_graph(self.arg)
        if self.kind == "cycle":
            return cycle_graph(self.arg)
        if self.kind == "kpartite":
            return complete_multipartite(self.arg)
        try:
            text = Path(self.arg).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {self.arg}: {exc}") from None
        try:
            return parse_edge_list(text)
        except GraphFormatError as exc:
            raise InputError(f"{self.arg}: {exc}") from None


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"bad {what}: {text!r}") from None


def _int_range(text: str, what: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(_int(lo, what), _int(hi, what) + 1))
    return [_int(text, what)]


def parse_family(text: str) -> Family:
    kind, sep, arg = text.partition(":")
    if not sep:
        raise InputError(f"family must look like kind:arg, got {text!r}")
    if kind == "file":
        return Family("file", arg)
    if kind in ("path", "cycle"):
        n = _int(arg, f"{kind} size")
        if n < (3 if kind == "cycle" else 1):
            raise InputError(f"{kind} size too small: {n}")
        return Family(kind, n)
    if kind == "kpartite":
        parts = tuple(_int(s, "part size") for s in arg.split(","))
        if len(parts) < 2 or min(parts) < 1:
            raise InputError("kpartite needs at least two positive part sizes")
        return Family(kind, parts)
    raise InputError(f"unknown family kind {kind!r}")


def expand_families(text: str) -> list[Family]:
    """Like :func:`parse_family` but ``path:4..9`` expands to several instances."""
    kind, _, arg = text.partition(":")
    if kind in ("path", "cycle") and ".." in arg:
        return [parse_family(f"{kind}:{n}") for n in _int_range(arg, f"{kind} size")]
    return [parse_family(text)]


# -- commands ---------------------------------------------------------------


def _guard(config: RunConfig, g: Graph, limit: int | None = None) -> None:
    limit = GUARDS.get(config.command) if limit is None else limit
    if limit is not None and g.n > limit and not config.force:
        raise GuardRefused(
            f"{config.command} refuses n={g.n} > {limit}; pass --force to run anyway"
        )


def _graph(config: RunConfig) -> tuple[Family, Graph]:
    if config.family is None:
        raise InputError("a graph source (--family or --input) is required")
    fam = parse_family(config.family)
    return fam, fam.build()


def _read_cnf(path: str | None) -> reduction.Cnf3:
    if path is None:
        raise InputError("--cnf is required")
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", reduction.LiteralCoverageWarning)
            return reduction.parse_dimacs_cnf(text)
    except (reduction.CnfFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_gamma(config: RunConfig) -> dict:
    fam, g = _graph(config)
    _guard(config, g)
    res = pdomination.gamma_p(g, config.p)
    return {"instance": fam.name, "n": g.n, "p": config.p, **res.to_dict()}


def cmd_eta(config: RunConfig) -> dict:
    fam, g = _graph(config)
    _guard(config, g)
    try:
        res = reinforcement.eta_p(g, config.p)
    except reinforcement.ConventionCase as exc:
        raise InputError(str(exc)) from None
    return {
        "instance": fam.name,
        "p": config.p,
        "gamma_p": res.gamma_p,
        "eta_p": res.eta_p,
        "witness_X": sorted(res.witness_X),
    }


def cmd_reinforce(config: RunConfig) -> dict:
    fam, g = _graph(config)
    _guard(config, g)
    cert = reinforcement.r_p(g, config.p)
    if config.out:
        Path(config.out).write_text(cert.to_json() + "\n")
    return {"instance": fam.name, "p": config.p, **cert.to_dict()}


def cmd_verify_cert(config: RunConfig) -> dict:
    fam, g = _graph(config)
    _guard(config, g)
    if config.cert is None:
        raise InputError("--cert is required")
    try:
        cert = reinforcement.ReinforcementCertificate.from_json(Path(config.cert).read_text())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot load certificate: {exc}") from None
    verdict = reinforcement.validate_certificate(g, config.p, cert)
    return {"instance": fam.name, "p": config.p, "valid": verdict.ok, "reason": verdict.reason}


def cmd_mu(config: RunConfig) -> dict:
    fam, g = _graph(config)
    _guard(config, g)
    return {"instance": fam.name, "p": config.p, "mu_p": bounds.mu_p(g, config.p)}


def cmd_bounds(config: RunConfig) -> dict:
    fam, g = _graph(config)
    _guard(config, g)
    report = bounds.bound_report(g, config.p)
    return {"instance": fam.name, **report.to_dict()}


def _formula_value(fam: Family, p: int) -> dict:
    """Closed-form values for one family instance; empty when no formula applies."""
    out: dict[str, Any] = {}
    try:
        if fam.kind == "path":
            if p == 1:
                if fam.arg >= 4:
                    out["r_p"] = closed_forms.r_1_path_cycle(fam.arg)
            else:
                out["gamma_p"] = closed_forms.gamma_p_path(fam.arg, p)
                out["r_p"] = closed_forms.r_p_path(fam.arg, p)
        elif fam.kind == "cycle":
            if p == 1:
                if fam.arg >= 4:
                    out["r_p"] = closed_forms.r_1_path_cycle(fam.arg)
            else:
                out["gamma_p"] = closed_forms.gamma_p_cycle(fam.arg, p)
                out["r_p"] = closed_forms.r_p_cycle(fam.arg, p)
        elif fam.kind == "kpartite":
            spec = closed_forms.PartiteSpec(fam.arg)
            out["gamma_p"] = closed_forms.gamma_p_multipartite(spec, p)
            res = closed_forms.multipartite_formula(spec, p)
            out["r_p"] = res.r_p
            out["minimizer"] = list(res.minimizer_multiset(spec))
            out["f_star"] = [
                {
                    "X": list(closed_forms.as_multiset(spec, X)),
                    "positions": list(X),
                    "f": closed_forms.f(spec, X),
                    "f_star": closed_forms.f_star(spec, p, X),
                    "term": value,
                }
                for X, value in res.terms.items()
            ]
            out["r_p_counts"] = closed_forms.r_p_multipartite_counts(spec, p)
    except closed_forms.NotApplicable as exc:
        out["r_p"] = 0
        out["note"] = str(exc)
    return out


def cmd_formula(config: RunConfig) -> dict:
    if config.family is None:
        raise InputError("--family is required")
    fam = parse_family(config.family)
    if fam.kind == "file":
        raise InputError("formula needs a path, cycle or kpartite family")
    return {"instance": fam.name, "p": config.p, **_formula_value(fam, config.p)}


def cmd_reduce(config: RunConfig) -> dict:
    cnf = _read_cnf(config.cnf)
    try:
        gadget = reduction.build_gadget(cnf, config.p)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    result = {
        "p": config.p,
        "n": gadget.graph.n,
        "m": gadget.graph.num_edges,
        "covers_all_literals": cnf.covers_all_literals,
    }
    if config.out:
        Path(config.out + ".edges").write_text(gadget.edge_list())
        Path(config.out + ".labels").write_text(gadget.label_sidecar())
        result["files"] = [config.out + ".edges", config.out + ".labels"]
    else:
        result["edge_list"] = gadget.edge_list()
        result["labels"] = list(gadget.labels)
    return result


def cmd_verify(config: RunConfig) -> dict:
    cnf = _read_cnf(config.cnf)
    if not cnf.covers_all_literals:
        raise InputError(f"literals never used: {cnf.missing_literals()}")
    try:
        gadget_n = reduction.build_gadget(cnf, config.p).graph.n
    except ValueError as exc:
        raise InputError(str(exc)) from None
    limit = reduction.VERIFY_MAX_VERTICES
    if gadget_n > limit and not config.force:
        raise GuardRefused(f"gadget has {gadget_n} vertices > {limit}; pass --force")
    check = reduction.check_reduction(cnf, config.p, max_vertices=gadget_n)
    return {
        "p": config.p,
        "satisfiable": check.satisfiable,
        "gamma_p": check.gamma_p,
        "r_p": check.r_p,
        "assignment": check.assignment and {str(k): v for k, v in check.assignment.items()},
        "holds": check.holds,
    }


def sweep_row(fam: Family, p: int) -> dict:
    g = fam.build()
    formula = _formula_value(fam, p) if fam.kind != "file" else {}
    report = bounds.bound_report(g, p)
    r_formula = formula.get("r_p")
    gamma_formula = formula.get("gamma_p")
    match = (r_formula is None or r_formula == report.r_p_exact) and (
        gamma_formula is None or gamma_formula == report.gamma_p
    )
    return {
        "instance": fam.name,
        "p": p,
        "gamma_p": report.gamma_p,
        "r_p_formula": r_formula,
        "r_p_exact": report.r_p_exact,
        "mu_p": report.mu_p,
        "bounds_hold": report.all_hold,
        "ok": match and report.all_hold,
    }


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("PREINFORCE_THREADS", "1")))
    except ValueError:
        return 1


def cmd_sweep(config: RunConfig) -> dict:
    if not config.families:
        raise InputError("sweep needs at least one --family")
    fams = [f for text in config.families for f in expand_families(text)]
    ps = _int_range(config.p_range, "p range") if config.p_range else [config.p]
    for fam in fams:
        _guard(config, fam.build())
    jobs = [(fam, p) for fam in fams for p in ps]
    workers = _threads()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(sweep_row, *zip(*jobs)))
    else:
        rows = [sweep_row(fam, p) for fam, p in jobs]
    return {"rows": rows, "all_ok": all(r["ok"] for r in rows)}


HANDLERS = {
    "gamma": cmd_gamma,
    "eta": cmd_eta,
    "reinforce": cmd_reinforce,
    "verify-cert": cmd_verify_cert,
    "mu": cmd_mu,
    "bounds": cmd_bounds,
    "formula": cmd_formula,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


# -- output -------------------------------------------------------------------


def _format_text(command: str, report: dict) -> str:
    if command == "verify":
        word = "holds" if report["holds"] else "FAILS"
        sat = str(report["satisfiable"]).lower()
        return f"equivalence {word}: SAT={sat}, r_p={report['r_p']}, gamma_p={report['gamma_p']}"
    if command == "sweep":
        return _format_csv(report["rows"])
    if command == "reduce" and "edge_list" in report:
        return report["edge_list"].rstrip("\n")
    lines = []
    for key, value in report.items():
        if key == "checks":
            for check in value:
                lines.append(bounds.BoundCheck(**check).line())
        elif key == "f_star":
            for row in value:
                lines.append(f"  X={row['X']} f={row['f']} f*={row['f_star']} term={row['term']}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _format_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def run(config: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        report = HANDLERS[config.command](config)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except GuardRefused as exc:
        print(f"refused: {exc}", file=stderr)
        return EXIT_GUARD
    if config.format == "json":
        print(json.dumps(report), file=stdout)
    elif config.format == "csv" and config.command == "sweep":
        print(_format_csv(report["rows"]), file=stdout)
    else:
        print(_format_text(config.command, report), file=stdout)
    if config.command == "sweep" and not report["all_ok"]:
        return EXIT_MISMATCH
    if config.command == "verify" and not report["holds"]:
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="preinforce",
        description="Exact p-domination and p-reinforcement numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, graph: bool = True) -> None:
        sp.add_argument("-p", type=int, default=1, help="domination multiplicity (default 1)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--force", action="store_true", help="ignore the size guard")
        if graph:
            src = sp.add_mutually_exclusive_group(required=True)
            src.add_argument("--family", help="path:N | cycle:N | kpartite:a,b,... | file:PATH")
            src.add_argument("--input", help="edge-list file (same as --family file:PATH)")

    for name, help_text in [
        ("gamma", "p-domination number with a witness"),
        ("eta", "minimum total deficiency over sets of size gamma_p - 1"),
        ("mu", "private-neighbor upper bound"),
        ("bounds", "exact r_p against every upper bound"),
    ]:
        common(sub.add_parser(name, help=help_text))

    sp = sub.add_parser("reinforce", help="p-reinforcement number with a certificate")
    common(sp)
    sp.add_argument("--out", help="also write the certificate JSON here")

    sp = sub.add_parser("verify-cert", help="check a certificate written by 'reinforce'")
    common(sp)
    sp.add_argument("--cert", required=True)

    sp = sub.add_parser("formula", help="closed-form values for path/cycle/kpartite")
    common(sp, graph=False)
    sp.add_argument("--family", required=True)

    sp = sub.add_parser("reduce", help="build the gadget graph for a 3-CNF")
    common(sp, graph=False)
    sp.add_argument("--cnf", required=True)
    sp.add_argument("--out", help="write PREFIX.edges and PREFIX.labels")

    sp = sub.add_parser("verify", help="check satisfiable <=> r_p(gadget) = 1")
    common(sp, graph=False)
    sp.add_argument("--cnf", required=True)

    sp = sub.add_parser("sweep", help="table of exact vs formula vs bounds")
    sp.add_argument("--family", action="append", dest="families", required=True,
                    help="repeatable; path:4..9 style ranges allowed")
    sp.add_argument("-p", default="1", dest="p_range", help="value or range like 1..3")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--force", action="store_true")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    family = getattr(args, "family", None)
    if getattr(args, "input", None):
        family = f"file:{args.input}"
    if args.command == "sweep":
        return RunConfig(
            command="sweep",
            families=tuple(args.families),
            p_range=args.p_range,
            format=args.format,
            force=args.force,
        )
    return RunConfig(
        command=args.command,
        p=args.p,
        family=family,
        cnf=getattr(args, "cnf", None),
        cert=getattr(args, "cert", None),
        out=getattr(args, "out", None),
        format=args.format,
        force=args.force,
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
