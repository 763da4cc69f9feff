"""Command-line entry point.

Exit status: 0 conclusive success, 1 verification failure or a negative
answer where existence was asked for, 2 inconclusive (budget), 64 usage or
input-format error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import kernel
from .coloring import (
    blow_up,
    extract_suborientation,
    is_homomorphism,
    verify_coloring,
    verify_consistency,
)
from .cycles import MiserRejection, analyze_miser, beta, construct_typeA_coloring, cycle_value
from .formats import (
    FormatError,
    format_coloring,
    format_digraph,
    format_suborientation,
    read_coloring,
    read_digraph,
    read_suborientation,
)
from .reproduce import DEFAULT_SEED, SUITES, fmt
from .solver import Outcome, SearchBudget, bound_sweep, chi_b, exists_bfold, hom_exists
from .targets import build_target, check_nice, epsilon_report, tuple_coloring

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


class Run:
    """Collects the report, inputs and certificates of one invocation."""

    def __init__(self, args):
        self.args = args
        self.report: dict[str, object] = {}
        self.inputs: dict[str, str] = {}
        self.certificates: list[str] = []

    def __setitem__(self, key, value):
        self.report[key] = value

    def read(self, reader, path):
        data = Path(path).read_bytes()
        self.inputs[str(path)] = hashlib.sha256(data).hexdigest()
        return reader(path)

    def write(self, text: str, path=None):
        path = path or self.args.out
        if path:
            Path(path).write_text(text)
            self.certificates.append(str(path))
            self["written"] = str(path)

    def budget(self) -> SearchBudget:
        return SearchBudget(self.args.budget_nodes or None, self.args.time_limit)


def _outcome_status(outcome: Outcome) -> int:
    return {Outcome.EXISTS: EXIT_OK, Outcome.NOT_EXISTS: EXIT_FAIL,
            Outcome.INCONCLUSIVE: EXIT_INCONCLUSIVE}[outcome]


def _render(value) -> str:
    if isinstance(value, Fraction):
        return fmt(value)
    if isinstance(value, (list, tuple)):
        return " ".join(_render(v) for v in value)
    return str(value)


def _jsonable(value):
    if isinstance(value, Fraction):
        return fmt(value)
    if isinstance(value, Outcome):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


# --- commands -----------------------------------------------------------------

def cmd_verify(run: Run) -> int:
    g = run.read(read_digraph, run.args.graph)
    c = run.read(read_coloring, run.args.coloring)
    verdict = verify_coloring(g, c)
    if verdict:
        run["result"] = f"valid, ratio {fmt(c.ratio())}"
        return EXIT_OK
    run["result"] = "invalid"
    run["violation"] = str(verdict.violation)
    return EXIT_FAIL


def _search_opts(run):
    return dict(symmetry=run.args.symmetry, backend=None if run.args.backend == "auto" else run.args.backend)


def cmd_solve_bfold(run: Run) -> int:
    g = run.read(read_digraph, run.args.graph)
    res = exists_bfold(g, run.args.b, run.args.k, run.budget(), **_search_opts(run))
    run["b"], run["k"] = res.b, res.k
    run["outcome"] = {Outcome.EXISTS: "exists", Outcome.NOT_EXISTS: "not-exists (exhaustive)",
                      Outcome.INCONCLUSIVE: "inconclusive (budget exhausted)"}[res.outcome]
    run["nodes"] = res.nodes
    if res.exists:
        run["ratio"] = res.certificate.ratio()
        run.write(format_coloring(res.certificate, f"{res.b}-fold {res.k}-coloring"))
    return _outcome_status(res.outcome)


def _cmd_chi(run: Run, b: int) -> int:
    g = run.read(read_digraph, run.args.graph)
    res = chi_b(g, b, run.budget(), **_search_opts(run))
    for k, o in res.outcomes.items():
        run[f"k={k}"] = o
    name = "chi_o" if b == 1 else f"chi_{b}"
    if res.value is None:
        run[name] = "inconclusive"
        return EXIT_INCONCLUSIVE
    run[name] = res.value if res.conclusive else f"<= {res.value} (inconclusive below)"
    run["ratio"] = Fraction(res.value, b)
    run.write(format_coloring(res.certificate, f"{b}-fold {res.value}-coloring"))
    return EXIT_OK if res.conclusive else EXIT_INCONCLUSIVE


def cmd_solve_chi_o(run: Run) -> int:
    return _cmd_chi(run, 1)


def cmd_solve_chi_b(run: Run) -> int:
    return _cmd_chi(run, run.args.b)


def cmd_solve_hom(run: Run) -> int:
    g = run.read(read_digraph, getattr(run.args, "from"))
    h = run.read(read_digraph, run.args.to)
    res = hom_exists(g, h, run.budget())
    run["outcome"] = res.outcome
    run["nodes"] = res.nodes
    if res.mapping is not None:
        run["map"] = res.mapping
    return _outcome_status(res.outcome)


def cmd_solve_sweep(run: Run) -> int:
    g = run.read(read_digraph, run.args.graph)
    rep = bound_sweep(g, run.args.bmax, run.budget(), graph_id=run.args.graph, **_search_opts(run))
    run["graph"] = rep.graph_id
    run["omega_ro"] = rep.omega
    run["alpha_o"] = rep.alpha
    run["lower"] = rep.lower
    run["lower_source"] = rep.lower_source
    run["upper"] = rep.upper if rep.upper is not None else "-"
    if rep.upper_source:
        run["upper_source"] = "coloring b={} k={}".format(*rep.upper_source)
    run["chi_o"] = rep.chi_o if rep.chi_o is not None else "inconclusive"
    run["tight"] = "yes" if rep.tight else "no"
    for (b, k), o in sorted(rep.outcomes.items()):
        run[f"b={b} k={k}"] = o
    if rep.upper_source:
        run.write(format_coloring(rep.certificates[rep.upper_source], "best certificate"))
    problems = rep.problems(g)
    if problems:
        run["problems"] = "; ".join(problems)
        return EXIT_FAIL
    return EXIT_OK if rep.conclusive else EXIT_INCONCLUSIVE


def cmd_cycle_value(run: Run) -> int:
    run["value"] = cycle_value(run.args.r).describe()
    return EXIT_OK


def cmd_cycle_beta(run: Run) -> int:
    bv = beta(run.args.r)
    run["beta"] = bv.value
    run["p"] = bv.p if bv.p is not None else "none"
    return EXIT_OK


def cmd_cycle_construct(run: Run) -> int:
    c = construct_typeA_coloring(run.args.r)
    run["k"], run["b"], run["ratio"] = c.k, c.b, c.ratio()
    run.write(format_coloring(c, f"{c.b}-fold {c.k}-coloring of C_{run.args.r}"))
    return EXIT_OK


def cmd_cycle_analyze(run: Run) -> int:
    c = run.read(read_coloring, run.args.coloring)
    try:
        ms = analyze_miser(run.args.r, c)
    except MiserRejection as exc:
        run["rejected"] = exc.invariant
        run["detail"] = exc.detail
        return EXIT_FAIL
    run["rotation"] = ms.rotation
    run["triples"] = ms.t
    run["quads_between_triples"] = ms.q
    run["blocks"] = ms.block_string()
    run["t_row_0"] = ms.row_string(0)
    run["max_color_use"] = ms.max_color_use
    return EXIT_OK


def cmd_target_build(run: Run) -> int:
    t = build_target(run.args.l)
    run["l"], run["m"], run["n"], run["arcs"] = t.l, t.m, t.n, len(t.graph.arcs)
    run.write(format_digraph(t.graph, f"T_{t.l}: tuples of {t.m} consecutive residues mod {t.n}"))
    return EXIT_OK


def cmd_target_nice(run: Run) -> int:
    g = run.read(read_digraph, run.args.graph)
    rep = check_nice(g, run.args.k, run.args.budget_nodes or None, run.args.time_limit)
    run["k"] = rep.k
    run["outcome"] = rep.outcome
    if rep.nice is False:
        run["signs"] = "".join(rep.signs)
        run["start"] = rep.start
        run["reached"] = list(rep.reached)
        return EXIT_FAIL
    return EXIT_OK if rep.nice else EXIT_INCONCLUSIVE


def cmd_target_coloring(run: Run) -> int:
    t = build_target(run.args.l)
    c = tuple_coloring(t)
    valid = verify_coloring(t.graph, c).valid
    run["b"], run["k"], run["ratio"] = c.b, c.k, c.ratio()
    run["valid"] = "yes" if valid else "no"
    run.write(format_coloring(c, f"tuple coloring of T_{t.l}"))
    return EXIT_OK if valid else EXIT_FAIL


def cmd_target_epsilon(run: Run) -> int:
    try:
        eps = Fraction(run.args.eps)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read {run.args.eps!r} as a fraction P/Q")
    rep = epsilon_report(eps)
    run["eps"], run["l"], run["m"], run["n"] = rep.eps, rep.l, rep.m, rep.n
    run["girth"] = rep.girth
    run["bound"] = rep.bound
    run["note"] = rep.note
    return EXIT_OK


def cmd_kneser_extract(run: Run) -> int:
    g = run.read(read_digraph, run.args.graph)
    c = run.read(read_coloring, run.args.coloring)
    verdict = verify_coloring(g, c)
    if not verdict:
        run["result"] = "invalid coloring"
        run["violation"] = str(verdict.violation)
        return EXIT_FAIL
    sub, phi = extract_suborientation(g, c)
    ok = verify_consistency(sub).valid and is_homomorphism(g, sub.graph, phi)
    run["a"], run["b"], run["vertices"], run["arcs"] = sub.a, sub.b, sub.graph.n, len(sub.graph.arcs)
    run["consistent"] = "yes" if ok else "no"
    run["map"] = phi
    run.write(format_suborientation(sub, "consistent suborientation"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_kneser_check(run: Run) -> int:
    sub = run.read(read_suborientation, run.args.graph)
    verdict = verify_consistency(sub)
    run["result"] = "consistent" if verdict else "inconsistent"
    if not verdict:
        run["violation"] = str(verdict.violation)
    return EXIT_OK if verdict else EXIT_FAIL


def cmd_kneser_blowup(run: Run) -> int:
    sub = run.read(read_suborientation, run.args.graph)
    if not verify_consistency(sub):
        run["result"] = "input is not consistent"
        return EXIT_FAIL
    big = blow_up(sub, run.args.c)
    ok = verify_consistency(big).valid
    run["a"], run["b"], run["consistent"] = big.a, big.b, "yes" if ok else "no"
    run.write(format_suborientation(big, f"blow-up by {run.args.c}"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_reproduce(run: Run) -> int:
    name = run.args.suite
    kwargs = {}
    if name == "properties":
        kwargs = dict(seed=run.args.seed, count=run.args.count)
    if name in ("cycles", "properties"):
        kwargs["budget"] = run.budget()
    rows = SUITES[name](**kwargs)
    for row in rows:
        run[row.item] = f"{'PASS' if row.ok else 'FAIL'} | expected {row.expected} | computed {row.computed}"
    run["suite"] = f"{name}: {sum(r.ok for r in rows)}/{len(rows)} passed"
    return EXIT_OK if all(r.ok for r in rows) else EXIT_FAIL


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-nodes", type=int, default=10**8, help="search node budget (0 = unlimited)")
    common.add_argument("--time-limit", type=float, default=None, help="seconds per search")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", help="write the certificate / constructed object here")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--manifest", help="write a JSON run manifest here")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--symmetry", choices=("colors", "root"), default="colors")
    search.add_argument("--backend", choices=("auto", "cython", "python"), default="auto")

    p = _Parser(prog="orifrac", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(group, name, func, *parents, **kw):
        q = group.add_parser(name, parents=[common, *parents], **kw)
        q.set_defaults(func=func)
        return q

    q = leaf(sub, "verify", cmd_verify, help="check a b-fold coloring")
    q.add_argument("--graph", required=True)
    q.add_argument("--coloring", required=True)

    solve = sub.add_parser("solve", help="exact searches").add_subparsers(dest="what", required=True,
                                                                          parser_class=_Parser)
    q = leaf(solve, "bfold", cmd_solve_bfold, search)
    q.add_argument("--graph", required=True)
    q.add_argument("--b", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q = leaf(solve, "chi-o", cmd_solve_chi_o, search)
    q.add_argument("--graph", required=True)
    q = leaf(solve, "chi-b", cmd_solve_chi_b, search)
    q.add_argument("--graph", required=True)
    q.add_argument("--b", type=int, required=True)
    q = leaf(solve, "hom", cmd_solve_hom)
    q.add_argument("--from", required=True)
    q.add_argument("--to", required=True)
    q = leaf(solve, "sweep", cmd_solve_sweep, search)
    q.add_argument("--graph", required=True)
    q.add_argument("--bmax", type=int, required=True)

    cyc = sub.add_parser("cycle", help="directed cycles").add_subparsers(dest="what", required=True,
                                                                        parser_class=_Parser)
    for name, func in (("value", cmd_cycle_value), ("beta", cmd_cycle_beta), ("construct", cmd_cycle_construct)):
        leaf(cyc, name, func).add_argument("--r", type=int, required=True)
    q = leaf(cyc, "analyze", cmd_cycle_analyze)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--coloring", required=True)

    tgt = sub.add_parser("target", help="circulant targets").add_subparsers(dest="what", required=True,
                                                                           parser_class=_Parser)
    leaf(tgt, "build", cmd_target_build).add_argument("--l", type=int, required=True)
    q = leaf(tgt, "nice", cmd_target_nice)
    q.add_argument("--graph", required=True)
    q.add_argument("--k", type=int, required=True)
    leaf(tgt, "coloring", cmd_target_coloring).add_argument("--l", type=int, required=True)
    leaf(tgt, "epsilon", cmd_target_epsilon).add_argument("--eps", required=True)

    kn = sub.add_parser("kneser", help="consistent suborientations").add_subparsers(dest="what", required=True,
                                                                                   parser_class=_Parser)
    q = leaf(kn, "extract", cmd_kneser_extract)
    q.add_argument("--graph", required=True)
    q.add_argument("--coloring", required=True)
    leaf(kn, "check", cmd_kneser_check).add_argument("--graph", required=True)
    q = leaf(kn, "blowup", cmd_kneser_blowup)
    q.add_argument("--graph", required=True)
    q.add_argument("--c", type=int, required=True)

    q = leaf(sub, "reproduce", cmd_reproduce)
    q.add_argument("suite", choices=sorted(SUITES))
    q.add_argument("--count", type=int, default=200, help="random graphs for the properties suite")
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    r = Run(args)
    r["backend"] = kernel.backend_name()
    try:
        status = args.func(r)
    except (FormatError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_USAGE
        r["error"] = str(exc)
    r["exit"] = status
    if args.json:
        stdout.write(json.dumps(_jsonable(r.report), indent=2, sort_keys=False) + "\n")
    else:
        for key, value in r.report.items():
            stdout.write(f"{key}: {_render(value)}\n")
    if args.manifest:
        manifest = {
            "command": " ".join(["orifrac", *(argv if argv is not None else sys.argv[1:])]),
            "inputs": r.inputs,
            "outcome": _jsonable(r.report),
            "certificates": r.certificates,
        }
        Path(args.manifest).write_text(json.dumps(manifest, indent=2) + "\n")
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
