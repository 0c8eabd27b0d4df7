"""Command-line front end.

Exit status: 0 when the computation (and any verification) passes, 1 when a
verification fails, 2 on usage or input errors.
"""
import argparse
import csv
import io
import json
import logging
import sys
from collections import Counter
from dataclasses import dataclass

from . import gram, regular, tensor, thoma
from .errors import RookError
from .notation import format_element, parse
from .quasicycle import decompose
from .rook import enumerate_rn, rank_deficit, transposition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ORACLE_TOL = 1e-10
LIMIT_TOL = 1e-12


class UsageError(Exception):
    pass


@dataclass
class Config:
    params: str | None = None
    model: str | None = None
    n: int | None = None
    seed: int = 0
    tol: float | None = None
    max_subset: int = 8
    format: str = "json"
    verbosity: int = 0

    def __post_init__(self):
        if self.tol is not None and self.tol <= 0:
            raise UsageError("--tol must be positive")
        if not 0 <= self.seed < 2**64:
            raise UsageError("--seed must be a 64-bit unsigned value")


def _load_json(path, what):
    if path is None:
        raise UsageError(f"--{what} is required")
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {what} file {path}: {exc}") from exc


def _params(cfg, allow_unchecked=False):
    return thoma.from_json(_load_json(cfg.params, "params"), allow_unchecked=allow_unchecked)


def _model(cfg):
    return tensor.validate_model(_load_json(cfg.model, "model"))


def _elements(args):
    if args.all_rn is not None:
        return enumerate_rn(args.all_rn)
    if args.elements is None:
        raise UsageError("give --all-rn N or --elements FILE")
    try:
        with open(args.elements) as fh:
            lines = [line.strip() for line in fh]
    except OSError as exc:
        raise UsageError(f"cannot read elements file {args.elements}: {exc}") from exc
    elements = [parse(line) for line in lines if line and not line.startswith("#")]
    if not elements:
        raise UsageError(f"no elements in {args.elements}")
    return elements


def _emit(out, report):
    out.write(json.dumps(report) + "\n")


def cmd_eval(cfg, args, out):
    p = _params(cfg)
    _emit(out, {"value": thoma.character(p, parse(args.expr))})
    return EXIT_OK


def cmd_decompose(cfg, args, out):
    r = parse(args.expr)
    _emit(out, {"expr": format_element(r), "quasicycles": [q.to_json() for q in decompose(r)]})
    return EXIT_OK


def cmd_gram(cfg, args, out):
    p = _params(cfg, allow_unchecked=True)
    elements = _elements(args)
    g = gram.gram_matrix(p, elements)
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + [format_element(r) for r in elements])
        for r, row in zip(elements, g):
            writer.writerow([format_element(r)] + [repr(float(x)) for x in row])
        out.write(buf.getvalue())
        return EXIT_OK
    report = gram.psd_report(g, elements, cfg.tol or gram.PSD_TOL)
    data = report.to_json()
    data["n"] = len(elements)
    _emit(out, data)
    return EXIT_OK if report.is_psd else EXIT_FAIL


def cmd_centrality(cfg, args, out):
    p = _params(cfg, allow_unchecked=True)
    report = gram.check_centrality(p, _elements(args), cfg.tol or gram.CENTRALITY_TOL)
    _emit(out, report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oracle(cfg, args, out):
    m = _model(cfg)
    r = parse(args.expr)
    oracle = tensor.oracle_character(m, r)
    formula = thoma.character(m.thoma_params(), r)
    diff = abs(oracle - formula)
    _emit(out, {"oracle": oracle, "formula": formula, "abs_diff": diff})
    return EXIT_OK if diff <= (cfg.tol or ORACLE_TOL) else EXIT_FAIL


def cmd_limits(cfg, args, out):
    m = _model(cfg)
    n = cfg.n if cfg.n is not None else 3
    tol = cfg.tol or LIMIT_TOL
    far = list(range(max(n, 1) + 1, m.n_factors + 1))
    if not far:
        raise UsageError(f"n_factors={m.n_factors} leaves no room beyond the support of R_{n}")
    limit = tensor.limit_operator(m, 1)
    rows, worst = [], 0.0
    for r in enumerate_rn(n):
        op = tensor.lift(r, m)
        target = tensor.expectation(limit @ op, m)
        values = [tensor.expectation(tensor.lift(transposition(1, k), m) @ op, m) for k in far]
        dev = max(abs(v - target) for v in values)
        worst = max(worst, dev)
        rows.append({"expr": format_element(r), "limit": target, "values": values, "max_deviation": dev})
    passed = worst <= tol
    _emit(out, {"k": 1, "n_values": far, "max_deviation": worst, "passed": passed, "rows": rows})
    return EXIT_OK if passed else EXIT_FAIL


def cmd_enumerate(cfg, args, out):
    if cfg.n is None:
        raise UsageError("--n is required")
    elements = enumerate_rn(cfg.n)
    counts = Counter(rank_deficit(r) for r in elements)
    by_deficit = {str(k): counts[k] for k in sorted(counts)}
    _emit(out, {"total": len(elements), "by_deficit": by_deficit})
    return EXIT_OK


def cmd_regcheck(cfg, args, out):
    if cfg.n is None:
        raise UsageError("--n is required")
    result = regular.check_regular(cfg.n, samples=args.samples, seed=cfg.seed)
    report = {"n": result["n"]}
    ok = True
    for key in ("star_rep", "multiplicative", "commute", "grading"):
        report[key] = "pass" if result[key] else "fail"
        ok = ok and result[key]
    _emit(out, report)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_witness(cfg, args, out):
    p = _params(cfg, allow_unchecked=True)
    report = gram.witness_search(
        p, _elements(args), cfg.max_subset, cfg.seed, trials=args.trials, tol=cfg.tol or gram.PSD_TOL
    )
    _emit(out, report.to_json())
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params")
    common.add_argument("--model")
    common.add_argument("--n", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float)
    common.add_argument("--max-subset", type=int, default=8)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="rookchar", description="Characters of the finitary rook monoid.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    def element_source(sp):
        group = sp.add_mutually_exclusive_group()
        group.add_argument("--all-rn", type=int, metavar="N")
        group.add_argument("--elements", metavar="FILE")

    add("eval", cmd_eval, "character value of an element").add_argument("expr")
    add("decompose", cmd_decompose, "canonical quasicycle decomposition").add_argument("expr")
    element_source(add("gram", cmd_gram, "Gram matrix and PSD check"))
    element_source(add("centrality", cmd_centrality, "check f(rs) = f(sr)"))
    add("oracle", cmd_oracle, "tensor-realization value vs formula").add_argument("expr")
    add("limits", cmd_limits, "stabilization of (1 n) toward the limit operator")
    add("enumerate", cmd_enumerate, "count R_n by rank deficit")
    add("regcheck", cmd_regcheck, "regular representation laws").add_argument("--samples", type=int)
    witness = add("witness", cmd_witness, "search for a negative Gram eigenvalue")
    element_source(witness)
    witness.add_argument("--trials", type=int, default=200)
    return parser


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), stream=err)
    try:
        cfg = Config(args.params, args.model, args.n, args.seed, args.tol, args.max_subset, args.format, args.verbose)
        return args.func(cfg, args, out)
    except (UsageError, RookError) as exc:
        err.write(f"rookchar {args.command}: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())
