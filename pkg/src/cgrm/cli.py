"""Command-line surface: generate solutions, verify them, inspect the wheel
combinatorics, compute carriers, and run the acceptance suite.

All output is canonical JSON (sorted keys, compact separators, entries sorted
by index tuple) so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import acceptance, bd, closed_form, cyb, dunkl, frobenius, wheels
from .scalars import format_scalar, parse_scalar
from .tensorops import SparseOp2, canonical_json, wedge_to_op


class CliError(Exception):
    def __init__(self, message, code=2):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    """Validated flags for one invocation."""

    command: str
    m: int = 0
    n: int = 0
    construction: str = "closed"
    kappa: Fraction = Fraction(1)
    c0: Fraction = Fraction(1)
    c1: Fraction = Fraction(0)
    u: Fraction = Fraction(1)
    t: Fraction = Fraction(1)
    lam: Fraction = None
    pair: tuple = None
    part: str = "r"
    infile: str = None
    infile_b: str = None
    out: str = None
    seed: int = acceptance.DEFAULT_SEED

    def require_coprime(self):
        if not 1 <= self.m < self.n:
            raise CliError("need 1 <= m < n")
        if gcd(self.m, self.n) != 1:
            raise CliError("m and n must be coprime")


def _emit(config, obj):
    text = canonical_json(obj)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_op2(path):
    import json
    try:
        with open(path) as fh:
            obj = json.load(fh)
        return SparseOp2.from_json_obj(obj)
    except (OSError, ValueError, KeyError, IndexError) as exc:
        raise CliError("cannot read operator file %r: %s" % (path, exc))


def cmd_gen(config: RunConfig) -> int:
    config.require_coprime()
    m, n = config.m, config.n
    if config.construction == "closed":
        op = closed_form.cg_closed_form(m, n)
    elif config.construction == "bd":
        op = wedge_to_op(bd.bd_r_matrix(n - m, n))
    elif config.construction == "dunkl":
        if m == 1:
            op = dunkl.r_via_dunkl_m1(n)
        elif m == 2:
            if config.c0 == 0:
                raise CliError("c0 must be nonzero for the m = 2 construction")
            params = dunkl.CherednikParams(config.kappa, config.c0, config.c1, m=2)
            try:
                op = dunkl.r_via_dunkl_m2(n, params)
            except ValueError as exc:
                raise CliError(str(exc))
        else:
            raise CliError("the dunkl construction requires m in {1, 2}")
    else:
        raise CliError("unknown construction %r" % config.construction)
    _emit(config, op.to_json_obj())
    return 0


def cmd_verify(config: RunConfig) -> int:
    op = _load_op2(config.infile)
    if config.lam is not None:
        residual = cyb.cyb_lambda(op, config.lam)
        ok = residual.is_zero()
        _emit(config, {"cyb_lambda_zero": ok, "lambda": format_scalar(config.lam),
                       "residual_nonzero_count": residual.count_nonzero()})
        return 0 if ok else 1
    report = cyb.find_lambda(op)
    _emit(config, report.to_json_obj())
    return 0 if report.classification != cyb.NOT_R_MATRIX else 1


def cmd_compare(config: RunConfig) -> int:
    a = _load_op2(config.infile)
    b = _load_op2(config.infile_b)
    if a.n != b.n:
        _emit(config, {"equal": False, "reason": "dimension mismatch"})
        return 1
    diff = a - b
    entries = sorted(((out, inp, v) for out, inp, v in diff.entries()),
                     key=lambda x: (x[0], x[1]))
    _emit(config, {"equal": diff.is_zero(),
                   "differences": [[list(o), list(i), format_scalar(v)]
                                   for o, i, v in entries]})
    return 0 if diff.is_zero() else 1


def cmd_wheels(config: RunConfig) -> int:
    config.require_coprime()
    w = wheels.wheel(config.m, config.n)
    obj = {"m": w.m, "n": w.n, "seq": w.seq, "strings": w.strings,
           "minimal_elements": w.minimal_elements}
    if config.pair is not None:
        jp, lp = config.pair
        if not (1 <= jp <= w.n and 1 <= lp <= w.n):
            raise CliError("pair indices must lie in 1..n")
        obj["pair"] = [jp, lp]
        obj["sbar"] = sorted(wheels.sbar_closed(w, jp, lp))
    _emit(config, obj)
    return 0


def cmd_dunkl(config: RunConfig) -> int:
    from .polyops import Mono, window_matrix
    if config.m == 1:
        params = dunkl.CherednikParams(config.kappa, config.c0, m=1)
        y1, y2 = dunkl.dunkl_y(params, 1), dunkl.dunkl_y(params, 2)
        op = Fraction(-1, config.n) * (Mono(1, 0) * y1 - Mono(0, 1) * y2)
        matrix = window_matrix(op, config.n)
    elif config.m == 2:
        if config.c0 == 0:
            raise CliError("c0 must be nonzero when m = 2")
        if config.n % 2 == 0:
            raise CliError("n must be odd when m = 2")
        params = dunkl.CherednikParams(config.kappa, config.c0, config.c1, m=2)
        matrix = dunkl.r_via_dunkl_m2(config.n, params)
    else:
        raise CliError("m must be 1 or 2")
    _emit(config, matrix.to_json_obj())
    return 0


def cmd_boundary(config: RunConfig) -> int:
    if config.n % 2 == 0 or config.n < 3:
        raise CliError("n must be odd and >= 3")
    _emit(config, dunkl.b_cg(config.n, config.u, config.t).to_json_obj())
    return 0


def cmd_carrier(config: RunConfig) -> int:
    op = _load_op2(config.infile)
    if not op.is_antisymmetric():
        raise CliError("operator is not antisymmetric", code=1)
    car = frobenius.carrier(op)
    basis = [sorted(([list(pos), format_scalar(v)] for pos, v in mat.entries.items()))
             for mat in car.basis]
    obj = {"dimension": car.dimension, "bracket_closed": car.bracket_closed,
           "basis": basis}
    if car.bracket_closed and car.dimension:
        fd = frobenius.r_check(op, car)
        functional_ok = fd.invertible and fd.skew and frobenius.cocycle_check(fd)
        obj["frobenius"] = {"invertible": fd.invertible, "skew": fd.skew,
                            "functional_check": functional_ok}
    _emit(config, obj)
    return 0


def cmd_bd(config: RunConfig) -> int:
    config.require_coprime()
    m, n = config.m, config.n
    t = bd.cg_triple(m, n)
    obj = {"m": m, "n": n, "s0": sorted(t.s0), "s1": sorted(t.s1),
           "zeta": {str(k): t.zeta[k] for k in sorted(t.zeta)}}
    parts = {"alpha": bd.alpha_part, "beta": bd.beta_part,
             "gamma": lambda m_, n_: bd.gamma_part(n_), "r": bd.bd_r_matrix}
    if config.part not in parts:
        raise CliError("unknown part %r" % config.part)
    obj["part"] = config.part
    obj["op"] = wedge_to_op(parts[config.part](m, n)).to_json_obj()
    _emit(config, obj)
    return 0


def cmd_acceptance(config: RunConfig) -> int:
    results = acceptance.run_all(seed=config.seed)
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print("%s  criterion %d: %s  [%s]" % (status, res.cid, res.name, res.detail))
        if not res.passed:
            failed += 1
    print("%d/%d criteria passed (seed %d)" % (len(results) - failed, len(results), config.seed))
    return 0 if failed == 0 else 1


class _Parser(argparse.ArgumentParser):
    """Raises instead of printing usage, so every failure exits with JSON."""

    def error(self, message):
        raise CliError(message)


def build_parser():
    parser = _Parser(prog="cgrm")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mn(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("gen", help="generate a solution as canonical JSON")
    add_mn(p)
    p.add_argument("--construction", choices=("closed", "bd", "dunkl"), default="closed")
    p.add_argument("--kappa", default="1")
    p.add_argument("--c0", default="1")
    p.add_argument("--c1", default="0")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="classify an operator file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--out")

    p = sub.add_parser("compare", help="entry-wise diff of two operator files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--out")

    p = sub.add_parser("wheels", help="strings, minimal elements, aligned index sets")
    add_mn(p)
    p.add_argument("--pair", type=int, nargs=2, metavar=("J", "L"))
    p.add_argument("--out")

    p = sub.add_parser("dunkl", help="window matrix of the Dunkl-side operator")
    add_mn(p)
    p.add_argument("--kappa", default="1")
    p.add_argument("--c0", default="1")
    p.add_argument("--c1", default="0")
    p.add_argument("--out")

    p = sub.add_parser("boundary", help="two-parameter boundary solution")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--out")

    p = sub.add_parser("carrier", help="carrier and Frobenius report for an operator file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")

    p = sub.add_parser("bd", help="triple data and root-data construction")
    add_mn(p)
    p.add_argument("--part", choices=("alpha", "beta", "gamma", "r"), default="r")
    p.add_argument("--out")

    p = sub.add_parser("acceptance", help="run the acceptance suite")
    p.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    return parser


def _config_from_args(args) -> RunConfig:
    config = RunConfig(command=args.command)
    for name in ("m", "n", "seed"):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(config, name, getattr(args, name))
    for name in ("kappa", "c0", "c1", "u", "t"):
        if hasattr(args, name) and getattr(args, name) is not None:
            try:
                setattr(config, name, parse_scalar(getattr(args, name)))
            except ValueError:
                raise CliError("invalid rational for --%s: %r" % (name, getattr(args, name)))
    if getattr(args, "lam", None) is not None:
        try:
            config.lam = parse_scalar(args.lam)
        except ValueError:
            raise CliError("invalid rational for --lambda: %r" % args.lam)
    if getattr(args, "pair", None) is not None:
        config.pair = tuple(args.pair)
    config.part = getattr(args, "part", "r")
    config.infile = getattr(args, "infile", None)
    if hasattr(args, "file_a"):
        config.infile = args.file_a
        config.infile_b = args.file_b
    config.out = getattr(args, "out", None)
    config.construction = getattr(args, "construction", "closed")
    return config


COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "compare": cmd_compare,
    "wheels": cmd_wheels,
    "dunkl": cmd_dunkl,
    "boundary": cmd_boundary,
    "carrier": cmd_carrier,
    "bd": cmd_bd,
    "acceptance": cmd_acceptance,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        config = _config_from_args(args)
        return COMMANDS[args.command](config)
    except CliError as exc:
        sys.stdout.write(canonical_json({"error": str(exc)}))
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
