"""``wedgelab`` command line.

Exit status: 0 success, 1 bad input, 2 some certificate inconclusive,
3 Groebner budget exhausted, 4 a ``verify`` check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .components import (
    MonomialHypersurface,
    StaircasePrime,
    component_report,
    enumerate_minimal_primes,
    lci_verdict,
    radical_generators,
    radical_monomial_scheme,
)
from .multiplicity import DEFAULT_Q, DEFAULT_TRIALS, PROVEN, certify, conjecture_sweep
from .oracle import BudgetExceeded
from .parsing import ParseError, parse_polynomial
from .polynomial import plain
from .schemes import AffineIdealInput, build_jet_ideal, build_wedge_ideal

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE, EXIT_BUDGET, EXIT_CHECK = 0, 1, 2, 3, 4

REPORT_SCHEMA = {
    "type": "object",
    "required": ["m", "a", "primes", "radical_gens", "verdict"],
    "additionalProperties": False,
    "properties": {
        "m": {"type": "integer", "minimum": 0},
        "a": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "primes": {
            "type": ["array", "null"],
            "items": {
                "type": "object",
                "required": ["t", "height", "dim"],
                "additionalProperties": False,
                "properties": {
                    "t": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "height": {"type": "integer", "minimum": 0},
                    "dim": {"type": "integer", "minimum": 0},
                },
            },
        },
        "radical_gens": {"type": ["array", "null"], "items": {"type": "string"}},
        "verdict": {"type": ["object", "null"]},
    },
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _csv_ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _hypersurface(args) -> MonomialHypersurface:
    a = _csv_ints(args.a)
    try:
        return MonomialHypersurface(a, args.N or 0)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _ideal_input(args) -> AffineIdealInput:
    polys = []
    for text in args.f:
        if text.startswith("@"):
            with open(text[1:]) as fh:
                polys.extend(parse_polynomial(line) for line in fh if line.strip() and not line.startswith("#"))
        else:
            polys.append(parse_polynomial(text))
    ambient = [plain(v) for v in args.vars.split(",")] if args.vars else None
    try:
        return AffineIdealInput.from_polynomials(polys, ambient)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit(obj) -> str:
    return json.dumps(obj, indent=2)


def _report(X: MonomialHypersurface, m: int, with_radical: bool, with_verdict: bool) -> dict:
    primes = [component_report(P, X, m) for P in enumerate_minimal_primes(X, m)]
    return {
        "m": m,
        "a": list(X.a),
        "primes": [{"t": list(r.prime.t), "height": r.height, "dim": r.dim} for r in primes],
        "radical_gens": [str(g) for g in radical_generators(X, m)] if with_radical else None,
        "verdict": dict(lci_verdict(X, m).as_dict(), N=X.N) if with_verdict else None,
    }


def cmd_build(args, out) -> int:
    src = _ideal_input(args)
    if args.command == "build-wedge":
        ideal = build_wedge_ideal(src, args.m)
        keyed = [({"source": k, "i": i, "j": j}, g) for (k, i, j), g in ideal.gens.items()]
    else:
        ideal = build_jet_ideal(src, args.m)
        keyed = [({"source": k, "n": n}, g) for (k, n), g in ideal.gens.items()]
    if args.format == "json":
        gens = [dict(key, poly=str(g)) for key, g in keyed if g]
        out.write(_emit({
            "m": args.m,
            "ambient": [str(v) for v in src.ambient_vars],
            "variables": [str(v) for v in ideal.variables()],
            "generators": gens,
        }) + "\n")
    else:
        for g in ideal.flat():
            out.write(f"{g}\n")
    return EXIT_OK


def cmd_minimal_primes(args, out) -> int:
    X = _hypersurface(args)
    if args.format == "json":
        out.write(_emit(_report(X, args.m, False, False)) + "\n")
        return EXIT_OK
    for P in enumerate_minimal_primes(X, args.m):
        r = component_report(P, X, args.m)
        gens = ", ".join(str(v) for v in P.variables(X.names))
        out.write(f"t={P}\theight={r.height}\tdim={r.dim}\t({gens})\n")
    return EXIT_OK


def cmd_radical(args, out) -> int:
    if (args.a is None) == (args.gens is None):
        raise InputError("give exactly one of -a or --gens")
    if args.a is not None:
        X = _hypersurface(args)
        ideal = radical_generators(X, args.m)
        a = list(X.a)
    else:
        vecs = [_csv_ints(v) for v in args.gens.split(";") if v.strip()]
        try:
            ideal = radical_monomial_scheme(vecs, args.m)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        a = [e for v in vecs for e in v]
    if args.format == "json":
        out.write(_emit({"m": args.m, "a": a, "primes": None,
                         "radical_gens": [str(g) for g in ideal], "verdict": None}) + "\n")
    else:
        for g in ideal:
            out.write(f"{g}\n")
    return EXIT_OK


def cmd_dimension(args, out) -> int:
    X = _hypersurface(args)
    if args.format == "json":
        out.write(_emit(_report(X, args.m, False, False)) + "\n")
        return EXIT_OK
    out.write("t\theight\tdim\n")
    for P in enumerate_minimal_primes(X, args.m):
        r = component_report(P, X, args.m)
        out.write(f"{P}\t{r.height}\t{r.dim}\n")
    return EXIT_OK


def cmd_lci(args, out) -> int:
    X = _hypersurface(args)
    if args.format == "json":
        out.write(_emit(_report(X, args.m, False, True)) + "\n")
        return EXIT_OK
    v = lci_verdict(X, args.m)
    for key, val in v.as_dict().items():
        out.write(f"{key}\t{val}\n")
    return EXIT_OK


def cmd_mult_cert(args, out) -> int:
    X = _hypersurface(args)
    strategy = "randomized" if args.strategy in ("random", "randomized") else "paper"
    primes = enumerate_minimal_primes(X, args.m)
    if args.t:
        P = StaircasePrime(args.m, _csv_ints(args.t))
        primes = [P]
    W = X.wedge_ideal(args.m)
    rows = []
    try:
        for P in primes:
            rows.append(certify(X, P, args.m, strategy, q=args.q, trials=args.trials, seed=args.seed, ideal=W))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        out.write(_emit([
            {"t": list(c.prime.t), "strategy": c.strategy, "verdict": c.verdict,
             "value": str(c.det_or_rank), "height": c.prime.height,
             "seed": c.seed} for c in rows
        ]) + "\n")
    else:
        out.write("m\tt\tstrategy\tverdict\tvalue\n")
        for c in rows:
            out.write(f"{args.m}\t{','.join(map(str, c.prime.t))}\t{c.strategy}\t{c.verdict}\t{c.det_or_rank}\n")
    return EXIT_OK if all(c.verdict == PROVEN for c in rows) else EXIT_INCONCLUSIVE


def cmd_sweep(args, out) -> int:
    strategy = "randomized" if args.strategy in ("random", "randomized") else "paper"
    try:
        res = conjecture_sweep(args.r, args.M, strategy, q=args.q, trials=args.trials, seed=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.write(res.to_tsv())
    return EXIT_OK if res.all_proven else EXIT_INCONCLUSIVE


def cmd_verify(args, out) -> int:
    from .verify import run_suite

    try:
        checks = run_suite(args.suite)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    for c in checks:
        out.write(c.line() + "\n")
    return EXIT_OK if all(c.ok for c in checks) else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wedgelab", description="Truncated wedge schemes and their components.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default="text")

    for name in ("build-wedge", "build-jet"):
        sp = sub.add_parser(name, help=f"{name.split('-')[1]} ideal of V(f, ...)")
        sp.add_argument("-f", action="append", required=True, help="polynomial, or @file with one per line")
        sp.add_argument("-m", type=int, required=True)
        sp.add_argument("--vars", help="ambient variables, comma separated (default: those used)")
        fmt(sp)
        sp.set_defaults(func=cmd_build)

    def mono(sp, need_a=True):
        sp.add_argument("-a", required=need_a, help="exponent vector, e.g. 1,1")
        sp.add_argument("-m", type=int, required=True)
        sp.add_argument("-N", type=int, default=0, help="ambient dimension (default r)")
        fmt(sp)

    sp = sub.add_parser("minimal-primes")
    mono(sp)
    sp.set_defaults(func=cmd_minimal_primes)

    sp = sub.add_parser("radical")
    mono(sp, need_a=False)
    sp.add_argument("--gens", "-gens", help="several exponent vectors separated by ';'")
    sp.set_defaults(func=cmd_radical)

    sp = sub.add_parser("dimension")
    mono(sp)
    sp.set_defaults(func=cmd_dimension)

    sp = sub.add_parser("lci-verdict")
    mono(sp)
    sp.set_defaults(func=cmd_lci)

    def rand(sp):
        sp.add_argument("--strategy", choices=("paper", "random", "randomized"), default="paper")
        sp.add_argument("--q", type=int, default=DEFAULT_Q)
        sp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("mult-cert")
    mono(sp)
    sp.add_argument("-t", help="certify only this order tuple")
    rand(sp)
    sp.set_defaults(func=cmd_mult_cert)

    sp = sub.add_parser("sweep")
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("-M", type=int, required=True, help="largest m")
    rand(sp)
    sp.set_defaults(func=cmd_sweep, strategy="randomized")

    sp = sub.add_parser("verify")
    sp.add_argument("suite", help="suite name or 'all'")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "m", 0) is not None and getattr(args, "m", 0) < 0:
            raise InputError("-m must be >= 0")
        return args.func(args, out)
    except (InputError, ParseError, OSError) as exc:
        err.write(f"wedgelab: error: {exc}\n")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        err.write(f"wedgelab: oracle budget: {exc}\n")
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
