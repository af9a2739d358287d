"""Command-line front end.

Every subcommand takes its colouring either from a file (--input) or from a
seeded random generator (--n/--seed), prints reproducible output, and uses
exit codes: 0 = success/verified, 1 = counterexample or violated invariant,
2 = usage or format error.  The `kv` format is one snake_case key=value pair
per line with exact fractions rendered as num/den.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import construction, q3, search
from .core import EdgeColouring, parse_colouring

USAGE_ERROR = 2


def _fmt_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


class Output:
    def __init__(self, fmt: str):
        self.kv = fmt == "kv"

    def emit(self, key: str, value):
        if isinstance(value, Fraction):
            value = _fmt_fraction(value)
        elif isinstance(value, float):
            value = _fmt_float(value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        if self.kv:
            print(f"{key}={value}")
        else:
            print(f"{key.replace('_', ' ')}: {value}")

    def witness(self, prefix: str, g):
        self.emit(f"{prefix}_start", g.start)
        self.emit(f"{prefix}_dirs", ",".join(str(d) for d in g.dirs))


def _load_colouring(args) -> EdgeColouring:
    if args.input is not None:
        if args.n is not None or args.seed is not None:
            raise ValueError("give either --input or --n/--seed, not both")
        with open(args.input, encoding="utf-8") as fh:
            return parse_colouring(fh.read())
    if args.n is None or args.seed is None:
        raise ValueError("need --input, or both --n and --seed")
    return EdgeColouring.random(args.n, args.seed)


def _emit_source(out: Output, args):
    if args.input is not None:
        out.emit("input", args.input)
    else:
        out.emit("n", args.n)
        out.emit("seed", args.seed)


def _variant(c: EdgeColouring, name: str) -> q3.FVariant:
    if name == "f1":
        return q3.FVariant.F1
    if name == "f2":
        return q3.FVariant.F2
    return construction.choose_variant(c)


def cmd_verify_lemmas(args) -> int:
    out = Output(args.format)
    out.emit("command", "verify-lemmas")
    sweeps = {
        "lemma6": q3.verify_lemma6(),
        "lemma7": q3.verify_lemma7(),
        "lemma8": q3.verify_lemma8(),
    }
    failed = False
    for name, sweep in sweeps.items():
        out.emit(f"{name}_hypothesis_hits", sweep.hypothesis_hits)
        out.emit(f"{name}_counterexamples", len(sweep.counterexamples))
        failed = failed or not sweep.holds
    return 1 if failed else 0


def cmd_classify(args) -> int:
    out = Output(args.format)
    out.emit("command", "classify")
    c = _load_colouring(args)
    if c.n != 3:
        raise ValueError(f"classify needs a Q3 colouring, got n={c.n}")
    _emit_source(out, args)
    cls = q3.classify(c.bits)
    out.emit("kind", "good" if cls.good else "bad")
    out.emit("min_total_changes", cls.min_total_changes)
    if cls.witness:
        for i, g in enumerate(cls.witness):
            out.witness(f"witness{i}", g)
    return 0


def cmd_stats(args) -> int:
    out = Output(args.format)
    out.emit("command", "stats")
    c = _load_colouring(args)
    _emit_source(out, args)
    stats = construction.exact_stats(c)
    out.emit("p", stats.p)
    out.emit("a", stats.a)
    out.emit("b", stats.b)
    identity = stats.p == stats.a + stats.b / 2
    out.emit("identity_p_eq_a_plus_half_b", identity)
    for v, count in enumerate(stats.good_count_at):
        out.emit(f"good_count_{v}", int(count))
    return 0 if identity else 1


def cmd_expectation(args) -> int:
    out = Output(args.format)
    out.emit("command", "expectation")
    c = _load_colouring(args)
    _emit_source(out, args)
    variant = None if args.variant == "auto" else _variant(c, args.variant)
    report = construction.build_report(c, variant)
    out.emit("p", report.p)
    if report.a is not None:
        out.emit("a", report.a)
        out.emit("b", report.b)
    out.emit("chosen", "f1" if report.chosen == q3.FVariant.F1 else "f2")
    out.emit("block_mean", report.block_mean)
    out.emit("block_mean_decimal", float(report.block_mean))
    out.emit("junction_mean", report.junction_mean)
    out.emit("junction_mean_decimal", float(report.junction_mean))
    out.emit("expectation", report.expectation)
    out.emit("expectation_decimal", float(report.expectation))
    return 0


def cmd_simulate(args) -> int:
    out = Output(args.format)
    out.emit("command", "simulate")
    c = _load_colouring(args)
    _emit_source(out, args)
    variant = _variant(c, args.variant)
    out.emit("variant", "f1" if variant == q3.FVariant.F1 else "f2")
    out.emit("samples", args.samples)
    out.emit("sample_seed", args.sample_seed)
    exact = construction.exact_expectation(c, variant).expectation
    mean, stderr = construction.monte_carlo_mean(
        c, variant, args.samples, args.sample_seed
    )
    out.emit("mean", mean)
    out.emit("stderr", stderr)
    out.emit("expectation", exact)
    out.emit("expectation_decimal", float(exact))
    ok = abs(mean - float(exact)) <= 4 * stderr
    out.emit("within_4_stderr", ok)
    return 0 if ok else 1


def cmd_min_changes(args) -> int:
    out = Output(args.format)
    out.emit("command", "min-changes")
    c = _load_colouring(args)
    _emit_source(out, args)
    result = search.min_antipodal_changes(c)
    out.emit("changes", result.changes)
    out.emit("vertex", result.vertex)
    out.emit("antipode", result.antipode)
    out.witness("witness", result.witness)
    ok = result.changes <= c.n // 2
    out.emit("within_half_n", ok)
    return 0 if ok else 1


def cmd_adversary(args) -> int:
    out = Output(args.format)
    out.emit("command", "adversary")
    if args.n is None or args.seed is None:
        raise ValueError("adversary needs --n and --seed")
    result = search.adversary_search(args.n, args.seed, args.iterations)
    out.emit("n", args.n)
    out.emit("seed", args.seed)
    out.emit("iterations", args.iterations)
    out.emit("value", result.value)
    body = result.colouring.serialize().splitlines()[1]
    out.emit("colouring", body)
    return 0 if result.value <= args.n // 2 else 1


def cmd_gen(args) -> int:
    if args.n is None or args.seed is None:
        raise ValueError("gen needs --n and --seed")
    sys.stdout.write(EdgeColouring.random(args.n, args.seed).serialize())
    return 0


def _add_source_flags(p):
    p.add_argument("--input", help="colouring file path")
    p.add_argument("--n", type=int, help="dimension for a generated colouring")
    p.add_argument("--seed", type=int, help="seed for a generated colouring")


def _add_format_flag(p):
    p.add_argument("--format", choices=("text", "kv"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubegeo",
        description="Verification and search toolkit for 2-coloured hypercube "
        "edge colourings and antipodal geodesics.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify-lemmas", help="exhaustive Q3 lemma sweeps")
    _add_format_flag(p)
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("classify", help="good/bad verdict for a Q3 colouring")
    _add_source_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stats", help="exact p, a, b and per-vertex good counts")
    _add_source_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("expectation", help="exact expected changes of the construction")
    _add_source_flags(p)
    _add_format_flag(p)
    p.add_argument("--variant", choices=("auto", "f1", "f2"), default="auto")
    p.set_defaults(func=cmd_expectation)

    p = sub.add_parser("simulate", help="Monte Carlo mean vs exact expectation")
    _add_source_flags(p)
    _add_format_flag(p)
    p.add_argument("--variant", choices=("auto", "f1", "f2"), default="auto")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--sample-seed", type=int, default=0,
                   help="seed for the Monte Carlo stream (separate from --seed)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("min-changes", help="exact minimum colour-change geodesic")
    _add_source_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=cmd_min_changes)

    p = sub.add_parser("adversary", help="hill-climb for hard colourings")
    _add_format_flag(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--iterations", type=int, default=1000)
    p.set_defaults(func=cmd_adversary)

    p = sub.add_parser("gen", help="write a seeded random colouring to stdout")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
