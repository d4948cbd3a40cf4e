"""Command-line interface: tables, plots, verification, and counting.

Exit codes: 0 success, 1 domain failure (bad coloring, unreadable input,
scale guard), 2 usage error.  Machine-readable payloads (CSV, DOT, ECG)
go to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from . import jl_bipartite, jl_core
from .colored_graph import (
    EcgParseError,
    EdgeColoredGraph,
    NotJLColoringError,
    ScaleLimitError,
    count_rst_bruteforce,
    count_rst_jl,
    load_ecg,
    random_coloring_mean,
    save_ecg,
    verify_jl,
)
from .kirchhoff import rainbow_count_mtt


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return parse


def _load_graph(path: str) -> EdgeColoredGraph:
    with open(path, "r", encoding="utf-8") as handle:
        return load_ecg(handle.read())


def _decomposition_dot(node, name: str = "decomposition") -> str:
    lines = [f"digraph {name} {{"]
    counter = 0

    def label(tree) -> str:
        vertices = "{" + ",".join(str(v) for v in sorted(tree.vertices)) + "}"
        if tree.cut_color is None:
            return vertices
        return f"{vertices} cut={tree.cut_color}"

    lines.append(f'  n0 [label="{label(node)}"];')
    stack = [(node, 0)]
    while stack:
        tree, tree_id = stack.pop()
        if tree.children is None:
            continue
        for child in tree.children:
            counter += 1
            lines.append(f'  n{counter} [label="{label(child)}"];')
            lines.append(f"  n{tree_id} -> n{counter};")
            stack.append((child, counter))
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_mu_table(args) -> int:
    if args.csv:
        sys.stdout.write(jl_core.mu_table_csv(args.max))
        return 0
    print("n mu mu_over_n tau beta")
    for n in range(2, args.max + 1):
        record = jl_core.mu(n)
        print(
            f"{n} {record.mu} {record.mu // n} "
            f"{jl_core.format_exact(jl_core.tau(n))} {jl_core.format_exact(jl_core.beta(n))}"
        )
    return 0


def _cmd_beta_plot(args) -> int:
    payload = jl_core.beta_series_csv(args.max)
    with open(args.output, "w", encoding="utf-8") as handle:
        handle.write(payload)
    if args.alternation:
        confirmed, violations = jl_core.beta_alternation_report(args.max)
        if violations:
            print(
                f"alternation: {confirmed} even n confirmed, violations at {violations}",
                file=sys.stderr,
            )
        else:
            print(
                f"alternation: {confirmed} even n confirmed, no violations",
                file=sys.stderr,
            )
    print(f"wrote {args.max} rows to {args.output}", file=sys.stderr)
    return 0


def _cmd_count(args) -> int:
    g = _load_graph(args.input)
    if args.method == "jl":
        value = count_rst_jl(g)
    elif args.method == "brute":
        value = count_rst_bruteforce(g)
    else:
        value = rainbow_count_mtt(g)
    print(value)
    return 0


def _cmd_verify_jl(args) -> int:
    g = _load_graph(args.input)
    result = verify_jl(g)
    if not result.ok:
        print(f"not JL: {result.reason}", file=sys.stderr)
        return 1
    if args.witness:
        sys.stdout.write(_decomposition_dot(result.witness))
    else:
        print(f"JL: {g.vertex_count} vertices, {len(g.color_set())} color classes")
    return 0


def _cmd_bip(args) -> int:
    hi, lo = (args.n, args.m) if args.n >= args.m else (args.m, args.n)
    if args.ecg == "min":
        sys.stdout.write(save_ecg(jl_bipartite.min_bip_coloring(args.n, args.m)))
        return 0
    if args.ecg == "max":
        tree = jl_bipartite.max_bip_tree(hi, lo)
        sys.stdout.write(save_ecg(jl_bipartite.jlb_tree_to_coloring(tree)))
        return 0
    if args.csv:
        sys.stdout.write(jl_bipartite.bip_table_csv(hi, lo))
        return 0
    print(
        f"min={jl_bipartite.nu_min_formula(hi, lo)} max={jl_bipartite.nu_max_formula(hi, lo)}"
    )
    return 0


def _cmd_tree(args) -> int:
    build = jl_core.min_jl_tree if args.kind == "min" else jl_core.max_jl_tree
    tree = build(args.n)
    if args.dot:
        sys.stdout.write(jl_core.jl_tree_dot(tree))
        return 0
    if args.ecg:
        sys.stdout.write(save_ecg(jl_core.jl_tree_to_coloring(tree)))
        return 0
    print(f"kind={args.kind} n={args.n} rst_count={jl_core.tree_rst_count(tree)}")
    print(jl_core.jl_tree_text(tree))
    return 0


def _cmd_montecarlo(args) -> int:
    mean, stderr = random_coloring_mean(args.n, args.samples, args.seed)
    n = args.n
    exact = Fraction(n ** (n - 2) * math.factorial(n - 1), (n - 1) ** (n - 1))
    bound = math.e / (n - 1) * math.factorial(n - 1)
    print(f"n={n} samples={args.samples} seed={args.seed}")
    print(f"sample_mean={mean:.6f}")
    print(f"std_error={stderr:.6f}")
    print(f"exact_expectation={jl_core.format_exact(exact)}")
    print(f"exact_expectation_decimal={jl_core.decimal_12(exact)}")
    print(f"markov_bound={bound:.12f}")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowtrees",
        description="Exact rainbow-spanning-tree counting and extremal JL-coloring constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu-table", help="table of mu, mu/n, tau, beta for n = 2..N")
    p.add_argument("--max", type=_int_at_least(2), required=True, metavar="N")
    p.add_argument("--csv", action="store_true", help="emit the CSV contract instead of a plain table")
    p.set_defaults(handler=_cmd_mu_table)

    p = sub.add_parser("beta-plot", help="CSV of beta(n) for n = 1..N, exact and 12-place decimal")
    p.add_argument("--max", type=_int_at_least(1), required=True, metavar="N")
    p.add_argument("-o", "--output", required=True, metavar="FILE")
    p.add_argument(
        "--alternation",
        action="store_true",
        help="report (to stderr) whether beta at even n dips below both neighbors",
    )
    p.set_defaults(handler=_cmd_beta_plot)

    p = sub.add_parser("count", help="count rainbow spanning trees of an ECG file")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--method", choices=("jl", "brute", "mtt"), required=True)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("verify-jl", help="check an ECG file for JL-ness")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--witness", action="store_true", help="emit the decomposition witness as DOT")
    p.set_defaults(handler=_cmd_verify_jl)

    p = sub.add_parser("bip", help="extremal rainbow counts for K_{n,m}")
    p.add_argument("--n", type=_int_at_least(1), required=True)
    p.add_argument("--m", type=_int_at_least(1), required=True)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--ecg", choices=("min", "max"), help="emit a bound-achieving coloring as ECG")
    p.set_defaults(handler=_cmd_bip)

    p = sub.add_parser("tree", help="extremal split trees for K_n")
    p.add_argument("--kind", choices=("min", "max"), required=True)
    p.add_argument("--n", type=_int_at_least(1), required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--dot", action="store_true", help="emit the tree as DOT")
    group.add_argument("--ecg", action="store_true", help="emit the encoded coloring as ECG")
    p.set_defaults(handler=_cmd_tree)

    p = sub.add_parser("montecarlo", help="random-coloring experiment on K_n")
    p.add_argument("--n", type=_int_at_least(4), required=True)
    p.add_argument("--samples", type=_int_at_least(1), required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(handler=_cmd_montecarlo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (EcgParseError, NotJLColoringError, ScaleLimitError, ValueError, OSError) as exc:
        print(exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
