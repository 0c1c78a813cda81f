"""Command line interface.

Exit codes: 0 solved / feasible / check passed, 1 infeasible budget or
failed check, 2 bad input, 3 solver size cap or timeout.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import ALGORITHM_NAMES, run_algorithm, run_bench, write_report
from .errors import EmptyInput, InfeasibleParameters, InputError, ResourceLimitError
from .exact import price_vector_dp
from .fileio import (
    check_solution,
    parse_dimacs,
    parse_graph,
    parse_instance,
    parse_weights,
    serialize_instance,
    serialize_solution,
)
from .model import Instance, SolveResult
from .reductions import (
    GeneratedInstance,
    from_bin_packing,
    from_max3sat,
    from_partition,
    from_perfect_code,
    random_instance,
    random_x3c,
    x3c_or_composition,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3

GENERATOR_FAMILIES = ("partition", "binpacking", "perfectcode", "x3c", "max3sat", "random")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clevershopper",
        description="Solvers for shopping with per-shop threshold discounts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve an instance file")
    solve.add_argument("--input", required=True, help="instance file")
    solve.add_argument("--algo", required=True, choices=ALGORITHM_NAMES)
    solve.add_argument("--budget", type=int, help="override the instance budget")
    solve.add_argument("--output", help="write the solution file here")
    solve.add_argument(
        "--seedless", action="store_true",
        help="omit provenance comments from the output file",
    )
    solve.set_defaults(func=_cmd_solve)

    generate = sub.add_parser("generate", help="generate an instance file")
    generate.add_argument("family", choices=GENERATOR_FAMILIES)
    generate.add_argument("--weights", help="comma-separated item weights")
    generate.add_argument("--bins", type=int, help="bin count (binpacking)")
    generate.add_argument("--capacity", type=int, help="bin capacity (binpacking)")
    generate.add_argument("--graph", help="graph file (perfectcode)")
    generate.add_argument("--k", type=int, help="code size (perfectcode)")
    generate.add_argument("--cnf", help="DIMACS file (max3sat)")
    generate.add_argument("--t-const", type=int, default=42, help="price scale (x3c)")
    generate.add_argument("--n", type=int, help="item/book count (x3c, random)")
    generate.add_argument("--m", type=int, help="component/shop count (x3c, random)")
    generate.add_argument("--max-price", type=int, default=10, help="price ceiling (random)")
    generate.add_argument("--degree-cap", type=int, help="max books per shop (random)")
    generate.add_argument("--unit-prices", action="store_true", help="all prices 1 (random)")
    generate.add_argument("--fixed-prices", action="store_true",
                          help="same price everywhere per book (random)")
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--output", help="write the instance here (default stdout)")
    generate.add_argument(
        "--seedless", action="store_true",
        help="omit provenance comments from the output file",
    )
    generate.set_defaults(func=_cmd_generate)

    check = sub.add_parser("check", help="verify a solution file")
    check.add_argument("--input", required=True, help="instance file")
    check.add_argument("--solution", required=True, help="solution file")
    check.add_argument("--budget", type=int, help="override the instance budget")
    check.set_defaults(func=_cmd_check)

    bench = sub.add_parser("bench", help="time solvers over a directory of instances")
    bench.add_argument("--dir", required=True, help="directory of .cshop files")
    bench.add_argument("--algos", default=",".join(ALGORITHM_NAMES),
                       help="comma-separated algorithm names")
    bench.add_argument("--timeout", type=float, default=10.0,
                       help="per-run timeout in seconds")
    bench.add_argument("--report", help="write a JSON report here")
    bench.set_defaults(func=_cmd_bench)

    return parser


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _print_result(instance: Instance, result: SolveResult) -> None:
    print(f"cost {result.total_cost}")
    print(f"discount {result.total_discount}")
    for s in range(instance.num_shops):
        books = [b for b, shop in enumerate(result.assignment.choice) if shop == s]
        if not books:
            continue
        spend = result.per_shop_spend[s]
        earned = instance.rules[s].discount if spend >= instance.rules[s].threshold else 0
        names = " ".join(instance.book_name(b) for b in books)
        print(f"shop {instance.shop_name(s)}: {names} (spend {spend}, discount {earned})")


def _cmd_solve(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.input))
    budget = args.budget if args.budget is not None else instance.budget

    if args.algo == "price-dp" and budget is not None:
        decision = price_vector_dp(instance, budget)
        if not decision.feasible:
            print(f"no: minimum cost exceeds budget {budget}")
            return EXIT_NO
        result = decision.result
        assert result is not None
    else:
        result = run_algorithm(args.algo, instance)

    _print_result(instance, result)
    if args.output:
        header = "" if args.seedless else (
            f"# instance: {Path(args.input).name}\n# algorithm: {args.algo}\n"
        )
        Path(args.output).write_text(header + serialize_solution(result))
    if budget is not None and result.total_cost > budget:
        print(f"no: cost {result.total_cost} exceeds budget {budget}")
        return EXIT_NO
    if budget is not None:
        print(f"yes: cost {result.total_cost} within budget {budget}")
    return EXIT_OK


def _require(args: argparse.Namespace, name: str) -> object:
    value = getattr(args, name.replace("-", "_"))
    if value is None:
        raise InfeasibleParameters(f"generator {args.family!r} needs --{name}")
    return value


def _generate(args: argparse.Namespace) -> tuple[GeneratedInstance, list[str]]:
    family = args.family
    if family == "partition":
        weights = parse_weights(str(_require(args, "weights")))
        return from_partition(weights), [f"weights: {','.join(map(str, weights))}"]
    if family == "binpacking":
        weights = parse_weights(str(_require(args, "weights")))
        bins = int(_require(args, "bins"))
        capacity = int(_require(args, "capacity"))
        gen = from_bin_packing(weights, bins, capacity)
        return gen, [f"weights: {','.join(map(str, weights))}",
                     f"bins: {bins}", f"capacity: {capacity}"]
    if family == "perfectcode":
        graph = parse_graph(_read(str(_require(args, "graph"))))
        k = int(_require(args, "k"))
        return from_perfect_code(graph, k), [f"graph: {args.graph}", f"k: {k}"]
    if family == "x3c":
        items = int(_require(args, "n"))
        comps = int(_require(args, "m"))
        if comps < 1:
            raise InfeasibleParameters(f"need at least one component, got {comps}")
        components = tuple(random_x3c(items, args.seed + i) for i in range(comps))
        gen = x3c_or_composition(components, args.t_const)
        return gen, [f"items: {items}", f"components: {comps}", f"seed: {args.seed}"]
    if family == "max3sat":
        cnf = parse_dimacs(_read(str(_require(args, "cnf"))))
        return from_max3sat(cnf), [f"cnf: {args.cnf}"]
    if family == "random":
        instance = random_instance(
            int(_require(args, "n")),
            int(_require(args, "m")),
            max_price=args.max_price,
            shop_degree_cap=args.degree_cap,
            unit_prices=args.unit_prices,
            fixed_prices=args.fixed_prices,
            seed=args.seed,
        )
        return (
            GeneratedInstance(instance, None, None),
            [f"seed: {args.seed}"],
        )
    raise InfeasibleParameters(f"unknown generator family {family!r}")


def _cmd_generate(args: argparse.Namespace) -> int:
    gen, notes = _generate(args)
    text = serialize_instance(gen.instance)
    if not args.seedless:
        header = [f"# family: {args.family}"]
        header += [f"# {note}" for note in notes]
        if gen.expected_answer is not None:
            header.append(f"# expected: {'yes' if gen.expected_answer else 'no'}")
        if gen.expected_discount is not None:
            header.append(f"# expected discount: {gen.expected_discount}")
        text = "\n".join(header) + "\n" + text
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}")
        if gen.target_budget is not None:
            print(f"budget {gen.target_budget}")
        if gen.expected_answer is not None:
            print(f"expected {'yes' if gen.expected_answer else 'no'}")
        if gen.expected_discount is not None:
            print(f"expected discount {gen.expected_discount}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.input))
    report = check_solution(instance, _read(args.solution), args.budget)
    print(f"cost {report.result.total_cost}")
    if report.cost_matches:
        print(f"declared {report.declared_cost} (matches)")
    else:
        print(f"declared {report.declared_cost} (MISMATCH)")
    if report.budget is not None:
        verdict = "within" if report.within_budget else "over"
        print(f"budget {report.budget} ({verdict})")
    ok = report.cost_matches and report.within_budget is not False
    return EXIT_OK if ok else EXIT_NO


def _cmd_bench(args: argparse.Namespace) -> int:
    directory = Path(args.dir)
    paths = sorted(directory.glob("*.cshop"))
    if not paths:
        raise EmptyInput(f"instance directory {args.dir}")
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    if not algos:
        raise EmptyInput("algorithm list")
    report = run_bench(paths, algos, args.timeout)
    for record in report["results"]:
        parts = [record["instance"], record["algo"], record["status"]]
        if record["status"] == "ok":
            parts.append(f"{record['seconds']:.3f}s")
            parts.append(f"cost={record['cost']}")
            if "gap" in record:
                parts.append(f"gap={record['gap']}")
        print("  ".join(parts))
    if args.report:
        write_report(report, Path(args.report))
        print(f"wrote {args.report}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
