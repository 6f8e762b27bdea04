"""
Command line entry point: tables and profiles as CSV, JSON or SVG
"""
import argparse
import concurrent
import logging
import sys
from concurrent.futures import ALL_COMPLETED
from typing import Callable, List, Optional, Sequence

from latticeprop import contmult, interactions, metrics, propagators, utils
from latticeprop.lattice import (
    FreeSpace,
    KleinSpace,
    LatticePoint,
    RefinedSpace,
    TorusSpace,
    TropicalDeSitterSpace,
    origin,
)
from latticeprop.paths import count_by_endpoint
from latticeprop.resources import constants as cns
from latticeprop.utils import data_format
from latticeprop.utils.exceptions import (
    CapacityExceeded,
    DimensionMismatch,
    MembershipError,
    NonGenerableStep,
    QuadratureError,
    ResolutionError,
    ReversedTime,
    TruncationError,
    UnsupportedSpace,
)

log = logging.getLogger("root")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_IO = 4

USAGE_ERRORS = (ValueError, DimensionMismatch, UnsupportedSpace, ReversedTime, MembershipError, NonGenerableStep)
CAPACITY_ERRORS = (CapacityExceeded, TruncationError, QuadratureError, ResolutionError)

# flags that never change the numbers and stay out of the JSON meta block
RUNTIME_FLAGS = ("command", "format", "output", "threads")


def _float_list(text: str) -> List[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma separated numbers, got {text!r}") from exc


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from exc


def _space_name(text: str) -> str:
    try:
        return cns.SPACE_MAP[text.lower()]
    except KeyError as exc:
        raise argparse.ArgumentTypeError(
            f"unknown space {text!r}; choose from {', '.join(sorted(cns.SPACE_MAP))}"
        ) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticeprop", description="Discrete lattice propagators and continuous multinomials."
    )
    parser.add_argument("--version", action="version", version=cns.VERSION)
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--format", choices=cns.OUTPUT_FORMATS, default="csv")
        sub.add_argument("--output", "-o", default="-", help="destination file, - for stdout")
        sub.add_argument("--threads", type=int, default=None, help=f"workers, default ${cns.THREADS_ENV} or 1")
        return sub

    sub = command("triples", "primitive Pythagorean triples")
    sub.add_argument("--max-hyp", type=int, required=True)

    sub = command("metric", "Minkowski, taxicab and polygonal intervals on the causal grid")
    sub.add_argument("--n", type=int, default=1)
    sub.add_argument("--max-t", type=int, default=10)

    sub = command("paths", "path counts per endpoint at time t")
    sub.add_argument("--space", type=_space_name, default="free")
    sub.add_argument("--d", type=int, default=1)
    sub.add_argument("--n", type=int, default=1)
    sub.add_argument("--t", type=int, required=True)
    sub.add_argument("--extent", type=int, default=2, help="half-width L of torus and Klein boxes")
    sub.add_argument("--c", type=int, default=0, help="tropical de-Sitter constant")
    sub.add_argument("--refine", type=int, default=1)

    sub = command("propagate", "discrete propagator profile along the first axis")
    sub.add_argument("--space", type=_space_name, default="free")
    sub.add_argument("--d", type=int, default=1)
    sub.add_argument("--n", type=int, default=1)
    sub.add_argument("--mass", type=float, default=cns.DEFAULT_MASS)
    sub.add_argument("--t", type=int, required=True)
    sub.add_argument("--extent", type=int, default=2)
    sub.add_argument("--variant", choices=["standard", "feynman"], default="standard")

    sub = command("contmult", "continuum taxicab profile from continuous multinomials")
    sub.add_argument("--t", type=float, required=True)
    sub.add_argument("--mass", type=float, default=cns.DEFAULT_MASS)
    sub.add_argument("--points", type=int, default=21, help="grid points strictly inside (-t, t)")
    sub.add_argument("--xs", type=_float_list, default=None, help="explicit comma separated grid")
    sub.add_argument("--quad-points", type=int, default=cns.QUAD_MIN_POINTS)

    sub = command("converge", "Cauchy diagnostic between consecutive polygon orders")
    sub.add_argument("--orders", type=_int_list, default=[2, 5, 13])
    sub.add_argument("--times", type=_int_list, default=[6])
    sub.add_argument("--mass", type=float, default=cns.DEFAULT_MASS)

    sub = command("coulomb", "taxicab propagator in an attractive Coulomb well")
    sub.add_argument("--xq", type=float, required=True)
    sub.add_argument("--mass", type=float, default=cns.DEFAULT_MASS)
    sub.add_argument("--t", type=float, required=True)
    sub.add_argument("--refine", type=int, default=24)
    sub.add_argument("--coupling", type=float, default=1.0)
    return parser


def fan_out(func: Callable, tasks: Sequence[tuple], threads: int) -> list:
    """
    Args:
        func (Callable): worker
        tasks (Sequence[tuple]): positional arguments per call
        threads (int): pool size

    Returns:
        list: results in task order
    """
    results = [None] * len(tasks)
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
        future_to_index = {executor.submit(func, *task): index for index, task in enumerate(tasks)}
        concurrent.futures.wait(future_to_index, return_when=ALL_COMPLETED)
        for future in concurrent.futures.as_completed(future_to_index):
            index = future_to_index[future]
            try:
                results[index] = future.result()
            except Exception as exc:
                log.error("%s got exception: %s", tasks[index], exc)
                raise
    return results


def build_space(name: str, d: int, extent: int, c: int = 0, refine: int = 1):
    if name == "free":
        space = FreeSpace(d)
    elif name == "torus":
        space = TorusSpace((extent,) * d)
    elif name == "klein":
        if d != 2:
            raise DimensionMismatch(f"the Klein bottle has d=2, got --d {d}")
        space = KleinSpace(extent, extent)
    else:
        space = TropicalDeSitterSpace(d, c)
    return RefinedSpace(space, refine).resolved() if refine != 1 else space


def _triples(args, threads):
    return metrics.triples_table(args.max_hyp), "hyp", "primitive triples"


def _metric(args, threads):
    return metrics.metric_table(args.n, args.max_t), "dt", f"intervals, n={args.n}"


def _paths(args, threads):
    space = build_space(args.space, args.d, args.extent, args.c, args.refine)
    if args.space == "desitter":
        axes = metrics.null_steps(args.d)
        source = LatticePoint((args.c,) + (0,) * (args.d - 1), 0)
    else:
        axes = metrics.axes_of_symmetry(args.n, args.d)
        source = origin(args.d)
    counts = count_by_endpoint(space, source, args.t, axes)
    rows = [
        {"x": point.spatial[0] if point.d == 1 else ";".join(str(v) for v in point.spatial), "count": count}
        for point, count in counts.items()
    ]
    return data_format.table(rows, ["x", "count"]), "x", f"path counts, t={args.t}"


def _profile_point(space, n, t, x, variant, mass):
    return propagators.profile_histogram(space, n, t, x, variant).amplitude(mass)


def _propagate(args, threads):
    space = build_space(args.space, args.d, args.extent)
    xs = propagators.profile_grid(space, args.t)
    amplitudes = fan_out(_profile_point, [(space, args.n, args.t, x, args.variant, args.mass) for x in xs], threads)
    table = data_format.table(data_format.amplitude_rows(xs, amplitudes), ["x", "re", "im", "mag"])
    return table, "x", f"K_{args.n} at t={args.t}, m={args.mass}"


def _continuum_point(t, x, mass, quad_points):
    return contmult.k1_cont_profile(t, [x], mass, quad_points)[0]


def _contmult(args, threads):
    if args.xs is not None:
        xs = args.xs
    else:
        if args.points < 1:
            raise ValueError("--points must be positive")
        step = 2 * args.t / (args.points + 1)
        xs = [-args.t + step * (j + 1) for j in range(args.points)]
    amplitudes = fan_out(_continuum_point, [(args.t, x, args.mass, args.quad_points) for x in xs], threads)
    table = data_format.table(data_format.amplitude_rows(xs, amplitudes), ["x", "re", "im", "mag"])
    return table, "x", f"continuum K_1 at t={args.t}, m={args.mass}"


def _converge_point(p, q, t, mass):
    return propagators.cauchy_diagnostic(p, q, t, range(-t, t + 1), mass)


def _converge(args, threads):
    orders = sorted(args.orders)
    tasks = [(p, q, t, args.mass) for t in args.times for p, q in zip(orders, orders[1:])]
    values = fan_out(_converge_point, tasks, threads)
    rows = [{"t": t, "p": p, "q": q, "value": value} for (p, q, t, _), value in zip(tasks, values)]
    for t in args.times:
        propagators.cauchy_trend([row["value"] for row in rows if row["t"] == t])
    return data_format.table(rows, ["t", "p", "q", "value"]), "t", "Cauchy diagnostic"


def _coulomb(args, threads):
    table = interactions.coulomb_profile(args.xq, args.mass, args.t, args.refine, args.coupling)
    shift = interactions.drift(table)
    log.info("coulomb: mean position shift %.6g relative to the free propagator", shift)
    return table, "x", f"Coulomb well at x_q={args.xq}, t={args.t}, n={args.refine}"


COMMANDS = {
    "triples": _triples,
    "metric": _metric,
    "paths": _paths,
    "propagate": _propagate,
    "contmult": _contmult,
    "converge": _converge,
    "coulomb": _coulomb,
}


def _params(args) -> dict:
    return {key: value for key, value in sorted(vars(args).items()) if key not in RUNTIME_FLAGS}


def render(table, args, x_column: str, title: str) -> str:
    if args.format == "json":
        return data_format.to_json(table, args.command, _params(args))
    if args.format == "svg":
        xlabel = "x (physical units)" if args.command == "coulomb" else f"{x_column} (lattice units)"
        return data_format.to_svg(table, x_column, title, xlabel)
    return data_format.to_csv(table)


def run(args) -> int:
    """
    Args:
        args (argparse.Namespace): parsed command line

    Returns:
        int: exit status
    """
    try:
        threads = utils.thread_count(args.threads)
        table, x_column, title = COMMANDS[args.command](args, threads)
        payload = render(table, args, x_column, title)
    except USAGE_ERRORS as exc:
        log.error("%s got exception: %s", args.command, exc)
        return EXIT_USAGE
    except CAPACITY_ERRORS as exc:
        log.error("%s got exception: %s", args.command, exc)
        return EXIT_CAPACITY

    try:
        if args.output == "-":
            sys.stdout.write(payload)
        else:
            utils.atomic_write(args.output, payload)
    except OSError as exc:
        log.error("%s got exception: %s", args.output, exc)
        return EXIT_IO
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
