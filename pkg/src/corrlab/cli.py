"""Command-line front end.

Subcommands::

    corrlab corr INPUT [--verify] [--transpose]
    corrlab icf INPUT [--beta-grid 0:0.05:1] [--dsbs P0] [--witness-dir DIR]
    corrlab gaussian --rho0 R [--beta-grid ...] [--lower-bound [--h-joint H]]
    corrlab nisim --src FILE --tgt FILE | --fig1 [START:STEP:END]

Every subcommand accepts ``--config``, ``--threads``, ``--out``, ``--unit``,
``--seed``, optimizer overrides and ``-v``. Data goes to ``--out`` (stdout
by default or with ``-``); logs go to stderr.

Exit codes: 0 success, 2 unreadable input or invalid flags, 3 invalid
distribution, 4 optimizer budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from functools import partial
from pathlib import Path
from typing import TextIO

import coloredlogs
import numpy as np
import yaml
from pydantic import ValidationError

from corrlab import __version__
from corrlab.common.tables import Cell, write_table
from corrlab.common.units import Unit
from corrlab.config import CorrlabProperties, OptimizerConfig, ParallelConfig
from corrlab.corr import (
    conditional_report,
    correlation_report,
    event_conditional_table,
    gk_common_info,
    maxcorr_bruteforce,
    mmse,
)
from corrlab.dist import (
    JointDist2,
    JointDist3,
    load_dist,
    marginal_xy,
    transpose,
)
from corrlab.errors import DistributionError, OptimizerBudgetExceeded
from corrlab.gaussian import (
    GaussianPair,
    continuous_icf_lower,
    gaussian_icf,
    gaussian_joint_entropy,
)
from corrlab.icf import (
    beta_grid,
    dsbs_icf_upper,
    icf_curve,
    write_curve,
    write_witnesses,
)
from corrlab.info import mutual_information
from corrlab.nisim import (
    DEFAULT_P_GRID,
    FIG1_OPTIMIZER,
    BoundVerdict,
    evaluate_bounds,
    fig1_rows,
    write_fig1_table,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_BUDGET = 4

DEFAULT_GRID = "0:0.05:1"


# =============================================================================
# Argument helpers
# =============================================================================


def parse_grid(text: str) -> list[float]:
    """Parse ``start:step:end`` into an inclusive grid."""
    try:
        start, step, end = (float(part) for part in text.split(":"))
        return beta_grid(start, step, end)
    except (ValueError, DistributionError) as e:
        raise argparse.ArgumentTypeError(
            f"grid {text!r} is not start:step:end"
        ) from e


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="YAML properties file")
    common.add_argument("--threads", type=int, help="worker processes for sweeps")
    common.add_argument("--out", default="-", help="output file, '-' for stdout")
    common.add_argument(
        "--unit", choices=[u.value for u in Unit], help="information unit"
    )
    common.add_argument("--seed", type=int, help="optimizer base seed")
    common.add_argument("--restarts", type=int, help="optimizer restarts per beta")
    common.add_argument("--max-evals", type=int, help="optimizer evaluations per beta")
    common.add_argument("--tol", type=float, help="optimizer constraint tolerance")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v info, -vv debug"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Parser with the four subcommands."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="corrlab",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"corrlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    corr = sub.add_parser("corr", parents=[common], help="correlation measures")
    corr.add_argument("input", type=Path, help="distribution file")
    corr.add_argument(
        "--verify", action="store_true", help="add the alternating-maximization value"
    )
    corr.add_argument("--transpose", action="store_true", help="swap X and Y")
    corr.set_defaults(handler=cmd_corr)

    icf = sub.add_parser("icf", parents=[common], help="C_beta curve")
    icf.add_argument("input", type=Path, help="two-variable distribution file")
    icf.add_argument("--beta-grid", type=parse_grid, default=DEFAULT_GRID)
    icf.add_argument("--dsbs", type=float, help="add the closed form for DSBS(p0)")
    icf.add_argument("--witness-dir", type=Path, help="write witness channel files")
    icf.set_defaults(handler=cmd_icf)

    gauss = sub.add_parser("gaussian", parents=[common], help="Gaussian closed form")
    gauss.add_argument("--rho0", type=float, required=True, help="correlation")
    gauss.add_argument("--beta-grid", type=parse_grid, default=DEFAULT_GRID)
    gauss.add_argument(
        "--lower-bound", action="store_true", help="add the entropy lower bound"
    )
    gauss.add_argument("--h-joint", type=float, help="h(X,Y) in nats")
    gauss.set_defaults(handler=cmd_gaussian)

    nisim = sub.add_parser("nisim", parents=[common], help="simulation bounds")
    nisim.add_argument("--src", type=Path, help="source distribution file")
    nisim.add_argument("--tgt", type=Path, help="target distribution file")
    nisim.add_argument(
        "--fig1",
        nargs="?",
        type=parse_grid,
        const=list(DEFAULT_P_GRID),
        help="region table over a p grid (start:step:end)",
    )
    nisim.add_argument("--beta-grid", type=parse_grid, default=None)
    nisim.add_argument("--q-step", type=float, default=1e-3)
    nisim.add_argument("--icf-q-step", type=float, default=2e-2)
    nisim.add_argument("--grid-step", type=float, default=1e-3)
    nisim.set_defaults(handler=cmd_nisim)
    return parser


def resolve_properties(args: argparse.Namespace) -> CorrlabProperties:
    """Defaults, then ``--config``, then environment, then flags."""
    props = CorrlabProperties.from_yaml(args.config) if args.config else None
    props = CorrlabProperties.from_env(base=props)
    if args.threads is not None:
        props.parallel = ParallelConfig(threads=args.threads)
    updates = {
        "seed": args.seed,
        "restarts": args.restarts,
        "max_evals": args.max_evals,
        "constraint_tol": args.tol,
    }
    merged = props.optimizer.model_dump() | {
        k: v for k, v in updates.items() if v is not None
    }
    merged["workers"] = props.parallel.threads
    props.optimizer = OptimizerConfig(**merged)
    return props


def setup_logging(props: CorrlabProperties, verbose: int) -> None:
    """Install the stderr handler."""
    level = props.logging.level
    if verbose == 1:
        level = "INFO"
    elif verbose >= 2:
        level = "DEBUG"
    if props.logging.colored:
        coloredlogs.install(level=level, fmt=props.logging.fmt, stream=sys.stderr)
    else:
        logging.basicConfig(level=level, format=props.logging.fmt, stream=sys.stderr)


@contextmanager
def open_output(target: str) -> Iterator[TextIO]:
    """stdout for ``-``, otherwise a file opened for writing."""
    if target == "-":
        yield sys.stdout
        return
    with open(target, "w", encoding="utf-8", newline="\n") as f:
        yield f


def provenance(props: CorrlabProperties) -> str:
    """Comment line naming the version, seed and optimizer settings.

    The worker count is left out: it never changes the numbers.
    """
    cfg = json.dumps(props.optimizer.model_dump(exclude={"workers"}), sort_keys=True)
    return f"corrlab {__version__} seed={props.optimizer.seed} config={cfg}"


def _unit(args: argparse.Namespace, default: Unit) -> Unit:
    return Unit(args.unit) if args.unit else default


# =============================================================================
# Subcommands
# =============================================================================


def _transpose3(d: JointDist3) -> JointDist3:
    return JointDist3.from_array(
        np.transpose(d.array, (1, 0, 2)),
        d.alphabet_y.labels,
        d.alphabet_x.labels,
        d.alphabet_u.labels,
    )


def cmd_corr(args: argparse.Namespace, props: CorrlabProperties) -> int:
    """Measures of a pair, plus conditional ones for three-variable files."""
    unit = _unit(args, Unit.BITS)
    dist = load_dist(args.input)
    if args.transpose:
        dist = _transpose3(dist) if isinstance(dist, JointDist3) else transpose(dist)
    pair: JointDist2 = marginal_xy(dist) if isinstance(dist, JointDist3) else dist

    report = correlation_report(pair)
    rows: list[list[Cell]] = [
        ["pearson", report.pearson],
        ["theta_xy", report.theta_xy],
        ["theta_yx", report.theta_yx],
        ["maxcorr", report.maxcorr],
    ]
    if args.verify:
        seed = props.optimizer.seed
        rows.append(["maxcorr_bruteforce", maxcorr_bruteforce(pair, seed=seed)])
    rows.append([f"mutual_information_{unit.value}", mutual_information(pair, unit)])
    rows.append([f"gk_common_info_{unit.value}", gk_common_info(pair, unit)])

    with open_output(args.out) as out:
        if isinstance(dist, JointDist3):
            cond = conditional_report(dist)
            rows += [
                ["cond_pearson", cond.pearson],
                ["cond_theta_xy", cond.theta_xy],
                ["cond_theta_yx", cond.theta_yx],
                ["cond_maxcorr", cond.maxcorr],
                ["mmse", mmse(dist)],
            ]
            write_table(out, ["measure", "value"], rows, props.output)
            out.write("\n")
            table = [
                [
                    r.u,
                    r.label,
                    r.mass,
                    r.report.pearson,
                    r.report.theta_xy,
                    r.report.theta_yx,
                    r.report.maxcorr,
                ]
                for r in event_conditional_table(dist)
            ]
            columns = ["u", "label", "mass", "pearson", "theta_xy", "theta_yx"]
            write_table(out, [*columns, "maxcorr"], table, props.output)
        else:
            write_table(out, ["measure", "value"], rows, props.output)
    return EXIT_OK


def cmd_icf(args: argparse.Namespace, props: CorrlabProperties) -> int:
    """C_beta curve of a two-variable distribution."""
    unit = _unit(args, Unit.BITS)
    dist = load_dist(args.input)
    if isinstance(dist, JointDist3):
        dist = marginal_xy(dist)
    curve = icf_curve(dist, args.beta_grid, props.optimizer)
    if curve.adjusted_count:
        logger.info(
            "%d points took the witness of a smaller beta",
            curve.adjusted_count,
        )

    closed_form: Callable[[float], float] | None = None
    if args.dsbs is not None:
        closed_form = partial(dsbs_icf_upper, args.dsbs, unit=unit)

    names = None
    if args.witness_dir is not None:
        names = write_witnesses(curve, args.witness_dir)
    with open_output(args.out) as out:
        write_curve(
            curve,
            out,
            unit,
            props.output,
            [provenance(props)],
            closed_form=closed_form,
            witness_names=names,
        )
    return EXIT_OK


def cmd_gaussian(args: argparse.Namespace, props: CorrlabProperties) -> int:
    """Closed-form C_beta of a bivariate normal, with the optional lower bound."""
    unit = _unit(args, Unit.NATS)
    g = GaussianPair(rho0=args.rho0)
    u = unit.value
    columns = ["beta", f"icf_{u}"]
    h_joint = args.h_joint
    if args.lower_bound:
        columns.append(f"lower_bound_{u}")
        if h_joint is None:
            h_joint = gaussian_joint_entropy(args.rho0)
    rows: list[list[Cell]] = []
    for beta in args.beta_grid:
        row: list[Cell] = [beta, gaussian_icf(g, beta, unit)]
        if args.lower_bound:
            row.append(continuous_icf_lower(h_joint, args.rho0, beta, unit))
        rows.append(row)
    with open_output(args.out) as out:
        write_table(out, columns, rows, props.output, [provenance(props)])
    return EXIT_OK


def _verdict_rows(v: BoundVerdict) -> list[list[Cell]]:
    icf = v.icf_outer
    inner_detail = ""
    if v.inner.witness is not None:
        a = v.inner.witness.chan_u_given_x.array[:, 0, 0]
        c = v.inner.witness.chan_v_given_y.array[:, 0, 0]
        inner_detail = f"P(U=0|X)={a.tolist()} P(V=0|Y)={c.tolist()}"
    inner_q = v.inner.achieved_q if v.inner.achieved_q is not None else float("nan")
    return [
        ["mc_outer", v.mc_outer.verdict.value, v.mc_outer.margin, ""],
        ["mi_outer", v.mi_outer.verdict.value, v.mi_outer.margin, ""],
        [
            "icf_outer",
            icf.verdict.value,
            icf.margin,
            f"worst_beta={icf.worst_beta:.12g}"
            + (" zero_set_violation" if icf.zero_set_violation else ""),
        ],
        ["inner", v.inner.verdict.value, inner_q, inner_detail],
    ]


def cmd_nisim(args: argparse.Namespace, props: CorrlabProperties) -> int:
    """Bounds for one pair, or the region table of the binary example."""
    if args.fig1 is not None:
        p_grid = args.fig1
        cfg = props.optimizer
        if args.restarts is None and args.max_evals is None:
            cfg = cfg.model_copy(
                update={
                    "restarts": FIG1_OPTIMIZER.restarts,
                    "max_evals": FIG1_OPTIMIZER.max_evals,
                }
            )
        rows = fig1_rows(
            p_grid,
            q_step=args.q_step,
            cfg=cfg,
            icf_q_step=args.icf_q_step,
            betas=args.beta_grid,
            grid_step=args.grid_step,
            workers=props.parallel.threads,
        )
        with open_output(args.out) as out:
            write_fig1_table(rows, out, props.output, [provenance(props)])
        return EXIT_OK

    if args.src is None or args.tgt is None:
        logger.error("nisim needs --src and --tgt, or --fig1")
        return EXIT_PARSE
    src, tgt = load_dist(args.src), load_dist(args.tgt)
    if isinstance(src, JointDist3):
        src = marginal_xy(src)
    if isinstance(tgt, JointDist3):
        tgt = marginal_xy(tgt)
    verdict = evaluate_bounds(
        src, tgt, args.beta_grid, props.optimizer, args.grid_step
    )
    with open_output(args.out) as out:
        write_table(
            out,
            ["check", "verdict", "margin", "detail"],
            _verdict_rows(verdict),
            props.output,
            [provenance(props)],
        )
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        props = resolve_properties(args)
    except (ValidationError, ValueError, OSError, yaml.YAMLError) as e:
        print(f"corrlab: invalid configuration: {e}", file=sys.stderr)
        return EXIT_PARSE
    setup_logging(props, args.verbose)

    try:
        return int(args.handler(args, props))
    except (ValidationError, json.JSONDecodeError, OSError) as e:
        logger.error("cannot read input: %s", e)
        return EXIT_PARSE
    except DistributionError as e:
        logger.error("invalid distribution: %s", e)
        return EXIT_INVALID
    except OptimizerBudgetExceeded as e:
        logger.error("%s", e)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
