"""Command-line interface.

Subcommands: entropy, bound, apply, kraus, sweep, fuzz, exchange,
prop1, prop2, bridge. Inputs arrive as JSON files in the wire formats
of the serialization module; outputs are JSON (default), csv, or human.
Every command is deterministic given its inputs and --seed.

Exit codes: 0 success, 1 bad input data or a failed randomized
property, 2 an internal contradiction (a guaranteed identity or bound
violated, which signals a bug in the library itself), 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import pi

import numpy as np

from . import amplitude_damping
from .channels import (apply_channel, block_decompose, completeness_defect, couple,
                       exchange_entropy, extract_kraus, off_block_bound,
                       verify_entropy_bound)
from .classical import partition_entropy, validate_distribution
from .fuzz import run_suite
from .measurement import project, projectors_from_partition, purity_decomposition
from .mixing import mixing_bound_report
from .serialization import (distribution_from_json, dump_json, load_json,
                            matrix_from_json, matrix_to_json, model_from_json,
                            partition_from_json, ensemble_from_json)
from .states import logical_entropy, purity, validate_density

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONTRADICTION = 2
EXIT_USAGE = 64

CHANNELS = ("amplitude-damping",)


class _Parser(argparse.ArgumentParser):
    """argparse with the conventional 64 exit for usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="logent",
                     description="Logical entropy of quantum states under noise couplings.")
    parser.add_argument("--tol", type=float, default=1e-9,
                        help="validation tolerance (default 1e-9)")
    parser.add_argument("--seed", type=int, default=42,
                        help="root random seed (default 42)")
    parser.add_argument("--format", choices=("json", "csv", "human"), default="json",
                        help="output format for scalar reports (sweep is always csv)")
    parser.add_argument("--output", help="write the result to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_state(p):
        p.add_argument("--state", required=True, help="density matrix JSON file")

    def add_model_source(p):
        p.add_argument("--model", help="coupling model JSON file")
        p.add_argument("--channel", choices=CHANNELS, help="named coupling instead of --model")
        p.add_argument("--theta", type=float, help="decay angle for --channel")

    p = sub.add_parser("entropy", help="logical entropy and purity of a state")
    add_state(p)

    p = sub.add_parser("bound", help="off-block bound vs output entropy for one coupling")
    add_state(p)
    add_model_source(p)

    p = sub.add_parser("apply", help="push a state through a coupling's channel")
    add_state(p)
    add_model_source(p)

    p = sub.add_parser("kraus", help="extract the Kraus operators of a coupling")
    add_model_source(p)

    p = sub.add_parser("sweep", help="entropy/bound sweep over the decay angle (CSV)")
    add_state(p)
    p.add_argument("--channel", choices=CHANNELS, default="amplitude-damping")
    p.add_argument("--theta-start", type=float, default=0.0)
    p.add_argument("--theta-end", type=float, default=pi)
    p.add_argument("--steps", type=int, default=64)

    p = sub.add_parser("fuzz", help="randomized verification campaigns")
    p.add_argument("--suite", choices=("theorem", "prop1", "prop2", "schmidt", "bridge", "all"),
                   default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--dim-s", type=int, default=6,
                   help="primary dimension bound; trials draw from 2..max (1 stays 1)")
    p.add_argument("--dim-e", type=int, default=4, help="secondary dimension bound")

    p = sub.add_parser("exchange", help="entropy exchanged with the environment")
    add_state(p)
    add_model_source(p)

    p = sub.add_parser("prop1", help="purity split under a basis-aligned measurement")
    add_state(p)
    p.add_argument("--partition", required=True, help="partition JSON file")

    p = sub.add_parser("prop2", help="mixing bound for an ensemble")
    p.add_argument("--ensemble", required=True, help="ensemble JSON file")

    p = sub.add_parser("bridge", help="classical partition entropy vs quantum measurement")
    p.add_argument("--dist", required=True, help="distribution JSON file")
    p.add_argument("--partition", required=True, help="partition JSON file")

    return parser


def _load_state(args):
    return validate_density(matrix_from_json(load_json(args.state)), tol=args.tol)


def _load_model(parser, args):
    if getattr(args, "model", None) and getattr(args, "channel", None):
        parser.error("give either --model or --channel, not both")
    if getattr(args, "model", None):
        return model_from_json(load_json(args.model))
    if getattr(args, "channel", None):
        if args.theta is None:
            parser.error("--channel requires --theta")
        return amplitude_damping.coupling_model(args.theta)
    parser.error("a coupling is required: --model FILE or --channel NAME --theta X")


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _render(payload: dict, args) -> str:
    flat = all(not isinstance(v, (dict, list)) for v in payload.values())
    if args.format == "csv" and flat:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["key", "value"])
        for k, v in payload.items():
            writer.writerow([k, repr(v) if isinstance(v, float) else v])
        return buf.getvalue()
    if args.format == "human":
        lines = []
        for k, v in payload.items():
            if isinstance(v, float):
                lines.append(f"{k} = {v:.12g}")
            elif isinstance(v, (dict, list)):
                lines.append(f"{k} = {json.dumps(v)}")
            else:
                lines.append(f"{k} = {v}")
        return "\n".join(lines)
    return dump_json(payload)


def _cmd_entropy(parser, args) -> tuple[int, dict]:
    rho = _load_state(args)
    return EXIT_OK, {"logical_entropy": logical_entropy(rho), "purity": purity(rho)}


def _cmd_bound(parser, args) -> tuple[int, dict]:
    rho = _load_state(args)
    model = _load_model(parser, args)
    report = verify_entropy_bound(rho, model, tol=args.tol)
    payload = {"entropy": report.entropy, "bound": report.bound, "slack": report.slack,
               "projected_entropy": report.projected_entropy,
               "hypothesis_pure": report.hypothesis_pure}
    code = EXIT_CONTRADICTION if (report.hypothesis_pure and report.slack < -args.tol) else EXIT_OK
    return code, payload


def _cmd_apply(parser, args) -> tuple[int, dict]:
    rho = _load_state(args)
    model = _load_model(parser, args)
    out = apply_channel(rho, extract_kraus(model))
    return EXIT_OK, matrix_to_json(out)


def _cmd_kraus(parser, args) -> tuple[int, dict]:
    model = _load_model(parser, args)
    ops = extract_kraus(model)
    return EXIT_OK, {"operators": [matrix_to_json(e) for e in ops],
                     "completeness_defect": completeness_defect(ops)}


def _cmd_sweep(parser, args) -> tuple[int, str]:
    rho = _load_state(args)
    if rho.shape != (2, 2):
        raise ValueError(f"sweep needs a single-qubit state, got shape {rho.shape}")
    if args.steps < 1:
        parser.error("--steps must be >= 1")
    a = float(rho[0, 0].real)
    b = complex(rho[0, 1])
    c = float(rho[1, 1].real)
    buf = io.StringIO()
    buf.write("theta,entropy,bound,closed_form_entropy,closed_form_bound,slack\n")
    for theta in np.linspace(args.theta_start, args.theta_end, args.steps):
        theta = float(theta)
        model = amplitude_damping.coupling_model(theta)
        out = apply_channel(rho, extract_kraus(model))
        entropy = logical_entropy(out)
        bound = off_block_bound(block_decompose(couple(rho, model), 2, 2))
        cf_entropy = 1.0 - amplitude_damping.closed_form_purity(a, b, c, theta)
        cf_bound = amplitude_damping.closed_form_bound(a, b, c, theta)
        row = [theta, entropy, bound, cf_entropy, cf_bound, bound - entropy]
        buf.write(",".join(repr(x) for x in row) + "\n")
    return EXIT_OK, buf.getvalue()


def _cmd_fuzz(parser, args) -> tuple[int, dict]:
    if args.trials < 0:
        parser.error("--trials must be >= 0")
    summary = run_suite(args.suite, args.trials, args.dim_s, args.dim_e, args.seed)
    return (EXIT_OK if summary["failures"] == 0 else EXIT_FAILURE), summary


def _cmd_exchange(parser, args) -> tuple[int, dict]:
    rho = _load_state(args)
    model = _load_model(parser, args)
    report = exchange_entropy(rho, model, tol=args.tol)
    payload = {"exchange_entropy": report.exchange_entropy, "bound": report.bound,
               "slack": report.slack}
    code = EXIT_CONTRADICTION if report.slack < -args.tol else EXIT_OK
    return code, payload


def _cmd_prop1(parser, args) -> tuple[int, dict]:
    rho = _load_state(args)
    blocks = partition_from_json(load_json(args.partition))
    ps = projectors_from_partition(blocks, rho.shape[0])
    projected_purity, mass = purity_decomposition(rho, ps)
    pur = purity(rho)
    residual = abs(pur - (projected_purity + mass))
    payload = {"purity": pur, "projected_purity": projected_purity,
               "off_block_mass": mass, "identity_residual": residual}
    return (EXIT_CONTRADICTION if residual > 1e-10 else EXIT_OK), payload


def _cmd_prop2(parser, args) -> tuple[int, dict]:
    ens = ensemble_from_json(load_json(args.ensemble))
    report = mixing_bound_report(ens)
    payload = {"mixture_entropy": report.mixture_entropy, "bound": report.bound,
               "slack": report.slack, "weight_entropy": report.weight_entropy,
               "orthogonal_support": report.orthogonal_support}
    return (EXIT_CONTRADICTION if report.slack < -args.tol else EXIT_OK), payload


def _cmd_bridge(parser, args) -> tuple[int, dict]:
    probs = validate_distribution(distribution_from_json(load_json(args.dist)), tol=args.tol)
    blocks = partition_from_json(load_json(args.partition))
    n = probs.shape[0]
    h_classical = partition_entropy(probs, blocks)
    amps = np.sqrt(probs).astype(np.complex128)
    measured = project(np.outer(amps, amps.conj()), projectors_from_partition(blocks, n))
    h_quantum = logical_entropy(measured)
    diff = abs(h_classical - h_quantum)
    agree = diff <= 1e-10
    payload = {"partition_entropy": h_classical, "post_measurement_entropy": h_quantum,
               "difference": diff, "agree": agree}
    return (EXIT_OK if agree else EXIT_CONTRADICTION), payload


_COMMANDS = {
    "entropy": _cmd_entropy,
    "bound": _cmd_bound,
    "apply": _cmd_apply,
    "kraus": _cmd_kraus,
    "sweep": _cmd_sweep,
    "fuzz": _cmd_fuzz,
    "exchange": _cmd_exchange,
    "prop1": _cmd_prop1,
    "prop2": _cmd_prop2,
    "bridge": _cmd_bridge,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, payload = _COMMANDS[args.command](parser, args)
    except SystemExit as exc:  # parser.error inside a command
        return int(exc.code or 0)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"logent: error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    text = payload if isinstance(payload, str) else _render(payload, args)
    _emit(text, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
