"""CLI entry point for Phase Perturbation."""

import argparse
import sys
from collections.abc import Sequence

import orjson

from phase_perturbation.config import get_config, init_config, load_config
from phase_perturbation.errors import PhasePerturbationError
from phase_perturbation.logging import setup_logging
from phase_perturbation.models.policies import POLICY_NAMES, AugmentPolicy
from phase_perturbation.services import inspect, run_batch, verify


def _u64(value: str) -> int:
    seed = int(value)
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError(f"{value} is not an unsigned 64-bit integer")
    return seed


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1")
    return number


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with the augment, inspect and verify subcommands."""
    parser = argparse.ArgumentParser(
        prog="phaseperturb",
        description="Phase-spectrum speech data augmentation",
    )
    parser.add_argument(
        "--log-level",
        type=str,
        choices=["debug", "info", "warning", "error"],
        default=None,
        help="Log level (default: $PHASEPERTURB_LOG or info)",
    )
    parser.add_argument(
        "--json-logs",
        action="store_true",
        help="Output logs in JSON format",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    augment = commands.add_parser("augment", help="Augment a directory of WAV files")
    augment.add_argument("--in", dest="in_dir", required=True, help="Input directory")
    augment.add_argument(
        "--out", dest="out_dir", required=True, help="Output directory"
    )
    augment.add_argument(
        "--policy",
        choices=POLICY_NAMES,
        default=None,
        help=(
            "Augmentation arm (default: policy.name from --config, "
            "else phase_perturbation)"
        ),
    )
    augment.add_argument("--seed", type=_u64, required=True, help="Master seed")
    augment.add_argument("--config", default=None, help="Policy config file")
    augment.add_argument(
        "--copies", type=_positive, default=None, help="Augmented copies per input"
    )
    augment.add_argument(
        "--jobs",
        type=_positive,
        default=None,
        help="Worker threads (default: $PHASEPERTURB_JOBS or 1)",
    )

    inspect_cmd = commands.add_parser("inspect", help="Dump one file's spectrum")
    inspect_cmd.add_argument("--in", dest="in_file", required=True, help="WAV file")
    inspect_cmd.add_argument(
        "--what", choices=["amplitude", "phase"], required=True, help="Spectrum"
    )
    inspect_cmd.add_argument("--out", dest="out_file", required=True, help="Dump file")
    inspect_cmd.add_argument(
        "--policy",
        choices=POLICY_NAMES,
        default=None,
        help="Dump after this arm (--config alone only sets STFT settings)",
    )
    inspect_cmd.add_argument("--seed", type=_u64, default=0, help="Augmentation seed")
    inspect_cmd.add_argument("--config", default=None, help="Policy config file")

    verify_cmd = commands.add_parser("verify", help="Run the numerical self-test")
    verify_cmd.add_argument("--in", dest="in_file", default=None, help="WAV file")
    verify_cmd.add_argument("--json", action="store_true", help="Print JSON report")
    # Negative control: analysis with a damaged window must fail every check.
    verify_cmd.add_argument(
        "--corrupt-window", action="store_true", help=argparse.SUPPRESS
    )
    return parser


def _policy(args: argparse.Namespace) -> AugmentPolicy:
    policy = load_config(args.config) if args.config else AugmentPolicy()
    updates: dict[str, object] = {}
    if args.policy is not None:
        updates["name"] = args.policy
    if getattr(args, "copies", None) is not None:
        updates["copies_per_input"] = args.copies
    return policy.model_copy(update=updates) if updates else policy


def _run(args: argparse.Namespace) -> int:
    if args.command == "augment":
        policy = _policy(args)
        jobs = args.jobs or get_config().jobs
        manifest = run_batch(args.in_dir, args.out_dir, policy, args.seed, jobs=jobs)
        print(
            f"Wrote {len(manifest.entries)} files "
            f"({len(manifest.skipped)} inputs skipped) to {args.out_dir}"
        )
        return 0

    if args.command == "inspect":
        # A config file alone only supplies STFT settings; --policy selects the arm.
        base = _policy(args) if args.policy or args.config else None
        inspect(
            args.in_file,
            args.what,
            args.out_file,
            policy=base if args.policy else None,
            seed=args.seed,
            config=base.stft if base is not None else None,
        )
        return 0

    report = verify(args.in_file, corrupt_window=args.corrupt_window)
    if args.json:
        print(orjson.dumps(report.model_dump(), option=orjson.OPT_INDENT_2).decode())
    else:
        print(f"verify: {report.source}")
        for check in report.checks:
            status = "ok" if check.passed else "FAIL"
            print(
                f"  {check.name:<26} {check.value:.3e}  "
                f"(tolerance {check.tolerance:.0e})  {status}"
            )
    if not report.passed:
        print(f"failed checks: {', '.join(report.failing)}", file=sys.stderr)
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point for the phaseperturb CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = init_config()
        setup_logging(
            level=args.log_level or config.log_level,
            json_output=args.json_logs or config.json_logs,
        )
        return _run(args)
    except (PhasePerturbationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
