"""Command line front end: Monte Carlo sweeps to CSV.

Example:

    simulate --config setting1 --mode global --ebno 1.0:0.5:3.0 \\
        --max-frames 10000 --min-frame-errors 100 --seed 7 --out results.csv
"""

from __future__ import annotations

import argparse
import sys

from . import presets
from .simulate import Scenario, emit_csv, run_scenario

__all__ = ["main", "build_parser", "parse_ebno"]


def parse_ebno(text: str) -> list[float]:
    """Parse ``start:step:stop`` (inclusive) or a single value, in dB."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) == 3:
            start, step, stop = (float(p) for p in parts)
            if step <= 0:
                raise ValueError("step must be positive")
            if stop < start:
                raise ValueError("stop must be >= start")
            values = []
            k = 0
            while start + k * step <= stop + 1e-9:
                values.append(start + k * step)
                k += 1
            return values
    except ValueError as exc:
        raise ValueError(f"bad --ebno value {text!r}: {exc}") from None
    raise ValueError(f"bad --ebno value {text!r}: expected start:step:stop")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simulate",
        description="BER/FER Monte Carlo for coupled and conventional polar codes",
    )
    parser.add_argument(
        "--config",
        required=True,
        help="preset name (setting1|setting2|setting3) or path to a key=value file",
    )
    parser.add_argument(
        "--mode", required=True, choices=["local", "global", "conventional"]
    )
    parser.add_argument(
        "--ebno", required=True, help="Eb/N0 sweep 'start:step:stop' in dB"
    )
    parser.add_argument("--max-frames", type=int, required=True)
    parser.add_argument(
        "--min-frame-errors",
        type=int,
        default=0,
        help="stop a point early after this many frame errors (0 = off)",
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--no-early-stop",
        action="store_true",
        help="always run the full iteration budget",
    )
    parser.add_argument(
        "--min-sum",
        action="store_true",
        help="use the min-sum approximation instead of exact box-plus",
    )
    parser.add_argument(
        "--design-ebno-db",
        type=float,
        default=None,
        help="override the construction design point from the config",
    )
    parser.add_argument("--out", required=True, help="output CSV path")
    return parser


def build_scenario(args: argparse.Namespace) -> Scenario:
    label, params = presets.load_params(args.config)
    if args.design_ebno_db is not None:
        params["design_ebno_db"] = args.design_ebno_db
    if args.no_early_stop:
        params["early_stop"] = False
    coupled = code = None
    if args.mode == "conventional":
        code = presets.build_conventional(params)
    else:
        coupled = presets.build_coupled(params)
    return Scenario(
        setting=label,
        mode=args.mode,
        ebno_db=parse_ebno(args.ebno),
        max_frames=args.max_frames,
        min_frame_errors=args.min_frame_errors,
        seed=args.seed,
        min_sum=args.min_sum,
        coupled=coupled,
        code=code,
        max_iterations=params["max_iter"],
        early_stop=params["early_stop"],
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        scenario = build_scenario(args)

        def progress(result):
            print(
                f"[{result.setting}] mode={result.mode} "
                f"ebno={result.ebno_db:g} frames={result.frames} "
                f"ber={result.ber:.3e} fer={result.fer:.3e} "
                f"avg_iter={result.avg_iterations:.1f}",
                file=sys.stderr,
            )

        results = run_scenario(scenario, progress=progress)
        emit_csv(results, args.out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
