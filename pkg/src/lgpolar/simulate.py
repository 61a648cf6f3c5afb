"""Monte Carlo BER/FER simulation over the AWGN channel.

Per-frame randomness (message bits and noise) is derived from
``(seed, Eb/N0 point, frame index)``, so results are reproducible and do not
depend on sweep order or on how many frames other points consumed.  Only
payload bits count toward BER: parity and frozen positions are excluded.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .bp import bp_decode
from .channel import awgn_llr
from .code import CodeConfig, polar_transform
from .coupled import CoupledConfig, global_decode, lg_encode, local_decode

__all__ = [
    "Scenario",
    "SimResult",
    "SubblockStats",
    "frame_rng",
    "run_point",
    "run_scenario",
    "emit_csv",
    "CSV_COLUMNS",
]

MODES = ("local", "global", "conventional")
CSV_COLUMNS = [
    "setting",
    "mode",
    "ebno_db",
    "frames",
    "bit_errors",
    "frame_errors",
    "ber",
    "fer",
    "avg_iterations",
]


@dataclass(eq=False)
class Scenario:
    """Everything needed to run one sweep.

    ``coupled`` drives local/global modes (its max_iterations/early_stop
    apply); ``code`` plus the scenario-level decoder settings drive
    conventional mode.
    """

    setting: str
    mode: str
    ebno_db: list[float]
    max_frames: int
    min_frame_errors: int = 0
    seed: int = 0
    min_sum: bool = False
    coupled: CoupledConfig | None = None
    code: CodeConfig | None = None
    max_iterations: int = 200
    early_stop: bool = True

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.ebno_db:
            raise ValueError("need at least one Eb/N0 point")
        if self.max_frames < 1:
            raise ValueError("max_frames must be >= 1")
        if self.min_frame_errors < 0:
            raise ValueError("min_frame_errors must be >= 0")
        if self.mode in ("local", "global") and self.coupled is None:
            raise ValueError(f"mode {self.mode!r} requires a coupled config")
        if self.mode == "conventional" and self.code is None:
            raise ValueError("conventional mode requires a code config")


@dataclass(frozen=True)
class SubblockStats:
    subblock: int
    bit_errors: int
    frame_errors: int
    ber: float
    fer: float
    avg_iterations: float


@dataclass(frozen=True)
class SimResult:
    """Aggregate statistics of one (mode, Eb/N0) point.

    For local mode the top-level fields are the all-subblock aggregate (a
    frame errs when any subblock errs) and ``subblocks`` holds the
    per-subblock breakdown.
    """

    setting: str
    mode: str
    ebno_db: float
    frames: int
    bit_errors: int
    frame_errors: int
    ber: float
    fer: float
    avg_iterations: float
    subblocks: tuple[SubblockStats, ...] | None = None


def frame_rng(seed: int, ebno_db: float, frame_index: int) -> np.random.Generator:
    """Independent per-frame stream; identical Eb/N0 points share streams."""
    point_key = int(round(ebno_db * 1000.0)) % 2**32
    return np.random.default_rng([seed % 2**32, point_key, frame_index])


def _run_conventional(scenario: Scenario, ebno_db: float) -> SimResult:
    code = scenario.code
    info = code.info_set
    k = info.size
    rate = k / code.n_bits
    frames = bit_errors = frame_errors = 0
    total_iters = 0
    for frame in range(scenario.max_frames):
        rng = frame_rng(scenario.seed, ebno_db, frame)
        msg = rng.integers(0, 2, size=k, dtype=np.uint8)
        u = np.zeros(code.n_bits, dtype=np.uint8)
        u[info] = msg
        llr = awgn_llr(polar_transform(u), ebno_db, rate, rng)
        outcome = bp_decode(
            llr, code, scenario.max_iterations, scenario.early_stop, scenario.min_sum
        )
        errs = int(np.count_nonzero(outcome.u_hat[info] != msg))
        frames += 1
        bit_errors += errs
        frame_errors += errs > 0
        total_iters += outcome.iterations_used
        if scenario.min_frame_errors and frame_errors >= scenario.min_frame_errors:
            break
    return SimResult(
        setting=scenario.setting,
        mode=scenario.mode,
        ebno_db=ebno_db,
        frames=frames,
        bit_errors=bit_errors,
        frame_errors=frame_errors,
        ber=bit_errors / (frames * k),
        fer=frame_errors / frames,
        avg_iterations=total_iters / frames,
    )


def _run_global(scenario: Scenario, ebno_db: float) -> SimResult:
    cfg = scenario.coupled
    ka, kb = cfg.ka, cfg.kb
    rate = (ka + kb) / cfg.n_total
    frames = bit_errors = frame_errors = 0
    total_iters = 0
    for frame in range(scenario.max_frames):
        rng = frame_rng(scenario.seed, ebno_db, frame)
        msg = rng.integers(0, 2, size=ka + kb, dtype=np.uint8)
        x = lg_encode(msg[:ka], msg[ka:], cfg)
        llr = awgn_llr(x, ebno_db, rate, rng)
        ka_hat, kb_hat, iters, _ = global_decode(llr, cfg, scenario.min_sum)
        errs = int(np.count_nonzero(ka_hat != msg[:ka])) + int(
            np.count_nonzero(kb_hat != msg[ka:])
        )
        frames += 1
        bit_errors += errs
        frame_errors += errs > 0
        total_iters += iters
        if scenario.min_frame_errors and frame_errors >= scenario.min_frame_errors:
            break
    return SimResult(
        setting=scenario.setting,
        mode=scenario.mode,
        ebno_db=ebno_db,
        frames=frames,
        bit_errors=bit_errors,
        frame_errors=frame_errors,
        ber=bit_errors / (frames * (ka + kb)),
        fer=frame_errors / frames,
        avg_iterations=total_iters / frames,
    )


def _run_local(scenario: Scenario, ebno_db: float) -> SimResult:
    cfg = scenario.coupled
    m, ni = cfg.m, cfg.ni
    ka, kb = cfg.ka, cfg.kb
    ka_i, kb_i = cfg.ka_i, cfg.kb_i
    rate = (ka + kb) / cfg.n_total
    frames = 0
    sub_bits = np.zeros(m, dtype=np.int64)
    sub_frames = np.zeros(m, dtype=np.int64)
    sub_iters = np.zeros(m, dtype=np.int64)
    all_frame_errors = 0
    for frame in range(scenario.max_frames):
        rng = frame_rng(scenario.seed, ebno_db, frame)
        msg = rng.integers(0, 2, size=ka + kb, dtype=np.uint8)
        v_a, v_b = msg[:ka], msg[ka:]
        llr = awgn_llr(lg_encode(v_a, v_b, cfg), ebno_db, rate, rng)
        frames += 1
        any_err = False
        for i in range(m):
            ka_hat, kb_hat, outcome = local_decode(
                llr[i * ni : (i + 1) * ni], i, cfg, scenario.min_sum
            )
            errs = int(
                np.count_nonzero(ka_hat != v_a[i * ka_i : (i + 1) * ka_i])
            ) + int(np.count_nonzero(kb_hat != v_b[i * kb_i : (i + 1) * kb_i]))
            sub_bits[i] += errs
            sub_frames[i] += errs > 0
            sub_iters[i] += outcome.iterations_used
            any_err = any_err or errs > 0
        all_frame_errors += any_err
        if scenario.min_frame_errors and all_frame_errors >= scenario.min_frame_errors:
            break
    payload_i = ka_i + kb_i
    subblocks = tuple(
        SubblockStats(
            subblock=i + 1,
            bit_errors=int(sub_bits[i]),
            frame_errors=int(sub_frames[i]),
            ber=float(sub_bits[i] / (frames * payload_i)),
            fer=float(sub_frames[i] / frames),
            avg_iterations=float(sub_iters[i] / frames),
        )
        for i in range(m)
    )
    return SimResult(
        setting=scenario.setting,
        mode=scenario.mode,
        ebno_db=ebno_db,
        frames=frames,
        bit_errors=int(sub_bits.sum()),
        frame_errors=all_frame_errors,
        ber=float(sub_bits.sum() / (frames * (ka + kb))),
        fer=all_frame_errors / frames,
        avg_iterations=float(sub_iters.sum() / (frames * m)),
        subblocks=subblocks,
    )


def run_point(scenario: Scenario, ebno_db: float) -> SimResult:
    """Simulate one Eb/N0 point until max_frames or enough frame errors."""
    if scenario.mode == "conventional":
        return _run_conventional(scenario, ebno_db)
    if scenario.mode == "global":
        return _run_global(scenario, ebno_db)
    return _run_local(scenario, ebno_db)


def run_scenario(scenario: Scenario, progress=None) -> list[SimResult]:
    """Run every sweep point; ``progress`` (if given) is called per result."""
    results = []
    for ebno_db in scenario.ebno_db:
        result = run_point(scenario, ebno_db)
        if progress is not None:
            progress(result)
        results.append(result)
    return results


def _format_row(result: SimResult, frames: int, bit_errors: int,
                frame_errors: int, ber: float, fer: float,
                avg_iterations: float) -> list[str]:
    return [
        result.setting,
        result.mode,
        f"{result.ebno_db:g}",
        str(frames),
        str(bit_errors),
        str(frame_errors),
        f"{ber:.6e}",
        f"{fer:.6e}",
        f"{avg_iterations:.4f}",
    ]


def emit_csv(results: list[SimResult], path) -> None:
    """Write results; same seed and scenario always give identical bytes.

    Local-mode results add a trailing ``subblock`` column holding 1..M for
    the per-subblock rows and ``all`` for the aggregate.
    """
    has_subblocks = any(r.subblocks for r in results)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS + (["subblock"] if has_subblocks else []))
        for r in results:
            if r.subblocks:
                for sb in r.subblocks:
                    writer.writerow(
                        _format_row(
                            r, r.frames, sb.bit_errors, sb.frame_errors,
                            sb.ber, sb.fer, sb.avg_iterations,
                        )
                        + [str(sb.subblock)]
                    )
                writer.writerow(
                    _format_row(
                        r, r.frames, r.bit_errors, r.frame_errors,
                        r.ber, r.fer, r.avg_iterations,
                    )
                    + ["all"]
                )
            else:
                row = _format_row(
                    r, r.frames, r.bit_errors, r.frame_errors,
                    r.ber, r.fer, r.avg_iterations,
                )
                writer.writerow(row + ([""] if has_subblocks else []))
