"""Coupled polar coding: M inner codes tied together by a systematic outer code.

Encoding: the outer code systematically encodes ``v_a``; its codeword
(parity plus systematic bits) is cut into M partitions, each interleaved
onto the semi-polarized transform-domain positions of one inner code.  The
remaining inner positions carry ``v_b`` (info set) and zeros (frozen set).

Decoding comes in two flavours:

* local: each inner code runs standalone BP; semi-position decisions are
  deinterleaved to recover that subblock's share of ``v_a``.
* global: inner and outer graphs iterate jointly.  Per global iteration the
  inner grids sweep (R then L), their leftmost L-messages at semi positions
  feed the outer grid's channel side, the outer grid runs one BP iteration,
  and its rightmost R-messages flow back as inner leftmost priors.  With
  early stopping the loop ends once all M+1 G-matrix checks pass within the
  same iteration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _backend
from .bp import (
    LLR_MAX,
    DecodeOutcome,
    MessageGrid,
    bp_decode,
    g_matrix_check,
    hard_codeword_estimate,
    hard_input_estimate,
    init_grid,
)
from .code import CodeConfig, construct_reliability, partition_channels, polar_transform
from .systematic import systematic_encode

__all__ = [
    "CouplingError",
    "CoupledConfig",
    "RateReport",
    "InterleaverMap",
    "GlobalDecoderState",
    "build_coupled_config",
    "validate_config",
    "build_interleaver",
    "lg_encode",
    "local_decode",
    "global_decode",
    "init_global_state",
    "global_iteration_step",
]


class CouplingError(ValueError):
    """A coupled-configuration identity does not hold."""


@dataclass(eq=False)
class CoupledConfig:
    """M inner codes plus systematic outer code and decoder settings."""

    m: int
    outer: CodeConfig
    inners: tuple[CodeConfig, ...]
    interleaver_seed: int = 1
    max_iterations: int = 200
    early_stop: bool = True
    _interleaver: "InterleaverMap | None" = field(
        default=None, init=False, repr=False
    )

    def __post_init__(self) -> None:
        self.inners = tuple(self.inners)
        _check_structure(self)

    @property
    def n0(self) -> int:
        return self.outer.n_bits

    @property
    def ni(self) -> int:
        return self.inners[0].n_bits

    @property
    def n_total(self) -> int:
        return self.m * self.ni

    @property
    def ka(self) -> int:
        return self.outer.n_info

    @property
    def kb(self) -> int:
        return sum(inner.n_info for inner in self.inners)

    @property
    def ka_i(self) -> int:
        return self.ka // self.m

    @property
    def kb_i(self) -> int:
        return self.inners[0].n_info

    @property
    def s_i(self) -> int:
        return self.inners[0].n_semi

    def interleaver(self) -> "InterleaverMap":
        if self._interleaver is None:
            self._interleaver = build_interleaver(self)
        return self._interleaver


@dataclass(frozen=True)
class RateReport:
    """The four characteristic rates of a coupled configuration."""

    total: Fraction
    outer: Fraction
    inner: Fraction
    subblock: Fraction


def _check_structure(cfg: CoupledConfig) -> None:
    if cfg.m < 1:
        raise CouplingError(f"need at least one subblock, got M={cfg.m}")
    if len(cfg.inners) != cfg.m:
        raise CouplingError(
            f"expected {cfg.m} inner codes, got {len(cfg.inners)}"
        )
    lengths = {inner.n_bits for inner in cfg.inners}
    if len(lengths) != 1:
        raise CouplingError(f"inner code lengths differ: {sorted(lengths)}")
    if cfg.outer.n_semi != 0:
        raise CouplingError("outer code must not have a semi-polarized class")
    n0, m = cfg.n0, cfg.m
    ka = cfg.outer.n_info
    pa = n0 - ka
    if n0 % m:
        raise CouplingError(f"N_0={n0} is not divisible by M={m}")
    if ka % m:
        raise CouplingError(f"K_a={ka} is not divisible by M={m}")
    if pa % m:
        raise CouplingError(f"P_a={pa} is not divisible by M={m}")
    semi_sizes = {inner.n_semi for inner in cfg.inners}
    if semi_sizes != {n0 // m}:
        raise CouplingError(
            f"S_i must equal N_0/M={n0 // m}, got {sorted(semi_sizes)}"
        )
    info_sizes = {inner.n_info for inner in cfg.inners}
    if len(info_sizes) != 1:
        raise CouplingError(
            f"inner info-set sizes differ: {sorted(info_sizes)}"
        )
    if cfg.interleaver_seed < 0:
        raise CouplingError("interleaver seed must be non-negative")
    if cfg.max_iterations < 1:
        raise CouplingError("max_iterations must be >= 1")


def validate_config(cfg: CoupledConfig) -> RateReport:
    """Re-run the structural checks and report exact rates as fractions."""
    _check_structure(cfg)
    return RateReport(
        total=Fraction(cfg.ka + cfg.kb, cfg.n_total),
        outer=Fraction(cfg.ka, cfg.n0),
        inner=Fraction(cfg.kb_i + cfg.s_i, cfg.ni),
        subblock=Fraction(cfg.kb_i + cfg.ka_i, cfg.ni),
    )


def build_coupled_config(
    m: int,
    n0: int,
    ka: int,
    kb: int,
    s: int,
    ni: int,
    design_ebno_db: float = 0.0,
    design_rate: float | None = None,
    interleaver_seed: int = 1,
    max_iterations: int = 200,
    early_stop: bool = True,
) -> CoupledConfig:
    """Construct outer and inner codes from Bhattacharyya bounds and couple
    them.  ``design_rate`` defaults to the overall rate (K_a+K_b)/(M*N_i)."""
    if m < 1 or ni < 2:
        raise CouplingError(f"invalid dimensions m={m}, ni={ni}")
    if kb % m:
        raise CouplingError(f"K_b={kb} is not divisible by M={m}")
    if design_rate is None:
        design_rate = (ka + kb) / (m * ni)
    outer = partition_channels(
        construct_reliability(n0, design_ebno_db, design_rate), ka, 0
    )
    inner = partition_channels(
        construct_reliability(ni, design_ebno_db, design_rate), kb // m, s
    )
    return CoupledConfig(
        m=m,
        outer=outer,
        inners=(inner,) * m,
        interleaver_seed=interleaver_seed,
        max_iterations=max_iterations,
        early_stop=early_stop,
    )


@dataclass(eq=False)
class InterleaverMap:
    """Bijection between outer codeword positions and inner semi slots.

    ``subblock_of[p]`` / ``slot_of[p]`` give the inner code and its
    transform-domain index receiving outer position ``p``;
    ``outer_pos[i][k]`` is the outer position feeding the k-th smallest semi
    index of inner ``i`` (the inverse map, aligned to ascending semi order).
    """

    subblock_of: np.ndarray
    slot_of: np.ndarray
    outer_pos: tuple[np.ndarray, ...]


def build_interleaver(cfg: CoupledConfig) -> InterleaverMap:
    """Partitioned interleaver: partition ``i`` joins the i-th equal chunk of
    parity positions with the i-th equal chunk of systematic positions (both
    ascending) and maps them onto inner ``i``'s semi set, permuted by a
    seeded uniform shuffle.  Seed 0 is reserved for the identity order."""
    outer = cfg.outer
    sys_positions = outer.info_set
    parity_positions = outer.frozen_set
    m = cfg.m
    ka_i = sys_positions.size // m
    pa_i = parity_positions.size // m
    s_i = ka_i + pa_i

    subblock_of = np.empty(cfg.n0, dtype=np.int64)
    slot_of = np.empty(cfg.n0, dtype=np.int64)
    outer_pos = []
    for i in range(m):
        chunk = np.sort(
            np.concatenate(
                [
                    parity_positions[i * pa_i : (i + 1) * pa_i],
                    sys_positions[i * ka_i : (i + 1) * ka_i],
                ]
            )
        )
        if cfg.interleaver_seed == 0:
            perm = np.arange(s_i)
        else:
            rng = np.random.default_rng([cfg.interleaver_seed, i])
            perm = rng.permutation(s_i)
        semi = cfg.inners[i].semi_set
        subblock_of[chunk] = i
        slot_of[chunk] = semi[perm]
        inv = np.empty(s_i, dtype=np.int64)
        inv[perm] = chunk
        outer_pos.append(inv)
    return InterleaverMap(
        subblock_of=subblock_of,
        slot_of=slot_of,
        outer_pos=tuple(outer_pos),
    )


def lg_encode(v_a, v_b, cfg: CoupledConfig) -> np.ndarray:
    """Encode the two payloads into the length M*N_i transmitted codeword."""
    v_a = np.asarray(v_a)
    v_b = np.asarray(v_b)
    if v_a.shape != (cfg.ka,):
        raise ValueError(f"v_a must have length K_a={cfg.ka}, got {v_a.shape}")
    if v_b.shape != (cfg.kb,):
        raise ValueError(f"v_b must have length K_b={cfg.kb}, got {v_b.shape}")
    outer_codeword = systematic_encode(v_a, cfg.outer).x
    ilv = cfg.interleaver()
    kb_i = cfg.kb_i
    out = np.empty(cfg.n_total, dtype=np.uint8)
    for i, inner in enumerate(cfg.inners):
        u = np.zeros(cfg.ni, dtype=np.uint8)
        u[inner.info_set] = v_b[i * kb_i : (i + 1) * kb_i] & 1
        u[inner.semi_set] = outer_codeword[ilv.outer_pos[i]]
        out[i * cfg.ni : (i + 1) * cfg.ni] = polar_transform(u)
    return out


def _subblock_sys_positions(cfg: CoupledConfig, i: int) -> np.ndarray:
    ka_i = cfg.ka_i
    return cfg.outer.info_set[i * ka_i : (i + 1) * ka_i]


def local_decode(
    llr_i,
    subblock: int,
    cfg: CoupledConfig,
    min_sum: bool = False,
) -> tuple[np.ndarray, np.ndarray, DecodeOutcome]:
    """Standalone BP decode of one inner code.

    Returns this subblock's outer-payload estimate (its K_a/M systematic
    bits, recovered through the deinterleaver), its K_b/M info bits, and the
    raw decode outcome.  Depends only on this subblock's LLRs.
    """
    if not 0 <= subblock < cfg.m:
        raise ValueError(f"subblock index {subblock} out of range [0, {cfg.m})")
    inner = cfg.inners[subblock]
    outcome = bp_decode(
        llr_i, inner, cfg.max_iterations, cfg.early_stop, min_sum
    )
    kb_hat = outcome.u_hat[inner.info_set]
    ilv = cfg.interleaver()
    outer_est = np.zeros(cfg.n0, dtype=np.uint8)
    outer_est[ilv.outer_pos[subblock]] = outcome.u_hat[inner.semi_set]
    ka_hat = outer_est[_subblock_sys_positions(cfg, subblock)]
    return ka_hat, kb_hat, outcome


@dataclass(eq=False)
class GlobalDecoderState:
    """Message grids and convergence flags of the joint decoder."""

    inner_grids: list[MessageGrid]
    outer_grid: MessageGrid
    inner_converged: np.ndarray
    outer_converged: bool
    global_iteration: int


def init_global_state(llr, cfg: CoupledConfig) -> GlobalDecoderState:
    """Grids as in standalone BP, except inner semi priors start at zero and
    the outer grid has no physical channel (rightmost L filled per iteration
    from the deinterleaved inner messages)."""
    llr = np.asarray(llr, dtype=np.float64)
    if llr.shape != (cfg.n_total,):
        raise ValueError(
            f"LLR vector length {llr.shape} does not match M*N_i={cfg.n_total}"
        )
    inner_grids = [
        init_grid(llr[i * cfg.ni : (i + 1) * cfg.ni], inner)
        for i, inner in enumerate(cfg.inners)
    ]
    outer_grid = init_grid(np.zeros(cfg.n0), cfg.outer)
    return GlobalDecoderState(
        inner_grids=inner_grids,
        outer_grid=outer_grid,
        inner_converged=np.zeros(cfg.m, dtype=bool),
        outer_converged=False,
        global_iteration=0,
    )


def global_iteration_step(
    state: GlobalDecoderState,
    cfg: CoupledConfig,
    min_sum: bool = False,
    extrinsic: bool = False,
) -> None:
    """One global iteration over the combined factor graph.

    Convergence flags are recomputed from scratch every iteration (a check
    that passed earlier can fail again later).  ``extrinsic`` subtracts the
    previously injected outer prior from the exported semi messages.
    """
    ilv = cfg.interleaver()
    for i, grid in enumerate(state.inner_grids):
        _backend.r_sweep(grid.l_msgs, grid.r_msgs, min_sum, LLR_MAX)
        _backend.l_sweep(grid.l_msgs, grid.r_msgs, min_sum, LLR_MAX)

    for i, grid in enumerate(state.inner_grids):
        semi = cfg.inners[i].semi_set
        msgs = grid.l_msgs[0, semi]
        if extrinsic:
            msgs = np.clip(msgs - grid.r_msgs[0, semi], -LLR_MAX, LLR_MAX)
        state.outer_grid.l_msgs[-1, ilv.outer_pos[i]] = msgs
        state.inner_converged[i] = g_matrix_check(
            hard_input_estimate(grid), hard_codeword_estimate(grid)
        )

    _backend.l_sweep(state.outer_grid.l_msgs, state.outer_grid.r_msgs, min_sum, LLR_MAX)
    _backend.r_sweep(state.outer_grid.l_msgs, state.outer_grid.r_msgs, min_sum, LLR_MAX)
    state.outer_converged = g_matrix_check(
        hard_input_estimate(state.outer_grid),
        hard_codeword_estimate(state.outer_grid),
    )

    for i, grid in enumerate(state.inner_grids):
        semi = cfg.inners[i].semi_set
        grid.r_msgs[0, semi] = state.outer_grid.r_msgs[-1, ilv.outer_pos[i]]

    state.global_iteration += 1


def global_decode(
    llr,
    cfg: CoupledConfig,
    min_sum: bool = False,
    extrinsic: bool = False,
) -> tuple[np.ndarray, np.ndarray, int, bool]:
    """Joint decode of the full frame.

    Returns ``(ka_hat, kb_hat, iterations_used, converged)``.  ``ka_hat``
    comes from re-encoding the outer input estimate and reading the
    systematic positions; ``kb_hat`` concatenates the inner info decisions.
    """
    state = init_global_state(llr, cfg)
    converged = False
    for _ in range(cfg.max_iterations):
        global_iteration_step(state, cfg, min_sum, extrinsic)
        converged = bool(state.inner_converged.all()) and state.outer_converged
        if cfg.early_stop and converged:
            break

    y_hat = hard_input_estimate(state.outer_grid)
    c_hat = polar_transform(y_hat)
    ka_hat = c_hat[cfg.outer.info_set]
    kb_hat = np.concatenate(
        [
            hard_input_estimate(grid)[inner.info_set]
            for grid, inner in zip(state.inner_grids, cfg.inners)
        ]
    )
    return ka_hat, kb_hat, state.global_iteration, converged
