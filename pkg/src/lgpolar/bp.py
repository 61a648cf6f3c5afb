"""Belief propagation on the polar encoding factor graph.

The graph has ``log_n + 1`` stages of variable nodes; stage 0 holds the
transform input ``u`` (left), stage ``log_n`` the codeword ``x`` (right,
where channel LLRs enter).  Two message arrays live on the graph:

* ``l_msgs[s]``: leftward message arriving at stage ``s`` from the right,
* ``r_msgs[s]``: rightward message arriving at stage ``s`` from the left.

One iteration is a full L-sweep (right to left) followed by a full R-sweep
(left to right); every butterfly updates its four outputs with box-plus
combining, and every stored value is clamped to ``+-LLR_MAX``.  LLRs use
the ``ln(P(0)/P(1))`` convention, so positive means bit 0; a tied sum
decides for 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .code import CodeConfig, polar_transform

__all__ = [
    "LLR_MAX",
    "box_plus",
    "MessageGrid",
    "DecodeOutcome",
    "init_grid",
    "bp_iterate",
    "bp_decode",
    "g_matrix_check",
    "hard_input_estimate",
    "hard_codeword_estimate",
]

LLR_MAX = 40.0


def box_plus(a: float, b: float) -> float:
    """Exact scalar box-plus ``ln((1 + e^(a+b)) / (e^a + e^b))``.

    Computed in the overflow-safe form: sign(a)*sign(b)*min(|a|, |b|) plus
    log1p correction terms.  Identities: ``a (+) 0 = 0`` and
    ``|a (+) b| <= min(|a|, |b|)``.
    """
    a, b = float(a), float(b)
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    core = sa * sb * min(abs(a), abs(b))
    return (core + math.log1p(math.exp(-abs(a + b)))) - math.log1p(
        math.exp(-abs(a - b))
    )


@dataclass(eq=False)
class MessageGrid:
    """L/R message arrays of shape ``(log_n + 1, n_bits)``."""

    l_msgs: np.ndarray
    r_msgs: np.ndarray

    @property
    def n_bits(self) -> int:
        return int(self.l_msgs.shape[1])


@dataclass(eq=False)
class DecodeOutcome:
    """Hard decisions and bookkeeping from one decoding run."""

    u_hat: np.ndarray
    x_hat: np.ndarray
    iterations_used: int
    converged: bool


def init_grid(llr_ch, config: CodeConfig) -> MessageGrid:
    """Fresh grid: channel LLRs on the rightmost stage (clamped), frozen
    priors ``+LLR_MAX`` on the leftmost stage, everything else zero."""
    llr_ch = np.asarray(llr_ch, dtype=np.float64)
    if llr_ch.shape != (config.n_bits,):
        raise ValueError(
            f"LLR vector length {llr_ch.shape} does not match code length "
            f"{config.n_bits}"
        )
    l = np.zeros((config.log_n + 1, config.n_bits))
    r = np.zeros_like(l)
    l[-1] = np.clip(llr_ch, -LLR_MAX, LLR_MAX)
    r[0, config.frozen_set] = LLR_MAX
    return MessageGrid(l_msgs=l, r_msgs=r)


def bp_iterate(grid: MessageGrid, min_sum: bool = False) -> None:
    """One flooding iteration: L-sweep right-to-left, then R-sweep back."""
    _backend.l_sweep(grid.l_msgs, grid.r_msgs, min_sum, LLR_MAX)
    _backend.r_sweep(grid.l_msgs, grid.r_msgs, min_sum, LLR_MAX)


def hard_input_estimate(grid: MessageGrid) -> np.ndarray:
    """u_hat from the leftmost-stage L+R sums (tie -> bit 0)."""
    return (grid.l_msgs[0] + grid.r_msgs[0] < 0).astype(np.uint8)


def hard_codeword_estimate(grid: MessageGrid) -> np.ndarray:
    """x_hat from the rightmost-stage L+R sums (tie -> bit 0)."""
    return (grid.l_msgs[-1] + grid.r_msgs[-1] < 0).astype(np.uint8)


def g_matrix_check(u_hat, x_hat) -> bool:
    """Early-stop criterion: do the hard decisions satisfy x = u G?"""
    return bool(np.array_equal(polar_transform(u_hat), np.asarray(x_hat) & 1))


def bp_decode(
    llr_ch,
    config: CodeConfig,
    max_iterations: int,
    early_stop: bool = True,
    min_sum: bool = False,
) -> DecodeOutcome:
    """Iterative BP decode of one received frame.

    With ``early_stop`` the loop exits as soon as the hard decisions pass
    the G-matrix check (evaluated after each full iteration); otherwise all
    ``max_iterations`` iterations run and ``converged`` reports whether the
    check holds at exit.
    """
    if max_iterations < 1:
        raise ValueError(f"max_iterations must be >= 1, got {max_iterations}")
    grid = init_grid(llr_ch, config)
    iterations = 0
    for _ in range(max_iterations):
        bp_iterate(grid, min_sum)
        iterations += 1
        if early_stop:
            u_hat = hard_input_estimate(grid)
            x_hat = hard_codeword_estimate(grid)
            if g_matrix_check(u_hat, x_hat):
                return DecodeOutcome(u_hat, x_hat, iterations, True)
    u_hat = hard_input_estimate(grid)
    x_hat = hard_codeword_estimate(grid)
    return DecodeOutcome(u_hat, x_hat, iterations, g_matrix_check(u_hat, x_hat))
