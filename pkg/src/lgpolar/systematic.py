"""Systematic polar encoding.

A systematic codeword carries the message verbatim at the code's non-frozen
positions: ``x = u G`` with ``u`` zero on the frozen set and ``x`` equal to
the message on the systematic set.  Both are satisfied simultaneously by
solving the encoding graph stage by stage (see ``_kernels_py.systematic_solve``),
which works for every frozen-complement systematic set in O(N log N).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .code import CodeConfig

__all__ = [
    "SystematicCodeword",
    "systematic_positions",
    "systematic_encode",
    "systematic_extract",
]


@dataclass(eq=False)
class SystematicCodeword:
    """Codeword ``x`` together with the transform-domain word ``u`` that
    produced it (``x = u G``, ``u`` zero on the frozen set)."""

    x: np.ndarray
    u: np.ndarray


def systematic_positions(config: CodeConfig) -> np.ndarray:
    """Codeword positions that carry message bits: the frozen complement
    (info plus semi indices), ascending."""
    return np.sort(np.concatenate([config.info_set, config.semi_set]))


def systematic_encode(v, config: CodeConfig) -> SystematicCodeword:
    """Encode message ``v`` so it reappears at the systematic positions."""
    positions = systematic_positions(config)
    v = np.asarray(v)
    if v.shape != (positions.size,):
        raise ValueError(
            f"message length {v.shape} does not match the {positions.size} "
            "systematic positions"
        )
    x_vals = np.zeros(config.n_bits, dtype=np.uint8)
    x_vals[positions] = v.astype(np.uint8) & 1
    mask = np.zeros(config.n_bits, dtype=np.uint8)
    mask[positions] = 1
    u, x = _backend.systematic_solve(x_vals, mask)
    return SystematicCodeword(x=x, u=u)


def systematic_extract(x_hat, config: CodeConfig) -> np.ndarray:
    """Read the message back out of a (possibly re-encoded) codeword."""
    x_hat = np.asarray(x_hat)
    if x_hat.shape != (config.n_bits,):
        raise ValueError(
            f"codeword length {x_hat.shape} does not match code length "
            f"{config.n_bits}"
        )
    return x_hat[systematic_positions(config)].astype(np.uint8) & 1
