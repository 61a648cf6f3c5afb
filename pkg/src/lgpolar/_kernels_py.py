"""Numpy fallback for the compiled message-passing kernels.

Function-for-function twin of ``_kernels`` (the Cython extension).  The
formula structure and clamping points are kept identical so both backends
produce matching numbers; see ``_backend`` for how one of them is chosen.

Message layout: ``l`` and ``r`` are ``(log_n + 1, n_bits)`` float64 arrays.
Column stage 0 is the transform-input (leftmost) side, stage ``log_n`` the
channel (rightmost) side.  Between stages ``s`` and ``s + 1`` sit butterflies
pairing line ``i`` (upper, carries the XOR) with line ``i + 2^s`` (lower) for
every ``i`` whose bit ``s`` is clear.
"""

from __future__ import annotations

import numpy as np

_STAGE_CACHE: dict[int, list[tuple[np.ndarray, np.ndarray]]] = {}


def _stage_pairs(n_bits: int) -> list[tuple[np.ndarray, np.ndarray]]:
    pairs = _STAGE_CACHE.get(n_bits)
    if pairs is None:
        idx = np.arange(n_bits)
        pairs = []
        h = 1
        while h < n_bits:
            upper = idx[(idx & h) == 0]
            pairs.append((upper, upper + h))
            h <<= 1
        _STAGE_CACHE[n_bits] = pairs
    return pairs


def _combine(a, b, min_sum: bool):
    core = np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))
    if min_sum:
        return core
    return (core + np.log1p(np.exp(-np.abs(a + b)))) - np.log1p(
        np.exp(-np.abs(a - b))
    )


def l_sweep(l, r, min_sum, llr_max):
    """One full right-to-left pass updating stages log_n-1 .. 0 of ``l``."""
    n = l.shape[0] - 1
    pairs = _stage_pairs(l.shape[1])
    for s in range(n - 1, -1, -1):
        up, lo = pairs[s]
        l_up = l[s + 1, up]
        l_lo = l[s + 1, lo]
        r_up = r[s, up]
        r_lo = r[s, lo]
        t = np.clip(l_lo + r_lo, -llr_max, llr_max)
        l[s, up] = np.clip(_combine(l_up, t, min_sum), -llr_max, llr_max)
        l[s, lo] = np.clip(_combine(r_up, l_up, min_sum) + l_lo, -llr_max, llr_max)


def r_sweep(l, r, min_sum, llr_max):
    """One full left-to-right pass updating stages 1 .. log_n of ``r``."""
    n = l.shape[0] - 1
    pairs = _stage_pairs(l.shape[1])
    for s in range(n):
        up, lo = pairs[s]
        l_up = l[s + 1, up]
        l_lo = l[s + 1, lo]
        r_up = r[s, up]
        r_lo = r[s, lo]
        t = np.clip(l_lo + r_lo, -llr_max, llr_max)
        r[s + 1, up] = np.clip(_combine(r_up, t, min_sum), -llr_max, llr_max)
        r[s + 1, lo] = np.clip(
            _combine(r_up, l_up, min_sum) + r_lo, -llr_max, llr_max
        )


def transform_bits_inplace(bits):
    """GF(2) butterfly network applied in place to a uint8 vector."""
    pairs = _stage_pairs(bits.shape[0])
    for up, lo in pairs:
        bits[up] ^= bits[lo]


def systematic_solve(x_vals, sys_mask):
    """Solve the encoding graph given codeword values on the systematic rows.

    Rows are processed in descending index order.  A systematic row (x known)
    is filled right-to-left, a frozen row (u = 0 known) left-to-right; the
    partner value each butterfly needs always lives on an already-finished
    higher row, so one pass settles the whole table for ANY systematic set.
    Returns ``(u, x)``.
    """
    n_bits = x_vals.shape[0]
    n = int(n_bits).bit_length() - 1
    table = np.zeros((n_bits, n + 1), dtype=np.uint8)
    for i in range(n_bits - 1, -1, -1):
        if sys_mask[i]:
            table[i, n] = x_vals[i]
            for s in range(n - 1, -1, -1):
                h = 1 << s
                if i & h:
                    table[i, s] = table[i, s + 1]
                else:
                    table[i, s] = table[i, s + 1] ^ table[i + h, s]
        else:
            for s in range(n):
                h = 1 << s
                if i & h:
                    table[i, s + 1] = table[i, s]
                else:
                    table[i, s + 1] = table[i, s] ^ table[i + h, s]
    return table[:, 0].copy(), table[:, n].copy()
