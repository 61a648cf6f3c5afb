"""Exhaustive maximum-likelihood decoding for tiny codes.

Ground-truth reference for validating iterative decoders at small block
lengths.  Deliberately built on the dense Kronecker generator matrix, not on
the fast transform, so the two paths stay independent.
"""

from __future__ import annotations

import numpy as np

from .code import CodeConfig, generator_matrix

__all__ = ["ml_oracle_decode"]

_MAX_ORACLE_BITS = 16


def ml_oracle_decode(llr_ch, config: CodeConfig) -> np.ndarray:
    """Return the ``u`` maximizing codeword/LLR agreement, frozen bits zero.

    Enumerates all 2^(n_bits - n_frozen) candidates; restricted to
    ``n_bits <= 16``.  Scores are the correlation ``sum((1 - 2 x) * llr)``;
    ties go to the lexicographically smallest ``u`` (so all-zero LLRs give
    the all-zero message).
    """
    if config.n_bits > _MAX_ORACLE_BITS:
        raise ValueError(
            f"oracle limited to n_bits <= {_MAX_ORACLE_BITS}, got {config.n_bits}"
        )
    llr_ch = np.asarray(llr_ch, dtype=np.float64)
    if llr_ch.shape != (config.n_bits,):
        raise ValueError("LLR vector length does not match code length")

    free = np.sort(np.concatenate([config.info_set, config.semi_set]))
    k = free.size
    counters = np.arange(2**k, dtype=np.uint32)
    # Most significant counter bit -> smallest free index, so the candidate
    # order is lexicographic in u and argmax picks the lexicographic minimum
    # among ties.
    shifts = (k - 1 - np.arange(k)).astype(np.uint32)
    candidates = np.zeros((2**k, config.n_bits), dtype=np.uint8)
    candidates[:, free] = (counters[:, None] >> shifts[None, :]) & 1

    codewords = (candidates @ generator_matrix(config.n_bits)) % 2
    scores = (1.0 - 2.0 * codewords) @ llr_ch
    return candidates[int(np.argmax(scores))]
