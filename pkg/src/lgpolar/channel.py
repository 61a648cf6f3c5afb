"""BPSK over AWGN and channel LLR computation."""

from __future__ import annotations

import math

import numpy as np

__all__ = ["noise_variance", "awgn_llr"]


def noise_variance(ebno_db: float, rate: float) -> float:
    """sigma^2 = 1 / (2 * R * 10^(Eb/N0[dB]/10)) for unit-energy BPSK."""
    if rate <= 0:
        raise ValueError(f"rate must be positive, got {rate}")
    return 1.0 / (2.0 * rate * 10.0 ** (ebno_db / 10.0))


def awgn_llr(bits, ebno_db: float, rate: float, rng: np.random.Generator) -> np.ndarray:
    """Modulate (bit 0 -> +1, bit 1 -> -1), add noise, return LLRs 2y/sigma^2.

    LLRs follow the ln(P(0)/P(1)) convention: zero noise gives strictly
    positive LLRs at 0-bits and strictly negative at 1-bits.
    """
    bits = np.asarray(bits)
    sigma2 = noise_variance(ebno_db, rate)
    symbols = 1.0 - 2.0 * (bits & 1)
    y = symbols + math.sqrt(sigma2) * rng.standard_normal(bits.size)
    return 2.0 * y / sigma2
