import math

import numpy as np
import pytest

from lgpolar.channel import awgn_llr, noise_variance

EBNO_3DB = 10.0 * math.log10(2.0)  # Eb/N0 = 2 in linear units


class _SilentRng:
    """Stands in for a Generator but never adds noise."""

    def standard_normal(self, size):
        return np.zeros(size)


def test_noise_variance_reference_points():
    assert noise_variance(0.0, 0.5) == 1.0
    assert noise_variance(EBNO_3DB, 0.5) == pytest.approx(0.5)
    assert noise_variance(0.0, 1.0) == pytest.approx(0.5)


def test_noise_variance_rejects_nonpositive_rate():
    with pytest.raises(ValueError):
        noise_variance(0.0, 0.0)
    with pytest.raises(ValueError):
        noise_variance(0.0, -0.5)


def test_noiseless_llr_magnitude():
    bits = np.array([0, 1, 1, 0], dtype=np.uint8)
    llr = awgn_llr(bits, EBNO_3DB, 0.5, _SilentRng())
    assert np.allclose(llr, [4.0, -4.0, -4.0, 4.0])


def test_llr_sign_tracks_bits_at_high_snr():
    rng = np.random.default_rng(3)
    bits = rng.integers(0, 2, 4096, dtype=np.uint8)
    llr = awgn_llr(bits, 12.0, 0.5, rng)
    assert np.array_equal((llr < 0).astype(np.uint8), bits)


def test_llr_statistics_match_model():
    # for the all-zero word, LLR = 2/sigma^2 + noise of variance 4/sigma^2
    sigma2 = noise_variance(0.0, 0.5)
    rng = np.random.default_rng(4)
    llr = awgn_llr(np.zeros(200_000, dtype=np.uint8), 0.0, 0.5, rng)
    assert llr.mean() == pytest.approx(2.0 / sigma2, rel=0.02)
    assert llr.var() == pytest.approx(4.0 / sigma2, rel=0.02)


def test_symbol_map_ignores_high_bits():
    rng_a = np.random.default_rng(5)
    rng_b = np.random.default_rng(5)
    bits = np.array([0, 1, 2, 3], dtype=np.uint8)
    assert np.array_equal(
        awgn_llr(bits, 0.0, 0.5, rng_a), awgn_llr(bits & 1, 0.0, 0.5, rng_b)
    )
