import numpy as np
import pytest

import lgpolar as lg
from lgpolar.oracle import ml_oracle_decode


def test_recovers_example_with_one_erasure():
    cfg = lg.partition_channels([0.9375, 0.5625, 0.4375, 0.0625], 1, 2)
    # codeword for u = [0, 0, 1, 0] is x = [1, 0, 1, 0]; erase position 0
    llr = np.array([0.0, 6.0, -6.0, 6.0])
    assert ml_oracle_decode(llr, cfg).tolist() == [0, 0, 1, 0]


def test_all_zero_llr_gives_lexicographically_smallest_word():
    cfg = lg.partition_channels(lg.construct_reliability(8), 4, 2)
    assert not ml_oracle_decode(np.zeros(8), cfg).any()


def test_tie_break_is_lexicographic():
    cfg = lg.partition_channels(lg.construct_reliability(2), 2, 0)
    # position 0 erased: u=[0,0] (x=[0,0]) and u=[1,0] (x=[1,0]) tie
    assert ml_oracle_decode(np.array([0.0, 5.0]), cfg).tolist() == [0, 0]


def test_exact_on_clean_llrs():
    cfg = lg.partition_channels(lg.construct_reliability(16), 8, 4)
    free = np.sort(np.concatenate([cfg.info_set, cfg.semi_set]))
    rng = np.random.default_rng(0)
    for _ in range(20):
        u = np.zeros(16, dtype=np.uint8)
        u[free] = rng.integers(0, 2, free.size)
        llr = 8.0 * (1.0 - 2.0 * lg.polar_transform(u))
        assert np.array_equal(ml_oracle_decode(llr, cfg), u)


def test_frozen_bits_stay_zero():
    cfg = lg.partition_channels(lg.construct_reliability(8), 2, 2)
    rng = np.random.default_rng(1)
    for _ in range(10):
        u_hat = ml_oracle_decode(rng.normal(0, 3, 8), cfg)
        assert not u_hat[cfg.frozen_set].any()


def test_rejects_large_codes():
    cfg = lg.partition_channels(lg.construct_reliability(32), 16, 0)
    with pytest.raises(ValueError):
        ml_oracle_decode(np.zeros(32), cfg)
