"""Polar code core: transform, channel-quality construction, index partition.

Conventions used throughout the package:

* The transform is ``x = u @ F^{(x)n} (mod 2)`` with ``F = [[1, 0], [1, 1]]``
  in natural bit order; no bit-reversal permutation anywhere.
* Indices are 0-based.  ``info_set``/``semi_set``/``frozen_set`` are sorted
  ascending and partition ``range(n_bits)``.
* ``reliability[i]`` is a Bhattacharyya bound for bit-channel ``i``; smaller
  is better.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _backend

__all__ = [
    "CodeConfig",
    "polar_transform",
    "generator_matrix",
    "initial_bhattacharyya",
    "construct_reliability",
    "partition_channels",
]


def _require_power_of_two(n: int) -> int:
    if n < 2 or (n & (n - 1)) != 0:
        raise ValueError(f"block length must be a power of two >= 2, got {n}")
    return int(n).bit_length() - 1


def polar_transform(u) -> np.ndarray:
    """Apply the GF(2) polar transform ``x = u @ F^{(x)n}`` in natural order.

    The transform is an involution: applying it twice returns the input.
    Runs in O(N log N) via in-place butterflies.
    """
    u = np.asarray(u)
    _require_power_of_two(u.shape[-1])
    if u.ndim not in (1, 2):
        raise ValueError("expected a vector or a batch of row vectors")
    x = np.ascontiguousarray(u, dtype=np.uint8) & 1
    if x is u or x.base is u:
        x = x.copy()
    if x.ndim == 1:
        _backend.transform_bits_inplace(x)
    else:
        for row in x:
            _backend.transform_bits_inplace(row)
    return x


def generator_matrix(n_bits: int) -> np.ndarray:
    """Dense ``F^{(x)n}`` built by repeated Kronecker products.

    Exponential-size oracle used for cross-checks and the ML decoder; it
    deliberately shares no code with :func:`polar_transform`.
    """
    _require_power_of_two(n_bits)
    f = np.array([[1, 0], [1, 1]], dtype=np.uint8)
    g = np.array([[1]], dtype=np.uint8)
    while g.shape[0] < n_bits:
        g = np.kron(g, f)
    return g


def initial_bhattacharyya(design_ebno_db: float, design_rate: float) -> float:
    """Bhattacharyya parameter of the BPSK/AWGN channel at the design point.

    ``Z_0 = exp(-Es/N0)`` with ``Es/N0 = rate * 10^(Eb/N0[dB] / 10)``.
    """
    if design_rate <= 0:
        raise ValueError("design rate must be positive")
    es_n0 = design_rate * 10.0 ** (design_ebno_db / 10.0)
    return float(np.exp(-es_n0))


def construct_reliability(
    n_bits: int, design_ebno_db: float = 0.0, design_rate: float = 0.5
) -> np.ndarray:
    """Bhattacharyya bounds for all ``n_bits`` bit-channels in natural order.

    Starting from the scalar ``Z_0`` the recursion is applied log2(N) times;
    each level maps ``z -> (2z - z^2, z^2)`` with the worse branch at the
    even offspring index.  Values stay within [0, 1] at every level.
    """
    n = _require_power_of_two(n_bits)
    z = np.array([initial_bhattacharyya(design_ebno_db, design_rate)])
    for _ in range(n):
        nxt = np.empty(2 * z.size)
        nxt[0::2] = 2.0 * z - z * z
        nxt[1::2] = z * z
        z = nxt
    return z


@dataclass(eq=False)
class CodeConfig:
    """A single polar code: length plus the info/semi/frozen index partition."""

    n_bits: int
    info_set: np.ndarray
    semi_set: np.ndarray
    frozen_set: np.ndarray
    reliability: np.ndarray
    log_n: int = field(init=False)

    def __post_init__(self) -> None:
        self.log_n = _require_power_of_two(self.n_bits)
        self.info_set = np.sort(np.asarray(self.info_set, dtype=np.int64))
        self.semi_set = np.sort(np.asarray(self.semi_set, dtype=np.int64))
        self.frozen_set = np.sort(np.asarray(self.frozen_set, dtype=np.int64))
        self.reliability = np.asarray(self.reliability, dtype=np.float64)
        if self.reliability.shape != (self.n_bits,):
            raise ValueError("reliability vector length must equal n_bits")
        merged = np.concatenate([self.info_set, self.semi_set, self.frozen_set])
        if merged.size != self.n_bits or not np.array_equal(
            np.sort(merged), np.arange(self.n_bits)
        ):
            raise ValueError(
                "info_set, semi_set and frozen_set must partition range(n_bits)"
            )
        for better, worse in (
            (self.info_set, self.semi_set),
            (self.semi_set, self.frozen_set),
            (self.info_set, self.frozen_set),
        ):
            if better.size and worse.size:
                if self.reliability[better].max() > self.reliability[worse].min():
                    raise ValueError(
                        "index classes must be ordered by reliability "
                        "(info best, frozen worst)"
                    )

    @property
    def n_info(self) -> int:
        return int(self.info_set.size)

    @property
    def n_semi(self) -> int:
        return int(self.semi_set.size)

    @property
    def n_frozen(self) -> int:
        return int(self.frozen_set.size)


def partition_channels(reliability, n_good: int, n_semi: int) -> CodeConfig:
    """Split bit-channels into info / semi-polarized / frozen classes by rank.

    The ``n_good`` most reliable channels (smallest Bhattacharyya bound)
    become the info set, the next ``n_semi`` the semi set, the rest frozen.
    Ties are broken toward the smaller index.
    """
    reliability = np.asarray(reliability, dtype=np.float64)
    n_bits = reliability.size
    _require_power_of_two(n_bits)
    if n_good < 0 or n_semi < 0 or n_good + n_semi > n_bits:
        raise ValueError(
            f"invalid partition sizes: n_good={n_good}, n_semi={n_semi}, "
            f"n_bits={n_bits}"
        )
    order = np.argsort(reliability, kind="stable")
    return CodeConfig(
        n_bits=n_bits,
        info_set=order[:n_good],
        semi_set=order[n_good : n_good + n_semi],
        frozen_set=order[n_good + n_semi :],
        reliability=reliability,
    )
