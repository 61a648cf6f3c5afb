import pytest

import lgpolar as lg
from lgpolar import presets


@pytest.fixture(scope="session")
def toy_cfg():
    """Smallest end-to-end configuration: M=2, N_0=4, N_i=8 (16-bit frames)."""
    return lg.build_coupled_config(
        m=2, n0=4, ka=2, kb=4, s=2, ni=8, interleaver_seed=0, max_iterations=30
    )


@pytest.fixture(scope="session")
def setting1_cfg():
    return presets.build_coupled(presets.PRESETS["setting1"])
