"""System parameter presets and the flat ``key = value`` config format.

Config keys (all modes share one file format):

    m                 number of inner codes (subblocks)
    n0                outer code length N_0
    ka                outer payload K_a
    kb                inner payload K_b (total across subblocks)
    s                 semi-polarized positions per inner code, S_i = N_0/M
    ni                inner code length N_i
    max_iter          BP iteration cap
    early_stop        true/false
    design_ebno_db    construction design point in dB
    interleaver_seed  0 = identity order, otherwise seeded shuffle

Conventional mode reuses the same keys: it simulates a single polar code of
length ``ni`` at the overall rate (K_a+K_b)/(M*N_i), i.e. K = (K_a+K_b)/M.
Set m=1 to get a full-length conventional baseline.
"""

from __future__ import annotations

from pathlib import Path

from .code import CodeConfig, construct_reliability, partition_channels
from .coupled import CoupledConfig, CouplingError, build_coupled_config

__all__ = [
    "PRESETS",
    "load_params",
    "parse_config_text",
    "build_coupled",
    "build_conventional",
]

PRESETS: dict[str, dict] = {
    "setting1": dict(
        m=2, n0=128, ka=64, kb=960, s=64, ni=1024,
        max_iter=200, early_stop=True, design_ebno_db=0.0, interleaver_seed=1,
    ),
    "setting2": dict(
        m=4, n0=512, ka=256, kb=1792, s=128, ni=1024,
        max_iter=200, early_stop=True, design_ebno_db=0.0, interleaver_seed=1,
    ),
    "setting3": dict(
        m=4, n0=256, ka=128, kb=1920, s=64, ni=1024,
        max_iter=200, early_stop=True, design_ebno_db=0.0, interleaver_seed=1,
    ),
}

_INT_KEYS = ("m", "n0", "ka", "kb", "s", "ni", "max_iter", "interleaver_seed")
_REQUIRED = ("m", "n0", "ka", "kb", "s", "ni")
_DEFAULTS = dict(max_iter=200, early_stop=True, design_ebno_db=0.0, interleaver_seed=1)
_TRUE = {"true", "1", "yes", "on"}
_FALSE = {"false", "0", "no", "off"}


def _parse_bool(value: str, key: str) -> bool:
    lowered = value.lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ValueError(f"cannot parse boolean config value {key} = {value!r}")


def parse_config_text(text: str, origin: str = "<config>") -> dict:
    """Parse flat ``key = value`` lines (blank lines and # comments allowed)."""
    params: dict = {}
    known = set(_REQUIRED) | set(_DEFAULTS)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{origin}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if key not in known:
            raise ValueError(f"{origin}:{lineno}: unknown config key {key!r}")
        if key in params:
            raise ValueError(f"{origin}:{lineno}: duplicate config key {key!r}")
        try:
            if key in _INT_KEYS:
                params[key] = int(value)
            elif key == "early_stop":
                params[key] = _parse_bool(value, key)
            else:
                params[key] = float(value)
        except ValueError as exc:
            raise ValueError(f"{origin}:{lineno}: {exc}") from None
    missing = [key for key in _REQUIRED if key not in params]
    if missing:
        raise ValueError(f"{origin}: missing required config keys {missing}")
    for key, default in _DEFAULTS.items():
        params.setdefault(key, default)
    return params


def load_params(source: str) -> tuple[str, dict]:
    """Resolve a preset name or config file path to (label, params)."""
    if source in PRESETS:
        return source, dict(PRESETS[source])
    path = Path(source)
    if not path.is_file():
        raise ValueError(
            f"config {source!r} is neither a preset "
            f"({', '.join(sorted(PRESETS))}) nor an existing file"
        )
    return path.stem, parse_config_text(path.read_text(), origin=str(path))


def build_coupled(params: dict) -> CoupledConfig:
    return build_coupled_config(
        m=params["m"],
        n0=params["n0"],
        ka=params["ka"],
        kb=params["kb"],
        s=params["s"],
        ni=params["ni"],
        design_ebno_db=params["design_ebno_db"],
        interleaver_seed=params["interleaver_seed"],
        max_iterations=params["max_iter"],
        early_stop=params["early_stop"],
    )


def build_conventional(params: dict) -> CodeConfig:
    """Single code of length ``ni`` at the overall rate (no semi class)."""
    total = params["ka"] + params["kb"]
    if total % params["m"]:
        raise CouplingError(
            f"K_a+K_b={total} is not divisible by M={params['m']}; "
            "cannot size the conventional code"
        )
    k = total // params["m"]
    rate = total / (params["m"] * params["ni"])
    reliability = construct_reliability(
        params["ni"], params["design_ebno_db"], rate
    )
    return partition_channels(reliability, k, 0)
