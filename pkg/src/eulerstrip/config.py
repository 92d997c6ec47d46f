"""Run-time defaults and acceptance bands, overridable from a TOML file.

Every tolerance that the test-suite or the CLI applies is a named field
here rather than a literal buried in code; a config file can pin any of
them, and CLI flags override the file.
"""
from __future__ import annotations

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from dataclasses import dataclass, fields, replace
from pathlib import Path

__all__ = ["Config", "load_config", "DEFAULT_CONFIG"]


@dataclass(frozen=True)
class Config:
    # numerical defaults
    delta: float = 1e-3  # offset from the critical line in S_delta
    cutoff_c: float = 1.0  # proportionality constant in N_c = c t^2
    seed: int = 0  # RNG seed for ensembles
    zero_tol: float = 1e-9  # bisection tolerance for zero ordinates
    # acceptance bands (calibrated conventions, not derived quantities)
    sqrtn_band_trivial: float = 3.0  # max |B_N|/sqrt(N), trivial character
    sqrtn_band_nonprincipal: float = 5.0  # same for non-principal characters
    ensemble_std_low: float = 0.52  # bulk spread window for the walk ensemble
    ensemble_std_high: float = 0.64
    ensemble_mean_tol: float = 0.02
    s_delta_sup_tol: float = 0.05  # sup-norm band for S_delta vs exact arg
    zero_dev_tol: float = 0.1  # solver deviation band vs oracle ordinates

    def validate(self) -> "Config":
        if self.delta <= 0:
            raise ValueError("delta must be positive")
        if self.cutoff_c <= 0:
            raise ValueError("cutoff_c must be positive")
        if self.zero_tol <= 0:
            raise ValueError("zero_tol must be positive")
        if not self.ensemble_std_low < self.ensemble_std_high:
            raise ValueError("ensemble std window is empty")
        return self


DEFAULT_CONFIG = Config()

_FIELD_NAMES = {f.name for f in fields(Config)}


def load_config(path: str | Path | None = None) -> Config:
    """Config from a TOML file; unknown keys are rejected, missing keys
    keep their defaults.  path=None returns the defaults."""
    if path is None:
        return DEFAULT_CONFIG
    data = tomllib.loads(Path(path).read_text())
    unknown = set(data) - _FIELD_NAMES
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return replace(DEFAULT_CONFIG, **data).validate()
