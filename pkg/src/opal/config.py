"""Suite configuration, loadable from flags and the OPAL_SUITE_CONFIG file."""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field, fields, replace

from .errors import ConfigError

ENV_VAR = "OPAL_SUITE_CONFIG"


@dataclass(frozen=True)
class SuiteConfig:
    """Bounds and knobs for the exhaustive law suites.

    ``max_tuple_length`` bounds every source-tuple length, ``max_width`` the
    word width of pool objects, ``max_arity`` the total arity (level) of the
    hom-sets visited.  ``max_instances`` is a per-law budget: instance streams
    are generated smallest-first and truncated there, with truncation recorded
    in the report.  ``random_supplement`` adds that many seeded random
    instances to a few laws whose exhaustive range is far beyond the budget.
    """

    max_tuple_length: int = 4
    max_width: int = 3
    max_arity: int = 3
    seed: int = 0
    kappa_choice: tuple = ("default",)
    max_instances: int = 10000
    random_supplement: int = 100
    validate_functors: bool = True

    def validated(self) -> "SuiteConfig":
        for name in ("max_tuple_length", "max_width", "max_arity",
                     "max_instances", "random_supplement"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ConfigError(f"{name} must be a nonnegative integer, got {value!r}")
        if not isinstance(self.seed, int):
            raise ConfigError(f"seed must be an integer, got {self.seed!r}")
        if not self.kappa_choice:
            raise ConfigError("at least one kappa family must be configured")
        return self

    def to_json(self) -> dict:
        return {
            "max_tuple_length": self.max_tuple_length,
            "max_width": self.max_width,
            "max_arity": self.max_arity,
            "seed": self.seed,
            "kappa_choice": list(self.kappa_choice),
            "max_instances": self.max_instances,
            "random_supplement": self.random_supplement,
            "validate_functors": self.validate_functors,
        }


def load_config(overrides: dict | None = None, env: dict | None = None) -> SuiteConfig:
    """Build a config from the env-pointed JSON file plus explicit overrides."""
    env = os.environ if env is None else env
    data: dict = {}
    path = env.get(ENV_VAR)
    if path:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read suite config {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"suite config {path} must hold a JSON object")
    merged = dict(data)
    for key, value in (overrides or {}).items():
        if value is not None:
            merged[key] = value
    known = {f.name for f in fields(SuiteConfig)}
    unknown = set(merged) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "kappa_choice" in merged:
        kc = merged["kappa_choice"]
        if isinstance(kc, str):
            kc = [kc]
        merged["kappa_choice"] = tuple(kc)
    try:
        return SuiteConfig(**merged).validated()
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


def rng_for(config: SuiteConfig, label: str) -> random.Random:
    """A deterministic per-law random stream derived from the suite seed."""
    return random.Random(f"{config.seed}:{label}")


def shrink(config: SuiteConfig, **kwargs) -> SuiteConfig:
    return replace(config, **kwargs)
