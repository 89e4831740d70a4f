"""Run configuration, with environment overrides (CUBICAUDIT_<FIELD>) below CLI flags."""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_PREFIX = "CUBICAUDIT_"
DEFAULT_SEED = 20231


@dataclass(frozen=True)
class Config:
    max_depth: int = 12  # p-adic digits
    height: int = 10_000  # point search box
    rewrite_box: int = 3  # |lambda| and denominator bound for relation rewriting
    seed: int = DEFAULT_SEED  # corpus generator
    output: str = "json"  # json | table
    workers: int = 1

    def __post_init__(self):
        for name in ("max_depth", "height", "rewrite_box", "workers"):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"{name} must be positive")
        if int(self.seed) < 0:
            raise ValueError("seed must be non-negative")
        if self.output not in ("json", "table"):
            raise ValueError("output must be json or table")

    @classmethod
    def from_env(cls, environ=None, **overrides) -> "Config":
        """Defaults, then environment variables, then explicit (non-None) overrides."""
        environ = os.environ if environ is None else environ
        values = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is not None:
                values[f.name] = raw if f.type in ("str", str) else int(raw)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_(self, **changes) -> "Config":
        return replace(self, **changes)

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name not in ("output", "workers")}
