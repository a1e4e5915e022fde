"""Run-time budgets and switches, overridable from ``PAULIGRAPH_*`` environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_PREFIX = "PAULIGRAPH_"


@dataclass(frozen=True)
class Config:
    vertex_budget: int = 10**4
    clique_budget: int = 10**7
    aut_budget: int = 150
    spectrum_budget: int = 2000
    clique_filter: str = "q-1"  # or "all"
    oracle_cap: int = 16
    threads: int = 1
    compute_aut: bool = False

    def __post_init__(self):
        if self.clique_filter not in ("q-1", "all"):
            raise ValueError(f"clique_filter must be 'q-1' or 'all', got {self.clique_filter!r}")

    @classmethod
    def from_env(cls, env=None, **overrides) -> "Config":
        """Defaults, then environment variables, then explicit overrides (None is ignored)."""
        env = os.environ if env is None else env
        values = {}
        for f in fields(cls):
            raw = env.get(ENV_PREFIX + f.name.upper())
            if raw is None:
                continue
            if f.type in ("bool", bool):
                values[f.name] = raw.strip().lower() in ("1", "true", "yes", "on")
            elif f.type in ("int", int):
                values[f.name] = int(raw)
            else:
                values[f.name] = raw
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_(self, **changes) -> "Config":
        return replace(self, **changes)
