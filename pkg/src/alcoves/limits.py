"""Scale ceilings for the brute-force sweeps, in one place.

Defaults keep every CLI invocation at desk scale.  A JSON file named by
the ALCOVES_LIMITS environment variable overrides individual fields, and
--allow-big multiplies every ceiling by 100 for one invocation.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace

ENV_VAR = "ALCOVES_LIMITS"


@dataclass(frozen=True)
class Limits:
    subset_candidates: int = 2_000_000      # k-subset sweeps of positive roots
    partition_candidates: int = 2_000_000   # root-partition and core sweeps
    chevalley_dim: int = 14                 # largest algebra built as a table
    wedge_matrix: int = 3432                # largest wedge-power dimension
    max_length: int = 64                    # alcove enumeration depth
    max_order: int = 128                    # series truncation order

    def embiggen(self, factor: int = 100) -> "Limits":
        return Limits(**{f.name: getattr(self, f.name) * factor
                         for f in fields(Limits)})


def load_limits(path: str | None = None) -> Limits:
    """Defaults, overridden by a JSON file from the environment or `path`."""
    limits = Limits()
    path = path or os.environ.get(ENV_VAR)
    if not path:
        return limits
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    known = {f.name for f in fields(Limits)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown limit fields in {path}: {sorted(unknown)}")
    return replace(limits, **{k: int(v) for k, v in data.items()})
