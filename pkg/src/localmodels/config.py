"""Default resource budgets.

Every budget can be overridden per call. The CLI reads
``LOCALMODELS_BUDGET`` once at start-up; its value is a comma separated
list of ``name=value`` pairs, e.g. ``max_pairs=5000,max_flags=100000``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

BUDGET_ENV_VAR = "LOCALMODELS_BUDGET"


@dataclass(frozen=True)
class Budget:
    max_pairs: int = 10**6        # S-pairs processed by one Groebner run
    max_terms: int = 200_000      # terms in any intermediate polynomial
    max_flags: int = 10**7        # flags visited by a Springer fibre count
    max_subspaces: int = 10**7    # subspaces visited by lattice enumeration
    max_character_size: int = 8   # largest symmetric group for character sums

    def override(self, spec: str | None) -> "Budget":
        """Return a copy with ``name=value`` pairs from ``spec`` applied."""
        if not spec:
            return self
        known = {f.name for f in fields(self)}
        changes = {}
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            name, _, value = item.partition("=")
            name = name.strip()
            if name not in known:
                raise ValueError(f"unknown budget {name!r}; expected one of {sorted(known)}")
            changes[name] = int(value)
        return replace(self, **changes)

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


DEFAULT_BUDGET = Budget()


def budget_from_env(environ=None) -> Budget:
    environ = os.environ if environ is None else environ
    return DEFAULT_BUDGET.override(environ.get(BUDGET_ENV_VAR))


DEFAULT_SEED = 20240601
