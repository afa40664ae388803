"""Size limits for enumeration and brute-force realizations."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import InvalidInputError

ENV_SCALE = "BGGKIT_GUARDRAIL_SCALE"


@dataclass(frozen=True)
class Guardrails:
    weyl_order: int = 10**6
    algebra_dim: int = 300
    rep_dim: int = 200
    chain_dim: int = 20000
    character_dim: int = 10**5

    def scaled(self, factor: float) -> "Guardrails":
        return replace(self, **{f.name: max(1, int(getattr(self, f.name) * factor)) for f in fields(self)})


def default_guardrails() -> Guardrails:
    """Defaults, multiplied by ``$BGGKIT_GUARDRAIL_SCALE`` when set."""
    raw = os.environ.get(ENV_SCALE)
    if not raw:
        return Guardrails()
    try:
        factor = float(raw)
    except ValueError:
        factor = float("nan")
    if not factor > 0 or factor == float("inf"):
        raise InvalidInputError(f"{ENV_SCALE}={raw!r} is not a positive number")
    return Guardrails().scaled(factor)
