"""Tunable thresholds and truncation counts of the hybrid scheme."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import DomainError

__all__ = ["DispatchConfig", "DEFAULT_CONFIG", "load_config", "CONFIG_ENV_VAR"]

CONFIG_ENV_VAR = "OSCMOMENT_CONFIG"


@dataclass(frozen=True)
class DispatchConfig:
    """Regime boundaries and rule sizes.

    Attributes
    ----------
    kb_base_crossover : float
        ``|kappa*b|`` below which the base integral uses the trapezoidal rule.
    kb_hybrid : float
        ``kappa*b`` above which the dispatcher uses the Lommel asymptotic form.
    trapz_points, ggl_points : int
        Points of the trapezoidal rule and of the generalized Gauss-Laguerre rule.
    m1_terms, m1_cap : int
        Initial and maximal truncation of the Neumann series.
    m2_terms : int
        Truncation of the Lommel asymptotic series.
    """

    kb_base_crossover: float = 24.0
    kb_hybrid: float = 50.0
    trapz_points: int = 36
    ggl_points: int = 10
    m1_terms: int = 15
    m2_terms: int = 11
    m1_cap: int = 100

    def __post_init__(self):
        for name in ("trapz_points", "ggl_points", "m1_terms", "m2_terms", "m1_cap"):
            if int(getattr(self, name)) < 1:
                raise DomainError(f"{name} must be >= 1")
        if not self.kb_hybrid > self.kb_base_crossover > 0:
            raise DomainError("need kb_hybrid > kb_base_crossover > 0")

    def updated(self, **overrides) -> "DispatchConfig":
        """Copy with the non-``None`` overrides applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


DEFAULT_CONFIG = DispatchConfig()


def _parse_file(path: Path) -> dict:
    types = {f.name: (float if f.type in (float, "float") else int) for f in fields(DispatchConfig)}
    values = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        key = key.strip()
        if not sep or key not in types:
            raise DomainError(f"{path}:{lineno}: expected one of {sorted(types)} as key=value")
        try:
            values[key] = types[key](val.strip())
        except ValueError as exc:
            raise DomainError(f"{path}:{lineno}: bad value for {key}: {val.strip()!r}") from exc
    return values


def load_config(path: str | os.PathLike | None = None, **overrides) -> DispatchConfig:
    """Build a config from defaults, an optional ``key=value`` file, then overrides.

    When ``path`` is None the file named by ``$OSCMOMENT_CONFIG`` is used, if
    set.  Overrides that are ``None`` are ignored.
    """
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR) or None
    values = _parse_file(Path(path)) if path is not None else {}
    values.update({k: v for k, v in overrides.items() if v is not None})
    return DispatchConfig(**values)
