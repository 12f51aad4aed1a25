"""Runtime knobs read from the environment."""


from __future__ import annotations

from typing import Mapping, Optional
from dataclasses import dataclass
import os


__all__ = ["Settings"]


def _int_var(env: Mapping[str, str], name: str, default: int, low: int) -> int:
    raw = env.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got '{raw}'.") from None
    if value < low:
        raise ValueError(f"{name} must be >= {low}, got {value}.")
    return value


@dataclass(frozen=True)
class Settings:
    """
    Engine settings.

    :param threads: Worker cap for per-weight trace blocks.
    :param qmax: Default truncation order of verification runs.
    :param extrapolation_qmax: Default truncation order of chi-extrapolation
        runs.
    """

    threads: int = 1
    qmax: int = 6
    extrapolation_qmax: int = 4

    @classmethod
    def from_env(cls, env: Optional[Mapping[str, str]] = None) -> "Settings":
        """Read HILBQ_THREADS, HILBQ_QMAX and HILBQ_EXTRAPOLATION_QMAX."""

        env = os.environ if env is None else env
        return cls(
            threads=_int_var(env, "HILBQ_THREADS", 1, 1),
            qmax=_int_var(env, "HILBQ_QMAX", 6, 0),
            extrapolation_qmax=_int_var(
                env, "HILBQ_EXTRAPOLATION_QMAX", 4, 0))
