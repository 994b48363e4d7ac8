"""Runtime configuration."""
import os

DEFAULT_MAX_N = 16


def max_power() -> int:
    """Cap on the power ``n`` (env ``HOLOPOW_MAX_N`` overrides the default 16)."""
    raw = os.environ.get("HOLOPOW_MAX_N")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"HOLOPOW_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("HOLOPOW_MAX_N must be at least 1")
    return value


def check_power(n: int) -> int:
    from .errors import PowerCapError

    if not isinstance(n, int) or n < 1:
        raise ValueError(f"power must be a positive integer, got {n!r}")
    cap = max_power()
    if n > cap:
        raise PowerCapError(f"n={n} exceeds the configured cap {cap} (set HOLOPOW_MAX_N)")
    return n
