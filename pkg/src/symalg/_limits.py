"""Degree limits shared by every dense (n!-sized) operation."""

import os

DEFAULT_MAX_DEGREE = 8
ENV_VAR = "SYMALG_MAX_DEGREE"


class DegreeLimitError(ValueError):
    """Raised when an operation would enumerate a group larger than allowed."""


def max_degree() -> int:
    value = os.environ.get(ENV_VAR)
    if value is None:
        return DEFAULT_MAX_DEGREE
    try:
        limit = int(value)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {value!r}") from None
    if limit < 1:
        raise ValueError(f"{ENV_VAR} must be positive, got {limit}")
    return limit


def check_degree(n: int, what: str = "operation") -> None:
    limit = max_degree()
    if n > limit:
        raise DegreeLimitError(
            f"{what} needs S_{n}, which exceeds the degree limit n <= {limit} "
            f"(override with {ENV_VAR})"
        )
