"""Runtime limits and parallelism settings.

A :class:`Config` travels into graph construction; the vertex budget guards
closure runaway, the thread count sizes the frontier pool (output bytes never
depend on it), and ``output_dir`` anchors CLI file outputs.  The environment
variable ``CRYSTAL_THREADS`` overrides the configured thread count.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError

THREADS_ENV_VAR = "CRYSTAL_THREADS"


@dataclass(frozen=True, slots=True)
class Config:
    """Construction limits.

    Attributes:
        max_vertices: Hard cap on graph closure size.
        threads: Worker count for frontier expansion; ``None`` means one per
            available core.
        output_dir: Directory for CLI-generated files.
    """

    max_vertices: int = 10**6
    threads: int | None = None
    output_dir: Path = field(default_factory=lambda: Path("."))

    def __post_init__(self) -> None:
        if self.max_vertices < 1:
            raise ParseError(f"max_vertices must be positive, got {self.max_vertices}")
        if self.threads is not None and self.threads < 1:
            raise ParseError(f"threads must be positive, got {self.threads}")


DEFAULT_CONFIG = Config()


def resolve_threads(config: Config | None = None) -> int:
    """Effective worker count: ``CRYSTAL_THREADS`` beats config beats cores.

    Raises:
        ParseError: The environment variable is not a positive integer.
    """
    env = os.environ.get(THREADS_ENV_VAR)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise ParseError(
                f"{THREADS_ENV_VAR} must be an integer, got {env!r}"
            ) from None
        if value < 1:
            raise ParseError(f"{THREADS_ENV_VAR} must be positive, got {value}")
        return value
    if config is not None and config.threads is not None:
        return config.threads
    return os.cpu_count() or 1
