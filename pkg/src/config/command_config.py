"""
Per-command configuration shared by every CLI subcommand.
"""

import os
from typing import List, Optional

import dagster as dg

from models import UsageError

from engine import ArrowingEngine

THREADS_ENV = "RAMSEY_FORGE_THREADS"
OUTPUT_FORMATS = ("graph6", "json", "dot")


def default_threads() -> int:
    """Worker count from RAMSEY_FORGE_THREADS, 1 when unset."""
    raw = os.getenv(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        return int(raw)
    except ValueError as e:
        raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}") from e


class CommandConfig(dg.Config):
    """
    Config:
        inputs: Input graph/coloring paths in the order the command reads them
        output: Where graphs or witnesses are written (default: not written)
        format: graph6, json or dot
        max_nodes / timeout_ms: Search budget per engine call (default: unlimited)
        threads: Engine worker processes
        deterministic: Canonical sequential search; output is byte-identical across runs
        seed: Seed for generated instances
        verbose: Debug logging on stderr
    """

    inputs: List[str] = []
    output: Optional[str] = None
    format: str = "json"
    max_nodes: Optional[int] = None
    timeout_ms: Optional[int] = None
    threads: int = 1
    deterministic: bool = False
    seed: Optional[int] = None
    verbose: bool = False

    def check_invariants(self) -> "CommandConfig":
        if self.format not in OUTPUT_FORMATS:
            raise UsageError(f"format must be one of {list(OUTPUT_FORMATS)}, got {self.format!r}")
        if self.timeout_ms is not None and self.timeout_ms <= 0:
            raise UsageError(f"timeout must be positive, got {self.timeout_ms} ms")
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise UsageError(f"max nodes must be positive, got {self.max_nodes}")
        if self.threads < 1:
            raise UsageError(f"threads must be at least 1, got {self.threads}")
        if self.deterministic and self.threads != 1:
            raise UsageError(f"deterministic mode runs on one thread, got threads={self.threads}")
        return self

    def to_engine(self) -> ArrowingEngine:
        return ArrowingEngine(
            max_nodes=self.max_nodes,
            timeout_ms=self.timeout_ms,
            threads=self.threads,
            deterministic=self.deterministic,
        )
