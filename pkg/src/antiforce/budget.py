"""Search budgets shared by the exact solvers and the sweep harness."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field


class BudgetExceededError(Exception):
    """Raised when an exact search runs out of nodes or wall-clock time.

    Carries the best bounds established before the search stopped, so a
    caller can still report a partial result.
    """

    def __init__(
        self,
        message: str,
        *,
        lower: int | None = None,
        upper: int | None = None,
        nodes_used: int = 0,
    ) -> None:
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes_used = nodes_used


@dataclass
class Budget:
    """Node-count plus wall-clock cap for one exact computation.

    ``max_nodes`` counts search steps (subsets tested, branch nodes, or
    enumerated matchings depending on the solver). ``max_seconds`` is a
    soft deadline checked alongside the node counter.
    """

    max_nodes: int = 50_000_000
    max_seconds: float = 10.0
    nodes: int = field(default=0, init=False)
    _deadline: float = field(default=0.0, init=False)

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("budget caps must be positive")
        self.start()

    def start(self) -> None:
        self.nodes = 0
        self._deadline = time.monotonic() + self.max_seconds

    def tick(self, count: int = 1) -> None:
        """Charge ``count`` nodes; raise once either cap is exhausted."""
        self.nodes += count
        if self.nodes > self.max_nodes:
            raise BudgetExceededError(
                f"node budget exhausted ({self.max_nodes})", nodes_used=self.nodes
            )
        # Time checks are comparatively expensive; amortize them.
        if self.nodes % 256 == 0 and time.monotonic() > self._deadline:
            raise BudgetExceededError(
                f"time budget exhausted ({self.max_seconds}s)", nodes_used=self.nodes
            )

    def check_time(self) -> None:
        if time.monotonic() > self._deadline:
            raise BudgetExceededError(
                f"time budget exhausted ({self.max_seconds}s)", nodes_used=self.nodes
            )


def parse_budget(text: str) -> Budget:
    """Parse ``NODES`` or ``NODES:SECONDS`` into a Budget."""
    parts = text.split(":")
    if len(parts) > 2 or not parts[0]:
        raise ValueError(f"bad budget spec {text!r}, expected NODES[:SECONDS]")
    nodes = int(parts[0])
    seconds = float(parts[1]) if len(parts) == 2 else 10.0
    return Budget(max_nodes=nodes, max_seconds=seconds)


def default_budget() -> Budget:
    """Fresh default budget, overridable via ANTIFORCE_BUDGET=NODES[:SECONDS]."""
    env = os.environ.get("ANTIFORCE_BUDGET")
    if env:
        return parse_budget(env)
    return Budget()
