"""Pebble configurations, the legal move rule, and configuration enumeration.

A move takes two pebbles off a vertex holding at least two and puts one of
them on an adjacent vertex; the other pebble leaves the game. Every move
therefore shrinks the total by exactly one, which is what bounds all the
searches built on top of this module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import FormatError, PebbleOverflowError, UsageError
from .graphs import Graph

# Desk-scale supplies stay tiny; a count this large means corrupted input or
# a runaway caller, and silently carrying it on would poison verification.
PEBBLE_CAP = 2**16


class GoalMode(enum.Enum):
    """Winning condition on the target vertex."""

    AT_LEAST_ONE = "at-least-one"
    EXACTLY_ONE = "exactly-one"


class Move(NamedTuple):
    source: int
    destination: int


@dataclass(frozen=True)
class Configuration:
    """Per-vertex pebble counts; the full game state. Value object."""

    counts: tuple[int, ...]
    total: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        if not counts:
            raise UsageError("configuration needs at least one vertex")
        for v, c in enumerate(counts):
            if not isinstance(c, int) or c < 0:
                raise UsageError(f"count for vertex {v} must be a natural, got {c!r}")
            if c > PEBBLE_CAP:
                raise PebbleOverflowError(
                    f"count {c} on vertex {v} exceeds the per-vertex cap {PEBBLE_CAP}"
                )
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "total", sum(counts))

    @classmethod
    def from_text(cls, text: str) -> "Configuration":
        """Parse the comma-separated form used by the CLI and reports, e.g. "0,4,0"."""
        parts = [p.strip() for p in text.split(",")]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            if isinstance(exc, UsageError):
                raise
            raise FormatError(f"bad configuration text {text!r}") from None

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.counts)

    def __len__(self) -> int:
        return len(self.counts)


def legal_moves(g: Graph, config: Configuration) -> list[Move]:
    """Every legal move, ascending by source then destination."""
    counts = config.counts
    if len(counts) != g.n:
        raise UsageError(
            f"configuration has {len(counts)} counts but graph has {g.n} vertices"
        )
    return [
        Move(u, v)
        for u, c in enumerate(counts)
        if c >= 2
        for v in g.sorted_neighbors[u]
    ]


def apply_move(g: Graph, config: Configuration, move: Move) -> Configuration:
    """Apply one move, returning a new configuration. Illegal moves raise."""
    counts = config.counts
    if len(counts) != g.n:
        raise UsageError(
            f"configuration has {len(counts)} counts but graph has {g.n} vertices"
        )
    u, v = move
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise UsageError(f"move ({u}, {v}) out of range for n={g.n}")
    if not g.adj_masks[u] >> v & 1:
        raise UsageError(f"move ({u}, {v}) is not along an edge")
    if counts[u] < 2:
        raise UsageError(f"move ({u}, {v}) needs two pebbles on {u}, found {counts[u]}")
    updated = list(counts)
    updated[u] -= 2
    updated[v] += 1
    return Configuration(tuple(updated))


def is_goal(config: Configuration, target: int, mode: GoalMode) -> bool:
    counts = config.counts
    if not (0 <= target < len(counts)):
        raise UsageError(f"target {target} out of range for {len(counts)} vertices")
    if mode is GoalMode.AT_LEAST_ONE:
        return counts[target] >= 1
    return counts[target] == 1


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write total as an ordered sum of `parts` naturals,
    ascending lexicographically."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _compositions_fixed(
    total: int, parts: int, vertex: int, count: int
) -> Iterator[tuple[int, ...]]:
    """Compositions of total into `parts` naturals with position `vertex`
    pinned to `count`; empty when count > total."""
    if count > total:
        return
    for rest in _compositions(total - count, parts - 1):
        yield rest[:vertex] + (count,) + rest[vertex:]


def enumerate_configurations(
    n: int,
    total: int,
    fixed_vertex: int | None = None,
    fixed_count: int | None = None,
) -> Iterator[Configuration]:
    """Every configuration of `total` pebbles on n vertices exactly once, in
    lexicographic order; optionally with one vertex pinned to a fixed count.

    The unconstrained stream has C(total+n-1, n-1) entries. A constraint
    exceeding the total yields an empty stream, not an error.
    """
    if n < 1:
        raise UsageError(f"need n >= 1, got {n}")
    if total < 0:
        raise UsageError(f"need total >= 0, got {total}")
    if (fixed_vertex is None) != (fixed_count is None):
        raise UsageError("fixed_vertex and fixed_count must be given together")
    if fixed_vertex is None:
        stream: Iterable[tuple[int, ...]] = _compositions(total, n)
    else:
        if not (0 <= fixed_vertex < n):
            raise UsageError(f"fixed vertex {fixed_vertex} out of range for n={n}")
        if fixed_count is None or fixed_count < 0:
            raise UsageError(f"fixed count must be a natural, got {fixed_count!r}")
        stream = _compositions_fixed(total, n, fixed_vertex, fixed_count)
    return (Configuration(counts) for counts in stream)
