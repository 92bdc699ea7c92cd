"""Exact solvability search and the two pebbling parameters.

Two engines cooperate here and are deliberately kept independent:

* DirectSearch is a plain memoized depth-first search over move sequences.
  No pruning, no case analysis. It produces replayable witnesses and serves
  as the reference side of every differential check.

* FastSolver answers yes/no only, layering sound shortcuts on top of the
  same state space: trivial target counts, a greedy single-pile test, and a
  distance-weighted potential prune. The parameter sweeps run on it.

verification.crosscheck_fast_path exercises their agreement exhaustively at
small scale; neither engine ever consults the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import SearchLimitError, UsageError
from .game import Configuration, GoalMode, Move, _compositions, _compositions_fixed
from .graphs import Graph


class InfiniteCount:
    """Distinguished result for games no finite supply can win."""

    _instance: "InfiniteCount | None" = None

    def __new__(cls) -> "InfiniteCount":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __reduce__(self):
        return (_make_infinite, ())


def _make_infinite() -> "InfiniteCount":
    return INFINITE


INFINITE = InfiniteCount()

ExtendedCount = Union[int, InfiniteCount]


def is_infinite(value: object) -> bool:
    return isinstance(value, InfiniteCount)


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one solvability query.

    When solvable, `witness` replays legally from the queried configuration
    to a goal state; `states_explored` counts states newly expanded by this
    query (diagnostic).
    """

    solvable: bool
    witness: tuple[Move, ...] | None
    states_explored: int


def _check_sized(g: Graph, counts: tuple[int, ...]) -> None:
    if len(counts) != g.n:
        raise UsageError(
            f"configuration has {len(counts)} counts but graph has {g.n} vertices"
        )


class DirectSearch:
    """Memoized exhaustive search for one (graph, target, mode).

    Solvability of a state does not depend on how the state was reached, so
    one instance may be shared across many queries on the same graph, target
    and mode; sharing changes nothing but speed. The module-level solvable()
    uses a fresh instance per call.
    """

    def __init__(self, g: Graph, target: int, mode: GoalMode) -> None:
        g._check_vertex(target)
        self._g = g
        self._target = target
        self._exactly_one = mode is GoalMode.EXACTLY_ONE
        self._neighbors = g.sorted_neighbors
        self._memo: dict[tuple[int, ...], bool] = {}
        self._winning: dict[tuple[int, ...], Move] = {}
        self._expanded = 0

    def _goal(self, counts: tuple[int, ...]) -> bool:
        c = counts[self._target]
        return c == 1 if self._exactly_one else c >= 1

    def solvable(self, counts: tuple[int, ...]) -> bool:
        if self._goal(counts):
            return True
        cached = self._memo.get(counts)
        if cached is not None:
            return cached
        self._expanded += 1
        found = False
        scratch = list(counts)
        for u, c in enumerate(counts):
            if c < 2:
                continue
            scratch[u] -= 2
            for v in self._neighbors[u]:
                scratch[v] += 1
                child = tuple(scratch)
                scratch[v] -= 1
                if self.solvable(child):
                    self._winning[counts] = Move(u, v)
                    found = True
                    break
            scratch[u] += 2
            if found:
                break
        self._memo[counts] = found
        return found

    def _witness(self, counts: tuple[int, ...]) -> tuple[Move, ...]:
        seq: list[Move] = []
        while not self._goal(counts):
            u, v = self._winning[counts]
            seq.append(Move(u, v))
            updated = list(counts)
            updated[u] -= 2
            updated[v] += 1
            counts = tuple(updated)
        return tuple(seq)

    def run(self, config: Configuration) -> SolveResult:
        counts = config.counts
        _check_sized(self._g, counts)
        before = self._expanded
        ok = self.solvable(counts)
        witness = self._witness(counts) if ok else None
        return SolveResult(ok, witness, self._expanded - before)


def solvable(g: Graph, config: Configuration, target: int, mode: GoalMode) -> SolveResult:
    """Decide whether some sequence of legal moves reaches the goal.

    The empty sequence counts: a configuration that already satisfies the
    goal is solvable with an empty witness.
    """
    return DirectSearch(g, target, mode).run(config)


# ---------------------------------------------------------------------------
# potential prune
#
# Weight each pebble by 2^-distance to the target. A move takes weight
# 2 * 2^-d off the source and delivers at most 2^-(d-1) = the same amount,
# so the total never increases; a pebble sitting on the target is worth
# exactly 1. Total weight below 1 therefore rules out ever reaching the
# target. Computed in integers, scaled by 2^(max finite distance).


def _weight_rules_out(
    counts: tuple[int, ...], dist: tuple[int | None, ...], depth: int
) -> bool:
    goal_weight = 1 << depth
    weight = 0
    for c, d in zip(counts, dist):
        if c and d is not None:
            weight += c << (depth - d)
            if weight >= goal_weight:
                return False
    return weight < goal_weight


def weight_prune(g: Graph, config: Configuration, target: int) -> bool:
    """True only when the potential argument proves the at-least-one game
    lost; never used to claim solvability. Unreachable vertices weigh 0."""
    g._check_vertex(target)
    counts = config.counts
    _check_sized(g, counts)
    dist = g.distances_from(target)
    depth = max(d for d in dist if d is not None)
    return _weight_rules_out(counts, dist, depth)


class FastSolver:
    """Boolean solvability for one graph with per-target caches.

    The exactly-one answer is built by case analysis on the target's count:
    one pebble is an immediate win; three or more on a non-isolated target
    always reduce to one (shed pairs to a neighbor, bringing one back when
    the count was even); zero on the target makes the two goals coincide,
    because the first pebble to arrive arrives alone; an isolated target is
    stuck at its starting count. Only the two-on-target case searches, and
    even there a single pebbled neighbor settles it: shuttle the pair off
    and one pebble back.
    """

    def __init__(self, g: Graph) -> None:
        self._g = g
        self._neighbors = g.sorted_neighbors
        self._alo_memo: dict[int, dict[tuple[int, ...], bool]] = {}
        self._eo_memo: dict[int, dict[tuple[int, ...], bool]] = {}
        self._geometry: dict[int, tuple[tuple[int | None, ...], int, tuple[int | None, ...]]] = {}

    def _target_geometry(self, target: int):
        cached = self._geometry.get(target)
        if cached is None:
            dist = self._g.distances_from(target)
            depth = max(d for d in dist if d is not None)
            piles = tuple(None if d is None else 1 << d for d in dist)
            cached = (dist, depth, piles)
            self._geometry[target] = cached
        return cached

    def drop_target_caches(self, target: int) -> None:
        """Free the per-target memo tables (sweeps walk targets one by one)."""
        self._alo_memo.pop(target, None)
        self._eo_memo.pop(target, None)

    def solvable(self, counts: tuple[int, ...], target: int, mode: GoalMode) -> bool:
        _check_sized(self._g, counts)
        self._g._check_vertex(target)
        if mode is GoalMode.AT_LEAST_ONE:
            return self._at_least_one(counts, target)
        return self._exactly_one(counts, target)

    def _at_least_one(self, counts: tuple[int, ...], target: int) -> bool:
        if counts[target]:
            return True
        dist, depth, piles = self._target_geometry(target)
        for c, need in zip(counts, piles):
            if need is not None and c >= need:
                return True  # march the pile along a shortest path
        if _weight_rules_out(counts, dist, depth):
            return False
        memo = self._alo_memo.setdefault(target, {})
        cached = memo.get(counts)
        if cached is not None:
            return cached
        found = False
        scratch = list(counts)
        for u, c in enumerate(counts):
            if c < 2:
                continue
            scratch[u] -= 2
            for v in self._neighbors[u]:
                scratch[v] += 1
                child = tuple(scratch)
                scratch[v] -= 1
                if self._at_least_one(child, target):
                    found = True
                    break
            scratch[u] += 2
            if found:
                break
        memo[counts] = found
        return found

    def _exactly_one(self, counts: tuple[int, ...], target: int) -> bool:
        on_target = counts[target]
        if on_target == 1:
            return True
        nbrs = self._neighbors[target]
        if not nbrs:
            return False  # isolated target never changes its count
        if on_target >= 3:
            return True
        if on_target == 0:
            return self._at_least_one(counts, target)
        # exactly two on the target
        if any(counts[u] for u in nbrs):
            return True
        memo = self._eo_memo.setdefault(target, {})
        cached = memo.get(counts)
        if cached is not None:
            return cached
        found = False
        scratch = list(counts)
        for u, c in enumerate(counts):
            if c < 2:
                continue
            scratch[u] -= 2
            for v in self._neighbors[u]:
                scratch[v] += 1
                child = tuple(scratch)
                scratch[v] -= 1
                if self._exactly_one(child, target):
                    found = True
                    break
            scratch[u] += 2
            if found:
                break
        memo[counts] = found
        return found


def solvable_exactly_one_fast(g: Graph, config: Configuration, target: int) -> bool:
    """Case-analysis fast path for the exactly-one goal; agrees with the
    direct search everywhere (differentially verified)."""
    counts = config.counts
    _check_sized(g, counts)
    g._check_vertex(target)
    return FastSolver(g).solvable(counts, target, GoalMode.EXACTLY_ONE)


# ---------------------------------------------------------------------------
# the two parameters


def ascent_cap(n: int) -> int:
    """Safety cap on the ascending supply search: generous against every
    known small-graph value, so hitting it means a solver bug, not an answer."""
    return 4**n


def _threshold(check, cap: int, what: str) -> int:
    for t in range(1, cap + 1):
        if check(t):
            return t
    raise SearchLimitError(f"{what} exceeded the safety cap of {cap} pebbles")


def pebbling_number(g: Graph) -> ExtendedCount:
    """Least t such that every configuration of t pebbles can put a pebble
    on every target; INFINITE for disconnected graphs on 2+ vertices.

    Configurations with a pebble already on the target are trivially
    solvable, so only target-count-zero configurations are enumerated.
    Adding a pebble never breaks solvability, so each target's minimal
    passing size is found by independent ascent and the answer is the max.
    """
    if g.n >= 2 and not g.is_connected():
        return INFINITE
    fast = FastSolver(g)
    cap = ascent_cap(g.n)
    best = 1
    for target in range(g.n):

        def level_ok(t: int, target: int = target) -> bool:
            return all(
                fast.solvable(counts, target, GoalMode.AT_LEAST_ONE)
                for counts in _compositions_fixed(t, g.n, target, 0)
            )

        best = max(best, _threshold(level_ok, cap, "pebbling number search"))
        fast.drop_target_caches(target)
    return best


def singular_pebbling_number(g: Graph) -> ExtendedCount:
    """Least t such that every configuration of every size >= t can finish
    with exactly one pebble on every target.

    INFINITE when no finite supply works: disconnected graphs on 2+
    vertices, and the one-vertex graph, whose lone vertex can never shed
    down to a single pebble once it starts with two or more.

    Finite answers reduce to size-exactly-t checks: a target holding one
    pebble is already won, three or more always reduce (non-isolated),
    and the remaining classes, zero or two on the target, are preserved
    under adding a pebble elsewhere (replay the smaller witness). So per
    target it suffices that all size-t configurations with zero on the
    target win the at-least-one game (first arrival arrives alone) and all
    size-t configurations with exactly two on the target win the
    exactly-one game. verification.validate_singular_reduction re-checks
    this reduction against windowed brute force.
    """
    if g.n == 1:
        return INFINITE
    if not g.is_connected():
        return INFINITE
    fast = FastSolver(g)
    cap = ascent_cap(g.n)
    best = 1
    for target in range(g.n):

        def level_ok(t: int, target: int = target) -> bool:
            for counts in _compositions_fixed(t, g.n, target, 0):
                if not fast.solvable(counts, target, GoalMode.AT_LEAST_ONE):
                    return False
            for counts in _compositions_fixed(t, g.n, target, 2):
                if not fast.solvable(counts, target, GoalMode.EXACTLY_ONE):
                    return False
            return True

        best = max(best, _threshold(level_ok, cap, "singular pebbling number search"))
        fast.drop_target_caches(target)
    return best


def find_unsolvable_witness(
    g: Graph, total: int, mode: GoalMode
) -> tuple[Configuration, int] | None:
    """First (configuration, target) of the given size that cannot be
    solved under `mode`, scanning targets ascending and configurations in
    lexicographic order; None when every one is solvable."""
    if total < 0:
        raise UsageError(f"need total >= 0, got {total}")
    fast = FastSolver(g)
    for target in range(g.n):
        for counts in _compositions(total, g.n):
            if not fast.solvable(counts, target, mode):
                return Configuration(counts), target
        fast.drop_target_caches(target)
    return None
