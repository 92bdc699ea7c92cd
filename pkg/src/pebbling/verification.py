"""Machine verification: fact sweeps, the equality theorem at desk scale,
and differential validation of the fast engines against direct search.

Everything here reports CheckResult / VerificationReport values; rendering
lives in reporting. The theorem sweep fans out across graphs with a process
pool when asked to; per-graph work is a pure function of the graph6 string,
and results are collected in input order, so the report is identical at
every parallelism degree.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import SearchLimitError, UsageError
from .game import GoalMode, _compositions, _compositions_fixed
from .graphs import Graph, complete, encode_graph6, enumerate_connected_graphs, parse_graph6
from .solver import (
    DirectSearch,
    ExtendedCount,
    FastSolver,
    _weight_rules_out,
    find_unsolvable_witness,
    is_infinite,
    pebbling_number,
    singular_pebbling_number,
)

K2_GRAPH6 = encode_graph6(complete(2))
TWO_ISOLATED_GRAPH6 = encode_graph6(Graph(2))


@dataclass(frozen=True)
class GraphRecord:
    """Per-graph row of the verification report.

    pi / pi_s are None only when the safety cap fired for that graph; the
    sweep records the failure and keeps going. witness_config is a blocking
    configuration at one pebble below the finite pebbling number.
    """

    graph6: str
    n: int
    pi: ExtendedCount | None
    pi_s: ExtendedCount | None
    equal: bool
    witness_config: str | None
    witness_target: int | None
    elapsed_ms: int


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    scope: str
    n_max: int
    records: tuple[GraphRecord, ...]
    checks: tuple[CheckResult, ...]
    passed: bool
    elapsed_ms: int


def record_is_expected(record: GraphRecord) -> bool:
    """Whether a record matches the expected outcome for its graph.

    Equality is the rule; the two known exceptions are the two-vertex
    graphs: K2 (2 vs 3) and the disconnected pair (both infinite).
    """
    if record.pi is None or record.pi_s is None:
        return False
    if record.graph6 == TWO_ISOLATED_GRAPH6:
        return is_infinite(record.pi) and is_infinite(record.pi_s)
    if record.graph6 == K2_GRAPH6:
        return record.pi == 2 and record.pi_s == 3
    return record.equal


def compute_graph_record(graph6: str) -> GraphRecord:
    """Worker: both parameters plus a blocking witness for one graph."""
    g = parse_graph6(graph6)
    start = time.perf_counter()
    try:
        pi = pebbling_number(g)
        pi_s = singular_pebbling_number(g)
    except SearchLimitError:
        elapsed = round((time.perf_counter() - start) * 1000)
        return GraphRecord(graph6, g.n, None, None, False, None, None, elapsed)
    witness_config = None
    witness_target = None
    if not is_infinite(pi):
        witness = find_unsolvable_witness(g, pi - 1, GoalMode.AT_LEAST_ONE)
        if witness is not None:
            witness_config = witness[0].to_text()
            witness_target = witness[1]
    elapsed = round((time.perf_counter() - start) * 1000)
    return GraphRecord(
        graph6, g.n, pi, pi_s, pi == pi_s, witness_config, witness_target, elapsed
    )


def _map_records(graph6_list: list[str], jobs: int | None) -> tuple[GraphRecord, ...]:
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise UsageError(f"jobs must be >= 1, got {jobs}")
    if jobs == 1 or len(graph6_list) <= 1:
        return tuple(compute_graph_record(s) for s in graph6_list)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return tuple(pool.map(compute_graph_record, graph6_list))


def verify_theorem(n_max: int, jobs: int | None = 1) -> VerificationReport:
    """Compute both parameters for every connected isomorphism class with
    3 <= n <= n_max and record equality; the two-vertex graphs are included
    as their known exceptional rows."""
    if not 3 <= n_max <= 7:
        raise UsageError(f"need 3 <= n_max <= 7, got {n_max}")
    start = time.perf_counter()
    graph6_list = [TWO_ISOLATED_GRAPH6, K2_GRAPH6]
    for n in range(3, n_max + 1):
        graph6_list.extend(encode_graph6(g) for g in enumerate_connected_graphs(n))
    records = _map_records(graph6_list, jobs)
    passed = all(record_is_expected(r) for r in records)
    elapsed = round((time.perf_counter() - start) * 1000)
    scope = (
        f"pebbling vs exactly-one pebbling on all connected isomorphism classes "
        f"with 3 <= n <= {n_max}, plus both 2-vertex graphs"
    )
    return VerificationReport(scope, n_max, records, (), passed, elapsed)


# ---------------------------------------------------------------------------
# fact sweeps
#
# Each _cases helper returns (ok, cases_checked, failure_detail) so the
# per-graph operations and the aggregated full run share one implementation.


def _fact_three_plus_cases(g: Graph, t_max: int):
    g6 = encode_graph6(g)
    checked = 0
    for target in range(g.n):
        if not g.sorted_neighbors[target]:
            continue  # an isolated target is exempt
        search = DirectSearch(g, target, GoalMode.EXACTLY_ONE)
        for total in range(3, t_max + 1):
            for on_target in range(3, total + 1):
                for counts in _compositions_fixed(total, g.n, target, on_target):
                    checked += 1
                    if not search.solvable(counts):
                        detail = (
                            f"graph {g6}, target {target}, configuration "
                            f"{','.join(map(str, counts))} has {on_target} pebbles on a "
                            f"non-isolated target yet cannot reach exactly one"
                        )
                        return False, checked, detail
    return True, checked, None


def verify_fact_1(g: Graph, t_max: int) -> CheckResult:
    """Starting with three or more pebbles on a non-isolated target always
    resolves to exactly one pebble there (checked by direct search)."""
    ok, checked, detail = _fact_three_plus_cases(g, t_max)
    return CheckResult(
        "three-plus-on-target-solvable",
        ok,
        detail if detail else f"{checked} configurations checked",
    )


def _reaches_pebbled_neighbor(
    counts: tuple[int, ...],
    target: int,
    neighbor_set: tuple[int, ...],
    neighbors: tuple[tuple[int, ...], ...],
    memo: dict[tuple[int, ...], bool],
) -> bool:
    """Can moves that never touch the target's own pebbles put a pebble on
    one of its neighbors? The starting state counts if already pebbled."""
    if any(counts[u] for u in neighbor_set):
        return True
    cached = memo.get(counts)
    if cached is not None:
        return cached
    found = False
    scratch = list(counts)
    for u, c in enumerate(counts):
        if u == target or c < 2:
            continue
        scratch[u] -= 2
        for v in neighbors[u]:
            scratch[v] += 1
            child = tuple(scratch)
            scratch[v] -= 1
            if _reaches_pebbled_neighbor(child, target, neighbor_set, neighbors, memo):
                found = True
                break
        scratch[u] += 2
        if found:
            break
    memo[counts] = found
    return found


def _fact_pair_on_target_cases(g: Graph, t_max: int):
    g6 = encode_graph6(g)
    checked = 0
    for target in range(g.n):
        neighbor_set = g.sorted_neighbors[target]
        search = DirectSearch(g, target, GoalMode.EXACTLY_ONE)
        reach_memo: dict[tuple[int, ...], bool] = {}
        for total in range(2, t_max + 1):
            for counts in _compositions_fixed(total, g.n, target, 2):
                if not _reaches_pebbled_neighbor(
                    counts, target, neighbor_set, g.sorted_neighbors, reach_memo
                ):
                    continue  # the fact imposes nothing here
                checked += 1
                if not search.solvable(counts):
                    detail = (
                        f"graph {g6}, target {target}, configuration "
                        f"{','.join(map(str, counts))} can pebble a neighbor of the "
                        f"target holding two, yet cannot reach exactly one"
                    )
                    return False, checked, detail
    return True, checked, None


def verify_fact_3(g: Graph, t_max: int) -> CheckResult:
    """With two pebbles on the target, reaching any pebble onto a neighbor
    of the target (by moves not sourced at the target) forces solvability:
    the pair shuttles off and one pebble comes back."""
    if g.n < 2 or not g.is_connected():
        raise UsageError("needs a connected graph on at least two vertices")
    ok, checked, detail = _fact_pair_on_target_cases(g, t_max)
    return CheckResult(
        "pair-on-target-neighbor-reach",
        ok,
        detail if detail else f"{checked} triggering configurations checked",
    )


def _first_arrival_cases(g: Graph, t_max: int):
    g6 = encode_graph6(g)
    checked = 0
    for target in range(g.n):
        at_least = DirectSearch(g, target, GoalMode.AT_LEAST_ONE)
        exactly = DirectSearch(g, target, GoalMode.EXACTLY_ONE)
        for total in range(t_max + 1):
            for counts in _compositions_fixed(total, g.n, target, 0):
                checked += 1
                if at_least.solvable(counts) != exactly.solvable(counts):
                    detail = (
                        f"graph {g6}, target {target}, configuration "
                        f"{','.join(map(str, counts))}: goals disagree with an "
                        f"empty target"
                    )
                    return False, checked, detail
    return True, checked, None


def verify_first_arrival(g: Graph, t_max: int) -> CheckResult:
    """With no pebble on the target the two goals coincide: whichever move
    delivers the first pebble delivers exactly one, and play stops there."""
    ok, checked, detail = _first_arrival_cases(g, t_max)
    return CheckResult(
        "first-arrival-equivalence",
        ok,
        detail if detail else f"{checked} configurations checked",
    )


def _crosscheck_cases(n_max: int, t_max: int):
    checked = 0
    for n in range(1, n_max + 1):
        for g in enumerate_connected_graphs(n):
            g6 = encode_graph6(g)
            fast = FastSolver(g)
            for target in range(g.n):
                direct_eo = DirectSearch(g, target, GoalMode.EXACTLY_ONE)
                direct_alo = DirectSearch(g, target, GoalMode.AT_LEAST_ONE)
                dist = g.distances_from(target)
                depth = max(d for d in dist if d is not None)
                for total in range(t_max + 1):
                    for counts in _compositions(total, g.n):
                        checked += 1
                        where = (
                            f"graph {g6}, target {target}, configuration "
                            f"{','.join(map(str, counts))}"
                        )
                        if fast.solvable(
                            counts, target, GoalMode.EXACTLY_ONE
                        ) != direct_eo.solvable(counts):
                            return False, checked, f"{where}: exactly-one fast path disagrees with direct search"
                        if fast.solvable(
                            counts, target, GoalMode.AT_LEAST_ONE
                        ) != direct_alo.solvable(counts):
                            return False, checked, f"{where}: at-least-one fast path disagrees with direct search"
                        if _weight_rules_out(counts, dist, depth) and direct_alo.solvable(counts):
                            return False, checked, f"{where}: weight prune fired on a solvable instance"
    return True, checked, None


def crosscheck_fast_path(n_max: int = 4, t_max: int = 8) -> CheckResult:
    """Differential test: the fast engines agree with direct search on every
    (graph, target, configuration) within bounds, and the weight prune never
    fires on a solvable at-least-one instance."""
    ok, checked, detail = _crosscheck_cases(n_max, t_max)
    return CheckResult(
        "fast-path-crosscheck",
        ok,
        detail if detail else f"{checked} (graph, target, configuration) cases agree",
    )


def _window_cases(g: Graph, window: int):
    g6 = encode_graph6(g)
    reduced = singular_pebbling_number(g)
    if is_infinite(reduced):
        raise UsageError("windowed validation needs a finite answer")
    checked = 0
    for target in range(g.n):
        search = DirectSearch(g, target, GoalMode.EXACTLY_ONE)
        for total in range(reduced, reduced + window + 1):
            for counts in _compositions(total, g.n):
                checked += 1
                if not search.solvable(counts):
                    detail = (
                        f"graph {g6}: size-{total} configuration "
                        f"{','.join(map(str, counts))} (target {target}) is unsolvable "
                        f"though the reduced answer is {reduced}"
                    )
                    return False, checked, detail
    if reduced > 1:
        blocked = False
        for target in range(g.n):
            search = DirectSearch(g, target, GoalMode.EXACTLY_ONE)
            if any(
                not search.solvable(counts)
                for counts in _compositions(reduced - 1, g.n)
            ):
                blocked = True
                break
        if not blocked:
            detail = (
                f"graph {g6}: every size-{reduced - 1} configuration is already "
                f"solvable, so the reduced answer {reduced} is not minimal"
            )
            return False, checked, detail
    return True, checked, None


def validate_singular_reduction(g: Graph, window: int = 4) -> CheckResult:
    """Brute-force every configuration size in [t, t+window] against the
    reduced computation of t; disagreement is a hard failure."""
    if g.n < 2 or not g.is_connected():
        raise UsageError("needs a connected graph on at least two vertices")
    ok, checked, detail = _window_cases(g, window)
    return CheckResult(
        "windowed-singular-reduction",
        ok,
        detail if detail else f"{checked} configurations brute-forced",
    )


# ---------------------------------------------------------------------------
# full verification run

_FACT_N_MAX = 5
_CROSSCHECK_N_MAX = 4
_WINDOW_N_MAX = 4


def run_full_verification(
    n_max: int,
    t_max: int = 8,
    window: int = 4,
    jobs: int | None = 1,
) -> VerificationReport:
    """The verify command's work: theorem sweep to n_max, fast-path
    crosscheck, fact sweeps, first-arrival equivalence, and windowed
    validation of the exactly-one reduction, each at its own desk scale."""
    start = time.perf_counter()
    theorem = verify_theorem(n_max, jobs=jobs)
    checks: list[CheckResult] = []

    ok, checked, detail = _crosscheck_cases(min(n_max, _CROSSCHECK_N_MAX), t_max)
    checks.append(
        CheckResult(
            "fast-path-crosscheck",
            ok,
            detail if detail else f"{checked} (graph, target, configuration) cases agree",
        )
    )

    fact_n = min(n_max, _FACT_N_MAX)
    for name, per_graph, needs_two in (
        ("three-plus-on-target-solvable", _fact_three_plus_cases, False),
        ("pair-on-target-neighbor-reach", _fact_pair_on_target_cases, True),
        ("first-arrival-equivalence", _first_arrival_cases, False),
    ):
        total_checked = 0
        failure = None
        for n in range(2 if needs_two else 1, fact_n + 1):
            for g in enumerate_connected_graphs(n):
                ok, checked, detail = per_graph(g, t_max)
                total_checked += checked
                if not ok:
                    failure = detail
                    break
            if failure:
                break
        checks.append(
            CheckResult(
                name,
                failure is None,
                failure if failure else f"{total_checked} configurations checked",
            )
        )

    total_checked = 0
    failure = None
    for n in range(2, min(n_max, _WINDOW_N_MAX) + 1):
        for g in enumerate_connected_graphs(n):
            ok, checked, detail = _window_cases(g, window)
            total_checked += checked
            if not ok:
                failure = detail
                break
        if failure:
            break
    checks.append(
        CheckResult(
            "windowed-singular-reduction",
            failure is None,
            failure if failure else f"{total_checked} configurations brute-forced",
        )
    )

    passed = theorem.passed and all(c.passed for c in checks)
    elapsed = round((time.perf_counter() - start) * 1000)
    scope = (
        f"{theorem.scope}; fast-path crosscheck to n <= {min(n_max, _CROSSCHECK_N_MAX)}, "
        f"fact sweeps to n <= {fact_n} with t <= {t_max}, reduction window {window} "
        f"to n <= {min(n_max, _WINDOW_N_MAX)}"
    )
    return VerificationReport(
        scope, n_max, theorem.records, tuple(checks), passed, elapsed
    )
