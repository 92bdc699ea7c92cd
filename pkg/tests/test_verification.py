import pytest

import pebbling.solver
from pebbling.errors import UsageError
from pebbling.game import Configuration, GoalMode
from pebbling.graphs import Graph, complete, cycle, encode_graph6, parse_graph6, path
from pebbling.reporting import render_report, report_to_dict
from pebbling.solver import DirectSearch, is_infinite
from pebbling.verification import (
    GraphRecord,
    compute_graph_record,
    crosscheck_fast_path,
    record_is_expected,
    run_full_verification,
    validate_singular_reduction,
    verify_fact_1,
    verify_fact_3,
    verify_first_arrival,
    verify_theorem,
    _reaches_pebbled_neighbor,
)


def test_fact_checks_pass_on_small_graphs():
    for g in (complete(2), path(3), complete(3), cycle(4)):
        assert verify_fact_1(g, 6).passed
        assert verify_fact_3(g, 6).passed
        assert verify_first_arrival(g, 6).passed
    # isolated-target graphs are exempt from the first fact, not failures
    assert verify_fact_1(complete(1), 6).passed


def test_fact_3_precondition():
    with pytest.raises(UsageError):
        verify_fact_3(complete(1), 4)
    with pytest.raises(UsageError):
        verify_fact_3(Graph(2), 4)


def _reaches(g, counts, target):
    return _reaches_pebbled_neighbor(
        counts, target, g.sorted_neighbors[target], g.sorted_neighbors, {}
    )


def test_pair_on_target_trigger_cases():
    p3 = path(3)
    # a pile of four two steps out can land a pebble next to the target
    assert _reaches(p3, (2, 0, 4), 0)
    assert DirectSearch(p3, 0, GoalMode.EXACTLY_ONE).solvable((2, 0, 4))
    # a single far pebble can never move at all
    assert not _reaches(p3, (2, 0, 1), 0)
    # a pair two steps out also reaches the neighbor (and is indeed solvable)
    assert _reaches(p3, (2, 0, 2), 0)
    assert DirectSearch(p3, 0, GoalMode.EXACTLY_ONE).solvable((2, 0, 2))
    # moves sourced at the target do not count as a trigger
    assert not _reaches(p3, (2, 0, 0), 0)


def test_first_arrival_check_counts_only_empty_targets():
    result = verify_first_arrival(complete(2), 4)
    assert result.passed
    assert "configurations checked" in result.detail


def test_crosscheck_fast_path_small():
    assert crosscheck_fast_path(2, 4).passed
    assert crosscheck_fast_path(3, 6).passed


def test_validate_singular_reduction_small():
    for g in (complete(2), path(3), complete(3)):
        result = validate_singular_reduction(g, window=4)
        assert result.passed
    with pytest.raises(UsageError):
        validate_singular_reduction(complete(1))


def test_verify_theorem_n3():
    report = verify_theorem(3, jobs=1)
    assert report.passed
    assert len(report.records) == 4
    disconnected, k2, first, second = report.records
    assert disconnected.graph6 == "A?"
    assert is_infinite(disconnected.pi) and is_infinite(disconnected.pi_s)
    assert disconnected.witness_config is None
    assert (k2.pi, k2.pi_s, k2.equal) == (2, 3, False)
    assert k2.witness_config == "0,1" and k2.witness_target == 0
    for record in (first, second):
        assert record.n == 3 and record.equal
    assert {first.pi, second.pi} == {3, 4}


def test_verify_theorem_rejects_bad_scope():
    with pytest.raises(UsageError):
        verify_theorem(2)
    with pytest.raises(UsageError):
        verify_theorem(8)


def test_record_expectations():
    report = verify_theorem(3, jobs=1)
    assert all(record_is_expected(r) for r in report.records)
    wrong_k2 = GraphRecord("A_", 2, 2, 2, True, None, None, 0)
    assert not record_is_expected(wrong_k2)
    capped = GraphRecord("Bw", 3, None, None, False, None, None, 0)
    assert not record_is_expected(capped)


def test_theorem_records_have_confirmed_blocking_witnesses():
    report = verify_theorem(3, jobs=1)
    for record in report.records:
        if record.witness_config is None:
            continue
        g = parse_graph6(record.graph6)
        config = Configuration.from_text(record.witness_config)
        search = DirectSearch(g, record.witness_target, GoalMode.AT_LEAST_ONE)
        assert not search.solvable(config.counts)


def test_parallel_report_is_byte_identical():
    serial = verify_theorem(4, jobs=1)
    parallel = verify_theorem(4, jobs=2)
    assert render_report(report_to_dict(serial), "json") == render_report(
        report_to_dict(parallel), "json"
    )
    assert render_report(report_to_dict(serial), "csv") == render_report(
        report_to_dict(parallel), "csv"
    )


def test_search_cap_is_contained_per_graph(monkeypatch):
    monkeypatch.setattr(pebbling.solver, "ascent_cap", lambda n: 1)
    record = compute_graph_record(encode_graph6(path(3)))
    assert record.pi is None and record.pi_s is None
    assert not record_is_expected(record)
    report = verify_theorem(3, jobs=1)  # sweep survives, fails overall
    assert not report.passed


def test_run_full_verification_n3():
    report = run_full_verification(3, t_max=6, window=3, jobs=1)
    assert report.passed
    names = [c.name for c in report.checks]
    assert names == [
        "fast-path-crosscheck",
        "three-plus-on-target-solvable",
        "pair-on-target-neighbor-reach",
        "first-arrival-equivalence",
        "windowed-singular-reduction",
    ]
    assert all(c.passed for c in report.checks)
