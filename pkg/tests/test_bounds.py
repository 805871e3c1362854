import pytest

from intervalcoloring import (
    bounds_for_graph,
    bounds_for_k2n,
    complete_graph,
    construct,
    construction_lower_bound,
    general_upper_bound,
    graph_from_edges,
    log_lower_bound,
    refined_upper_bound,
    triangle_free_upper_bound,
)


@pytest.mark.parametrize("n,value", [(1, 1), (4, 10), (10, 28)])
def test_construction_lower_bound(n, value):
    assert construction_lower_bound(n) == value


@pytest.mark.parametrize("n,value", [(1, 1), (3, 7), (4, 9)])
def test_log_lower_bound(n, value):
    assert log_lower_bound(n) == value


def test_log_lower_bound_exact_near_powers_of_two():
    # floor(log2) via bit_length: 2n-1 is odd, so probe both odd
    # neighbors of 2**exp, where float log2 would be least trustworthy
    for exp in range(2, 60):
        n = 2 ** (exp - 1) + 1  # 2n-1 == 2**exp + 1
        assert log_lower_bound(n) == 2 * n - 1 + exp
        n = 2 ** (exp - 1)  # 2n-1 == 2**exp - 1
        assert log_lower_bound(n) == 2 * n - 1 + exp - 1


def test_lower_bounds_reject_zero():
    with pytest.raises(ValueError):
        construction_lower_bound(0)
    with pytest.raises(ValueError):
        log_lower_bound(0)


@pytest.mark.parametrize("m,value", [(4, 5), (2, 1), (6, 9)])
def test_general_upper_bound(m, value):
    assert general_upper_bound(complete_graph(m)) == value


def test_general_upper_bound_needs_an_edge():
    with pytest.raises(ValueError):
        general_upper_bound(complete_graph(1))
    with pytest.raises(ValueError):
        general_upper_bound(graph_from_edges(3, []))


@pytest.mark.parametrize("m,value", [(4, 4), (6, 8), (8, 12)])
def test_refined_upper_bound(m, value):
    assert refined_upper_bound(complete_graph(m)) == value


def test_refined_upper_bound_needs_three_vertices():
    with pytest.raises(ValueError):
        refined_upper_bound(complete_graph(2))


def test_triangle_free_upper_bound():
    four_cycle = graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert triangle_free_upper_bound(four_cycle) == 3
    assert triangle_free_upper_bound(complete_graph(4)) is None
    assert triangle_free_upper_bound(complete_graph(2)) == 1


def test_lower_bounds_coincide_only_up_to_n3():
    for n in (1, 2, 3):
        assert construction_lower_bound(n) == log_lower_bound(n)
    for n in range(4, 257):
        assert construction_lower_bound(n) > log_lower_bound(n)


def test_lower_bound_below_upper_bounds():
    assert construction_lower_bound(1) <= general_upper_bound(complete_graph(2))
    for n in range(2, 257):
        assert construction_lower_bound(n) <= refined_upper_bound(complete_graph(2 * n))


@pytest.mark.parametrize("n", [1, 2, 3, 8, 21])
def test_construct_span_matches_lower_bound(n):
    assert construct(n).span_t == construction_lower_bound(n)


def test_bounds_report_k4():
    report = bounds_for_k2n(2)
    assert report.label == "K_4"
    assert report.best_lower == 4
    assert report.best_upper == 4


def test_bounds_report_k6():
    report = bounds_for_k2n(3)
    values = {(e.name): e.value for e in report.lower + report.upper}
    assert values["construction"] == 7
    assert values["log2"] == 7
    assert values["refined"] == 8
    assert values["general"] == 9
    assert report.best_lower == 7
    assert report.best_upper == 8


def test_bounds_report_k2():
    report = bounds_for_k2n(1)
    assert report.best_lower == 1
    assert report.best_upper == 1
    refined = next(e for e in report.upper if e.name == "refined")
    assert not refined.applicable and refined.value is None and refined.reason
    triangle = next(e for e in report.upper if e.name == "triangle-free")
    assert triangle.applicable and triangle.value == 1


@pytest.mark.parametrize("n", range(1, 65))
def test_applicable_lower_bounds_never_exceed_uppers(n):
    report = bounds_for_k2n(n)
    assert report.best_lower is not None and report.best_upper is not None
    assert report.best_lower <= report.best_upper


def test_bounds_for_graph_detects_even_complete():
    report = bounds_for_graph(complete_graph(6))
    assert report.label == "K_6"
    assert report.best_lower == 7

    path = graph_from_edges(3, [(1, 2), (2, 3)])
    report = bounds_for_graph(path)
    assert report.best_lower is None
    assert all(not e.applicable for e in report.lower)
    values = {e.name: e.value for e in report.upper if e.applicable}
    assert values == {"refined": 2, "general": 3, "triangle-free": 2}


def test_bounds_for_graph_edgeless():
    report = bounds_for_graph(graph_from_edges(4, []))
    general = next(e for e in report.upper if e.name == "general")
    assert not general.applicable
    assert report.best_upper == 3  # triangle-free |V|-1 and refined 2|V|-4
