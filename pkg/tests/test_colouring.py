import pytest

from pymycielski.colouring import (
    Colouring,
    canonical_sum,
    chromatic_number,
    clique_lower_bound,
    extremal_colouring,
    find_colouring,
    greedy_colouring,
    greedy_upper_bound,
    oracle_extremal,
    realizable_size_vectors,
)
from pymycielski.graph import FamilyInstance, Graph, is_independent_set, make_family
from pymycielski.types import Family, Sense
from pymycielski.utils import (
    InfeasibleError,
    InvalidColouringError,
    OracleLimitError,
    SolverLimitError,
)


def _mu(family: Family, n: int) -> Graph:
    return make_family(FamilyInstance(family, n, mycielskian=True))


def _small_instances() -> list[FamilyInstance]:
    """Every Mycielskian family instance with at most 13 vertices."""
    instances = [FamilyInstance(Family.PATH, n) for n in range(1, 7)]
    instances += [FamilyInstance(Family.CYCLE, n) for n in range(3, 7)]
    instances += [FamilyInstance(Family.COMPLETE, n) for n in range(1, 7)]
    instances += [
        FamilyInstance.complete_bipartite(a, b)
        for a in range(1, 6)
        for b in range(1, a + 1)
        if a + b <= 6
    ]
    instances += [FamilyInstance(Family.WHEEL, n) for n in range(3, 6)]
    instances += [FamilyInstance(Family.FAN, n) for n in range(1, 6)]
    return [i.with_mycielskian() for i in instances]


SMALL = _small_instances()


def test_greedy_upper_bound_on_complete_graph():
    assert greedy_upper_bound(make_family(FamilyInstance(Family.COMPLETE, 5))) == 5


@pytest.mark.parametrize(
    "instance",
    [
        FamilyInstance.complete_bipartite(3, 2),
        FamilyInstance(Family.CYCLE, 8),
        FamilyInstance(Family.CYCLE, 5, mycielskian=True),
    ],
    ids=lambda s: s.label,
)
def test_greedy_witness_is_proper(instance):
    g = make_family(instance)
    colouring = greedy_colouring(g)
    colouring.validate(g)
    assert colouring.k >= chromatic_number(g)


def test_greedy_bound_on_groetzsch_graph():
    assert greedy_upper_bound(_mu(Family.CYCLE, 5)) >= 4


@pytest.mark.parametrize(
    "g, expected",
    [
        (make_family(FamilyInstance(Family.COMPLETE, 4)), 4),
        (make_family(FamilyInstance(Family.CYCLE, 5)), 2),
        (_mu(Family.PATH, 5), 2),
    ],
)
def test_clique_lower_bound(g, expected):
    assert clique_lower_bound(g) == expected


@pytest.mark.parametrize("n", range(2, 9))
def test_mycielskian_of_path_is_three_chromatic(n):
    assert chromatic_number(_mu(Family.PATH, n)) == 3


def test_chromatic_numbers():
    assert chromatic_number(_mu(Family.CYCLE, 5)) == 4
    assert chromatic_number(_mu(Family.COMPLETE, 3)) == 4
    assert chromatic_number(make_family(FamilyInstance(Family.PATH, 1))) == 1


@pytest.mark.parametrize("instance", SMALL, ids=lambda s: s.label)
def test_chromatic_number_rises_by_one(instance):
    base = make_family(instance.with_mycielskian(False))
    if base.m == 0:
        pytest.skip("edgeless base graph")
    assert chromatic_number(make_family(instance)) == chromatic_number(base) + 1


def test_find_colouring():
    g = _mu(Family.CYCLE, 5)
    assert find_colouring(g, 3) is None
    colouring = find_colouring(g, 4)
    assert colouring is not None
    colouring.validate(g)


def test_min_sum_of_five_cycle():
    result = extremal_colouring(_mu(Family.PATH, 2), 3, Sense.MIN)
    assert result.omega == 9
    assert result.size_vector == (2, 2, 1)
    assert result.proven


def test_max_sum_of_five_cycle():
    result = extremal_colouring(_mu(Family.PATH, 2), 3, Sense.MAX)
    assert result.omega == 11
    assert result.size_vector == (1, 2, 2)


def test_min_sum_of_mycielskian_p3():
    g = _mu(Family.PATH, 3)
    result = extremal_colouring(g, 3, Sense.MIN)
    assert result.omega == 11
    assert result.size_vector == (4, 2, 1)
    classes = result.witness.classes()
    assert classes[0] == {1, 3, 4, 6}
    assert set(classes[1:]) in (
        {frozenset({2, 5}), frozenset({7})},
        {frozenset({2, 7}), frozenset({5})},
    )


def test_oracle_on_mycielskian_p3():
    result = oracle_extremal(_mu(Family.PATH, 3), 3, Sense.MIN)
    assert result.omega == 11
    assert result.size_vector == (4, 2, 1)
    assert result.witness.classes() == ({1, 3, 4, 6}, {2, 5}, {7})
    assert result.multiplicity == 1
    assert result.optimal_size_vectors == ((4, 2, 1),)


def test_oracle_on_mycielskian_k3():
    result = oracle_extremal(_mu(Family.COMPLETE, 3), 4, Sense.MIN)
    assert result.omega == 14
    assert result.size_vector == (3, 2, 1, 1)


def test_oracle_matches_solver_on_five_cycle():
    g = _mu(Family.PATH, 2)
    assert oracle_extremal(g, 3, Sense.MIN).omega == 9
    assert oracle_extremal(g, 3, Sense.MAX).omega == 11


def test_oracle_refuses_large_graphs():
    with pytest.raises(OracleLimitError, match="more than 13 vertices"):
        oracle_extremal(_mu(Family.PATH, 7), 3, Sense.MIN)
    with pytest.raises(OracleLimitError):
        realizable_size_vectors(_mu(Family.PATH, 7), 3)


def test_realizable_size_vectors():
    vectors = realizable_size_vectors(_mu(Family.PATH, 2), 3)
    assert vectors == {(2, 2, 1)}


@pytest.mark.parametrize("sense", list(Sense), ids=[s.value for s in Sense])
@pytest.mark.parametrize("instance", SMALL, ids=lambda s: s.label)
def test_solver_agrees_with_oracle(instance, sense):
    g = make_family(instance)
    k = chromatic_number(g)
    solved = extremal_colouring(g, k, sense)
    oracle = oracle_extremal(g, k, sense)
    assert solved.omega == oracle.omega
    assert solved.size_vector == oracle.size_vector
    for result in (solved, oracle):
        result.witness.validate(g)
        assert result.witness.omega == result.omega
        assert result.witness.size_vector == result.size_vector
        assert all(is_independent_set(g, c) for c in result.witness.classes())


@pytest.mark.parametrize("instance", SMALL, ids=lambda s: s.label)
def test_min_sum_at_most_max_sum(instance):
    g = make_family(instance)
    k = chromatic_number(g)
    low = oracle_extremal(g, k, Sense.MIN)
    high = oracle_extremal(g, k, Sense.MAX)
    assert low.omega <= high.omega
    constant = all(len(set(v)) == 1 for v in low.optimal_size_vectors or ())
    assert (low.omega == high.omega) == constant


def _second_moment(sizes):
    return sum(i * i * t for i, t in enumerate(sizes, start=1))


@pytest.mark.parametrize("sense", list(Sense), ids=[s.value for s in Sense])
@pytest.mark.parametrize("instance", SMALL, ids=lambda s: s.label)
def test_tie_break_on_second_moment(instance, sense):
    g = make_family(instance)
    oracle = oracle_extremal(g, chromatic_number(g), sense)
    moments = [_second_moment(v) for v in oracle.optimal_size_vectors or ()]
    best = min(moments) if sense is Sense.MIN else max(moments)
    assert _second_moment(oracle.size_vector) == best


def test_solver_is_deterministic():
    g = _mu(Family.WHEEL, 5)
    k = chromatic_number(g)
    first = extremal_colouring(g, k, Sense.MIN)
    assert extremal_colouring(g, k, Sense.MIN) == first


def test_palette_below_chromatic_number_is_infeasible():
    with pytest.raises(InfeasibleError):
        extremal_colouring(_mu(Family.PATH, 3), 2, Sense.MIN)
    with pytest.raises(InfeasibleError):
        oracle_extremal(_mu(Family.PATH, 3), 2, Sense.MAX)


def test_palette_above_vertex_count_is_infeasible():
    with pytest.raises(InfeasibleError, match="surjectivity"):
        extremal_colouring(_mu(Family.PATH, 2), 6, Sense.MIN)


def test_larger_palette_than_chromatic_number():
    result = extremal_colouring(_mu(Family.PATH, 2), 4, Sense.MIN)
    assert sorted(result.size_vector, reverse=True) == list(result.size_vector)
    assert len(result.size_vector) == 4
    assert result.omega == oracle_extremal(_mu(Family.PATH, 2), 4, Sense.MIN).omega


def test_node_budget_without_incumbent():
    with pytest.raises(SolverLimitError):
        extremal_colouring(_mu(Family.PATH, 3), 3, Sense.MIN, node_limit=1)


def test_node_budget_with_incumbent():
    g = _mu(Family.PATH, 3)
    result = extremal_colouring(g, 3, Sense.MIN, node_limit=10)
    assert not result.proven
    assert result.bound is not None
    assert result.bound <= 11 <= result.omega
    result.witness.validate(g)


@pytest.mark.parametrize(
    "sizes, sense, expected",
    [
        ((2, 2, 1), Sense.MIN, 9),
        ((1, 2, 2), Sense.MIN, 9),
        ((3, 2, 1, 1), Sense.MAX, 21),
        ((3, 2, 1, 1), Sense.MIN, 14),
    ],
)
def test_canonical_sum(sizes, sense, expected):
    assert canonical_sum(sizes, sense) == expected


def test_colouring_validation():
    g = _mu(Family.PATH, 2)
    Colouring(3, (1, 2, 1, 2, 3)).validate(g)
    with pytest.raises(InvalidColouringError, match="adjacent"):
        Colouring(3, (1, 1, 2, 2, 3)).validate(g)
    with pytest.raises(InvalidColouringError, match="not used"):
        Colouring(4, (1, 2, 1, 2, 3)).validate(g)
    with pytest.raises(InvalidColouringError, match="covers 4"):
        Colouring(3, (1, 2, 1, 2)).validate(g)
    assert not Colouring(3, (1, 1, 2, 2, 3)).is_proper(g)
