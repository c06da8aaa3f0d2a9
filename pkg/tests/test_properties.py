import math

from hypothesis import given, settings
from hypothesis import strategies as st

from app.domain.feasibility import (
    build_cost_ladder,
    construct_riovspt_solution,
    is_feasible_cost,
    mixed_path_sums,
    restricted_edge_set,
)
from app.domain.interdiction import shortest_root_leaf, solve_mcspit, solve_mspit
from app.domain.models import GeneratorConfig, SolveStatus, TreeShape
from app.domain.riovspt import solve_riovspt
from app.domain.tree import (
    bottleneck_cost,
    designated_path_mask,
    path_aggregates,
    path_sum,
    path_to,
    root_leaf_path,
)
from app.infrastructure.repositories.instance_repository import parse_instance, serialize_instance
from app.infrastructure.services.instance_generator import generate_instance

PROPERTY_SETTINGS = settings(max_examples=200, deadline=None)


@st.composite
def instances(draw, max_n=12):
    return generate_instance(GeneratorConfig(
        node_count=draw(st.integers(min_value=2, max_value=max_n)),
        seed=draw(st.integers(min_value=0, max_value=2**31 - 1)),
        shape=draw(st.sampled_from(list(TreeShape))),
        scale=draw(st.sampled_from([1, 10, 100])),
    ))


def _feasible_rungs(instance):
    ladder = build_cost_ladder(instance)
    return ladder, [is_feasible_cost(instance, restricted_edge_set(ladder, k)) for k in range(ladder.top + 1)]


@PROPERTY_SETTINGS
@given(instance=instances())
def test_feasibility_is_monotone_in_k(instance):
    _, feasible = _feasible_rungs(instance)
    first = next((k for k, ok in enumerate(feasible) if ok), len(feasible))
    assert all(feasible[first:])
    assert not any(feasible[:first])


@PROPERTY_SETTINGS
@given(instance=instances())
def test_constructed_solutions_are_sound(instance):
    ladder, feasible = _feasible_rungs(instance)
    for k, ok in enumerate(feasible):
        if not ok:
            continue
        restricted = restricted_edge_set(ladder, k)
        assignment = construct_riovspt_solution(instance, restricted)
        sums = path_aggregates(instance, assignment.values)
        assert sums.of(instance.t0) == instance.target
        assert min(sums.sums) >= instance.target
        for edge in assignment.changed:
            assert restricted.membership[instance.tree.edge_index[edge]]
        for value, a in zip(assignment.values, instance.attrs):
            assert a.l <= value <= a.u


@PROPERTY_SETTINGS
@given(instance=instances())
def test_full_upgrade_shortest_path_is_monotone(instance):
    ladder = build_cost_ladder(instance)
    lengths = [
        shortest_root_leaf(instance, solve_mspit(instance, ladder.cost(k))).length
        for k in range(ladder.top + 1)
    ]
    assert lengths == sorted(lengths)


@PROPERTY_SETTINGS
@given(instance=instances())
def test_interdiction_upgrades_to_upper_bound(instance):
    report = solve_mcspit(instance)
    if report.assignment is None:
        return
    for edge in report.assignment.changed:
        assert report.assignment.of(instance, edge) == instance.attr(edge).u
    for edge, a in zip(instance.tree.edges, instance.attrs):
        if a.c <= report.objective:
            assert report.assignment.of(instance, edge) == a.u


@PROPERTY_SETTINGS
@given(instance=instances())
def test_riovspt_binary_search_matches_linear_scan(instance):
    ladder, feasible = _feasible_rungs(instance)
    report = solve_riovspt(instance)
    first = next((k for k, ok in enumerate(feasible) if ok), None)
    if first is None:
        assert report.status is SolveStatus.INFEASIBLE
    else:
        assert report.rung == first
        assert report.objective == ladder.cost(first)


@PROPERTY_SETTINGS
@given(instance=instances())
def test_mcspit_binary_search_matches_linear_scan(instance):
    ladder = build_cost_ladder(instance)
    report = solve_mcspit(instance)
    first = next(
        (
            k for k in range(ladder.top + 1)
            if shortest_root_leaf(instance, solve_mspit(instance, ladder.cost(k))).length >= instance.target
        ),
        None,
    )
    if first is None:
        assert report.status is SolveStatus.INFEASIBLE
    else:
        assert report.rung == first
        assert report.objective == ladder.cost(first)


@PROPERTY_SETTINGS
@given(instance=instances())
def test_document_round_trip(instance):
    text = serialize_instance(instance)
    parsed = parse_instance(text)
    assert parsed.tree.edges == instance.tree.edges
    assert parsed.attrs == instance.attrs
    assert (parsed.t0, parsed.target, parsed.scale) == (instance.t0, instance.target, instance.scale)
    assert serialize_instance(parsed) == text


@PROPERTY_SETTINGS
@given(instance=instances(), k_fraction=st.floats(min_value=0, max_value=1))
def test_mixed_sums_match_per_path_sums(instance, k_fraction):
    ladder = build_cost_ladder(instance)
    restricted = restricted_edge_set(ladder, round(k_fraction * ladder.top))
    member = restricted.membership
    on_p0 = designated_path_mask(instance)
    index = instance.tree.edge_index

    def naive(leaf, pick):
        return sum(pick(index[edge], instance.attrs[index[edge]]) for edge in path_to(instance.tree, leaf))

    sums = mixed_path_sums(instance, restricted)
    assert sums.lo0 == naive(instance.t0, lambda i, a: a.l if member[i] else a.w)
    for leaf, hi, mix in zip(sums.leaves, sums.hi, sums.mix):
        assert hi == naive(leaf, lambda i, a: a.u if member[i] else a.w)
        assert mix == naive(leaf, lambda i, a: (a.l if on_p0[i] else a.u) if member[i] else a.w)


@PROPERTY_SETTINGS
@given(instance=instances())
def test_bounds_order_every_root_leaf_path(instance):
    for leaf in instance.tree.leaves:
        path = root_leaf_path(instance, leaf)
        assert path_sum(instance, path, "l") <= path_sum(instance, path, "w") <= path_sum(instance, path, "u")


@PROPERTY_SETTINGS
@given(instance=instances(max_n=30))
def test_root_leaf_paths_cover_every_edge(instance):
    tree = instance.tree
    covered = set()
    for leaf in tree.leaves:
        edges = root_leaf_path(instance, leaf).edges
        assert edges[-1] == leaf
        assert tree.parent[edges[0]] == tree.root
        assert all(tree.parent[below] == above for above, below in zip(edges, edges[1:]))
        assert len(set(edges)) == len(edges)
        covered.update(edges)
    assert covered == set(tree.edges)


@PROPERTY_SETTINGS
@given(instance=instances(max_n=40))
def test_riovspt_iterations_stay_logarithmic(instance):
    ladder = build_cost_ladder(instance)
    report = solve_riovspt(instance)
    assert 1 <= report.iterations <= math.ceil(math.log2(ladder.top)) + 2


@PROPERTY_SETTINGS
@given(instance=instances())
def test_solved_objective_is_the_costliest_changed_edge(instance):
    for report in (solve_riovspt(instance), solve_mcspit(instance)):
        if report.status is not SolveStatus.SOLVED:
            continue
        assert report.changed_edges
        assert max(instance.attr(change.edge).c for change in report.changed_edges) == report.objective
        assert bottleneck_cost(instance, report.assignment.values) == report.objective


@PROPERTY_SETTINGS
@given(instance=instances())
def test_mcspit_shortest_path_is_sandwiched(instance):
    ladder = build_cost_ladder(instance)
    report = solve_mcspit(instance)
    if report.status is SolveStatus.INFEASIBLE:
        return
    top_cost = ladder.cost(ladder.top)
    untouched = shortest_root_leaf(instance, instance.weights).length
    fully_upgraded = shortest_root_leaf(instance, solve_mspit(instance, top_cost)).length
    assert untouched <= report.achieved_shortest <= fully_upgraded
    assert report.achieved_shortest >= instance.target
    assert 0 <= report.objective <= top_cost


@PROPERTY_SETTINGS
@given(instance=instances())
def test_upward_riovspt_solution_is_an_interdiction_solution(instance):
    riovspt = solve_riovspt(instance)
    if riovspt.assignment is None:
        return
    values = riovspt.assignment.values
    if any(value < a.w for value, a in zip(values, instance.attrs)):
        return
    assert min(path_aggregates(instance, values).sums) >= instance.target
    mcspit = solve_mcspit(instance)
    assert mcspit.status is not SolveStatus.INFEASIBLE
    assert mcspit.objective <= riovspt.objective
