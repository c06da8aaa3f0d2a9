import pytest

from app.domain.exceptions import InstanceInputError
from app.domain.interdiction import solve_mcspit
from app.domain.models import GeneratorConfig, SolveStatus, TreeShape, WeightVector
from app.domain.riovspt import solve_riovspt
from app.domain.tree import path_aggregates
from app.infrastructure.repositories.instance_repository import serialize_instance
from app.infrastructure.services.instance_generator import generate_instance


def test_same_config_same_instance():
    config = GeneratorConfig(node_count=30, seed=7)
    assert serialize_instance(generate_instance(config)) == serialize_instance(generate_instance(config))


def test_different_seeds_differ():
    first = generate_instance(GeneratorConfig(node_count=30, seed=1))
    second = generate_instance(GeneratorConfig(node_count=30, seed=2))
    assert serialize_instance(first) != serialize_instance(second)


@pytest.mark.parametrize("seed", range(25))
def test_attributes_stay_in_range(seed):
    instance = generate_instance(GeneratorConfig(node_count=12, seed=seed))
    tree = instance.tree
    assert tree.root == "v1"
    assert set(tree.edges) == {f"v{i}" for i in range(2, 13)}
    for a in instance.attrs:
        assert 0 <= a.l <= a.w <= a.u <= 10
        assert 1 <= a.c <= 10
    assert instance.t0 in tree.leaves
    assert instance.target is not None


def test_shapes():
    path = generate_instance(GeneratorConfig(node_count=9, seed=0, shape=TreeShape.PATH))
    assert path.tree.leaves == ("v9",)
    star = generate_instance(GeneratorConfig(node_count=9, seed=0, shape=TreeShape.STAR))
    assert len(star.tree.leaves) == 8
    caterpillar = generate_instance(GeneratorConfig(node_count=9, seed=0, shape=TreeShape.CATERPILLAR))
    spine = {f"v{i}" for i in range(1, 6)}
    assert all(caterpillar.tree.parent[f"v{i}"] in spine for i in range(6, 10))


@pytest.mark.parametrize("seed", range(10))
def test_infeasible_regime(seed):
    instance = generate_instance(GeneratorConfig(node_count=8, seed=seed, regime_weights=(1, 0, 0)))
    ceiling = path_aggregates(instance, instance.vector(WeightVector.U)).shortest()[1]
    assert ceiling < instance.target <= ceiling + 4
    assert solve_riovspt(instance).status is SolveStatus.INFEASIBLE
    assert solve_mcspit(instance).status is SolveStatus.INFEASIBLE


@pytest.mark.parametrize("seed", range(10))
def test_zero_cost_regime(seed):
    instance = generate_instance(GeneratorConfig(node_count=8, seed=seed, regime_weights=(0, 1, 0)))
    assert instance.target == path_aggregates(instance, instance.weights).shortest()[1]
    assert solve_mcspit(instance).status is SolveStatus.ALREADY_OPTIMAL


@pytest.mark.parametrize(
    "config",
    [
        GeneratorConfig(node_count=1, seed=0),
        GeneratorConfig(node_count=5, seed=0, weight_range=(4, 2)),
        GeneratorConfig(node_count=5, seed=0, cost_range=(0, 3)),
        GeneratorConfig(node_count=5, seed=0, regime_weights=(0, 0, 0)),
        GeneratorConfig(node_count=5, seed=0, scale=3),
        GeneratorConfig(node_count=5, seed=0, scale=0),
        GeneratorConfig(node_count=5, seed=0, scale=110),
    ],
)
def test_invalid_configs(config):
    with pytest.raises(InstanceInputError):
        generate_instance(config)


def test_power_of_ten_scales_are_accepted():
    instance = generate_instance(GeneratorConfig(node_count=6, seed=4, scale=1000))
    assert instance.scale == 1000
