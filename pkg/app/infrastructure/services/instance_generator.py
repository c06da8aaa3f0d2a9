from dataclasses import replace
from typing import List
import logging
import math

import numpy as np

from ...api.schemas import is_power_of_ten
from ...domain.exceptions import InstanceInputError
from ...domain.models import GeneratorConfig, Instance, TreeShape, WeightVector
from ...domain.tree import build_instance, path_aggregates

logger = logging.getLogger(__name__)

INFEASIBLE, ZERO_COST, INTERIOR = 0, 1, 2


def generate_instance(config: GeneratorConfig) -> Instance:
    """Seeded random instance; identical configs give identical instances"""
    _validate_config(config)
    rng = np.random.default_rng(config.seed)
    n = config.node_count

    parents = _draw_parents(config.shape, n, rng)
    m = n - 1
    weights = rng.integers(config.weight_range[0], config.weight_range[1], size=m, endpoint=True)
    drop = rng.integers(config.slack_range[0], config.slack_range[1], size=m, endpoint=True)
    rise = rng.integers(config.slack_range[0], config.slack_range[1], size=m, endpoint=True)
    lower = np.maximum(weights - drop, 0)
    upper = weights + rise
    costs = rng.integers(config.cost_range[0], config.cost_range[1], size=m, endpoint=True)

    records = [
        (f"v{parents[j]}", f"v{j + 2}", int(weights[j]), int(lower[j]), int(upper[j]), int(costs[j]))
        for j in range(m)
    ]
    skeleton = build_instance(records, "v1", scale=config.scale)

    leaves = skeleton.tree.leaves
    t0 = leaves[int(rng.integers(len(leaves)))]
    target = _draw_target(skeleton, rng, config.regime_weights)

    logger.debug(
        f"Generated {config.shape.value} instance n={n} seed={config.seed}: t0={t0}, D={target}"
    )
    return replace(skeleton, t0=t0, target=target)


def _validate_config(config: GeneratorConfig) -> None:
    if config.node_count < 2:
        raise InstanceInputError(f"node_count must be at least 2, got {config.node_count}")
    for name in ("weight_range", "slack_range", "cost_range"):
        low, high = getattr(config, name)
        if low > high or low < 0:
            raise InstanceInputError(f"{name} must be an ordered nonnegative range, got ({low}, {high})")
    if config.cost_range[0] < 1:
        raise InstanceInputError("cost_range must start at 1 or more")
    if not is_power_of_ten(config.scale):
        raise InstanceInputError(f"scale must be a positive power of ten, got {config.scale}")
    weights = config.regime_weights
    if len(weights) != 3 or min(weights) < 0 or sum(weights) <= 0:
        raise InstanceInputError(f"regime_weights must be three nonnegative numbers, got {weights}")


def _draw_parents(shape: TreeShape, n: int, rng: np.random.Generator) -> List[int]:
    """Parent label number of v2..vn"""
    if shape is TreeShape.PATH:
        return list(range(1, n))
    if shape is TreeShape.STAR:
        return [1] * (n - 1)
    if shape is TreeShape.CATERPILLAR:
        spine = max(1, math.ceil(n / 2))
        legs = rng.integers(1, spine, size=n - spine, endpoint=True)
        return list(range(1, spine)) + [int(p) for p in legs]
    # random attachment: v_i hangs below a uniform node among v_1 .. v_{i-1}
    choices = np.floor(rng.random(n - 1) * np.arange(1, n)).astype(np.int64) + 1
    return [int(p) for p in choices]


def _draw_target(instance: Instance, rng: np.random.Generator, regime_weights) -> int:
    """D in the infeasible, zero-cost or interior regime"""
    floor = path_aggregates(instance, instance.weights).shortest()[1]
    ceiling = path_aggregates(instance, instance.vector(WeightVector.U)).shortest()[1]
    p = np.asarray(regime_weights, dtype=float)
    regime = int(rng.choice(3, p=p / p.sum()))
    if regime == INFEASIBLE:
        return ceiling + 1 + int(rng.integers(0, 3, endpoint=True))
    if regime == ZERO_COST:
        return floor
    return int(rng.integers(floor, ceiling, endpoint=True))
