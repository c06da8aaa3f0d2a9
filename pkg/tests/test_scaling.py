import pytest

from app.domain.models import Algorithm
from app.use_cases.run_benchmark import BenchmarkUseCase


@pytest.mark.slow
def test_solvers_scale_close_to_n_log_n():
    records = BenchmarkUseCase().run(sizes=[1000, 3000, 5000], trials=3, seed=2024)
    by_key = {(r.n, r.algorithm): r for r in records}
    for algorithm in Algorithm:
        small = by_key[(1000, algorithm)]
        large = by_key[(5000, algorithm)]
        assert large.t_avg / small.t_avg <= 10
        for n in (1000, 3000, 5000):
            record = by_key[(n, algorithm)]
            assert record.t_min <= record.t_avg <= record.t_max
            assert record.t_max < 1.0
