from pathlib import Path
from typing import Callable, Dict, Iterable, List
import csv
import json
import logging
import time

import numpy as np

from ..api.schemas import BenchRecordSchema
from ..domain.exceptions import InstanceInputError
from ..domain.interdiction import solve_mcspit
from ..domain.models import Algorithm, BenchRecord, GeneratorConfig, Instance
from ..domain.riovspt import solve_riovspt
from ..infrastructure.services.instance_generator import generate_instance

logger = logging.getLogger(__name__)

SOLVERS: Dict[Algorithm, Callable[[Instance], object]] = {
    Algorithm.RIOVSPT: solve_riovspt,
    Algorithm.MCSPIT: solve_mcspit,
}


class BenchmarkUseCase:
    """Use case for timing both solvers on random trees of growing size"""

    def run(self, sizes: Iterable[int], trials: int, seed: int) -> List[BenchRecord]:
        if trials < 1:
            raise InstanceInputError(f"trials must be at least 1, got {trials}")
        records = []
        for n in sizes:
            logger.info(f"Benchmarking n={n} with {trials} trials")
            instances = [
                generate_instance(GeneratorConfig(node_count=n, seed=seed + n * 1000 + t))
                for t in range(trials)
            ]
            for algorithm, solve in SOLVERS.items():
                timings = np.empty(trials)
                for t, instance in enumerate(instances):
                    start = time.perf_counter()
                    solve(instance)
                    timings[t] = time.perf_counter() - start
                records.append(BenchRecord(
                    n=n,
                    algorithm=algorithm,
                    trials=trials,
                    t_avg=float(timings.mean()),
                    t_max=float(timings.max()),
                    t_min=float(timings.min()),
                ))
                logger.debug(f"n={n} {algorithm.value}: avg {timings.mean():.6f}s")
        return records

    @staticmethod
    def format_table(records: List[BenchRecord]) -> str:
        lines = [f"{'n':>7}  {'algorithm':<9}  {'trials':>6}  {'t_avg':>10}  {'t_max':>10}  {'t_min':>10}"]
        for r in records:
            lines.append(
                f"{r.n:>7}  {r.algorithm.value:<9}  {r.trials:>6}  "
                f"{r.t_avg:>10.6f}  {r.t_max:>10.6f}  {r.t_min:>10.6f}"
            )
        return "\n".join(lines) + "\n"

    @staticmethod
    def to_json(records: List[BenchRecord]) -> str:
        rows = [BenchRecordSchema.from_record(r).model_dump() for r in records]
        return json.dumps(rows, indent=2) + "\n"

    def write_results(self, records: List[BenchRecord], out_dir: str) -> Path:
        """bench_results.json and bench_results.csv in ``out_dir``"""
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "bench_results.json").write_text(self.to_json(records), encoding="utf-8")
        rows = [BenchRecordSchema.from_record(r).model_dump() for r in records]
        with open(out / "bench_results.csv", "w", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=list(BenchRecordSchema.model_fields))
            writer.writeheader()
            writer.writerows(rows)
        logger.info(f"Wrote benchmark results to {out}")
        return out
