from abc import ABC, abstractmethod
from typing import Optional, TextIO

from .models import Instance, InterdictionReport, SolveReport


class RiovsptSolver(ABC):
    """Abstract interface for restricted inverse optimal value solvers"""

    name: str = "riovspt"

    @abstractmethod
    def solve(self, instance: Instance) -> SolveReport:
        """Minimize the bottleneck Hamming cost subject to w(P0) = D <= w(P_i)"""
        pass


class McspitSolver(ABC):
    """Abstract interface for minimum-cost shortest-path interdiction solvers"""

    name: str = "mcspit"

    @abstractmethod
    def solve(self, instance: Instance) -> InterdictionReport:
        """Minimize the bottleneck Hamming cost of upgrades making every root-leaf path >= D"""
        pass


class InstanceRepository(ABC):
    """Abstract interface for instance document storage"""

    @abstractmethod
    def load(self, source: str, scale: Optional[int] = None) -> Instance:
        """Read and validate an instance document ('-' reads stdin)"""
        pass

    @abstractmethod
    def save(self, instance: Instance, destination: TextIO) -> None:
        """Write the canonical document of an instance"""
        pass
