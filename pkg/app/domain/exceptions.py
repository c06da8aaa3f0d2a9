"""Error hierarchy shared by the solvers, the oracles and the document layer"""


class SolverError(Exception):
    """Base class for every error raised by the library"""


class InstanceError(SolverError):
    """The problem input is not a valid instance"""


class StructureError(InstanceError):
    """Edge records do not form a single rooted tree"""


class AttributeBoundsError(InstanceError):
    """Per-edge attributes violate l <= w <= u, c > 0 or l >= 0"""

    def __init__(self, message: str, edge: str = None):
        super().__init__(message)
        self.edge = edge


class InstanceInputError(InstanceError):
    """An argument does not fit the instance (unknown leaf, missing D, rung out of range...)"""


class DocumentParseError(InstanceError):
    """An instance document could not be parsed"""


class ContractViolationError(SolverError):
    """A precondition of a solver operation does not hold"""


class OracleScaleError(SolverError):
    """The brute-force enumeration would exceed its budget"""


class OracleDisagreementError(SolverError):
    """An internal cross-check of a brute-force oracle failed"""
