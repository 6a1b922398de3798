from enum import Enum
from typing import Literal

Edge = tuple[int, int]
ClassSizeVector = tuple[int, ...]
Parity = Literal["odd", "even", "any"]


class Family(Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    WHEEL = "wheel"
    FAN = "fan"

    @classmethod
    def parse(cls, name: str) -> "Family":
        """Look up a family by name, accepting ``friendship`` for the fan graph."""
        if name == "friendship":
            return cls.FAN
        return cls(name)


class Sense(Enum):
    MIN = "min"
    MAX = "max"


class Mode(Enum):
    CHI = "chi"
    CHI_PLUS = "chi_plus"

    @property
    def sense(self) -> Sense:
        return Sense.MIN if self is Mode.CHI else Sense.MAX


class Quantity(Enum):
    MEAN = "mean"
    VARIANCE = "variance"
    OMEGA = "omega"
    DISTRIBUTION = "distribution"


class Status(Enum):
    MATCH = "MATCH"
    INTERNAL_INCONSISTENCY = "PAPER_INTERNAL_INCONSISTENCY"
    NOT_EXTREMAL = "NOT_EXTREMAL"
    BOTH = "BOTH"
    UNDECIDED_EXTREMALITY = "UNDECIDED_EXTREMALITY"


class ClaimStatus(Enum):
    ROUNDED = "ROUNDED"
    TRUNCATED = "TRUNCATED"
    MISMATCH = "MISMATCH"
