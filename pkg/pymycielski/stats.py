from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from pymycielski import consts
from pymycielski.colouring import (
    Colouring,
    chromatic_number,
    extremal_colouring,
    oracle_extremal,
)
from pymycielski.graph import FamilyInstance, Graph
from pymycielski.types import ClassSizeVector, Mode
from pymycielski.utils import (
    ColouringParseError,
    ConsistencyError,
    InvalidDistributionError,
    rational_to_dict,
)

logger = logging.getLogger(__name__)

Rational = Fraction


@dataclass(frozen=True)
class ColourDistribution:
    """Colour class sizes of a colouring and the induced pmf ``f(i) = theta_i / n``."""

    sizes: ClassSizeVector
    n: int

    def __post_init__(self) -> None:
        if not self.sizes:
            raise InvalidDistributionError("a distribution needs at least one class")
        if any(t < 1 for t in self.sizes):
            raise InvalidDistributionError(
                f"class sizes must be positive, got {self.sizes}"
            )
        if sum(self.sizes) != self.n:
            raise InvalidDistributionError(
                f"class sizes {self.sizes} sum to {sum(self.sizes)}, not {self.n}"
            )

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def f(self) -> tuple[Rational, ...]:
        return tuple(Fraction(t, self.n) for t in self.sizes)

    @property
    def omega(self) -> int:
        return sum(i * t for i, t in enumerate(self.sizes, start=1))


def distribution(sizes: ClassSizeVector, n: int) -> ColourDistribution:
    return ColourDistribution(tuple(sizes), n)


def mean(d: ColourDistribution) -> Rational:
    return sum((i * p for i, p in enumerate(d.f, start=1)), Fraction(0))


def variance_by_definition(d: ColourDistribution) -> Rational:
    mu = mean(d)
    return sum(((i - mu) ** 2 * p for i, p in enumerate(d.f, start=1)), Fraction(0))


def variance_by_moments(d: ColourDistribution) -> Rational:
    second = sum((i * i * p for i, p in enumerate(d.f, start=1)), Fraction(0))
    return second - mean(d) ** 2


def variance(d: ColourDistribution) -> Rational:
    """Colouring variance, computed both from the definition and from the first two
    moments.

    Raises:
        ConsistencyError: If the two computations disagree.
    """
    direct, moments = variance_by_definition(d), variance_by_moments(d)
    if direct != moments:
        raise ConsistencyError(
            f"variance mismatch for {d.sizes}: {direct} != {moments}"
        )
    return direct


def reverse(d: ColourDistribution) -> ColourDistribution:
    return ColourDistribution(tuple(reversed(d.sizes)), d.n)


@dataclass(frozen=True)
class ChromaticSummary:
    mode: Mode
    k: int
    omega: int
    mean: Rational
    variance: Rational
    distribution: ColourDistribution
    multiplicity: int | None = None

    @property
    def vertices(self) -> int:
        return self.distribution.n

    def to_dict(self, family: FamilyInstance | None = None) -> dict[str, Any]:
        return {
            "family": family.family.value if family else None,
            "n": family.n if family else None,
            "vertices": self.vertices,
            "k": self.k,
            "omega": self.omega,
            "mean": rational_to_dict(self.mean),
            "variance": rational_to_dict(self.variance),
            "distribution": list(self.distribution.sizes),
            "multiplicity": self.multiplicity,
            "mode": self.mode.value,
        }


def _summary(
    g: Graph, mode: Mode, k: int | None, with_multiplicity: bool
) -> ChromaticSummary:
    k = chromatic_number(g) if k is None else k
    result = extremal_colouring(g, k, mode.sense)
    multiplicity = None
    if with_multiplicity and g.n <= consts.ORACLE_VERTEX_LIMIT:
        multiplicity = oracle_extremal(g, k, mode.sense).multiplicity
    d = distribution(result.size_vector, g.n)
    summary = ChromaticSummary(
        mode=mode,
        k=k,
        omega=result.omega,
        mean=mean(d),
        variance=variance(d),
        distribution=d,
        multiplicity=multiplicity,
    )
    logger.info(
        f"{mode.value} summary on {g.n} vertices: k={k}, omega={summary.omega}, "
        f"mean={summary.mean}, variance={summary.variance}"
    )
    return summary


def chi_summary(
    g: Graph, k: int | None = None, with_multiplicity: bool = True
) -> ChromaticSummary:
    """Colouring mean and variance of a minimum-sum colouring.

    Args:
        g (Graph): Non-empty graph.
        k (int | None, optional): Palette size. Defaults to the chromatic number.
        with_multiplicity (bool, optional): Ask the oracle how many optimal size
            vectors exist, when the graph is small enough for it. Defaults to True.

    Returns:
        ChromaticSummary: Summary with ``mean == omega / n`` exactly.
    """
    return _summary(g, Mode.CHI, k, with_multiplicity)


def chi_plus_summary(
    g: Graph, k: int | None = None, with_multiplicity: bool = True
) -> ChromaticSummary:
    """Colouring mean and variance of a maximum-sum colouring; see
    :func:`chi_summary`."""
    return _summary(g, Mode.CHI_PLUS, k, with_multiplicity)


def summarize(
    g: Graph, mode: Mode, k: int | None = None, with_multiplicity: bool = True
) -> ChromaticSummary:
    return _summary(g, mode, k, with_multiplicity)


def colouring_distribution(colouring: Colouring) -> ColourDistribution:
    """Distribution of a colouring in its own index order."""
    return ColourDistribution(colouring.size_vector, colouring.n)


def summarize_colouring(g: Graph, colouring: Colouring) -> dict[str, Any]:
    """Mean and variance of a user-supplied proper colouring of ``g``."""
    colouring.validate(g)
    d = colouring_distribution(colouring)
    return {
        "vertices": g.n,
        "k": d.k,
        "omega": colouring.omega,
        "mean": rational_to_dict(mean(d)),
        "variance": rational_to_dict(variance(d)),
        "distribution": list(d.sizes),
    }


def parse_colouring(text: str, n: int) -> Colouring:
    """Parse ``vertex colour`` lines (``#`` comments allowed) covering ``1..n``."""
    assignment: dict[int, int] = {}
    last_line = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        last_line = lineno
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ColouringParseError(lineno, "expected '<vertex> <colour>'")
        try:
            v, c = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ColouringParseError(lineno, "expected two integers")
        if not 1 <= v <= n:
            raise ColouringParseError(lineno, f"vertex {v} outside 1..{n}")
        if c < 1:
            raise ColouringParseError(lineno, f"colour {c} must be >= 1")
        if v in assignment:
            raise ColouringParseError(lineno, f"vertex {v} coloured twice")
        assignment[v] = c
    missing = sorted(set(range(1, n + 1)) - set(assignment))
    if missing:
        raise ColouringParseError(
            max(last_line, 1), f"vertices {missing} have no colour"
        )
    return Colouring.from_mapping(assignment)
