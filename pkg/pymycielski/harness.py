"""Adjudication of published closed forms against exact computation.

Each record compares three values for one instance, mode and quantity: the
published value, the value obtained by applying the definitions to the
published colouring, and the true extremal value found by the solver.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from multiprocessing import Pool
from typing import Any, Callable, Iterable, Sequence, TypeVar

from pymycielski import consts
from pymycielski.closed_forms import (
    RANGE_CLAIMS,
    SPOT_CLAIMS,
    TREND_CLAIMS,
    RangeClaim,
    SpotClaim,
    TrendClaim,
    limit_values,
    published_distribution,
    published_mean,
    published_quantity,
    published_variance,
)
from pymycielski.colouring import (
    ExtremalResult,
    chromatic_number,
    extremal_colouring,
    oracle_extremal,
    realizable_size_vectors,
)
from pymycielski.graph import FamilyInstance, make_family
from pymycielski.records import JsonRecord
from pymycielski.stats import distribution, mean, summarize, variance
from pymycielski.types import (
    ClaimStatus,
    ClassSizeVector,
    Family,
    Mode,
    Quantity,
    Status,
)
from pymycielski.utils import (
    InvalidDistributionError,
    SolverLimitError,
    format_rational,
    rational_to_dict,
    remove_null_items,
    render_decimal,
    truncate_decimal,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

Value = Fraction | ClassSizeVector

_QUANTITIES = (Quantity.MEAN, Quantity.VARIANCE, Quantity.OMEGA, Quantity.DISTRIBUTION)
_FAMILY_ORDER = {f: i for i, f in enumerate(Family)}
_MODE_ORDER = {m: i for i, m in enumerate(Mode)}
_QUANTITY_ORDER = {q: i for i, q in enumerate(_QUANTITIES)}


@dataclass(frozen=True)
class HarnessConfig:
    """Limits deciding which ground truth a record gets.

    Up to ``oracle_vertex_limit`` vertices the exhaustive oracle is used, up to
    ``solver_vertex_limit`` the branch and bound with a budget of ``node_limit``
    nodes, beyond that no solver value is computed. Sweeps only fill their solver
    columns up to ``sweep_solver_vertex_limit`` vertices.
    """

    oracle_vertex_limit: int = consts.ORACLE_VERTEX_LIMIT
    solver_vertex_limit: int = consts.SOLVER_VERTEX_SOFT_LIMIT
    node_limit: int | None = consts.NODE_LIMIT
    sweep_solver_vertex_limit: int = consts.ORACLE_VERTEX_LIMIT
    jobs: int = 1


def _parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int) -> list[R]:
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with Pool(min(jobs, len(items))) as pool:
        return pool.map(fn, items)


def instances_for(
    family: Family, n_range: Iterable[int], mycielskian: bool = True
) -> list[FamilyInstance]:
    """Family instances for every ``n`` in a range.

    For ``complete_bipartite`` each ``n`` expands to every split ``a + b = n`` with
    ``a >= b >= 1``.
    """
    instances = []
    for n in n_range:
        if family is Family.COMPLETE_BIPARTITE:
            instances.extend(
                FamilyInstance.complete_bipartite(n - b, b, mycielskian)
                for b in range(1, n // 2 + 1)
            )
        else:
            instances.append(FamilyInstance(family, n, mycielskian=mycielskian))
    return instances


def default_instances() -> list[FamilyInstance]:
    instances = (
        instances_for(Family.PATH, range(2, 7))
        + instances_for(Family.CYCLE, range(3, 6))
        + instances_for(Family.COMPLETE, range(2, 5))
        + [
            FamilyInstance.complete_bipartite(a, b, mycielskian=True)
            for a, b in ((2, 1), (2, 2), (3, 1))
        ]
        + instances_for(Family.WHEEL, range(3, 6))
        + instances_for(Family.FAN, range(2, 6))
    )
    return instances


def _encode_value(value: Value | None) -> Any:
    if value is None:
        return None
    if isinstance(value, Fraction):
        return rational_to_dict(value)
    return list(value)


def _decode_value(value: Any, quantity: Quantity) -> Value | None:
    if value is None:
        return None
    if quantity is Quantity.DISTRIBUTION:
        return tuple(JsonRecord._make_list_of_ints_prop(value))
    return JsonRecord._make_rational_prop(value)


def _render_value(value: Value | None) -> str:
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return format_rational(value)
    return " ".join(str(t) for t in value)


@dataclass(frozen=True)
class Provenance(JsonRecord):
    """Where each of the three values of a record comes from."""

    published: str
    definition: str
    solver: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "published": self.published,
            "definition": self.definition,
            "solver": self.solver,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Provenance:
        return cls(
            published=cls._make_str_prop(data["published"]) or "",
            definition=cls._make_str_prop(data["definition"]) or "",
            solver=cls._make_str_prop(data.get("solver")),
        )


@dataclass(frozen=True)
class DiscrepancyRecord(JsonRecord):
    """One published value adjudicated against the definitions and the solver.

    ``solver_value`` is None when the instance is beyond solver reach. When the
    value comes from a budget-limited search, ``solver_exact`` is false and
    ``solver_bound`` holds the proven bound on the optimal colouring sum.
    The published value is serialised under the key ``paper_value``.
    """

    family: FamilyInstance
    mode: Mode
    quantity: Quantity
    published_value: Value
    definition_value: Value | None
    solver_value: Value | None
    status: Status
    solver_source: str | None = None
    solver_exact: bool = True
    solver_bound: int | None = None
    notes: tuple[str, ...] = ()
    provenance: Provenance | None = None

    @property
    def sort_key(self) -> tuple:
        return (
            _FAMILY_ORDER[self.family.family],
            self.family.n,
            self.family.a or 0,
            self.family.b or 0,
            _MODE_ORDER[self.mode],
            _QUANTITY_ORDER[self.quantity],
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family.family.value,
            "parameters": remove_null_items(self.family.parameters()),
            "mode": self.mode.value,
            "quantity": self.quantity.value,
            "paper_value": _encode_value(self.published_value),
            "definition_value": _encode_value(self.definition_value),
            "solver_value": _encode_value(self.solver_value),
            "solver_source": self.solver_source,
            "solver_exact": self.solver_exact,
            "solver_bound": self.solver_bound,
            "status": self.status.value,
            "notes": list(self.notes),
            "provenance": self.provenance.to_dict() if self.provenance else None,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> DiscrepancyRecord:
        family = cls._make_enum_prop(data["family"], Family)
        parameters = data["parameters"]
        if not isinstance(parameters, dict):
            raise TypeError(f"Expected parameters object, received {parameters!r}.")
        instance = FamilyInstance(
            family,
            cls._make_int_prop(parameters["n"]) or 0,
            cls._make_int_prop(parameters.get("a")),
            cls._make_int_prop(parameters.get("b")),
            mycielskian=True,
        )
        quantity = cls._make_enum_prop(data["quantity"], Quantity)
        published = _decode_value(data["paper_value"], quantity)
        if published is None:
            raise ValueError("paper_value must not be null")
        provenance = data.get("provenance")
        return cls(
            family=instance,
            mode=cls._make_enum_prop(data["mode"], Mode),
            quantity=quantity,
            published_value=published,
            definition_value=_decode_value(data["definition_value"], quantity),
            solver_value=_decode_value(data["solver_value"], quantity),
            status=cls._make_enum_prop(data["status"], Status),
            solver_source=cls._make_str_prop(data.get("solver_source")),
            solver_exact=bool(cls._make_bool_prop(data.get("solver_exact", True))),
            solver_bound=cls._make_int_prop(data.get("solver_bound")),
            notes=tuple(cls._make_list_of_strs_prop(data.get("notes", []))),
            provenance=Provenance.from_dict(provenance) if provenance else None,
        )

    def csv_row(self) -> list[str]:
        return [
            self.family.family.value,
            str(self.family.n),
            "" if self.family.a is None else str(self.family.a),
            "" if self.family.b is None else str(self.family.b),
            self.mode.value,
            self.quantity.value,
            _render_value(self.published_value),
            _render_value(self.definition_value),
            _render_value(self.solver_value),
            self.solver_source or "",
            str(self.solver_exact).lower(),
            "" if self.solver_bound is None else str(self.solver_bound),
            self.status.value,
            "; ".join(self.notes),
        ]


RECORD_CSV_HEADER = [
    "family",
    "n",
    "a",
    "b",
    "mode",
    "quantity",
    "paper_value",
    "definition_value",
    "solver_value",
    "solver_source",
    "solver_exact",
    "solver_bound",
    "status",
    "notes",
]


def classify(
    published: Value,
    definition: Value | None,
    solver: Value | None,
    beaten: bool = False,
) -> Status:
    """Status of a record from its three values.

    Args:
        published (Value): Published value.
        definition (Value | None): Definitions applied to the published colouring;
            None when that colouring is malformed.
        solver (Value | None): Proven extremal value, or None when unavailable.
        beaten (bool, optional): A budget-limited search found a colouring sum
            strictly better than the published colouring's. Defaults to False.
    """
    inconsistent = definition is None or published != definition
    if solver is not None:
        not_extremal = definition is None or definition != solver
    elif beaten:
        not_extremal = True
    else:
        if inconsistent:
            return Status.INTERNAL_INCONSISTENCY
        return Status.UNDECIDED_EXTREMALITY
    if inconsistent and not_extremal:
        return Status.BOTH
    if inconsistent:
        return Status.INTERNAL_INCONSISTENCY
    if not_extremal:
        return Status.NOT_EXTREMAL
    return Status.MATCH


@dataclass(frozen=True)
class _GroundTruth:
    result: ExtremalResult
    source: str
    run: str

    @property
    def exact(self) -> bool:
        return self.result.proven


def _ground_truth(
    instance: FamilyInstance, mode: Mode, k: int, config: HarnessConfig
) -> _GroundTruth | None:
    g = make_family(instance)
    if g.n <= config.oracle_vertex_limit:
        result = oracle_extremal(g, k, mode.sense, config.oracle_vertex_limit)
        return _GroundTruth(result, "oracle", f"oracle, k={k}, {g.n} vertices")
    if g.n <= config.solver_vertex_limit:
        try:
            result = extremal_colouring(g, k, mode.sense, config.node_limit)
        except SolverLimitError as e:
            logger.warning(f"No ground truth for {instance.label}: {e}")
            return None
        source = "branch_and_bound" if result.proven else "budgeted_branch_and_bound"
        return _GroundTruth(
            result,
            source,
            f"branch and bound, k={k}, {g.n} vertices, {result.nodes} nodes",
        )
    return None


def _beats(result: ExtremalResult, omega: int, mode: Mode) -> bool:
    if mode is Mode.CHI:
        return result.omega < omega
    return result.omega > omega


def _definition_values(
    sizes: ClassSizeVector, vertices: int
) -> dict[Quantity, Value] | None:
    try:
        d = distribution(sizes, vertices)
    except InvalidDistributionError:
        return None
    return {
        Quantity.MEAN: mean(d),
        Quantity.VARIANCE: variance(d),
        Quantity.OMEGA: Fraction(d.omega),
        Quantity.DISTRIBUTION: d.sizes,
    }


def _solver_values(result: ExtremalResult, vertices: int) -> dict[Quantity, Value]:
    d = distribution(result.size_vector, vertices)
    return {
        Quantity.MEAN: Fraction(result.omega, vertices),
        Quantity.VARIANCE: variance(d),
        Quantity.OMEGA: Fraction(result.omega),
        Quantity.DISTRIBUTION: result.size_vector,
    }


def _mode_records(
    instance: FamilyInstance,
    mode: Mode,
    k: int | None,
    config: HarnessConfig,
) -> list[DiscrepancyRecord]:
    vertices = instance.order
    sizes = published_distribution(instance, mode)
    definition = _definition_values(sizes, vertices)
    truth = _ground_truth(instance, mode, k, config) if k is not None else None

    shared_notes: list[str] = []
    if definition is None:
        shared_notes.append(
            f"published class sizes {sizes} are not a distribution on "
            f"{vertices} vertices"
        )
    if k is not None and len(sizes) != k:
        shared_notes.append(
            f"published colouring uses {len(sizes)} colours, chromatic number is {k}"
        )
    elif (
        k is not None
        and definition is not None
        and vertices <= config.oracle_vertex_limit
    ):
        realizable = realizable_size_vectors(
            make_family(instance), k, config.oracle_vertex_limit
        )
        if tuple(sorted(sizes, reverse=True)) not in realizable:
            shared_notes.append(
                f"no proper {k}-colouring has class sizes {tuple(sorted(sizes))}"
            )
    if truth is None and k is None:
        shared_notes.append(
            f"beyond solver reach ({vertices} vertices > "
            f"{config.solver_vertex_limit})"
        )
    elif truth is None:
        shared_notes.append("node budget exhausted before any colouring was found")

    solver: dict[Quantity, Value] | None = None
    beaten = False
    if truth is not None:
        result = truth.result
        if truth.exact:
            solver = _solver_values(result, vertices)
        elif definition is not None:
            published_omega = definition[Quantity.OMEGA]
            assert isinstance(published_omega, Fraction)
            beaten = _beats(result, int(published_omega), mode)
        if result.multiplicity is not None and result.multiplicity > 1:
            shared_notes.append(
                f"{result.multiplicity} optimal size vectors: "
                f"{', '.join(str(v) for v in result.optimal_size_vectors or ())}"
            )

    records = []
    for quantity in _QUANTITIES:
        published = published_quantity(instance, mode, quantity)
        notes = list(shared_notes)
        if published.note:
            notes.insert(0, published.note)
        if published.alternative is not None:
            notes.append(
                f"alternative printed value {_render_value(published.alternative)}"
            )
        definition_value = definition[quantity] if definition else None
        solver_value = solver[quantity] if solver else None
        if (
            quantity in (Quantity.VARIANCE, Quantity.DISTRIBUTION)
            and truth is not None
            and truth.result.optimal_size_vectors
            and definition is not None
            and solver_value != definition_value
        ):
            canonical = tuple(sorted(sizes, reverse=mode is Mode.CHI))
            if canonical in truth.result.optimal_size_vectors:
                notes.append(
                    "published size vector attains the optimal colouring sum but "
                    "loses the second-moment tie-break"
                )
        if quantity is Quantity.VARIANCE and mode is Mode.CHI_PLUS:
            reflected = published_variance(instance, Mode.CHI)
            if reflected != published.value:
                notes.append(
                    f"published chi variance of the same instance is "
                    f"{format_rational(reflected)}; reversing a colouring keeps "
                    f"the variance"
                )
        if truth is not None and not truth.exact:
            notes.append(
                f"search stopped at the node budget; best colouring sum "
                f"{truth.result.omega}"
            )
        status = classify(published.value, definition_value, solver_value, beaten)
        records.append(
            DiscrepancyRecord(
                family=instance.with_mycielskian(),
                mode=mode,
                quantity=quantity,
                published_value=published.value,
                definition_value=definition_value,
                solver_value=solver_value,
                status=status,
                solver_source=truth.source if truth else None,
                solver_exact=truth.exact if truth else False,
                solver_bound=truth.result.bound if truth else None,
                notes=tuple(notes),
                provenance=Provenance(
                    published=published.source,
                    definition=(
                        f"colouring {quantity.value} of the published class sizes "
                        f"{sizes} on {vertices} vertices"
                    ),
                    solver=truth.run if truth else None,
                ),
            )
        )
    return records


def verify_instance(
    family: FamilyInstance, config: HarnessConfig = HarnessConfig()
) -> list[DiscrepancyRecord]:
    """Adjudicate every published quantity of one Mycielskian instance.

    Args:
        family (FamilyInstance): Base family instance; the Mycielskian is implied.
        config (HarnessConfig, optional): Solver limits. Defaults to HarnessConfig().

    Raises:
        UnsupportedFamilyError: If no closed form covers the instance.

    Returns:
        list[DiscrepancyRecord]: One record per mode and quantity, in a fixed order.
    """
    instance = family.with_mycielskian()
    g = make_family(instance)
    k = chromatic_number(g) if g.n <= config.solver_vertex_limit else None
    records = [
        record
        for mode in Mode
        for record in _mode_records(instance, mode, k, config)
    ]
    mismatches = sum(r.status is not Status.MATCH for r in records)
    logger.info(
        f"Verified {instance.label}: {len(records) - mismatches} MATCH, "
        f"{mismatches} discrepancies"
    )
    return records


def verify_instances(
    instances: Iterable[FamilyInstance], config: HarnessConfig = HarnessConfig()
) -> list[DiscrepancyRecord]:
    """Verify several instances, possibly in parallel; records come back sorted."""
    unique = {i.with_mycielskian() for i in instances}
    work = sorted(unique, key=lambda i: i.sort_key)
    per_instance = _parallel_map(
        partial(verify_instance, config=config), work, config.jobs
    )
    records = [r for batch in per_instance for r in batch]
    return sorted(records, key=lambda r: r.sort_key)


def records_to_json(records: Iterable[DiscrepancyRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2) + "\n"


def records_from_json(text: str) -> list[DiscrepancyRecord]:
    data = json.loads(text)
    if not isinstance(data, list):
        raise TypeError(f"Expected a JSON array of records, received {type(data)}.")
    return [DiscrepancyRecord.from_dict(item) for item in data]


def _write_csv(header: list[str], rows: Iterable[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def records_to_csv(records: Iterable[DiscrepancyRecord]) -> str:
    return _write_csv(RECORD_CSV_HEADER, (r.csv_row() for r in records))


@dataclass(frozen=True)
class SweepRow:
    family: FamilyInstance
    published_mean: Fraction
    published_variance: Fraction
    solver_mean: Fraction | None = None
    solver_variance: Fraction | None = None
    limit: Fraction | None = None

    @property
    def signed_gap(self) -> Fraction | None:
        if self.limit is None:
            return None
        return self.published_mean - self.limit

    @property
    def gap(self) -> Fraction | None:
        signed = self.signed_gap
        return None if signed is None else abs(signed)

    def csv_row(self) -> list[str]:
        cells = [
            str(self.family.n),
            "" if self.family.a is None else str(self.family.a),
            "" if self.family.b is None else str(self.family.b),
        ]
        for value in (
            self.published_mean,
            self.published_variance,
            self.solver_mean,
            self.solver_variance,
            self.gap,
        ):
            if value is None:
                cells += ["", ""]
            else:
                cells += [
                    format_rational(value),
                    render_decimal(value, consts.DECIMAL_DIGITS),
                ]
        signed = self.signed_gap
        cells.append("" if signed is None else format_rational(signed))
        return cells


SWEEP_CSV_HEADER = [
    "n",
    "a",
    "b",
    "published_mean",
    "published_mean_decimal",
    "published_variance",
    "published_variance_decimal",
    "solver_mean",
    "solver_mean_decimal",
    "solver_variance",
    "solver_variance_decimal",
    "gap_to_limit",
    "gap_to_limit_decimal",
    "signed_gap",
]


def _mean_limit(instance: FamilyInstance, mode: Mode) -> Fraction | None:
    if instance.family not in (Family.PATH, Family.CYCLE):
        return None
    limit, _ = limit_values(instance.family)
    if mode is Mode.CHI:
        return limit
    k = len(published_distribution(instance, Mode.CHI))
    return (k + 1) - limit


def _sweep_row(instance: FamilyInstance, mode: Mode, config: HarnessConfig) -> SweepRow:
    solver_mean = solver_variance = None
    if instance.order <= config.sweep_solver_vertex_limit:
        summary = summarize(make_family(instance), mode, with_multiplicity=False)
        solver_mean, solver_variance = summary.mean, summary.variance
    return SweepRow(
        family=instance,
        published_mean=published_mean(instance, mode),
        published_variance=published_variance(instance, mode),
        solver_mean=solver_mean,
        solver_variance=solver_variance,
        limit=_mean_limit(instance, mode),
    )


def sweep(
    family: Family,
    n_range: Iterable[int],
    mode: Mode = Mode.CHI,
    config: HarnessConfig = HarnessConfig(),
) -> list[SweepRow]:
    """Published mean and variance over a range of sizes, with solver values where
    the instance is small enough and the gap to the stated limit where one exists.

    Raises:
        UnsupportedFamilyError: If some ``n`` has no published closed form.
    """
    instances = instances_for(family, n_range)
    row = partial(_sweep_row, mode=mode, config=config)
    rows = _parallel_map(row, instances, config.jobs)
    logger.info(f"Swept {len(rows)} {family.value} instances in {mode.value} mode")
    return rows


def sweep_to_csv(rows: Iterable[SweepRow]) -> str:
    return _write_csv(SWEEP_CSV_HEADER, (row.csv_row() for row in rows))


@dataclass(frozen=True)
class SpotClaimCheck:
    claim: SpotClaim
    value: Fraction
    rounded: str
    truncated: str
    status: ClaimStatus

    def describe(self) -> str:
        c = self.claim
        return (
            f"{c.family.label} {c.mode.value} {c.quantity.value}: printed "
            f"{c.printed}, formula {format_rational(self.value)} "
            f"(rounded {self.rounded}, truncated {self.truncated}) {self.status.value}"
        )


def check_spot_claims(
    claims: Iterable[SpotClaim] = SPOT_CLAIMS,
) -> list[SpotClaimCheck]:
    """Compare quoted decimals with the published formulas at the same instance.

    A claim is ROUNDED when round-half-even to the printed number of digits gives
    the printed text, TRUNCATED when only truncation does, MISMATCH otherwise.
    """
    checks = []
    for claim in claims:
        value = published_quantity(claim.family, claim.mode, claim.quantity).value
        assert isinstance(value, Fraction)
        rounded = render_decimal(value, claim.digits)
        truncated = truncate_decimal(value, claim.digits)
        if rounded == claim.printed:
            status = ClaimStatus.ROUNDED
        elif truncated == claim.printed:
            status = ClaimStatus.TRUNCATED
        else:
            status = ClaimStatus.MISMATCH
        checks.append(SpotClaimCheck(claim, value, rounded, truncated, status))
    return checks


@dataclass(frozen=True)
class RangeClaimCheck:
    """Outcome of one stated range.

    ``unattained`` names the inclusive bounds ("lower", "upper") that no checked
    value reaches at the printed precision.
    """

    claim: RangeClaim
    checked: tuple[int, ...]
    violations: tuple[int, ...]
    least: Fraction | None = None
    greatest: Fraction | None = None
    unattained: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations

    def describe(self) -> str:
        text = self.claim.text
        if self.least is not None and self.greatest is not None:
            text += (
                f" (values {render_decimal(self.least, 6)}.."
                f"{render_decimal(self.greatest, 6)})"
            )
        if self.unattained:
            text += f" {' and '.join(self.unattained)} bound never reached"
        if self.holds:
            return f"{text}: holds for n in {_span(self.checked)}"
        return f"{text}: violated by the published formula at n = " + _list(
            self.violations
        )


def _span(ns: Sequence[int]) -> str:
    return f"{ns[0]}..{ns[-1]}" if ns else "(none)"


def _list(ns: Sequence[int]) -> str:
    shown = ", ".join(str(n) for n in ns[:10])
    return shown if len(ns) <= 10 else f"{shown}, ..."


def _claim_values(
    family: Family, mode: Mode, quantity: Quantity, ns: Iterable[int]
) -> list[tuple[int, Fraction]]:
    values = []
    for n in ns:
        if family is Family.CYCLE and n < 3:
            continue
        instance = FamilyInstance(family, n, mycielskian=True)
        if quantity is Quantity.MEAN:
            values.append((n, published_mean(instance, mode)))
        else:
            values.append((n, published_variance(instance, mode)))
    return values


def _reached(bound: Fraction, value: Fraction) -> bool:
    printed = str(float(bound))
    digits = len(printed.partition(".")[2])
    return printed in (
        render_decimal(value, digits),
        truncate_decimal(value, digits),
    )


def check_range_claims(
    n_range: Iterable[int] = range(2, 51),
    claims: Iterable[RangeClaim] = RANGE_CLAIMS,
) -> list[RangeClaimCheck]:
    """Evaluate stated ranges against the published formulas for every ``n``.

    Besides the ``n`` outside the range, the check reports the inclusive bounds
    that the published values never reach.
    """
    ns = list(n_range)
    checks = []
    for claim in claims:
        values = _claim_values(
            claim.family, claim.mode, claim.quantity, filter(claim.covers, ns)
        )
        violations = tuple(n for n, v in values if not claim.contains(v))
        if not values:
            checks.append(RangeClaimCheck(claim, (), violations))
            continue
        least = min(v for _, v in values)
        greatest = max(v for _, v in values)
        unattained = []
        if claim.lower_inclusive and not _reached(claim.lower, least):
            unattained.append("lower")
        if claim.upper_inclusive and not _reached(claim.upper, greatest):
            unattained.append("upper")
        checks.append(
            RangeClaimCheck(
                claim,
                tuple(n for n, _ in values),
                violations,
                least,
                greatest,
                tuple(unattained),
            )
        )
    return checks


@dataclass(frozen=True)
class TrendClaimCheck:
    claim: TrendClaim
    checked: tuple[int, ...]
    violations: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return not self.violations

    def describe(self) -> str:
        if self.holds:
            return f"{self.claim.text}: holds for n in {_span(self.checked)}"
        return (
            f"{self.claim.text}: violated by the published formula at n = "
            f"{_list(self.violations)}"
        )


def check_trend_claims(
    n_range: Iterable[int] = range(2, 51),
    claims: Iterable[TrendClaim] = TREND_CLAIMS,
) -> list[TrendClaimCheck]:
    """Check stated monotone approaches to a limit.

    ``n`` violates the claim when its value is not strictly on the stated side
    of the limit, or does not move strictly towards it from the previous ``n``
    of the same parity.
    """
    ns = list(n_range)
    checks = []
    for claim in claims:
        values = _claim_values(
            claim.family, claim.mode, claim.quantity, filter(claim.covers, ns)
        )
        violations = []
        previous: Fraction | None = None
        for n, v in values:
            if claim.increasing:
                ok = v < claim.limit and (previous is None or v > previous)
            else:
                ok = v > claim.limit and (previous is None or v < previous)
            if not ok:
                violations.append(n)
            previous = v
        checks.append(
            TrendClaimCheck(claim, tuple(n for n, _ in values), tuple(violations))
        )
    return checks


@dataclass
class ErrataReport:
    """Every non-MATCH record over a set of instances, plus the claim checks."""

    records: list[DiscrepancyRecord]
    instances: list[FamilyInstance]
    spot_checks: list[SpotClaimCheck] = field(default_factory=list)
    range_checks: list[RangeClaimCheck] = field(default_factory=list)
    trend_checks: list[TrendClaimCheck] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def is_empty(self) -> bool:
        return not self.records

    def to_json(self) -> str:
        return records_to_json(self.records)

    def to_csv(self) -> str:
        return records_to_csv(self.records)

    def summary_text(self) -> str:
        counts: dict[Status, int] = {}
        for r in self.records:
            counts[r.status] = counts.get(r.status, 0) + 1
        lines = [
            f"{len(self.records)} discrepancies across {len(self.instances)} "
            f"instances"
        ]
        lines += [f"  {s.value}: {counts[s]}" for s in Status if s in counts]
        for r in self.records:
            lines.append(
                f"{r.family.label} {r.mode.value} {r.quantity.value}: "
                f"{r.status.value} published {_render_value(r.published_value)}, "
                f"definition {_render_value(r.definition_value) or '-'}, "
                f"solver {_render_value(r.solver_value) or '-'}"
            )
        if self.spot_checks:
            lines.append("Quoted values:")
            lines += [f"  {c.describe()}" for c in self.spot_checks]
        if self.range_checks:
            lines.append("Stated ranges:")
            lines += [f"  {c.describe()}" for c in self.range_checks]
        if self.trend_checks:
            lines.append("Stated trends:")
            lines += [f"  {c.describe()}" for c in self.trend_checks]
        return "\n".join(lines) + "\n"


def errata_report(
    instances: Iterable[FamilyInstance] | None = None,
    config: HarnessConfig = HarnessConfig(),
    with_claims: bool = True,
) -> ErrataReport:
    """Collect the discrepancies of a set of instances into one report.

    Args:
        instances (Iterable[FamilyInstance] | None, optional): Instances to verify.
            Defaults to :func:`default_instances`.
        config (HarnessConfig, optional): Solver limits. Defaults to HarnessConfig().
        with_claims (bool, optional): Also check the quoted decimals and the stated
            ranges and trends. Defaults to True.

    Returns:
        ErrataReport: Records sorted by family, n, mode and quantity.
    """
    work = default_instances() if instances is None else list(instances)
    if not work:
        return ErrataReport(records=[], instances=[])
    records = [
        r for r in verify_instances(work, config) if r.status is not Status.MATCH
    ]
    logger.info(f"Errata report: {len(records)} records over {len(work)} instances")
    return ErrataReport(
        records=records,
        instances=sorted(work, key=lambda i: i.sort_key),
        spot_checks=check_spot_claims() if with_claims else [],
        range_checks=check_range_claims() if with_claims else [],
        trend_checks=check_trend_claims() if with_claims else [],
    )

