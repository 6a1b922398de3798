"""Published closed forms for the colouring parameters of Mycielski graphs.

Every formula and size vector here is reproduced as printed, including the
values later shown to be wrong; corrections only ever appear in harness output.
Citations name the published result by what it covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from typing import Callable

from pymycielski.graph import FamilyInstance
from pymycielski.types import ClassSizeVector, Family, Mode, Parity, Quantity
from pymycielski.utils import UnsupportedFamilyError

Value = F | ClassSizeVector


@dataclass(frozen=True)
class PublishedQuantity:
    family: FamilyInstance
    mode: Mode
    quantity: Quantity
    value: Value
    source: str
    note: str | None = None
    alternative: Value | None = None


@dataclass(frozen=True)
class _ClosedForm:
    source: str
    mean: Callable[[FamilyInstance], F]
    variance: Callable[[FamilyInstance], F]
    sizes: Callable[[FamilyInstance], ClassSizeVector]
    mean_note: str | None = None
    mean_alternative: Callable[[FamilyInstance], F] | None = None
    variance_note: str | None = None
    sizes_note: str | None = None


def _reversed(sizes: Callable[[FamilyInstance], ClassSizeVector]):
    return lambda i: tuple(reversed(sizes(i)))


def _path_odd(i: FamilyInstance) -> ClassSizeVector:
    n = i.n
    return (n, (n + 3) // 2, (n - 1) // 2)


def _path_even(i: FamilyInstance) -> ClassSizeVector:
    n = i.n
    return (n, (n + 2) // 2, n // 2)


def _cycle_odd(i: FamilyInstance) -> ClassSizeVector:
    n = i.n
    return (n, (n + 1) // 2, (n - 1) // 2, 1)


def _bipartite(i: FamilyInstance) -> ClassSizeVector:
    assert i.a is not None and i.b is not None
    return (2 * i.a, 2 * i.b, 1)


def _complete(i: FamilyInstance) -> ClassSizeVector:
    return (i.n, 2) + (1,) * (i.n - 1)


def _hub_even(i: FamilyInstance) -> ClassSizeVector:
    n = i.n
    return (n + 1, (n + 2) // 2, n // 2, 1)


def _wheel_odd(i: FamilyInstance) -> ClassSizeVector:
    n = i.n
    return (n + 1, (n + 1) // 2, (n - 1) // 2, 1, 1)


def _fan_odd(i: FamilyInstance) -> ClassSizeVector:
    n = i.n
    return (n + 1, (n + 3) // 2, (n - 1) // 2, 1)


def _ab(i: FamilyInstance) -> tuple[int, int]:
    assert i.a is not None and i.b is not None
    return i.a, i.b


def _bipartite_variance(i: FamilyInstance) -> F:
    a, b = _ab(i)
    n = a + b
    return F(
        16 * a**2 + 4 * b**2 + 8 * a**2 * b + 8 * b**2 * a + 24 * a * b + 8 * a + 2 * b,
        (2 * n + 1) ** 3,
    )


_P_ODD = "chi-chromatic parameters of mu(P_n), n odd"
_P_EVEN = "chi-chromatic parameters of mu(P_n), n even"

_CLOSED_FORMS: dict[tuple[Family, Mode, Parity], _ClosedForm] = {
    (Family.PATH, Mode.CHI, "odd"): _ClosedForm(
        source=_P_ODD,
        mean=lambda i: F(7 * i.n + 3, 4 * i.n + 2),
        variance=lambda i: F(11 * i.n**2 - 3, (4 * i.n + 2) ** 2),
        sizes=_path_odd,
    ),
    (Family.PATH, Mode.CHI, "even"): _ClosedForm(
        source=_P_EVEN,
        mean=lambda i: F(7 * i.n + 4, 4 * i.n + 2),
        variance=lambda i: F(11 * i.n**2 + 6 * i.n, (4 * i.n + 2) ** 2),
        sizes=_path_even,
    ),
    (Family.PATH, Mode.CHI_PLUS, "odd"): _ClosedForm(
        source="chi+-chromatic parameters of mu(P_n), n odd (reversed colouring)",
        mean=lambda i: F(9 * i.n + 5, 4 * i.n + 2),
        variance=lambda i: F(
            44 * i.n**3 + 22 * i.n**2 - 12 * i.n - 6, (4 * i.n + 2) ** 3
        ),
        sizes=_reversed(_path_odd),
    ),
    (Family.PATH, Mode.CHI_PLUS, "even"): _ClosedForm(
        source="chi+-chromatic parameters of mu(P_n), n even (reversed colouring)",
        mean=lambda i: F(9 * i.n + 4, 4 * i.n + 2),
        variance=lambda i: F(11 * i.n**2 + 6 * i.n, (4 * i.n + 2) ** 2),
        sizes=_reversed(_path_even),
    ),
    (Family.CYCLE, Mode.CHI, "even"): _ClosedForm(
        source="chi-chromatic parameters of mu(C_n), n even",
        mean=lambda i: F(7 * i.n + 4, 4 * i.n + 2),
        variance=lambda i: F(11 * i.n**2 + 6 * i.n, (4 * i.n + 2) ** 2),
        sizes=_path_even,
    ),
    (Family.CYCLE, Mode.CHI, "odd"): _ClosedForm(
        source="chi-chromatic parameters of mu(C_n), n odd",
        mean=lambda i: F(7 * i.n + 7, 4 * i.n + 2),
        variance=lambda i: F(
            44 * i.n**3 + 182 * i.n**2 + 100 * i.n + 10, (4 * i.n + 2) ** 3
        ),
        sizes=_cycle_odd,
    ),
    (Family.CYCLE, Mode.CHI_PLUS, "even"): _ClosedForm(
        source="chi+-chromatic parameters of mu(C_n), n even (reversed colouring)",
        mean=lambda i: F(9 * i.n + 4, 4 * i.n + 2),
        variance=lambda i: F(11 * i.n**2 + 6 * i.n, (4 * i.n + 2) ** 2),
        sizes=_reversed(_path_even),
    ),
    (Family.CYCLE, Mode.CHI_PLUS, "odd"): _ClosedForm(
        source="chi+-chromatic parameters of mu(C_n), n odd (reversed colouring)",
        mean=lambda i: F(13 * i.n + 3, 4 * i.n + 2),
        variance=lambda i: F(
            44 * i.n**3 + 182 * i.n**2 + 70 * i.n + 10, (4 * i.n + 2) ** 3
        ),
        sizes=_reversed(_cycle_odd),
        variance_note=(
            "printed linear coefficient 70n; reversing the chi colouring keeps the "
            "variance, which implies 100n"
        ),
    ),
    (Family.COMPLETE_BIPARTITE, Mode.CHI, "any"): _ClosedForm(
        source="chi-chromatic parameters of mu(K_{a,b}), a > b",
        mean=lambda i: 1 + F(2 * (_ab(i)[1] + 1), 2 * i.n + 1),
        variance=_bipartite_variance,
        sizes=_bipartite,
    ),
    (Family.COMPLETE_BIPARTITE, Mode.CHI_PLUS, "any"): _ClosedForm(
        source="chi+-chromatic parameters of mu(K_{a,b}), a > b (reversed colouring)",
        mean=lambda i: 2 + F(2 * _ab(i)[0] - 1, 2 * _ab(i)[0] + 2 * _ab(i)[1] + 1),
        variance=_bipartite_variance,
        sizes=_reversed(_bipartite),
    ),
    (Family.COMPLETE, Mode.CHI, "any"): _ClosedForm(
        source="chi-chromatic parameters of mu(K_n)",
        mean=lambda i: F(i.n**2 + 5 * i.n + 4, 4 * i.n + 2),
        variance=lambda i: F(
            7 * i.n**4 + 30 * i.n**3 + 61 * i.n**2 + 94 * i.n + 32,
            12 * (2 * i.n + 1) ** 2,
        ),
        sizes=_complete,
        mean_note=(
            "the statement prints (n^2+5n+4)/(2n+1) and labels the mean as a "
            "variance; the derivation gives (n^2+5n+4)/(4n+2), which is used"
        ),
        mean_alternative=lambda i: F(i.n**2 + 5 * i.n + 4, 2 * i.n + 1),
    ),
    (Family.COMPLETE, Mode.CHI_PLUS, "any"): _ClosedForm(
        source="chi+-chromatic parameters of mu(K_n) (reversed colouring)",
        mean=lambda i: F(3 * i.n**2 + 5 * i.n, 4 * i.n + 2),
        variance=lambda i: F(
            5 * i.n**4 + 10 * i.n**3 - 5 * i.n**2 + 14 * i.n,
            3 * (4 * i.n + 2) ** 3,
        ),
        sizes=_reversed(_complete),
        sizes_note=(
            "the printed pmf gives mass 2/(2n+1) to each of the indices 2..n and "
            "does not sum to 1; the size vector consistent with the printed mean "
            "(singletons at 1..n-1, the pair at n, U at n+1) is used"
        ),
    ),
    (Family.WHEEL, Mode.CHI, "even"): _ClosedForm(
        source="chi-chromatic parameters of mu(W_{n+1}), n even",
        mean=lambda i: F(7 * i.n + 14, 4 * i.n + 6),
        variance=lambda i: F(11 * i.n**2 + 62 * i.n + 56, (4 * i.n + 6) ** 2),
        sizes=_hub_even,
    ),
    (Family.WHEEL, Mode.CHI, "odd"): _ClosedForm(
        source="chi-chromatic parameters of mu(W_{n+1}), n odd",
        mean=lambda i: F(7 * i.n + 19, 4 * i.n + 6),
        variance=lambda i: F(
            44 * i.n**3 + 626 * i.n**2 + 1292 * i.n + 678, (4 * i.n + 6) ** 3
        ),
        sizes=_wheel_odd,
    ),
    (Family.WHEEL, Mode.CHI_PLUS, "even"): _ClosedForm(
        source="chi+-chromatic parameters of mu(W_{n+1}), n even (reversed colouring)",
        mean=lambda i: F(13 * i.n + 16, 4 * i.n + 6),
        variance=lambda i: F(11 * i.n**2 + 62 * i.n + 56, (4 * i.n + 6) ** 2),
        sizes=_reversed(_hub_even),
    ),
    (Family.WHEEL, Mode.CHI_PLUS, "odd"): _ClosedForm(
        source="chi+-chromatic parameters of mu(W_{n+1}), n odd (reversed colouring)",
        mean=lambda i: F(17 * i.n + 17, 4 * i.n + 6),
        variance=lambda i: F(
            44 * i.n**3 + 328 * i.n**2 + 1292 * i.n + 678, (4 * i.n + 6) ** 3
        ),
        sizes=_reversed(_wheel_odd),
        variance_note=(
            "printed quadratic coefficient 328n^2; the chi variance of the same "
            "colouring prints 626n^2"
        ),
    ),
    (Family.FAN, Mode.CHI, "even"): _ClosedForm(
        source="chi-chromatic parameters of mu(F_{n+1}) (path plus hub), n even",
        mean=lambda i: F(7 * i.n + 14, 4 * i.n + 6),
        variance=lambda i: F(11 * i.n**2 + 62 * i.n + 56, (4 * i.n + 6) ** 2),
        sizes=_hub_even,
    ),
    (Family.FAN, Mode.CHI, "odd"): _ClosedForm(
        source="chi-chromatic parameters of mu(F_{n+1}) (path plus hub), n odd",
        mean=lambda i: F(7 * i.n + 13, 4 * i.n + 6),
        variance=lambda i: F(11 * i.n**2 + 56 * i.n + 53, (4 * i.n + 6) ** 2),
        sizes=_fan_odd,
    ),
    (Family.FAN, Mode.CHI_PLUS, "even"): _ClosedForm(
        source="chi+-chromatic parameters of mu(F_{n+1}), n even (reversed colouring)",
        mean=lambda i: F(13 * i.n + 16, 4 * i.n + 6),
        variance=lambda i: F(11 * i.n**2 + 62 * i.n + 56, (4 * i.n + 6) ** 2),
        sizes=_reversed(_hub_even),
    ),
    (Family.FAN, Mode.CHI_PLUS, "odd"): _ClosedForm(
        source="chi+-chromatic parameters of mu(F_{n+1}), n odd (reversed colouring)",
        mean=lambda i: F(13 * i.n + 17, 4 * i.n + 6),
        variance=lambda i: F(11 * i.n**2 + 56 * i.n + 53, (4 * i.n + 6) ** 2),
        sizes=_reversed(_fan_odd),
    ),
}

# smallest size parameter for which the published size vectors have no empty class
_MIN_N = {
    Family.PATH: 2,
    Family.CYCLE: 3,
    Family.COMPLETE: 2,
    Family.COMPLETE_BIPARTITE: 2,
    Family.WHEEL: 3,
    Family.FAN: 2,
}

_UNIFORM = (Family.COMPLETE, Family.COMPLETE_BIPARTITE)

FRIENDSHIP_NOTE = (
    "published as a 'friendship graph' but constructed as a path plus a hub "
    "(a fan), not the windmill graph"
)


def _lookup(family: FamilyInstance, mode: Mode) -> _ClosedForm:
    minimum = _MIN_N[family.family]
    if family.n < minimum:
        raise UnsupportedFamilyError(
            f"no published closed form for {family.family.value} with n={family.n} "
            f"(requires n >= {minimum})"
        )
    if family.family in _UNIFORM:
        parity: Parity = "any"
    else:
        parity = "odd" if family.n % 2 else "even"
    try:
        return _CLOSED_FORMS[(family.family, mode, parity)]
    except KeyError:
        raise UnsupportedFamilyError(
            f"no published closed form for {family.family.value}"
        )


def published_quantity(
    family: FamilyInstance, mode: Mode, quantity: Quantity
) -> PublishedQuantity:
    """Look up a published value with its citation.

    Args:
        family (FamilyInstance): Base family; the closed forms always describe its
            Mycielskian, whatever the instance's flag says.
        mode (Mode): ``Mode.CHI`` or ``Mode.CHI_PLUS``.
        quantity (Quantity): Mean, variance, distribution, or omega (the colouring
            sum implied by the printed mean).

    Raises:
        UnsupportedFamilyError: If no closed form covers the instance.

    Returns:
        PublishedQuantity: The printed value, exactly.
    """
    form = _lookup(family, mode)
    instance = family.with_mycielskian()
    note = FRIENDSHIP_NOTE if family.family is Family.FAN else None
    alternative: Value | None = None
    match quantity:
        case Quantity.MEAN:
            value: Value = form.mean(family)
            note = form.mean_note or note
            if form.mean_alternative is not None:
                alternative = form.mean_alternative(family)
        case Quantity.VARIANCE:
            value = form.variance(family)
            note = form.variance_note or note
        case Quantity.DISTRIBUTION:
            value = form.sizes(family)
            note = form.sizes_note or note
        case Quantity.OMEGA:
            value = form.mean(family) * instance.order
            note = form.mean_note or note
        case _:
            raise UnsupportedFamilyError(f"unknown quantity {quantity!r}")
    return PublishedQuantity(
        family=instance,
        mode=mode,
        quantity=quantity,
        value=value,
        source=form.source,
        note=note,
        alternative=alternative,
    )


def _scalar(family: FamilyInstance, mode: Mode, quantity: Quantity) -> F:
    value = published_quantity(family, mode, quantity).value
    assert isinstance(value, F)
    return value


def published_chi_mean(family: FamilyInstance) -> F:
    return _scalar(family, Mode.CHI, Quantity.MEAN)


def published_chi_variance(family: FamilyInstance) -> F:
    return _scalar(family, Mode.CHI, Quantity.VARIANCE)


def published_chi_plus_mean(family: FamilyInstance) -> F:
    return _scalar(family, Mode.CHI_PLUS, Quantity.MEAN)


def published_chi_plus_variance(family: FamilyInstance) -> F:
    return _scalar(family, Mode.CHI_PLUS, Quantity.VARIANCE)


def published_mean(family: FamilyInstance, mode: Mode) -> F:
    return _scalar(family, mode, Quantity.MEAN)


def published_variance(family: FamilyInstance, mode: Mode) -> F:
    return _scalar(family, mode, Quantity.VARIANCE)


def published_distribution(family: FamilyInstance, mode: Mode) -> ClassSizeVector:
    value = published_quantity(family, mode, Quantity.DISTRIBUTION).value
    assert isinstance(value, tuple)
    return value


def limit_values(family: FamilyInstance | Family) -> tuple[F, F]:
    """Stated limits ``(mean, variance)`` of the chi parameters as ``n`` grows."""
    name = family if isinstance(family, Family) else family.family
    if name in (Family.PATH, Family.CYCLE):
        return F(7, 4), F(11, 16)
    raise UnsupportedFamilyError(f"no limit stated for {name.value}")


@dataclass(frozen=True)
class SpotClaim:
    """A decimal value quoted in the published text for one instance."""

    family: FamilyInstance
    mode: Mode
    quantity: Quantity
    printed: str

    @property
    def digits(self) -> int:
        _, _, fraction = self.printed.partition(".")
        return len(fraction)


@dataclass(frozen=True)
class RangeClaim:
    """A stated range ``lower (<|<=) value (<|<=) upper`` for a whole family.

    ``parity`` restricts the claim to even or odd ``n``.
    """

    family: Family
    mode: Mode
    quantity: Quantity
    lower: F
    lower_inclusive: bool
    upper: F
    upper_inclusive: bool
    parity: Parity = "any"

    def contains(self, value: F) -> bool:
        above = value >= self.lower if self.lower_inclusive else value > self.lower
        below = value <= self.upper if self.upper_inclusive else value < self.upper
        return above and below

    def covers(self, n: int) -> bool:
        return self.parity == "any" or (n % 2 == 1) == (self.parity == "odd")

    @property
    def text(self) -> str:
        lo = "<=" if self.lower_inclusive else "<"
        hi = "<=" if self.upper_inclusive else "<"
        name = "E" if self.quantity is Quantity.MEAN else "V"
        text = (
            f"{float(self.lower)} {lo} {name}_{self.mode.value}"
            f"(mu({self.family.value})) {hi} {float(self.upper)}"
        )
        return text if self.parity == "any" else f"{text} for {self.parity} n"


@dataclass(frozen=True)
class TrendClaim:
    """A stated monotone approach to ``limit`` over even or odd ``n``."""

    family: Family
    mode: Mode
    quantity: Quantity
    parity: Parity
    increasing: bool
    limit: F

    def covers(self, n: int) -> bool:
        return (n % 2 == 1) == (self.parity == "odd")

    @property
    def text(self) -> str:
        name = "E" if self.quantity is Quantity.MEAN else "V"
        verb = "increases" if self.increasing else "decreases"
        return (
            f"{name}_{self.mode.value}(mu({self.family.value})) {verb} to "
            f"{float(self.limit)} over {self.parity} n"
        )


def _path(n: int) -> FamilyInstance:
    return FamilyInstance(Family.PATH, n, mycielskian=True)


def _cycle(n: int) -> FamilyInstance:
    return FamilyInstance(Family.CYCLE, n, mycielskian=True)


SPOT_CLAIMS: tuple[SpotClaim, ...] = (
    SpotClaim(_path(2), Mode.CHI, Quantity.MEAN, "1.8"),
    SpotClaim(_path(3), Mode.CHI, Quantity.MEAN, "1.71"),
    SpotClaim(_path(2), Mode.CHI, Quantity.VARIANCE, "0.56"),
    SpotClaim(_path(3), Mode.CHI, Quantity.VARIANCE, "0.48"),
    SpotClaim(_path(4), Mode.CHI, Quantity.VARIANCE, "0.617"),
    SpotClaim(_path(5), Mode.CHI, Quantity.VARIANCE, "0.56"),
    SpotClaim(_path(2), Mode.CHI_PLUS, Quantity.MEAN, "2.2"),
    SpotClaim(_cycle(3), Mode.CHI, Quantity.MEAN, "2.0"),
    SpotClaim(_cycle(4), Mode.CHI, Quantity.MEAN, "1.77"),
    SpotClaim(_cycle(3), Mode.CHI, Quantity.VARIANCE, "1.11"),
    SpotClaim(_cycle(4), Mode.CHI, Quantity.VARIANCE, "0.61"),
    SpotClaim(_cycle(5), Mode.CHI, Quantity.VARIANCE, "0.97"),
    # starting values of the stated variance trends
    SpotClaim(_cycle(4), Mode.CHI, Quantity.VARIANCE, "0.611"),
    SpotClaim(_cycle(3), Mode.CHI, Quantity.VARIANCE, "1.14"),
    SpotClaim(_cycle(4), Mode.CHI_PLUS, Quantity.VARIANCE, "0.611"),
    SpotClaim(_cycle(3), Mode.CHI_PLUS, Quantity.VARIANCE, "1.11"),
)

RANGE_CLAIMS: tuple[RangeClaim, ...] = (
    RangeClaim(Family.PATH, Mode.CHI, Quantity.MEAN, F(7, 4), False, F(9, 5), True),
    RangeClaim(
        Family.PATH, Mode.CHI, Quantity.VARIANCE, F(48, 100), True, F(11, 16), False
    ),
    RangeClaim(
        Family.PATH, Mode.CHI_PLUS, Quantity.MEAN, F(11, 5), True, F(9, 4), False
    ),
    RangeClaim(
        Family.PATH,
        Mode.CHI_PLUS,
        Quantity.VARIANCE,
        F(487, 1000),
        False,
        F(11, 16),
        False,
    ),
    RangeClaim(Family.CYCLE, Mode.CHI, Quantity.MEAN, F(7, 4), False, F(2), True),
    RangeClaim(
        Family.CYCLE,
        Mode.CHI_PLUS,
        Quantity.MEAN,
        F(22, 100),
        True,
        F(9, 4),
        False,
        parity="even",
    ),
    RangeClaim(
        Family.CYCLE,
        Mode.CHI_PLUS,
        Quantity.MEAN,
        F(3, 10),
        True,
        F(13, 4),
        False,
        parity="odd",
    ),
)

TREND_CLAIMS: tuple[TrendClaim, ...] = (
    TrendClaim(Family.CYCLE, Mode.CHI, Quantity.VARIANCE, "even", True, F(11, 16)),
    TrendClaim(Family.CYCLE, Mode.CHI, Quantity.VARIANCE, "odd", False, F(11, 16)),
    TrendClaim(
        Family.CYCLE, Mode.CHI_PLUS, Quantity.VARIANCE, "even", True, F(11, 16)
    ),
    TrendClaim(
        Family.CYCLE, Mode.CHI_PLUS, Quantity.VARIANCE, "odd", False, F(11, 16)
    ),
)
