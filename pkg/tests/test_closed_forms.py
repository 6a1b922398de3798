from fractions import Fraction as F

import pytest

from pymycielski.closed_forms import (
    FRIENDSHIP_NOTE,
    RANGE_CLAIMS,
    SPOT_CLAIMS,
    TREND_CLAIMS,
    limit_values,
    published_chi_mean,
    published_chi_plus_mean,
    published_chi_plus_variance,
    published_chi_variance,
    published_distribution,
    published_mean,
    published_quantity,
    published_variance,
)
from pymycielski.graph import FamilyInstance
from pymycielski.stats import distribution, mean, variance
from pymycielski.types import Family, Mode, Quantity
from pymycielski.utils import UnsupportedFamilyError


def _instance(family: Family, n: int) -> FamilyInstance:
    if family is Family.COMPLETE_BIPARTITE:
        return FamilyInstance.complete_bipartite(n - n // 2, n // 2)
    return FamilyInstance(family, n)


@pytest.mark.parametrize(
    "instance, expected",
    [
        (FamilyInstance(Family.PATH, 2), F(9, 5)),
        (FamilyInstance(Family.PATH, 3), F(12, 7)),
        (FamilyInstance(Family.CYCLE, 3), F(2)),
        (FamilyInstance(Family.CYCLE, 4), F(16, 9)),
        (FamilyInstance(Family.COMPLETE, 3), F(2)),
        (FamilyInstance.complete_bipartite(2, 1), F(11, 7)),
        (FamilyInstance(Family.WHEEL, 4), F(42, 22)),
        (FamilyInstance(Family.FAN, 3), F(34, 18)),
    ],
    ids=lambda v: v.label if isinstance(v, FamilyInstance) else str(v),
)
def test_published_chi_mean(instance, expected):
    assert published_chi_mean(instance) == expected


def test_published_chi_variance():
    assert published_chi_variance(FamilyInstance(Family.PATH, 2)) == F(14, 25)
    assert published_chi_variance(FamilyInstance(Family.PATH, 3)) == F(24, 49)
    assert published_chi_variance(FamilyInstance(Family.CYCLE, 3)) == F(8, 7)
    assert published_chi_variance(FamilyInstance(Family.COMPLETE, 3)) == F(80, 21)


def test_published_chi_plus_values():
    p2 = FamilyInstance(Family.PATH, 2)
    assert published_chi_plus_mean(p2) == F(11, 5)
    assert published_chi_plus_variance(p2) == F(14, 25)
    c5 = FamilyInstance(Family.CYCLE, 5)
    assert published_chi_plus_variance(c5) == F(10410, 10648)
    assert published_chi_variance(c5) == F(10560, 10648)


@pytest.mark.parametrize(
    "instance, mode, expected",
    [
        (FamilyInstance(Family.PATH, 3), Mode.CHI, (3, 3, 1)),
        (FamilyInstance(Family.PATH, 4), Mode.CHI, (4, 3, 2)),
        (FamilyInstance(Family.PATH, 4), Mode.CHI_PLUS, (2, 3, 4)),
        (FamilyInstance(Family.CYCLE, 5), Mode.CHI, (5, 3, 2, 1)),
        (FamilyInstance(Family.COMPLETE, 3), Mode.CHI, (3, 2, 1, 1)),
        (FamilyInstance(Family.COMPLETE, 3), Mode.CHI_PLUS, (1, 1, 2, 3)),
        (FamilyInstance.complete_bipartite(3, 1), Mode.CHI, (6, 2, 1)),
        (FamilyInstance(Family.WHEEL, 3), Mode.CHI, (4, 2, 1, 1, 1)),
        (FamilyInstance(Family.WHEEL, 4), Mode.CHI, (5, 3, 2, 1)),
        (FamilyInstance(Family.FAN, 3), Mode.CHI, (4, 3, 1, 1)),
    ],
)
def test_published_distribution(instance, mode, expected):
    assert published_distribution(instance, mode) == expected


@pytest.mark.parametrize("family", list(Family), ids=[f.value for f in Family])
@pytest.mark.parametrize("mode", list(Mode), ids=[m.value for m in Mode])
def test_published_sizes_cover_every_vertex(family, mode):
    for n in range(3, 31):
        instance = _instance(family, n)
        sizes = published_distribution(instance, mode)
        assert sum(sizes) == instance.with_mycielskian().order
        assert all(t >= 1 for t in sizes)


@pytest.mark.parametrize("family", list(Family), ids=[f.value for f in Family])
@pytest.mark.parametrize("mode", list(Mode), ids=[m.value for m in Mode])
def test_published_mean_matches_its_distribution(family, mode):
    for n in range(3, 51):
        instance = _instance(family, n)
        d = distribution(
            published_distribution(instance, mode), instance.with_mycielskian().order
        )
        assert published_mean(instance, mode) == mean(d)


@pytest.mark.parametrize("family", list(Family), ids=[f.value for f in Family])
def test_means_reflect(family):
    for n in range(3, 51):
        instance = _instance(family, n)
        k = len(published_distribution(instance, Mode.CHI))
        assert published_mean(instance, Mode.CHI) + published_mean(
            instance, Mode.CHI_PLUS
        ) == k + 1


def _variance_consistent(instance: FamilyInstance, mode: Mode) -> bool:
    d = distribution(
        published_distribution(instance, mode), instance.with_mycielskian().order
    )
    return published_variance(instance, mode) == variance(d)


@pytest.mark.parametrize(
    "family, mode, parities",
    [
        (Family.PATH, Mode.CHI, (0, 1)),
        (Family.PATH, Mode.CHI_PLUS, (0, 1)),
        (Family.CYCLE, Mode.CHI, (0, 1)),
        (Family.CYCLE, Mode.CHI_PLUS, (0,)),
        (Family.COMPLETE_BIPARTITE, Mode.CHI, (0, 1)),
        (Family.COMPLETE_BIPARTITE, Mode.CHI_PLUS, (0, 1)),
        (Family.WHEEL, Mode.CHI, (0, 1)),
        (Family.WHEEL, Mode.CHI_PLUS, (0,)),
        (Family.FAN, Mode.CHI, (0, 1)),
        (Family.FAN, Mode.CHI_PLUS, (0, 1)),
    ],
)
def test_consistent_variances(family, mode, parities):
    for n in range(3, 41):
        if n % 2 in parities:
            assert _variance_consistent(_instance(family, n), mode), n


@pytest.mark.parametrize(
    "family, mode, parity",
    [
        (Family.CYCLE, Mode.CHI_PLUS, 1),
        (Family.WHEEL, Mode.CHI_PLUS, 1),
        (Family.COMPLETE, Mode.CHI, None),
        (Family.COMPLETE, Mode.CHI_PLUS, None),
    ],
)
def test_inconsistent_variances(family, mode, parity):
    for n in range(3, 41):
        if parity is None or n % 2 == parity:
            assert not _variance_consistent(_instance(family, n), mode), n


def test_complete_mean_note_and_alternative():
    published = published_quantity(
        FamilyInstance(Family.COMPLETE, 3), Mode.CHI, Quantity.MEAN
    )
    assert published.value == F(2)
    assert published.alternative == F(4)
    assert published.note is not None
    assert published.family == FamilyInstance(Family.COMPLETE, 3, mycielskian=True)


def test_notes_on_misprinted_values():
    c5 = FamilyInstance(Family.CYCLE, 5)
    note = published_quantity(c5, Mode.CHI_PLUS, Quantity.VARIANCE).note
    assert note is not None and "70n" in note
    wheel = FamilyInstance(Family.WHEEL, 3)
    note = published_quantity(wheel, Mode.CHI_PLUS, Quantity.VARIANCE).note
    assert note is not None and "328n^2" in note
    k3 = FamilyInstance(Family.COMPLETE, 3)
    assert published_quantity(k3, Mode.CHI_PLUS, Quantity.DISTRIBUTION).note
    assert published_quantity(c5, Mode.CHI, Quantity.VARIANCE).note is None


def test_fan_carries_friendship_note():
    fan = FamilyInstance(Family.FAN, 4)
    for quantity in Quantity:
        assert published_quantity(fan, Mode.CHI, quantity).note == FRIENDSHIP_NOTE


def test_published_omega():
    published = published_quantity(
        FamilyInstance(Family.PATH, 3), Mode.CHI, Quantity.OMEGA
    )
    assert published.value == 12
    wheel = published_quantity(
        FamilyInstance(Family.WHEEL, 4), Mode.CHI, Quantity.OMEGA
    )
    assert wheel.value == 21


def test_published_quantity_ignores_mycielskian_flag():
    plain = FamilyInstance(Family.PATH, 5)
    assert published_chi_mean(plain) == published_chi_mean(plain.with_mycielskian())


@pytest.mark.parametrize(
    "instance",
    [
        FamilyInstance(Family.PATH, 1),
        FamilyInstance(Family.COMPLETE, 1),
        FamilyInstance(Family.FAN, 1),
    ],
    ids=lambda s: s.label,
)
def test_unsupported_small_instances(instance):
    with pytest.raises(UnsupportedFamilyError, match="no published closed form"):
        published_chi_mean(instance)


def test_limit_values():
    assert limit_values(Family.PATH) == (F(7, 4), F(11, 16))
    assert limit_values(FamilyInstance(Family.CYCLE, 4)) == (F(7, 4), F(11, 16))
    with pytest.raises(UnsupportedFamilyError):
        limit_values(Family.WHEEL)


def test_spot_claim_digits():
    assert [c.digits for c in SPOT_CLAIMS[:5]] == [1, 2, 2, 2, 3]


def test_range_claim_bounds():
    path_mean = RANGE_CLAIMS[0]
    assert not path_mean.contains(F(7, 4))
    assert path_mean.contains(F(9, 5))
    assert not path_mean.contains(F(181, 100))
    assert path_mean.text == "1.75 < E_chi(mu(path)) <= 1.8"


def test_parity_range_claims():
    even, odd = RANGE_CLAIMS[5:]
    assert even.text == "0.22 <= E_chi_plus(mu(cycle)) < 2.25 for even n"
    assert odd.text == "0.3 <= E_chi_plus(mu(cycle)) < 3.25 for odd n"
    assert even.covers(4) and not even.covers(5)
    assert odd.covers(5) and not odd.covers(4)
    assert RANGE_CLAIMS[0].covers(4) and RANGE_CLAIMS[0].covers(5)


def test_trend_claims():
    assert [(c.mode, c.parity, c.increasing) for c in TREND_CLAIMS] == [
        (Mode.CHI, "even", True),
        (Mode.CHI, "odd", False),
        (Mode.CHI_PLUS, "even", True),
        (Mode.CHI_PLUS, "odd", False),
    ]
    assert TREND_CLAIMS[0].text == "V_chi(mu(cycle)) increases to 0.6875 over even n"
    assert TREND_CLAIMS[1].covers(3) and not TREND_CLAIMS[1].covers(4)


def test_trend_start_digits():
    assert [c.printed for c in SPOT_CLAIMS[12:]] == ["0.611", "1.14", "0.611", "1.11"]


def test_each_closed_form_has_its_own_source():
    sources = {
        (family, mode, n % 2): published_quantity(
            _instance(family, n), mode, Quantity.MEAN
        ).source
        for family in Family
        for mode in Mode
        for n in (3, 4)
    }
    uniform = (Family.COMPLETE, Family.COMPLETE_BIPARTITE)
    for (family, mode, _), source in sources.items():
        if family in uniform:
            assert source == sources[(family, mode, 1)]
    assert len(set(sources.values())) == 20
    path_odd = sources[(Family.PATH, Mode.CHI, 1)]
    assert path_odd == "chi-chromatic parameters of mu(P_n), n odd"
