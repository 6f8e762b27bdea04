"""
  Test case for latticeprop.propagators
"""
import itertools
import logging
import math

import pandas as pd
import pytest

from latticeprop import propagators
from latticeprop.lattice import (
    FreeSpace,
    KleinSpace,
    LatticePoint,
    TorusSpace,
    TropicalDeSitterSpace,
    origin,
)
from latticeprop.metrics import axes_of_symmetry, null_steps
from latticeprop.paths import count_by_endpoint, path_count
from latticeprop.propagators import PhaseHistogram
from latticeprop.utils.exceptions import (
    CapacityExceeded,
    DimensionMismatch,
    MembershipError,
    ReversedTime,
    UnsupportedSpace,
)

MASSES = [0.0, 0.3, 1.0, 2.5]
ORACLE_LIMITS = [(1, 10), (2, 6), (3, 4)]
ORDERS = [2, 5, 13]


def test_amplitude_and_histogram():
    """
    The two-step example and its amplitude.
    """
    histogram = propagators.k1_free_histogram(1, LatticePoint((0,), 2))
    assert histogram == PhaseHistogram({0: 2, 2: 1})
    assert histogram.total() == 3
    amplitude = histogram.amplitude(1.0)
    assert amplitude.isclose(2 + complex(math.cos(2), math.sin(2)))
    assert abs(propagators.k1_free(1, LatticePoint((0,), 2), 0.0)) == pytest.approx(3)
    many = histogram.amplitudes(MASSES)
    for mass, value in zip(MASSES, many):
        assert histogram.amplitude(mass).isclose(value)


def test_histogram_bookkeeping():
    """
    Bins that cancel to zero are dropped.
    """
    histogram = PhaseHistogram({1: 2})
    histogram.add(1, -2)
    assert histogram.bins == {}
    assert histogram.total() == 0
    assert list(histogram.amplitudes([1.0, 2.0])) == [0, 0]


@pytest.mark.parametrize("d, max_t", ORACLE_LIMITS)
def test_k1_free_matches_oracle(d, max_t):
    """
    The closed sum equals the literal path sum everywhere in the cone.
    """
    space = FreeSpace(d)
    axes = axes_of_symmetry(1, d)
    for t in range(max_t + 1):
        for endpoint in count_by_endpoint(space, origin(d), t, axes):
            expected = propagators.k_oracle_histogram(space, origin(d), endpoint, axes)
            assert propagators.k1_free_histogram(d, endpoint) == expected


def test_k1_free_outside_cone():
    """
    Points outside the taxicab cone get nothing.
    """
    assert propagators.k1_free_histogram(2, LatticePoint((2, 2), 3)).total() == 0
    with pytest.raises(DimensionMismatch):
        propagators.k1_free_histogram(2, LatticePoint((0,), 3))
    with pytest.raises(ReversedTime):
        propagators.k1_free_histogram(1, LatticePoint((0,), -1))


@pytest.mark.parametrize("n", ORDERS)
def test_kn_free_matches_oracle(n):
    """
    K_n from solved tallies equals the literal path sum.
    """
    axes = axes_of_symmetry(n)
    for t in range(9):
        for x in range(-t, t + 1):
            displacement = LatticePoint((x,), t)
            expected = propagators.k_oracle_histogram(FreeSpace(1), origin(1), displacement, axes)
            assert propagators.kn_free_histogram(n, displacement) == expected


def test_kn_one_is_k1():
    """
    Order one is the taxicab propagator.
    """
    for t in range(8):
        for x in range(-t, t + 1):
            displacement = LatticePoint((x,), t)
            assert propagators.kn_free_histogram(1, displacement) == propagators.k1_free_histogram(1, displacement)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_feynman_matches_oracle(n):
    """
    Signed proper times agree with the oracle and are symmetric.
    """
    axes = axes_of_symmetry(n)
    for t in range(7):
        for x in range(-t, t + 1):
            displacement = LatticePoint((x,), t)
            histogram = propagators.kn_feynman_histogram(n, displacement)
            oracle = propagators.k_oracle_histogram(FreeSpace(1), origin(1), displacement, axes, "feynman")
            assert histogram == oracle
            assert histogram.is_symmetric()
            assert propagators.kn_feynman(n, displacement, 0.7).im == pytest.approx(0, abs=1e-9)


def test_massless_counts_paths():
    """
    At m = 0 the amplitude is the path count.
    """
    for t in range(7):
        for x in range(-t, t + 1):
            target = LatticePoint((x,), t)
            amplitude = propagators.kn_free(5, target, 0.0)
            assert amplitude.re == path_count(FreeSpace(1), origin(1), target, axes_of_symmetry(5))
            assert amplitude.im == 0


def test_kn_limits():
    """
    Order bounds and the oracle cap.
    """
    with pytest.raises(ValueError):
        propagators.kn_free_histogram(0, LatticePoint((0,), 2))
    with pytest.raises(CapacityExceeded):
        propagators.kn_free_histogram(51, LatticePoint((0,), 2))
    with pytest.raises(CapacityExceeded):
        propagators.k_oracle(FreeSpace(1), origin(1), LatticePoint((0,), 13), axes_of_symmetry(1), 1.0)
    with pytest.raises(ValueError):
        propagators.k_oracle_histogram(FreeSpace(1), origin(1), LatticePoint((0,), 2), axes_of_symmetry(1), "odd")


@pytest.mark.parametrize("half_width", [1, 2])
def test_torus_matches_quotient_walk(half_width):
    """
    Summing causal images equals walking on the torus itself.
    """
    space = TorusSpace((half_width,))
    axes = axes_of_symmetry(1)
    for t in range(7):
        for x in range(-half_width + 1, half_width + 1):
            target = LatticePoint((x,), t)
            expected = propagators.quotient_walk_histogram(space, origin(1), target, axes)
            assert propagators.k1_torus_histogram(space, origin(1), target) == expected


@pytest.mark.parametrize("half_width", [1, 2])
def test_klein_matches_quotient_walk(half_width):
    """
    Wrap-and-reflect images equal walking on the Klein bottle itself.
    """
    space = KleinSpace(half_width, half_width)
    axes = axes_of_symmetry(1, 2)
    domain = range(-half_width + 1, half_width + 1)
    for t in range(7):
        for x1 in domain:
            for x2 in domain:
                target = LatticePoint((x1, x2), t)
                expected = propagators.quotient_walk_histogram(space, origin(2), target, axes)
                assert propagators.k1_klein_histogram(space, origin(2), target) == expected


def test_quotient_conservation():
    """
    Every walk ends somewhere on the torus.
    """
    space = TorusSpace((2,))
    t = 6
    total = sum(
        propagators.k1_torus_histogram(space, origin(1), LatticePoint((x,), t)).total() for x in range(-1, 3)
    )
    assert total == 3**t
    target = LatticePoint((1,), t)
    assert propagators.k1_torus(space, origin(1), target, 0.0).re == pytest.approx(
        propagators.k1_torus_histogram(space, origin(1), target).total()
    )
    klein = KleinSpace(1, 1)
    corner = LatticePoint((1, 1), 4)
    assert propagators.k1_klein(klein, origin(2), corner, 0.7).isclose(
        propagators.k1_klein_histogram(klein, origin(2), corner).amplitude(0.7)
    )
    with pytest.raises(UnsupportedSpace):
        propagators.k1_klein(space, origin(1), target, 0.7)
    with pytest.raises(UnsupportedSpace):
        propagators.k1_torus_histogram(FreeSpace(1), origin(1), LatticePoint((0,), 2))


def test_desitter():
    """
    Null-path counts on the tropical de-Sitter surface.
    """
    space = TropicalDeSitterSpace(2, 0)
    start = origin(2)
    assert propagators.k1_desitter(space, start, LatticePoint((1, 1), 2)) == 2
    assert propagators.k1_desitter(space, start, LatticePoint((2, 0), 2)) == 1
    assert propagators.k1_desitter(space, start, LatticePoint((0, -1), 1)) == 1
    assert propagators.k1_desitter_histogram(space, start, LatticePoint((1, 1), 2)) == PhaseHistogram({0: 2})
    with pytest.raises(MembershipError):
        propagators.k1_desitter(space, start, LatticePoint((1, 0), 2))
    with pytest.raises(UnsupportedSpace):
        propagators.k1_desitter(FreeSpace(2), start, LatticePoint((1, 1), 2))


def test_desitter_conserves_null_paths():
    """
    From inside an orthant every null path stays on the surface.
    """
    d, c, t = 2, 4, 6
    space = TropicalDeSitterSpace(d, c)
    source = LatticePoint((2, 2), 0)
    counts = count_by_endpoint(space, source, t, null_steps(d))
    assert sum(propagators.k1_desitter(space, source, point) for point in counts) == d**t


def test_normalization_gp():
    """
    G_p is the peak path count times the time factor.
    """
    assert propagators.normalization_gp(1, 4) == pytest.approx(4 ** (3 / (4 * math.pi)) * 19)
    with pytest.raises(ValueError):
        propagators.normalization_gp(1, 0)


def test_cauchy_diagnostic():
    """
    Equal orders give zero; distinct orders a finite value.
    """
    grid = range(-6, 7)
    assert propagators.cauchy_diagnostic(5, 5, 6, grid) == 0.0
    value = propagators.cauchy_diagnostic(2, 5, 6, grid)
    assert math.isfinite(value) and value >= 0
    with pytest.raises(ValueError):
        propagators.cauchy_diagnostic(5, 2, 6, grid)
    with pytest.raises(CapacityExceeded):
        propagators.cauchy_diagnostic(2, 5, 13, grid)


def test_propagator_profile():
    """
    Profiles over the light cone and over the torus domain.
    """
    profile = propagators.propagator_profile(FreeSpace(1), 1, 4, 1.0)
    assert isinstance(profile, pd.DataFrame)
    assert list(profile.columns) == ["x", "re", "im", "mag"]
    assert list(profile["x"]) == list(range(-4, 5))
    assert profile["mag"].tolist() == pytest.approx(profile["mag"].tolist()[::-1])

    torus = propagators.propagator_profile(TorusSpace((2,)), 1, 3, 1.0)
    assert list(torus["x"]) == [-1, 0, 1, 2]
    assert isinstance(propagators.propagator_profile(FreeSpace(1), 2, 3, 1.0, response_type="json"), str)
    with pytest.raises(UnsupportedSpace):
        propagators.propagator_profile(KleinSpace(2, 2), 1, 3, 1.0)
    with pytest.raises(UnsupportedSpace):
        propagators.propagator_profile(TorusSpace((2,)), 2, 3, 1.0)


def test_cauchy_trend_inverts_at_small_time(caplog):
    """
    At t = 6 the (5, 12, 13) axes cannot fit, so the 5-13 gap outgrows the 2-5 gap.
    """
    grid = range(-6, 7)
    low = propagators.cauchy_diagnostic(2, 5, 6, grid)
    high = propagators.cauchy_diagnostic(5, 13, 6, grid)
    assert low == pytest.approx(0.030875, rel=1e-3)
    assert high == pytest.approx(0.197522, rel=1e-3)
    assert propagators.kn_free(5, LatticePoint((2,), 6), 1.0).isclose(propagators.kn_free(13, LatticePoint((2,), 6), 1.0))
    with caplog.at_level(logging.WARNING):
        assert propagators.cauchy_trend([low, high]) == [1]
    assert any("cauchy trend inverted" in record.getMessage() for record in caplog.records)


def test_cauchy_trend_quiet_when_shrinking(caplog):
    """
    Shrinking or flat values raise no warning.
    """
    with caplog.at_level(logging.WARNING):
        assert propagators.cauchy_trend([0.4, 0.3, 0.32]) == []
        assert propagators.cauchy_trend([0.5]) == []
    assert not caplog.records
    assert propagators.cauchy_trend([0.1, 0.2], slack=3.0) == []


@pytest.mark.parametrize("d, t", [(2, 5), (3, 4)])
def test_k1_free_symmetry(d, t):
    """
    Reflections and axis permutations leave the histogram unchanged.
    """
    for target in count_by_endpoint(FreeSpace(d), origin(d), t, axes_of_symmetry(1, d)):
        expected = propagators.k1_free_histogram(d, target)
        for order in itertools.permutations(target.spatial):
            for signs in itertools.product((1, -1), repeat=d):
                image = LatticePoint(tuple(s * x for s, x in zip(signs, order)), t)
                assert propagators.k1_free_histogram(d, image) == expected


def test_desitter_through_the_apex():
    """
    Endpoints on opposite sides of t = 0 are joined through the apex.
    """
    space = TropicalDeSitterSpace(1, 0)
    source, target = LatticePoint((-3,), -3), LatticePoint((-1,), 1)
    assert propagators.k1_desitter(space, source, target) == 1
    assert propagators.k1_desitter(space, source, target) == path_count(space, source, target, null_steps(1))
    assert propagators.k1_desitter(space, source, LatticePoint((1,), 1)) == 1
    wide = TropicalDeSitterSpace(2, 1)
    start = LatticePoint((-1, 0), 0)
    for t in range(1, 5):
        for end in count_by_endpoint(wide, start, t, null_steps(2)):
            assert propagators.k1_desitter(wide, start, end) == path_count(wide, start, end, null_steps(2))
