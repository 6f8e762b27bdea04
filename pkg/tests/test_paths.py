"""
  Test case for latticeprop.paths
"""
import itertools
from fractions import Fraction

import pytest

from latticeprop import paths
from latticeprop.lattice import FreeSpace, LatticePoint, TorusSpace, TropicalDeSitterSpace, origin
from latticeprop.metrics import axes_of_symmetry, null_steps
from latticeprop.utils.exceptions import CapacityExceeded, NonGenerableStep, ReversedTime

TAXICAB = axes_of_symmetry(1)
ORDER_FIVE = axes_of_symmetry(5)
FREE = FreeSpace(1)


def test_enumerate_paths_small():
    """
    Three paths reach (0, 2): rest-rest, left-right, right-left.
    """
    found = paths.enumerate_paths(FREE, origin(1), LatticePoint((0,), 2), TAXICAB)
    assert len(found) == 3
    assert [path.steps for path in found] == sorted(path.steps for path in found)
    for path in found:
        assert path.endpoint(TAXICAB) == LatticePoint((0,), 2)


def test_enumerate_paths_respects_boxes():
    """
    A finite box forbids paths that leave it.
    """
    boxed = FreeSpace(1, (1,))
    found = paths.enumerate_paths(boxed, origin(1), LatticePoint((0,), 4), TAXICAB)
    assert len(found) == paths.path_count(boxed, origin(1), LatticePoint((0,), 4), TAXICAB)
    assert len(found) < paths.path_count(FREE, origin(1), LatticePoint((0,), 4), TAXICAB)


def test_enumeration_cap():
    """
    Enumeration past the cap raises.
    """
    with pytest.raises(CapacityExceeded):
        paths.enumerate_paths(FREE, origin(1), LatticePoint((0,), 13), TAXICAB)
    with pytest.raises(CapacityExceeded):
        paths.enumerate_paths(FreeSpace(2), origin(2), LatticePoint((0, 0), 9), axes_of_symmetry(1, 2))
    with pytest.raises(ReversedTime):
        paths.enumerate_paths(FREE, LatticePoint((0,), 3), LatticePoint((0,), 1), TAXICAB)


def test_canonicalize_and_vertices():
    """
    canonicalize splits multiples into unit axes and inverts vertices.
    """
    raw = [origin(1), LatticePoint((0,), 3), LatticePoint((6,), 13)]
    path = paths.canonicalize(raw, ORDER_FIVE)
    rest = ORDER_FIVE.center
    step = ORDER_FIVE.index_of(LatticePoint((3,), 5))
    assert path.steps == (rest, rest, rest, step, step)
    assert paths.vertices(path, ORDER_FIVE)[-1] == LatticePoint((6,), 13)
    assert paths.canonicalize(paths.vertices(path, ORDER_FIVE), ORDER_FIVE) == path
    with pytest.raises(NonGenerableStep):
        paths.canonicalize([origin(1), LatticePoint((2,), 1)], ORDER_FIVE)
    with pytest.raises(ReversedTime):
        paths.canonicalize([LatticePoint((0,), 2), origin(1)], ORDER_FIVE)


def test_proper_time():
    """
    d_n proper time and the Minkowski sum agree on axis steps.
    """
    path = paths.canonicalize([origin(1), LatticePoint((3,), 5), LatticePoint((3,), 6)], ORDER_FIVE)
    assert paths.proper_time(path, ORDER_FIVE) == Fraction(5)
    assert paths.proper_time_minkowski(path, ORDER_FIVE) == 5


def test_step_tally():
    """
    Tallies count directions and rebuild the displacement.
    """
    path = paths.canonicalize([origin(1), LatticePoint((1,), 1), LatticePoint((1,), 3)], TAXICAB)
    tally = paths.StepTally.from_path(path)
    assert tally.counts == {TAXICAB.index_of(LatticePoint((1,), 1)): 1, TAXICAB.center: 2}
    assert tally.displacement(TAXICAB) == LatticePoint((1,), 3)


@pytest.mark.parametrize("t", range(21))
def test_conservation(t):
    """
    Taxicab path counts over all endpoints sum to 3^t.
    """
    counts = paths.count_by_endpoint(FREE, origin(1), t, TAXICAB)
    assert sum(counts.values()) == 3**t


@pytest.mark.parametrize("d", [1, 2, 3])
def test_null_conservation(d):
    """
    Light-like paths on free space number (2d)^t.
    """
    for t in range(13):
        counts = paths.count_by_endpoint(FreeSpace(d), origin(d), t, null_steps(d))
        assert sum(counts.values()) == (2 * d) ** t


def test_central_count():
    """
    Row 4 of the trinomial triangle peaks at 19.
    """
    counts = paths.count_by_endpoint(FREE, origin(1), 4, TAXICAB)
    assert counts[LatticePoint((0,), 4)] == 19
    assert max(counts.values()) == 19


@pytest.mark.parametrize("t", range(9))
def test_path_count_matches_enumeration(t):
    """
    DP counts equal enumerated counts for A_1 and A_5.
    """
    for axes in (TAXICAB, ORDER_FIVE):
        for x in range(-t, t + 1):
            target = LatticePoint((x,), t)
            enumerated = len(paths.enumerate_paths(FREE, origin(1), target, axes))
            assert enumerated == paths.path_count(FREE, origin(1), target, axes)


def test_quotient_counts():
    """
    Quotient endpoint counts are canonical and conserve the total.
    """
    torus = TorusSpace((2,))
    counts = paths.count_by_endpoint(torus, origin(1), 5, TAXICAB)
    assert sum(counts.values()) == 3**5
    assert all(-2 < point.spatial[0] <= 2 for point in counts)
    for point, count in counts.items():
        assert paths.path_count(torus, origin(1), point, TAXICAB) == count
        assert len(paths.enumerate_paths(torus, origin(1), point, TAXICAB)) == count


def test_desitter_counts_stay_on_surface():
    """
    Null paths from inside an orthant stay on the surface, d^t of them.
    """
    space = TropicalDeSitterSpace(2, 4)
    source = LatticePoint((2, 2), 0)
    counts = paths.count_by_endpoint(space, source, 6, null_steps(2))
    assert sum(counts.values()) == 2**6


def _images(point):
    """every reflection and axis permutation of a point"""
    for order in itertools.permutations(point.spatial):
        for signs in itertools.product((1, -1), repeat=len(order)):
            yield LatticePoint(tuple(s * x for s, x in zip(signs, order)), point.time)


@pytest.mark.parametrize("d, t", [(2, 5), (3, 4)])
def test_path_count_symmetry(d, t):
    """
    Counts do not see reflections or relabelled axes.
    """
    space, axes = FreeSpace(d), axes_of_symmetry(1, d)
    for target in paths.count_by_endpoint(space, origin(d), t, axes):
        expected = paths.path_count(space, origin(d), target, axes)
        assert expected > 0
        for image in _images(target):
            assert paths.path_count(space, origin(d), image, axes) == expected
