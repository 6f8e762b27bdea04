"""
  Test case for latticeprop.lattice
"""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticeprop.lattice import (
    FreeSpace,
    KleinSpace,
    LatticePoint,
    RefinedSpace,
    TorusSpace,
    TropicalDeSitterSpace,
    canonical_rep,
    causal_images,
    closest_point,
    contains,
    origin,
    refine,
    scale_to_lattice,
)
from latticeprop.utils.exceptions import DimensionMismatch, ReversedTime, UnsupportedSpace

TORUS = TorusSpace((2,))
KLEIN = KleinSpace(2, 2)
DESITTER = TropicalDeSitterSpace(2, 0)


def test_point_arithmetic():
    """
    Points add, subtract and negate componentwise, time included.
    """
    a = LatticePoint((1, -2), 3)
    b = LatticePoint((4, 5), 1)
    assert a + b == LatticePoint((5, 3), 4)
    assert b - a == LatticePoint((3, 7), -2)
    assert -a == LatticePoint((-1, 2), -3)
    assert a.l1() == 3
    assert a.proj_t == 3 and a.proj_x(1) == -2
    with pytest.raises(DimensionMismatch):
        _ = a + origin(1)


def test_contains():
    """
    Membership for each geometry.
    """
    assert contains(FreeSpace(1), LatticePoint((1000,), 0))
    assert not contains(FreeSpace(1, (2,)), LatticePoint((3,), 0))
    assert contains(TORUS, LatticePoint((17,), 4))
    assert contains(DESITTER, LatticePoint((1, 1), 2))
    assert not contains(DESITTER, LatticePoint((1, 0), 2))
    with pytest.raises(DimensionMismatch):
        contains(FreeSpace(2), origin(1))


def test_closest_point_rounds_half_away_from_zero():
    """
    Ties go away from zero and finite boxes clamp.
    """
    assert closest_point(FreeSpace(1), [2.5], 0.5) == LatticePoint((3,), 1)
    assert closest_point(FreeSpace(1), [-2.5], 1.4) == LatticePoint((-3,), 1)
    assert closest_point(FreeSpace(1, (2,)), [5.2], 0) == LatticePoint((2,), 0)


def test_refinement():
    """
    Refining scales extents and leaves the tropical constant alone.
    """
    assert refine(TORUS, 3) == TorusSpace((6,))
    assert refine(KLEIN, 2) == KleinSpace(4, 4)
    assert refine(DESITTER, 5) == DESITTER
    assert scale_to_lattice(RefinedSpace(FreeSpace(1), 24), [1.0], 2.0) == LatticePoint((24,), 48)
    with pytest.raises(ValueError):
        RefinedSpace(FreeSpace(1), 0)


def test_canonical_rep():
    """
    Representatives live in (-L, L]; Klein wraps flip the second axis.
    """
    assert canonical_rep(TORUS, LatticePoint((3,), 0)) == LatticePoint((-1,), 0)
    assert canonical_rep(TORUS, LatticePoint((-2,), 0)) == LatticePoint((2,), 0)
    assert canonical_rep(TORUS, LatticePoint((2,), 0)) == LatticePoint((2,), 0)
    assert canonical_rep(KLEIN, LatticePoint((3, 1), 0)) == LatticePoint((-1, -1), 0)
    assert canonical_rep(KLEIN, LatticePoint((7, 1), 0)) == LatticePoint((-1, 1), 0)
    with pytest.raises(UnsupportedSpace):
        canonical_rep(FreeSpace(1), origin(1))


@settings(max_examples=200, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 4), st.integers(1, 4))
def test_canonical_rep_is_idempotent(x1, x2, l1, l2):
    """
    Reducing twice changes nothing.
    """
    for space, point in (
        (TorusSpace((l1, l2)), LatticePoint((x1, x2), 0)),
        (KleinSpace(l1, l2), LatticePoint((x1, x2), 0)),
    ):
        once = canonical_rep(space, point)
        assert canonical_rep(space, once) == once
        assert all(-ext < v <= ext for v, ext in zip(once.spatial, space.extents))


def test_causal_images():
    """
    Lifts inside the cone, each reducing to the target.
    """
    torus = TorusSpace((1,))
    images = causal_images(torus, origin(1), LatticePoint((0,), 2))
    assert images == [LatticePoint((-2,), 2), LatticePoint((0,), 2), LatticePoint((2,), 2)]

    target = LatticePoint((1, 1), 5)
    for image in causal_images(KLEIN, origin(2), target):
        assert image.l1() <= 5
        assert canonical_rep(KLEIN, image) == target
    with pytest.raises(ReversedTime):
        causal_images(torus, LatticePoint((0,), 3), LatticePoint((0,), 2))
    with pytest.raises(UnsupportedSpace):
        causal_images(FreeSpace(1), origin(1), LatticePoint((0,), 2))


@settings(max_examples=100, deadline=None)
@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-5, 5), st.integers(1, 3), st.integers(1, 3))
def test_contains_agrees_with_representative(x1, x2, t, l1, l2):
    """
    A point and its representative are members together.
    """
    for space, point in (
        (TorusSpace((l1,)), LatticePoint((x1,), t)),
        (TorusSpace((l1, l2)), LatticePoint((x1, x2), t)),
        (KleinSpace(l1, l2), LatticePoint((x1, x2), t)),
    ):
        assert contains(space, point) == contains(space, canonical_rep(space, point))


def _wide_lifts(space, src, dst, reach=12):
    """every deck image with shifts up to reach, kept if inside the cone"""
    delta_t = dst.time - src.time
    lifts = set()
    if isinstance(space, TorusSpace):
        for shifts in itertools.product(range(-reach, reach + 1), repeat=space.d):
            spatial = tuple(b + 2 * k * ext for b, k, ext in zip(dst.spatial, shifts, space.extents))
            lifts.add(LatticePoint(spatial, dst.time))
    else:
        for k1, k2 in itertools.product(range(-reach, reach + 1), repeat=2):
            x2 = dst.spatial[1] if k1 % 2 == 0 else -dst.spatial[1]
            lifts.add(LatticePoint((dst.spatial[0] + 2 * k1 * space.l1, x2 + 2 * k2 * space.l2), dst.time))
    return sorted(p for p in lifts if (p - src).l1() <= delta_t)


@pytest.mark.parametrize(
    "space, src, dst",
    [
        (TorusSpace((1,)), LatticePoint((0,), 0), LatticePoint((1,), 7)),
        (TorusSpace((2,)), LatticePoint((5,), 1), LatticePoint((-1,), 8)),
        (TorusSpace((1, 2)), LatticePoint((0, 3), 0), LatticePoint((1, 0), 6)),
        (KleinSpace(1, 1), LatticePoint((0, 0), 0), LatticePoint((1, 1), 6)),
        (KleinSpace(2, 1), LatticePoint((3, -2), 2), LatticePoint((-1, 1), 9)),
    ],
)
def test_causal_images_are_complete(space, src, dst):
    """
    No duplicates, and a much wider search finds nothing more.
    """
    images = causal_images(space, src, dst)
    assert len(images) == len(set(images))
    assert images == _wide_lifts(space, src, dst)
    for image in images:
        assert canonical_rep(space, image) == canonical_rep(space, dst)
