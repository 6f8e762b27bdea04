"""
Propagators on identified boxes (torus, Klein bottle) and on the tropical
de-Sitter lattice
"""
import logging
from collections import defaultdict

from latticeprop import utils
from latticeprop.lattice import (
    KleinSpace,
    LatticePoint,
    RefinedSpace,
    TorusSpace,
    TropicalDeSitterSpace,
    canonical_rep,
    causal_images,
    contains,
)
from latticeprop.metrics import AxesOfSymmetry, null_steps
from latticeprop.paths import path_count
from latticeprop.propagators.free import k1_free_histogram
from latticeprop.propagators.histogram import Amplitude, PhaseHistogram
from latticeprop.utils.exceptions import MembershipError, ReversedTime, UnsupportedSpace

log = logging.getLogger("root")


def _covering_histogram(space, kind, x: LatticePoint, y: LatticePoint) -> PhaseHistogram:
    if isinstance(space, RefinedSpace):
        space = space.resolved()
    if not isinstance(space, kind):
        raise UnsupportedSpace(f"expected a {kind.__name__}, got {space.kind}")
    histogram = PhaseHistogram()
    images = causal_images(space, x, y)
    for image in images:
        histogram.merge(k1_free_histogram(space.d, image - x))
    log.debug("%s propagator summed %s images", space.kind, len(images))
    return histogram


def k1_torus_histogram(space: TorusSpace, x: LatticePoint, y: LatticePoint) -> PhaseHistogram:
    return _covering_histogram(space, TorusSpace, x, y)


def k1_torus(space: TorusSpace, x: LatticePoint, y: LatticePoint, mass: float) -> Amplitude:
    """
    Args:\n
        space (TorusSpace): torus\n
        x (LatticePoint): source\n
        y (LatticePoint): target\n
        mass (float): m\n
    Returns:\n
        Amplitude: K_1 summed over the causal images of y\n
    """
    return k1_torus_histogram(space, x, y).amplitude(mass)


def k1_klein_histogram(space: KleinSpace, x: LatticePoint, y: LatticePoint) -> PhaseHistogram:
    return _covering_histogram(space, KleinSpace, x, y)


def k1_klein(space: KleinSpace, x: LatticePoint, y: LatticePoint, mass: float) -> Amplitude:
    """
    Args:\n
        space (KleinSpace): Klein bottle\n
        x (LatticePoint): source\n
        y (LatticePoint): target\n
        mass (float): m\n
    Returns:\n
        Amplitude: K_1 summed over wrap-and-reflect images of y\n
    """
    return k1_klein_histogram(space, x, y).amplitude(mass)


def _same_orthant(x: LatticePoint, y: LatticePoint) -> bool:
    return all(a * b >= 0 for a, b in zip(x.spatial + (x.time,), y.spatial + (y.time,)))


def k1_desitter(space: TropicalDeSitterSpace, x: LatticePoint, y: LatticePoint) -> int:
    """Null-path count between two points of the tropical de-Sitter lattice

    Inside one closed orthant of (x, t) every surface path moves monotonically,
    so the count is delta t! / prod |delta x_i|! when sum |delta x_i| = delta t
    and 0 otherwise. Endpoints in different orthants, e.g. paths through the
    apex, are counted by the surface dynamic program.

    Args:
        space (TropicalDeSitterSpace): zero set of -d_1(0, x) - c
        x (LatticePoint): source on the surface
        y (LatticePoint): target on the surface

    Raises:
        MembershipError: either point is off the surface
        ReversedTime: y before x

    Returns:
        int: number of null paths on the surface
    """
    if not isinstance(space, TropicalDeSitterSpace):
        raise UnsupportedSpace(f"expected a tropical de-Sitter space, got {space.kind}")
    for point in (x, y):
        if not contains(space, point):
            raise MembershipError(f"{point} is off the surface sum|x| - |t| = {space.c}")
    delta = y - x
    if delta.time < 0:
        raise ReversedTime(delta.time)
    if not _same_orthant(x, y):
        count = path_count(space, x, y, null_steps(space.d))
        log.debug("de-Sitter endpoints %s, %s straddle an orthant: %s paths by dynamic program", x, y, count)
        return count
    if delta.l1() != delta.time:
        return 0
    return utils.multinomial([abs(v) for v in delta.spatial])


def k1_desitter_histogram(space: TropicalDeSitterSpace, x: LatticePoint, y: LatticePoint) -> PhaseHistogram:
    """every path is null, so the single bin sits at rho = 0"""
    return PhaseHistogram({0: k1_desitter(space, x, y)})


def quotient_walk_histogram(space, x: LatticePoint, y: LatticePoint, axes: AxesOfSymmetry) -> PhaseHistogram:
    """Direct walk on the quotient graph, re-canonicalizing after every step.
    Test oracle for the covering-space propagators.

    Args:
        space (TorusSpace | KleinSpace): quotient
        x (LatticePoint): source
        y (LatticePoint): target
        axes (AxesOfSymmetry): step set

    Returns:
        PhaseHistogram: walks ending at canonical_rep(y), grouped by proper time
    """
    if isinstance(space, RefinedSpace):
        space = space.resolved()
    delta_t = y.time - x.time
    if delta_t < 0:
        raise ReversedTime(delta_t)
    table = [defaultdict(int) for _ in range(delta_t + 1)]
    start = canonical_rep(space, x)
    table[0][(start.spatial, 0)] = 1
    for offset in range(1, delta_t + 1):
        slot = table[offset]
        for step in axes.steps:
            vector = step.vector
            if vector.time > offset:
                continue
            for (position, rho), count in table[offset - vector.time].items():
                moved = LatticePoint(
                    tuple(p + v for p, v in zip(position, vector.spatial)), x.time + offset
                )
                slot[(canonical_rep(space, moved).spatial, rho + step.length)] += count
    target = canonical_rep(space, y).spatial
    histogram = PhaseHistogram()
    for (position, rho), count in table[delta_t].items():
        if position == target:
            histogram.add(rho, count)
    return histogram
