"""
Achronal lattice paths: enumeration, canonical form, proper time and counting
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from latticeprop.lattice import (
    FreeSpace,
    KleinSpace,
    LatticePoint,
    RefinedSpace,
    TorusSpace,
    canonical_rep,
    causal_images,
    contains,
)
from latticeprop.metrics import AxesOfSymmetry, minkowski_interval
from latticeprop.resources import constants as cns
from latticeprop.utils.exceptions import (
    CapacityExceeded,
    DimensionMismatch,
    NonGenerableStep,
    ReversedTime,
)

log = logging.getLogger("root")


@dataclass(frozen=True)
class Path:
    """Origin plus the sequence of indices into an AxesOfSymmetry step list"""

    origin: LatticePoint
    steps: Tuple[int, ...]

    def endpoint(self, axes: AxesOfSymmetry) -> LatticePoint:
        point = self.origin
        for index in self.steps:
            point = point + axes.steps[index].vector
        return point


@dataclass(frozen=True)
class StepTally:
    """Per-direction step counts I_a of a path"""

    counts: Dict[int, int]

    @classmethod
    def from_path(cls, path: Path) -> "StepTally":
        counts = defaultdict(int)
        for index in path.steps:
            counts[index] += 1
        return cls(dict(counts))

    def displacement(self, axes: AxesOfSymmetry) -> LatticePoint:
        spatial = [0] * axes.d
        time = 0
        for index, count in self.counts.items():
            vector = axes.steps[index].vector
            spatial = [s + count * v for s, v in zip(spatial, vector.spatial)]
            time += count * vector.time
        return LatticePoint(tuple(spatial), time)


def _resolve(space):
    return space.resolved() if isinstance(space, RefinedSpace) else space


def _validate(space, x: LatticePoint, y: LatticePoint, axes: AxesOfSymmetry) -> int:
    for point in (x, y):
        if point.d != space.d:
            raise DimensionMismatch(f"point has d={point.d}, space has d={space.d}")
    if axes.d != space.d:
        raise DimensionMismatch(f"axes are for d={axes.d}, space has d={space.d}")
    delta_t = y.time - x.time
    if delta_t < 0:
        raise ReversedTime(delta_t)
    return delta_t


def enumeration_cap(d: int) -> int:
    return cns.ENUMERATION_CAP.get(d, cns.ENUMERATION_CAP_HIGH_D)


def _is_unbounded(space) -> bool:
    return isinstance(space, FreeSpace) and space.extents is None


def _walk(space, x: LatticePoint, y: LatticePoint, axes: AxesOfSymmetry) -> Iterator[Tuple[int, ...]]:
    check = not _is_unbounded(space)
    if check and not contains(space, x):
        return
    prefix: List[int] = []

    def descend(point: LatticePoint):
        remaining = y - point
        if remaining.time == 0:
            if remaining.l1() == 0:
                yield tuple(prefix)
            return
        for index, step in enumerate(axes.steps):
            vector = step.vector
            if vector.time > remaining.time:
                continue
            following = point + vector
            if (y - following).l1() > y.time - following.time:
                continue
            if check and not contains(space, following):
                continue
            prefix.append(index)
            yield from descend(following)
            prefix.pop()

    yield from descend(x)


def enumerate_paths(space, x: LatticePoint, y: LatticePoint, axes: AxesOfSymmetry) -> list:
    """Every canonical A_n path from x to y whose vertices stay in the space

    Args:
        space (SpaceSpec): lattice; torus and klein are walked on the cover
        x (LatticePoint): source
        y (LatticePoint): target
        axes (AxesOfSymmetry): step set

    Raises:
        CapacityExceeded: delta t above the enumeration cap
        ReversedTime: y before x

    Returns:
        list: Path objects in lexicographic step order
    """
    space = _resolve(space)
    delta_t = _validate(space, x, y, axes)
    cap = enumeration_cap(space.d)
    if delta_t > cap:
        raise CapacityExceeded(f"enumeration capped at delta t <= {cap} for d={space.d}, got {delta_t}")

    if isinstance(space, (TorusSpace, KleinSpace)):
        cover = FreeSpace(space.d)
        words = [w for image in causal_images(space, x, y) for w in _walk(cover, x, image, axes)]
    else:
        words = list(_walk(space, x, y, axes))
    words.sort()
    log.debug("enumerate_paths: %s paths from %s to %s", len(words), x, y)
    return [Path(x, word) for word in words]


def vertices(path: Path, axes: AxesOfSymmetry) -> list:
    points = [path.origin]
    for index in path.steps:
        points.append(points[-1] + axes.steps[index].vector)
    return points


def canonicalize(raw: Sequence[LatticePoint], axes: AxesOfSymmetry) -> Path:
    """
    Args:\n
        raw (Sequence[LatticePoint]): vertex list of a piecewise linear path\n
        axes (AxesOfSymmetry): step set\n
    Returns:\n
        Path: unique A_n difference sequence tracing the same curve\n
    """
    if not raw:
        raise ValueError("a path needs at least one vertex")
    steps: List[int] = []
    for start, stop in zip(raw, raw[1:]):
        delta = stop - start
        if delta.time < 0:
            raise ReversedTime(delta.time)
        if delta.time == 0 and delta.l1() == 0:
            continue
        for index, step in enumerate(axes.steps):
            vector = step.vector
            if delta.time % vector.time:
                continue
            multiple = delta.time // vector.time
            if all(multiple * v == s for v, s in zip(vector.spatial, delta.spatial)):
                steps.extend([index] * multiple)
                break
        else:
            raise NonGenerableStep(f"{delta} is not a positive multiple of any step of A_{axes.order}")
    return Path(raw[0], tuple(steps))


def proper_time(path: Path, axes: AxesOfSymmetry) -> Fraction:
    """sum of d_n step lengths"""
    return sum((axes.steps[index].length for index in path.steps), Fraction(0))


def proper_time_minkowski(path: Path, axes: AxesOfSymmetry):
    """sum of Minkowski step lengths; equals proper_time on A_n paths"""
    total = 0
    for index in path.steps:
        vector = axes.steps[index].vector
        total += minkowski_interval(LatticePoint((0,) * axes.d, 0), vector).value
    return total


def _slices(space, x: LatticePoint, delta_t: int, axes: AxesOfSymmetry, target: LatticePoint = None):
    """position -> count tables for every time offset 0..delta_t"""
    check = not _is_unbounded(space)
    table: List[Dict[Tuple[int, ...], int]] = [defaultdict(int) for _ in range(delta_t + 1)]
    if check and not contains(space, x):
        return table
    table[0][x.spatial] = 1
    for offset in range(1, delta_t + 1):
        slot = table[offset]
        time = x.time + offset
        for step in axes.steps:
            vector = step.vector
            if vector.time > offset:
                continue
            for position, count in table[offset - vector.time].items():
                following = tuple(p + v for p, v in zip(position, vector.spatial))
                if target is not None:
                    gap = sum(abs(a - b) for a, b in zip(target.spatial, following))
                    if gap > delta_t - offset:
                        continue
                if check and not contains(space, LatticePoint(following, time)):
                    continue
                slot[following] += count
    return table


def count_by_endpoint(space, x: LatticePoint, delta_t: int, axes: AxesOfSymmetry) -> Dict[LatticePoint, int]:
    """
    Args:\n
        space (SpaceSpec): lattice\n
        x (LatticePoint): source\n
        delta_t (int): elapsed time\n
        axes (AxesOfSymmetry): step set\n
    Returns:\n
        dict: endpoint -> path count (quotient endpoints in canonical form)\n
    """
    space = _resolve(space)
    if delta_t < 0:
        raise ReversedTime(delta_t)
    quotient = isinstance(space, (TorusSpace, KleinSpace))
    walk_space = FreeSpace(space.d) if quotient else space
    final = _slices(walk_space, x, delta_t, axes)[delta_t]
    result: Dict[LatticePoint, int] = defaultdict(int)
    for position, count in final.items():
        point = LatticePoint(position, x.time + delta_t)
        if quotient:
            point = canonical_rep(space, point)
        result[point] += count
    return dict(sorted(result.items()))


def path_count(space, x: LatticePoint, y: LatticePoint, axes: AxesOfSymmetry) -> int:
    """
    Args:\n
        space (SpaceSpec): lattice\n
        x (LatticePoint): source\n
        y (LatticePoint): target\n
        axes (AxesOfSymmetry): step set\n
    Returns:\n
        int: number of paths, by dynamic programming over (position, time)\n
    """
    space = _resolve(space)
    delta_t = _validate(space, x, y, axes)
    if isinstance(space, (TorusSpace, KleinSpace)):
        cover = FreeSpace(space.d)
        return sum(
            _slices(cover, x, delta_t, axes, image)[delta_t].get(image.spatial, 0)
            for image in causal_images(space, x, y)
        )
    return _slices(space, x, delta_t, axes, y)[delta_t].get(y.spatial, 0)
