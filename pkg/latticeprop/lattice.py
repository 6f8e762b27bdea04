"""
Lattice spaces, point arithmetic, refinement and covering-space images
"""
import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple, Union

from latticeprop.utils import round_half_away
from latticeprop.utils.exceptions import DimensionMismatch, ReversedTime, UnsupportedSpace

log = logging.getLogger("root")


@dataclass(frozen=True, order=True)
class LatticePoint:
    """Integer spatial vector plus integer time, both in lattice units"""

    spatial: Tuple[int, ...]
    time: int = 0

    def __post_init__(self):
        object.__setattr__(self, "spatial", tuple(int(x) for x in self.spatial))
        object.__setattr__(self, "time", int(self.time))

    @property
    def d(self) -> int:
        return len(self.spatial)

    def proj_x(self, axis: int) -> int:
        return self.spatial[axis]

    @property
    def proj_t(self) -> int:
        return self.time

    def l1(self) -> int:
        """taxicab length of the spatial part"""
        return sum(abs(x) for x in self.spatial)

    def _check(self, other: "LatticePoint"):
        if other.d != self.d:
            raise DimensionMismatch(f"cannot combine d={self.d} with d={other.d}")

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        self._check(other)
        return LatticePoint(
            tuple(a + b for a, b in zip(self.spatial, other.spatial)), self.time + other.time
        )

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        self._check(other)
        return LatticePoint(
            tuple(a - b for a, b in zip(self.spatial, other.spatial)), self.time - other.time
        )

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(tuple(-x for x in self.spatial), -self.time)

    def scaled(self, factor: int) -> "LatticePoint":
        return LatticePoint(tuple(factor * x for x in self.spatial), factor * self.time)


def origin(d: int) -> LatticePoint:
    return LatticePoint((0,) * d, 0)


def _positive_extents(extents: Sequence[int], name: str) -> Tuple[int, ...]:
    extents = tuple(int(x) for x in extents)
    if not extents or any(x <= 0 for x in extents):
        raise ValueError(f"{name} extents must be strictly positive, got {extents}")
    return extents


@dataclass(frozen=True)
class FreeSpace:
    """Z^d x Z, optionally cut to |x_i| <= L_i"""

    d: int
    extents: Optional[Tuple[int, ...]] = None
    kind: str = field(default="free", init=False)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("spatial dimension must be positive")
        if self.extents is not None:
            extents = _positive_extents(self.extents, "Free")
            if len(extents) != self.d:
                raise DimensionMismatch(f"{len(extents)} extents given for d={self.d}")
            object.__setattr__(self, "extents", extents)


@dataclass(frozen=True)
class TorusSpace:
    """Box of half-widths L_i with opposite faces identified"""

    extents: Tuple[int, ...]
    kind: str = field(default="torus", init=False)

    def __post_init__(self):
        object.__setattr__(self, "extents", _positive_extents(self.extents, "Torus"))

    @property
    def d(self) -> int:
        return len(self.extents)


@dataclass(frozen=True)
class KleinSpace:
    """Two-dimensional box where every x_1 wrap reflects x_2"""

    l1: int
    l2: int
    kind: str = field(default="klein", init=False)

    def __post_init__(self):
        _positive_extents((self.l1, self.l2), "Klein")

    @property
    def d(self) -> int:
        return 2

    @property
    def extents(self) -> Tuple[int, int]:
        return (self.l1, self.l2)


@dataclass(frozen=True)
class TropicalDeSitterSpace:
    """Zero set of -d_1(0, x) - c, i.e. sum |x_i| - |t| = c"""

    d: int
    c: int = 0
    kind: str = field(default="desitter", init=False)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("spatial dimension must be positive")
        if self.c < 0:
            raise ValueError("tropical constant c must be nonnegative")

    @property
    def extents(self):
        return None


SpaceSpec = Union[FreeSpace, TorusSpace, KleinSpace, TropicalDeSitterSpace]


@dataclass(frozen=True)
class RefinedSpace:
    """X|_m: extents scaled by m, tropical constant untouched"""

    base: SpaceSpec
    refinement: int = 1

    def __post_init__(self):
        if self.refinement < 1:
            raise ValueError("refinement must be >= 1")

    @property
    def d(self) -> int:
        return self.base.d

    def resolved(self) -> SpaceSpec:
        m = self.refinement
        if m == 1:
            return self.base
        base = self.base
        if isinstance(base, FreeSpace):
            extents = None if base.extents is None else tuple(m * x for x in base.extents)
            return FreeSpace(base.d, extents)
        if isinstance(base, TorusSpace):
            return TorusSpace(tuple(m * x for x in base.extents))
        if isinstance(base, KleinSpace):
            return KleinSpace(m * base.l1, m * base.l2)
        return base


def refine(space: SpaceSpec, m: int) -> SpaceSpec:
    return RefinedSpace(space, m).resolved()


def _check_dim(space, p: LatticePoint):
    if p.d != space.d:
        raise DimensionMismatch(f"point has {p.d} spatial coordinates, space has d={space.d}")


def contains(space: SpaceSpec, p: LatticePoint) -> bool:
    """
    Args:\n
        space (SpaceSpec): lattice geometry\n
        p (LatticePoint): point\n
    Returns:\n
        bool: membership in the space's point set\n
    """
    if isinstance(space, RefinedSpace):
        space = space.resolved()
    _check_dim(space, p)
    if isinstance(space, FreeSpace):
        if space.extents is None:
            return True
        return all(abs(x) <= ext for x, ext in zip(p.spatial, space.extents))
    if isinstance(space, (TorusSpace, KleinSpace)):
        # every point has a representative in the fundamental domain
        return True
    return p.l1() - abs(p.time) == space.c


def closest_point(space, v: Sequence[float], time: float) -> LatticePoint:
    """
    Args:\n
        space (RefinedSpace | SpaceSpec): target lattice\n
        v (Sequence[float]): real spatial coordinates in lattice units\n
        time (float): real time\n
    Returns:\n
        LatticePoint: componentwise nearest point, ties away from zero, clamped to finite extents\n
    """
    if not isinstance(space, RefinedSpace):
        space = RefinedSpace(space, 1)
    resolved = space.resolved()
    if len(v) != resolved.d:
        raise DimensionMismatch(f"{len(v)} coordinates given for d={resolved.d}")
    spatial = [round_half_away(x) for x in v]
    extents = getattr(resolved, "extents", None)
    if extents is not None:
        spatial = [max(-ext, min(ext, x)) for x, ext in zip(spatial, extents)]
    return LatticePoint(tuple(spatial), round_half_away(time))


def scale_to_lattice(space: RefinedSpace, v: Sequence[float], time: float) -> LatticePoint:
    """[m x], the image of a physical point in X|_m"""
    m = space.refinement
    return closest_point(space, [m * x for x in v], m * time)


def _wrap(x: int, half_width: int) -> Tuple[int, int]:
    """reduce into (-L, L]; returns (representative, number of wraps)"""
    period = 2 * half_width
    wraps = (x + half_width - 1) // period
    return x - wraps * period, wraps


def canonical_rep(space: SpaceSpec, p: LatticePoint) -> LatticePoint:
    """
    Args:\n
        space (TorusSpace | KleinSpace): identified box\n
        p (LatticePoint): any point of the cover\n
    Returns:\n
        LatticePoint: representative with every coordinate in (-L_i, L_i]\n
    """
    if isinstance(space, RefinedSpace):
        space = space.resolved()
    if isinstance(space, TorusSpace):
        _check_dim(space, p)
        return LatticePoint(
            tuple(_wrap(x, ext)[0] for x, ext in zip(p.spatial, space.extents)), p.time
        )
    if isinstance(space, KleinSpace):
        _check_dim(space, p)
        x1, wraps = _wrap(p.spatial[0], space.l1)
        x2 = p.spatial[1] if wraps % 2 == 0 else -p.spatial[1]
        x2, _ = _wrap(x2, space.l2)
        return LatticePoint((x1, x2), p.time)
    raise UnsupportedSpace(f"canonical_rep is defined for torus and klein, not {space.kind}")


def _window(delta_t: int, half_width: int, centre: int) -> range:
    reach = math.ceil(delta_t / (2 * half_width)) + 1
    return range(centre - reach, centre + reach + 1)


def _centre(src: int, base: int, half_width: int) -> int:
    return round((src - base) / (2 * half_width))


def causal_images(space: SpaceSpec, src: LatticePoint, dst: LatticePoint) -> list:
    """Lifts of dst to the universal cover lying inside the causal cone of src

    Args:
        space (TorusSpace | KleinSpace): quotient space
        src (LatticePoint): source point on the cover
        dst (LatticePoint): target point, any representative

    Raises:
        ReversedTime: dst.time < src.time
        UnsupportedSpace: space has no covering map

    Returns:
        list: lifts dst' with |dst' - src|_1 <= delta t, sorted
    """
    if isinstance(space, RefinedSpace):
        space = space.resolved()
    if not isinstance(space, (TorusSpace, KleinSpace)):
        raise UnsupportedSpace(f"causal_images needs torus or klein, not {space.kind}")
    _check_dim(space, src)
    _check_dim(space, dst)
    delta_t = dst.time - src.time
    if delta_t < 0:
        raise ReversedTime(delta_t)

    lifts = set()
    if isinstance(space, TorusSpace):
        windows = [
            _window(delta_t, ext, _centre(s, b, ext))
            for s, b, ext in zip(src.spatial, dst.spatial, space.extents)
        ]
        for shifts in itertools.product(*windows):
            spatial = tuple(b + 2 * k * ext for b, k, ext in zip(dst.spatial, shifts, space.extents))
            lifts.add(LatticePoint(spatial, dst.time))
    else:
        l1, l2 = space.extents
        for k1 in _window(delta_t, l1, _centre(src.spatial[0], dst.spatial[0], l1)):
            x2 = dst.spatial[1] if k1 % 2 == 0 else -dst.spatial[1]
            for k2 in _window(delta_t, l2, _centre(src.spatial[1], x2, l2)):
                lifts.add(LatticePoint((dst.spatial[0] + 2 * k1 * l1, x2 + 2 * k2 * l2), dst.time))

    images = sorted(p for p in lifts if (p - src).l1() <= delta_t)
    log.debug("causal_images: %s lifts of %s inside the cone of %s", len(images), dst, src)
    return images
