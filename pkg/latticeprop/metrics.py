"""
Minkowski, taxicab and polygonal metrics; primitive triples and axes of symmetry
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from latticeprop.lattice import LatticePoint
from latticeprop.utils import data_format
from latticeprop.utils.exceptions import DimensionMismatch, UnsupportedSpace

log = logging.getLogger("root")

Number = Union[int, Fraction, float]


@dataclass(frozen=True)
class CausalInterval:
    """Interval length, or None for an acausal displacement"""

    value: Optional[Number]

    @property
    def is_causal(self) -> bool:
        return self.value is not None

    def __float__(self):
        if self.value is None:
            raise ValueError("acausal interval has no length")
        return float(self.value)


ACAUSAL = CausalInterval(None)


def _delta(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    if a.d != b.d:
        raise DimensionMismatch(f"cannot measure between d={a.d} and d={b.d}")
    return b - a


def _exact_sqrt(radicand: Number) -> Number:
    if isinstance(radicand, int):
        root = math.isqrt(radicand)
        if root * root == radicand:
            return root
    return math.sqrt(radicand)


def minkowski_interval(a: LatticePoint, b: LatticePoint) -> CausalInterval:
    """
    Args:\n
        a (LatticePoint): start\n
        b (LatticePoint): end\n
    Returns:\n
        CausalInterval: sqrt(dt^2 - sum dx^2), exact when it is an integer\n
    """
    delta = _delta(a, b)
    radicand = delta.time**2 - sum(x * x for x in delta.spatial)
    if radicand < 0:
        return ACAUSAL
    return CausalInterval(_exact_sqrt(radicand))


def euclidean_interval(a: LatticePoint, b: LatticePoint) -> CausalInterval:
    delta = _delta(a, b)
    return CausalInterval(_exact_sqrt(delta.time**2 + sum(x * x for x in delta.spatial)))


def taxicab_interval(a: LatticePoint, b: LatticePoint) -> CausalInterval:
    """
    Args:\n
        a (LatticePoint): start\n
        b (LatticePoint): end\n
    Returns:\n
        CausalInterval: |dt| - sum |dx_i|\n
    """
    delta = _delta(a, b)
    value = abs(delta.time) - delta.l1()
    return CausalInterval(value) if value >= 0 else ACAUSAL


@dataclass(frozen=True)
class PrimitiveTriple:
    """leg_x^2 + leg_i^2 = hyp^2 with leg_x < leg_i"""

    leg_x: int
    leg_i: int
    hyp: int

    def __iter__(self):
        return iter((self.leg_x, self.leg_i, self.hyp))


def primitive_triples(n: int) -> list:
    """
    Args:\n
        n (int): largest hypotenuse\n
    Returns:\n
        list: every primitive triple with hyp <= n, sorted by hyp then leg_x\n
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    triples = []
    m = 2
    while m * m + 1 <= n:
        for k in range(1, m):
            hyp = m * m + k * k
            if hyp > n:
                break
            if (m - k) % 2 == 0 or math.gcd(m, k) != 1:
                continue
            odd_leg, even_leg = m * m - k * k, 2 * m * k
            triples.append(PrimitiveTriple(min(odd_leg, even_leg), max(odd_leg, even_leg), hyp))
        m += 1
    triples.sort(key=lambda triple: (triple.hyp, triple.leg_x))
    log.debug("primitive_triples(%s): %s triples", n, len(triples))
    return triples


@dataclass(frozen=True)
class AxisStep:
    """Integer causal step and its d_n proper length"""

    vector: LatticePoint
    length: Fraction

    @property
    def is_null(self) -> bool:
        return self.length == 0


@dataclass(frozen=True)
class AxesOfSymmetry:
    """Step set A_n ordered with the rest step at the centre index

    chords holds, per consecutive pair of scaled non-null vertices, the
    coefficients (alpha, beta) of the functional alpha*t + beta*x that equals 1
    on both vertices; outer is the slope-one functional past the last vertex.
    """

    order: int
    d: int
    steps: Tuple[AxisStep, ...]
    chords: Tuple[Tuple[Fraction, Fraction], ...] = field(default=(), repr=False)
    outer: Fraction = field(default=Fraction(1), repr=False)

    def __len__(self):
        return len(self.steps)

    @property
    def center(self) -> Optional[int]:
        rest = LatticePoint((0,) * self.d, 1)
        for index, step in enumerate(self.steps):
            if step.vector == rest:
                return index
        return None

    @property
    def time_average(self) -> Fraction:
        return Fraction(sum(step.vector.time for step in self.steps), len(self.steps))

    def index_of(self, vector: LatticePoint) -> int:
        for index, step in enumerate(self.steps):
            if step.vector == vector:
                return index
        raise KeyError(vector)

    def is_null(self, index: int) -> bool:
        return self.steps[index].is_null


def _unit(d: int, axis: int, sign: int) -> Tuple[int, ...]:
    return tuple(sign if i == axis else 0 for i in range(d))


def _taxicab_steps(d: int, with_rest: bool = True) -> Tuple[AxisStep, ...]:
    negatives = [AxisStep(LatticePoint(_unit(d, axis, -1), 1), Fraction(0)) for axis in reversed(range(d))]
    positives = [AxisStep(LatticePoint(_unit(d, axis, 1), 1), Fraction(0)) for axis in range(d)]
    rest = [AxisStep(LatticePoint((0,) * d, 1), Fraction(1))] if with_rest else []
    return tuple(negatives + rest + positives)


def _chord(left: Tuple[Fraction, Fraction], right: Tuple[Fraction, Fraction]):
    (x1, t1), (x2, t2) = left, right
    denominator = t1 * x2 - x1 * t2
    return (x2 - x1) / denominator, -(t2 - t1) / denominator


def axes_of_symmetry(n: int, d: int = 1) -> AxesOfSymmetry:
    """A_n: null steps, the rest step and both orientations of every
    primitive triple with hyp <= n

    Args:
        n (int): polygon order
        d (int, optional): spatial dimension. Defaults to 1.

    Raises:
        UnsupportedSpace: n >= 2 in more than one spatial dimension

    Returns:
        AxesOfSymmetry: ordered step set with precomputed chord functionals
    """
    if n < 1 or d < 1:
        raise ValueError("order and dimension must be positive")
    if n == 1 or d > 1:
        if d > 1 and n > 1:
            raise UnsupportedSpace(f"no polygonal metric of order {n} in d={d}")
        return AxesOfSymmetry(order=n, d=d, steps=_taxicab_steps(d))

    steps = list(_taxicab_steps(1))
    for triple in primitive_triples(n):
        for leg, other in ((triple.leg_x, triple.leg_i), (triple.leg_i, triple.leg_x)):
            for sign in (-1, 1):
                steps.append(AxisStep(LatticePoint((sign * leg,), triple.hyp), Fraction(other)))
    steps.sort(key=lambda step: Fraction(step.vector.spatial[0], step.vector.time))

    vertices = [
        (Fraction(s.vector.spatial[0]) / s.length, Fraction(s.vector.time) / s.length)
        for s in steps
        if not s.is_null
    ]
    chords = tuple(_chord(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1))
    x_edge, t_edge = vertices[-1]
    axes = AxesOfSymmetry(
        order=n, d=1, steps=tuple(steps), chords=chords, outer=1 / (t_edge - abs(x_edge))
    )
    log.debug("axes_of_symmetry(%s): %s steps, %s chords", n, len(axes), len(chords))
    return axes


def null_steps(d: int) -> AxesOfSymmetry:
    """Light-like steps only; the step set of the tropical de-Sitter lattice"""
    return AxesOfSymmetry(order=1, d=d, steps=_taxicab_steps(d, with_rest=False))


def polygonal_interval(axes: AxesOfSymmetry, a: LatticePoint, b: LatticePoint) -> CausalInterval:
    """
    Args:\n
        axes (AxesOfSymmetry): A_n defining d_n\n
        a (LatticePoint): start\n
        b (LatticePoint): end\n
    Returns:\n
        CausalInterval: exact d_n length, or ACAUSAL\n
    """
    delta = _delta(a, b)
    if delta.d != axes.d:
        raise DimensionMismatch(f"axes are for d={axes.d}, displacement has d={delta.d}")
    if not axes.chords:
        return taxicab_interval(a, b)
    x, t = Fraction(delta.spatial[0]), Fraction(abs(delta.time))
    value = axes.outer * (t - abs(x))
    for alpha, beta in axes.chords:
        value = min(value, alpha * t + beta * x)
    if value < 0:
        return ACAUSAL
    return CausalInterval(value)


def triples_table(n: int, response_type: str = "panda_df"):
    """
    Args:\n
        n (int): largest hypotenuse\n
        response_type (str, Optional): define the response type panda_df | json. Default panda_df\n
    Returns:\n
        Pandas DataFrame: leg_x, leg_i, hyp per primitive triple\n
      or\n
        Json: same rows as records\n
    """
    rows = [dict(zip(("leg_x", "leg_i", "hyp"), triple)) for triple in primitive_triples(n)]
    return data_format.table(rows, ["leg_x", "leg_i", "hyp"], response_type)


def metric_table(n: int, max_t: int, response_type: str = "panda_df"):
    """
    Args:\n
        n (int): polygon order\n
        max_t (int): largest dt on the causal grid |dx| <= dt\n
        response_type (str, Optional): define the response type panda_df | json. Default panda_df\n
    Returns:\n
        Pandas DataFrame: dx, dt, minkowski, taxicab, polygonal\n
      or\n
        Json: same rows as records\n
    """
    axes = axes_of_symmetry(n, 1)
    start = LatticePoint((0,), 0)
    rows = []
    for dt in range(max_t + 1):
        for dx in range(-dt, dt + 1):
            end = LatticePoint((dx,), dt)
            rows.append(
                {
                    "dx": dx,
                    "dt": dt,
                    "minkowski": float(minkowski_interval(start, end)),
                    "taxicab": float(taxicab_interval(start, end)),
                    "polygonal": float(polygonal_interval(axes, start, end)),
                }
            )
    return data_format.table(rows, ["dx", "dt", "minkowski", "taxicab", "polygonal"], response_type)
