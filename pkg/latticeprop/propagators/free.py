"""
Free-space propagators: closed sums for K_1 and K_n, the Feynman variant and
the literal path-sum oracle
"""
import logging
import math
from collections import defaultdict
from typing import Dict, Iterator, List, Tuple

from latticeprop import utils
from latticeprop.lattice import LatticePoint
from latticeprop.metrics import AxesOfSymmetry, axes_of_symmetry
from latticeprop.paths import enumerate_paths
from latticeprop.propagators.histogram import Amplitude, PhaseHistogram
from latticeprop.resources import constants as cns
from latticeprop.utils.exceptions import CapacityExceeded, DimensionMismatch, ReversedTime

log = logging.getLogger("root")


def _check_displacement(d: int, displacement: LatticePoint):
    if displacement.d != d:
        raise DimensionMismatch(f"displacement has d={displacement.d}, expected d={d}")
    if displacement.time < 0:
        raise ReversedTime(displacement.time)


def k1_free_histogram(d: int, displacement: LatticePoint) -> PhaseHistogram:
    """Taxicab propagator on Z^d as a histogram over rho = t - I

    Args:
        d (int): spatial dimension
        displacement (LatticePoint): delta x, delta t

    Returns:
        PhaseHistogram: t! / (prod I_i! (I_i - |x_i|)! (t - I)!) summed per I
    """
    _check_displacement(d, displacement)
    t = displacement.time
    reach = [abs(x) for x in displacement.spatial]
    taxicab = sum(reach)
    histogram = PhaseHistogram()
    if taxicab > t:
        return histogram
    t_factorial = math.factorial(t)
    # I runs over the parity class of |x|_1
    for moving in range(taxicab, t + 1, 2):
        forward = (moving + taxicab) // 2
        for spare in utils.compositions(forward - taxicab, d):
            denominator = math.factorial(t - moving)
            for extra, minimum in zip(spare, reach):
                denominator *= math.factorial(minimum + extra) * math.factorial(extra)
            histogram.add(t - moving, t_factorial // denominator)
    return histogram


def k1_free(d: int, displacement: LatticePoint, mass: float) -> Amplitude:
    """
    Args:\n
        d (int): spatial dimension\n
        displacement (LatticePoint): delta x, delta t\n
        mass (float): m, radians per unit proper time\n
    Returns:\n
        Amplitude: sum over taxicab paths of exp(i m rho)\n
    """
    return k1_free_histogram(d, displacement).amplitude(mass)


def _order_axes(n: int) -> AxesOfSymmetry:
    if n < 1:
        raise ValueError("polygon order must be positive")
    if n > cns.KN_MAX_ORDER:
        raise CapacityExceeded(f"K_n is supported for n <= {cns.KN_MAX_ORDER}, got {n}")
    return axes_of_symmetry(n, 1)


def _special_indices(axes: AxesOfSymmetry) -> Tuple[int, int, int]:
    """indices of (-1,1), (1,1) and (0,1)"""
    return (
        axes.index_of(LatticePoint((-1,), 1)),
        axes.index_of(LatticePoint((1,), 1)),
        axes.center,
    )


def _tallies(steps: List[Tuple[int, int, int]], budget: int) -> Iterator[Tuple[int, ...]]:
    """count vectors over the non-special steps with sum I_a t_a <= budget"""
    if not steps:
        yield ()
        return
    head, rest = steps[0], steps[1:]
    for count in range(budget // head[1] + 1):
        for tail in _tallies(rest, budget - count * head[1]):
            yield (count,) + tail


def _solved_tallies(n: int, displacement: LatticePoint):
    """Yield (tally, lengths, I_-, I_+, I_centre, rho) for every admissible
    assignment; I_± and I_centre are solved from the tally and rho."""
    _check_displacement(1, displacement)
    axes = _order_axes(n)
    specials = set(_special_indices(axes))
    others = [
        (int(step.vector.spatial[0]), int(step.vector.time), int(step.length))
        for index, step in enumerate(axes.steps)
        if index not in specials
    ]
    x, t = displacement.spatial[0], displacement.time
    for tally in _tallies(others, t):
        used_t = sum(c * s[1] for c, s in zip(tally, others))
        used_x = sum(c * s[0] for c, s in zip(tally, others))
        length = sum(c * s[2] for c, s in zip(tally, others))
        free_t, free_x = t - used_t, x - used_x
        for rho in range(length, length + free_t + 1):
            centre = rho - length
            twice_plus = free_t + free_x - centre
            twice_minus = free_t - free_x - centre
            if twice_plus < 0 or twice_minus < 0 or twice_plus % 2:
                continue
            yield tally, [s[2] for s in others], twice_minus // 2, twice_plus // 2, centre, rho


def kn_free_histogram(n: int, displacement: LatticePoint) -> PhaseHistogram:
    """K_n in one spatial dimension, grouped by proper time

    Args:
        n (int): polygon order, 1 <= n <= KN_MAX_ORDER
        displacement (LatticePoint): (delta x,), delta t

    Returns:
        PhaseHistogram: multinomial weight of every solved tally at its rho
    """
    histogram = PhaseHistogram()
    for tally, _, minus, plus, centre, rho in _solved_tallies(n, displacement):
        histogram.add(rho, utils.multinomial(tally + (minus, plus, centre)))
    return histogram


def kn_free(n: int, displacement: LatticePoint, mass: float) -> Amplitude:
    return kn_free_histogram(n, displacement).amplitude(mass)


def _sign_split(distribution: Dict[int, int], count: int, length: int) -> Dict[int, int]:
    """convolve with count independent ±length choices"""
    if count == 0 or length == 0:
        return distribution
    result: Dict[int, int] = defaultdict(int)
    for value, weight in distribution.items():
        for negatives in range(count + 1):
            result[value + length * (count - 2 * negatives)] += weight * math.comb(count, negatives)
    return result


def kn_feynman_histogram(n: int, displacement: LatticePoint) -> PhaseHistogram:
    """K_n with every non-null step carrying ± its length

    Args:
        n (int): polygon order
        displacement (LatticePoint): (delta x,), delta t

    Returns:
        PhaseHistogram: symmetric histogram over signed proper time
    """
    histogram = PhaseHistogram()
    for tally, lengths, minus, plus, centre, _ in _solved_tallies(n, displacement):
        weight = utils.multinomial(tally + (minus, plus, centre))
        distribution: Dict[int, int] = {0: 1}
        for count, length in zip(tally, lengths):
            distribution = _sign_split(distribution, count, length)
        distribution = _sign_split(distribution, centre, 1)
        for rho, multiplicity in distribution.items():
            histogram.add(rho, weight * multiplicity)
    return histogram


def kn_feynman(n: int, displacement: LatticePoint, mass: float) -> Amplitude:
    return kn_feynman_histogram(n, displacement).amplitude(mass)


def k_oracle_histogram(space, x: LatticePoint, y: LatticePoint, axes: AxesOfSymmetry, variant: str = "standard") -> PhaseHistogram:
    """Literal sum over enumerated paths

    Args:
        space (SpaceSpec): lattice
        x (LatticePoint): source
        y (LatticePoint): target
        axes (AxesOfSymmetry): step set
        variant (str, optional): standard | feynman. Defaults to "standard".

    Raises:
        CapacityExceeded: delta t above the enumeration cap

    Returns:
        PhaseHistogram: one entry per path (per sign assignment for feynman)
    """
    if variant not in ("standard", "feynman"):
        raise ValueError(f"variant must be standard or feynman, got {variant!r}")
    histogram = PhaseHistogram()
    paths = enumerate_paths(space, x, y, axes)
    for path in paths:
        lengths = [axes.steps[index].length for index in path.steps]
        if variant == "standard":
            histogram.add(sum(lengths))
            continue
        distribution = {0: 1}
        for length in lengths:
            distribution = _sign_split(distribution, 1, length)
        for rho, multiplicity in distribution.items():
            histogram.add(rho, multiplicity)
    log.debug("k_oracle: %s paths, %s bins", len(paths), len(histogram.bins))
    return histogram


def k_oracle(space, x: LatticePoint, y: LatticePoint, axes: AxesOfSymmetry, mass: float, variant: str = "standard") -> Amplitude:
    return k_oracle_histogram(space, x, y, axes, variant).amplitude(mass)
