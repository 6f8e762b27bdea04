"""
Discrete propagators, their normalization and the Cauchy diagnostic
"""
import logging
import math
from typing import Sequence

from latticeprop.lattice import FreeSpace, LatticePoint, RefinedSpace, TorusSpace, origin
from latticeprop.metrics import axes_of_symmetry
from latticeprop.paths import count_by_endpoint, enumeration_cap
from latticeprop.propagators.histogram import Amplitude, PhaseHistogram
from latticeprop.propagators.free import (
    k1_free, k1_free_histogram, kn_free, kn_free_histogram, kn_feynman,
    kn_feynman_histogram, k_oracle, k_oracle_histogram)
from latticeprop.propagators.quotient import (
    k1_torus, k1_torus_histogram, k1_klein, k1_klein_histogram, k1_desitter,
    k1_desitter_histogram, quotient_walk_histogram)
from latticeprop.resources import constants as cns
from latticeprop.utils import data_format
from latticeprop.utils.exceptions import CapacityExceeded, UnsupportedSpace

log = logging.getLogger("root")


def normalization_gp(n: int, t: int, d: int = 1) -> float:
    """G_p = (t / t_avg)^(|A_n| / 4 pi) times the largest path count at time t

    Args:
        n (int): polygon order
        t (int): elapsed lattice time, > 0
        d (int, optional): spatial dimension (d > 1 needs n = 1). Defaults to 1.

    Returns:
        float: normalization constant
    """
    if t <= 0:
        raise ValueError("normalization needs t > 0")
    axes = axes_of_symmetry(n, d)
    counts = count_by_endpoint(FreeSpace(d), origin(d), t, axes)
    peak = max(counts.values())
    exponent = len(axes) / (4 * math.pi)
    return (t / float(axes.time_average)) ** exponent * peak


def cauchy_diagnostic(p: int, q: int, t: int, grid: Sequence[int], mass: float = cns.DEFAULT_MASS) -> float:
    """sup over the grid of |K_p / G_p - K_q / G_q| at time t

    Args:
        p (int): coarser polygon order
        q (int): finer polygon order, q >= p
        t (int): lattice time, within the d=1 enumeration cap
        grid (Sequence[int]): lattice x positions
        mass (float, optional): m. Defaults to DEFAULT_MASS.

    Raises:
        CapacityExceeded: t above the cap

    Returns:
        float: raw sup-norm difference
    """
    if p > q:
        raise ValueError(f"expected p <= q, got p={p}, q={q}")
    cap = enumeration_cap(1)
    if t > cap:
        raise CapacityExceeded(f"cauchy diagnostic runs at t <= {cap}, got {t}")
    if p == q:
        return 0.0
    coarse, fine = normalization_gp(p, t), normalization_gp(q, t)
    value = 0.0
    for x in grid:
        displacement = LatticePoint((x,), t)
        gap = kn_free(p, displacement, mass).value / coarse - kn_free(q, displacement, mass).value / fine
        value = max(value, abs(gap))
    log.info("cauchy diagnostic: p=%s q=%s t=%s min order=%s value=%s", p, q, t, min(p, q), value)
    return value


def cauchy_trend(values: Sequence[float], slack: float = cns.CAUCHY_TREND_SLACK) -> list:
    """
    Positions where a Cauchy value grows against its predecessor.

    Values are consecutive diagnostics at one time, ordered by increasing
    polygon order. Inversions are logged as warnings, never raised: at small t
    the large triples cannot fit, so K_q stops changing while G_q still does.

    Args:
        values (Sequence[float]): diagnostic values in order
        slack (float, optional): allowed growth factor. Defaults to CAUCHY_TREND_SLACK.

    Returns:
        list: indices j with values[j] > slack * values[j - 1]
    """
    inversions = []
    for j in range(1, len(values)):
        if values[j] > slack * values[j - 1]:
            log.warning(
                "cauchy trend inverted at position %s: %.6g after %.6g (ratio %.3g)",
                j, values[j], values[j - 1], values[j] / values[j - 1] if values[j - 1] else math.inf,
            )
            inversions.append(j)
    return inversions


def _line_space(space):
    if isinstance(space, RefinedSpace):
        space = space.resolved()
    if isinstance(space, TorusSpace) and space.d == 1:
        return space
    if not isinstance(space, FreeSpace) or space.extents is not None:
        raise UnsupportedSpace(f"no line profile on {space.kind}")
    return space


def profile_grid(space, t: int) -> list:
    """lattice x values of a line profile at time t"""
    space = _line_space(space)
    if isinstance(space, TorusSpace):
        half = space.extents[0]
        return list(range(-half + 1, half + 1))
    return list(range(-t, t + 1))


def profile_histogram(space, n: int, t: int, x: int, variant: str = "standard") -> PhaseHistogram:
    """
    Args:\n
        space (SpaceSpec): unbounded free space or a d=1 torus\n
        n (int): polygon order\n
        t (int): lattice time\n
        x (int): position along the first spatial axis\n
        variant (str, Optional): standard | feynman. Default standard\n
    Returns:\n
        PhaseHistogram: propagator from the origin to (x, 0, ..., 0; t)\n
    """
    space = _line_space(space)
    if variant not in ("standard", "feynman"):
        raise ValueError(f"variant must be standard or feynman, got {variant!r}")
    if isinstance(space, TorusSpace):
        if n != 1 or variant != "standard":
            raise UnsupportedSpace("torus profiles use the taxicab propagator")
        return k1_torus_histogram(space, origin(1), LatticePoint((x,), t))
    target = LatticePoint((x,) + (0,) * (space.d - 1), t)
    if variant == "feynman":
        return kn_feynman_histogram(n, target)
    if n == 1:
        return k1_free_histogram(space.d, target)
    return kn_free_histogram(n, target)


def propagator_profile(space, n: int, t: int, mass: float, variant: str = "standard", response_type: str = "panda_df"):
    """
    Args:\n
        space (SpaceSpec): free space (any d, n > 1 only for d = 1) or a d=1 torus\n
        n (int): polygon order\n
        t (int): lattice time\n
        mass (float): m\n
        variant (str, Optional): standard | feynman. Default standard\n
        response_type (str, Optional): define the response type panda_df | json. Default panda_df\n
    Returns:\n
        Pandas DataFrame: x, re, im, mag\n
      or\n
        Json: same rows as records\n
    """
    xs = profile_grid(space, t)
    amplitudes = [profile_histogram(space, n, t, x, variant).amplitude(mass) for x in xs]
    return data_format.table(
        data_format.amplitude_rows(xs, amplitudes), ["x", "re", "im", "mag"], response_type
    )


__all__ = [
    "Amplitude",
    "PhaseHistogram",
    "k1_free",
    "k1_free_histogram",
    "kn_free",
    "kn_free_histogram",
    "kn_feynman",
    "kn_feynman_histogram",
    "k_oracle",
    "k_oracle_histogram",
    "k1_torus",
    "k1_torus_histogram",
    "k1_klein",
    "k1_klein_histogram",
    "k1_desitter",
    "k1_desitter_histogram",
    "quotient_walk_histogram",
    "normalization_gp",
    "cauchy_diagnostic",
    "cauchy_trend",
    "profile_grid",
    "profile_histogram",
    "propagator_profile",
]
