"""
Static one dimensional Coulomb potential on the taxicab path phase and the
mass-spectrum diagnostic
"""
import cmath
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple, Union

import numpy as np

from latticeprop.lattice import FreeSpace, LatticePoint, RefinedSpace, origin
from latticeprop.metrics import axes_of_symmetry
from latticeprop.paths import enumerate_paths, vertices
from latticeprop.propagators.histogram import Amplitude, PhaseHistogram
from latticeprop.resources import constants as cns
from latticeprop.utils import data_format
from latticeprop.utils.exceptions import CapacityExceeded, ResolutionError, ReversedTime, UnsupportedSpace

log = logging.getLogger("root")

# (dx, proper length) of the three taxicab steps in one dimension
STEPS = ((-1, 0), (0, 1), (1, 0))


@dataclass(frozen=True)
class PotentialSpec:
    """Point charge at charge_position (physical units); coupling > 0 attracts"""

    charge_position: float
    coupling: float = 1.0


def coulomb_potential(x: float, spec: PotentialSpec) -> float:
    """
    Args:\n
        x (float): physical position\n
        spec (PotentialSpec): charge and coupling\n
    Returns:\n
        float: coupling * (-|x - x_q|)\n
    """
    return spec.coupling * -abs(x - spec.charge_position)


def _refinement(space) -> int:
    if isinstance(space, int):
        refinement = space
    elif isinstance(space, RefinedSpace):
        refinement = space.refinement
        space = space.base
    else:
        refinement = 1
    if not isinstance(space, int):
        if not isinstance(space, FreeSpace) or space.d != 1 or space.extents is not None:
            raise UnsupportedSpace("Coulomb propagator is defined on unbounded free space with d=1")
    if refinement < 1:
        raise ValueError("refinement must be >= 1")
    return refinement


def _check_steps(displacement: LatticePoint):
    if displacement.d != 1:
        raise UnsupportedSpace("Coulomb propagator is defined for d=1 only")
    if displacement.time < 0:
        raise ReversedTime(displacement.time)
    if displacement.time > cns.INTERACTING_MAX_STEPS:
        raise CapacityExceeded(
            f"transfer DP capped at {cns.INTERACTING_MAX_STEPS} lattice steps, got {displacement.time}"
        )


def step_phase(x_new: int, length: int, n: int, mass: float, spec: PotentialSpec) -> float:
    """m l / n - m V(x_new / n) / n, the phase of one step landing on x_new"""
    return mass * length / n - mass * coulomb_potential(x_new / n, spec) / n


def _transfer(steps: int, n: int, mass: float, spec: PotentialSpec) -> Tuple[np.ndarray, np.ndarray]:
    """amplitude at every lattice x after `steps` steps from the origin"""
    positions = np.arange(-steps, steps + 1)
    potential = -np.array([coulomb_potential(x / n, spec) for x in positions]) / n
    amplitude = np.zeros(len(positions), dtype=complex)
    amplitude[steps] = 1.0
    for _ in range(steps):
        following = np.zeros_like(amplitude)
        for dx, length in STEPS:
            shifted = np.roll(amplitude, dx)
            if dx > 0:
                shifted[:dx] = 0
            elif dx < 0:
                shifted[dx:] = 0
            following += shifted * np.exp(1j * mass * (length / n + potential))
        amplitude = following
    return positions, amplitude


def k_interacting(space, displacement: LatticePoint, mass: float, spec: PotentialSpec) -> Amplitude:
    """Taxicab propagator from the origin with the Coulomb phase added per step

    Args:
        space (RefinedSpace | FreeSpace | int): free d=1 space or its refinement n
        displacement (LatticePoint): (x,), t in lattice units at refinement n
        mass (float): m
        spec (PotentialSpec): charge and coupling

    Raises:
        CapacityExceeded: more steps than the transfer DP allows

    Returns:
        Amplitude: sum over paths of exp(i m (rho / n - sum V(x_i / n) / n))
    """
    n = _refinement(space)
    _check_steps(displacement)
    steps = displacement.time
    x = displacement.spatial[0]
    if abs(x) > steps:
        return Amplitude(0.0, 0.0)
    _, amplitude = _transfer(steps, n, mass, spec)
    return Amplitude.from_complex(complex(amplitude[x + steps]))


def k_interacting_oracle(space, displacement: LatticePoint, mass: float, spec: PotentialSpec) -> Amplitude:
    """literal path sum with exact potential totals, for small t"""
    n = _refinement(space)
    _check_steps(displacement)
    axes = axes_of_symmetry(1)
    total = 0j
    for path in enumerate_paths(FreeSpace(1), origin(1), displacement, axes):
        points = vertices(path, axes)
        phase = sum(
            step_phase(point.spatial[0], int(axes.steps[index].length), n, mass, spec)
            for index, point in zip(path.steps, points[1:])
        )
        total += cmath.exp(1j * phase)
    return Amplitude.from_complex(total)


class InteractingHistogram:
    """(rho, potential bucket) -> exact path count; reusable across masses

    The accumulated potential sum_i coupling |x_i - n x_q| is kept in multiples
    of `bucket`; the phase is m (rho / n + bucket * k / n^2).
    """

    def __init__(self, n: int, bucket: float, bins: Dict[Tuple[int, int], int], steps: int):
        self.n = n
        self.bucket = bucket
        self.bins = bins
        self.steps = steps

    def total(self) -> int:
        return sum(self.bins.values())

    def error_bound(self) -> float:
        """largest potential-phase error per unit mass from bucket rounding"""
        return self.steps * self.bucket / (2 * self.n * self.n)

    def _phases(self) -> Tuple[np.ndarray, np.ndarray]:
        keys = sorted(self.bins)
        angles = np.array([rho / self.n + self.bucket * k / self.n**2 for rho, k in keys])
        counts = np.array([float(self.bins[key]) for key in keys])
        return angles, counts

    def amplitude(self, mass: float) -> Amplitude:
        return Amplitude.from_complex(complex(self.amplitudes([mass])[0]))

    def amplitudes(self, masses: Sequence[float]) -> np.ndarray:
        if not self.bins:
            return np.zeros(len(masses), dtype=complex)
        angles, counts = self._phases()
        return np.exp(1j * np.outer(np.asarray(masses, dtype=float), angles)) @ counts


def interacting_histogram(
    space, displacement: LatticePoint, spec: PotentialSpec, bucket: float = 1 / cns.POTENTIAL_BUCKETS_PER_UNIT
) -> InteractingHistogram:
    """Joint histogram over proper time and bucketed potential, by DP over
    (position, rho, bucket)

    Args:
        space (RefinedSpace | FreeSpace | int): free d=1 space or its refinement n
        displacement (LatticePoint): (x,), t in lattice units
        spec (PotentialSpec): charge and coupling
        bucket (float, optional): potential quantum, in units of 1/n^2. Defaults to 1/8.

    Raises:
        ResolutionError: the DP needs more than MAX_POTENTIAL_BUCKETS states

    Returns:
        InteractingHistogram: bins reaching the target
    """
    if bucket <= 0:
        raise ValueError("bucket width must be positive")
    n = _refinement(space)
    _check_steps(displacement)
    charge = n * spec.charge_position
    table: Dict[int, Dict[Tuple[int, int], int]] = {0: {(0, 0): 1}}
    for _ in range(displacement.time):
        following: Dict[int, Dict[Tuple[int, int], int]] = defaultdict(lambda: defaultdict(int))
        for position, cells in table.items():
            for dx, length in STEPS:
                landing = position + dx
                quantum = round(spec.coupling * abs(landing - charge) / bucket)
                slot = following[landing]
                for (rho, k), count in cells.items():
                    slot[(rho + length, k + quantum)] += count
        states = sum(len(cells) for cells in following.values())
        if states > cns.MAX_POTENTIAL_BUCKETS:
            raise ResolutionError(states, bucket * states / cns.MAX_POTENTIAL_BUCKETS)
        table = following
    bins = dict(table.get(displacement.spatial[0], {}))
    log.info("interacting_histogram: %s bins at bucket %s", len(bins), bucket)
    return InteractingHistogram(n, bucket, bins, displacement.time)


def coulomb_profile(
    charge_position: float,
    mass: float,
    t: float,
    refinement: int,
    coupling: float = 1.0,
    response_type: str = "panda_df",
):
    """Coulomb and free propagators on every reachable x at physical time t

    Args:\n
        charge_position (float): x_q, physical units\n
        mass (float): m\n
        t (float): physical time\n
        refinement (int): n\n
        coupling (float, Optional): potential strength. Default 1.0\n
        response_type (str, Optional): define the response type panda_df | json. Default panda_df\n
    Returns:\n
        Pandas DataFrame: x, re, im, mag, free_mag\n
      or\n
        Json: same rows as records\n
    """
    n = _refinement(refinement)
    steps = int(round(n * t))
    _check_steps(LatticePoint((0,), steps))
    spec = PotentialSpec(charge_position, coupling)
    positions, amplitude = _transfer(steps, n, mass, spec)
    _, free = _transfer(steps, n, mass, PotentialSpec(charge_position, 0.0))
    rows = [
        {"x": x / n, "re": a.real, "im": a.imag, "mag": abs(a), "free_mag": abs(f)}
        for x, a, f in zip(positions.tolist(), amplitude, free)
    ]
    return data_format.table(rows, ["x", "re", "im", "mag", "free_mag"], response_type)


def mean_position(profile, column: str = "mag") -> float:
    """magnitude weighted mean of x over a profile table"""
    weights = np.asarray(profile[column], dtype=float)
    return float(np.dot(np.asarray(profile["x"], dtype=float), weights) / weights.sum())


Source = Union[PhaseHistogram, InteractingHistogram, Callable[[float], Amplitude]]


def mass_spectrum_scan(source: Source, m_grid: Sequence[float]) -> List[Tuple[float, float]]:
    """
    Args:\n
        source (PhaseHistogram | InteractingHistogram | Callable): propagator at fixed endpoints\n
        m_grid (Sequence[float]): sorted masses\n
    Returns:\n
        list: (m, |K(m)|) per grid entry\n
    """
    m_grid = [float(m) for m in m_grid]
    if any(b < a for a, b in zip(m_grid, m_grid[1:])):
        raise ValueError("m_grid must be sorted")
    if isinstance(source, (PhaseHistogram, InteractingHistogram)):
        magnitudes = np.abs(source.amplitudes(m_grid)).tolist()
    else:
        magnitudes = [abs(source(m)) for m in m_grid]
    return list(zip(m_grid, magnitudes))


def drift(profile) -> float:
    """mean position under the potential minus the free mean, from a coulomb_profile table"""
    return mean_position(profile, "mag") - mean_position(profile, "free_mag")
