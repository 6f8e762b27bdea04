"""
Amplitude and exact phase histograms
"""
import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class Amplitude:
    """Complex propagator value"""

    re: float
    im: float

    @classmethod
    def from_complex(cls, value: complex) -> "Amplitude":
        return cls(float(value.real), float(value.imag))

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return abs(self.value)

    def isclose(self, other, tol: float = 1e-9) -> bool:
        other = other.value if isinstance(other, Amplitude) else complex(other)
        return abs(self.value - other) <= tol * max(1.0, abs(other))


class PhaseHistogram:
    """Proper time -> exact path count; one histogram serves every mass"""

    def __init__(self, bins: Dict = None):
        self.bins: Dict[Fraction, int] = {}
        for rho, count in (bins or {}).items():
            self.add(rho, count)

    def add(self, rho, count: int = 1) -> None:
        if count == 0:
            return
        key = Fraction(rho)
        total = self.bins.get(key, 0) + count
        if total:
            self.bins[key] = total
        else:
            del self.bins[key]

    def merge(self, other: "PhaseHistogram") -> "PhaseHistogram":
        for rho, count in other.bins.items():
            self.add(rho, count)
        return self

    def total(self) -> int:
        return sum(self.bins.values())

    def items(self) -> Iterable:
        return sorted(self.bins.items())

    def amplitude(self, mass: float) -> Amplitude:
        value = sum(count * cmath.exp(1j * mass * float(rho)) for rho, count in self.items())
        return Amplitude.from_complex(complex(value))

    def amplitudes(self, masses: Sequence[float]) -> np.ndarray:
        """complex amplitude for every mass in one pass"""
        if not self.bins:
            return np.zeros(len(masses), dtype=complex)
        rhos, counts = zip(*self.items())
        rhos = np.array([float(rho) for rho in rhos])
        counts = np.array([float(count) for count in counts])
        phases = np.exp(1j * np.outer(np.asarray(masses, dtype=float), rhos))
        return phases @ counts

    def is_symmetric(self) -> bool:
        return all(self.bins.get(-rho, 0) == count for rho, count in self.bins.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseHistogram):
            return NotImplemented
        return self.bins == other.bins

    def __repr__(self) -> str:
        body = ", ".join(f"{rho}: {count}" for rho, count in self.items())
        return f"PhaseHistogram({{{body}}})"
