"""
Exceptions raised by latticeprop
"""


class LatticePropError(Exception):
    """Base class for every latticeprop error

    Args:
        message (str): human readable reason
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return f""" ----[ERROR]----
=================================================================================================
{self.message}
=================================================================================================
"""


class DimensionMismatch(LatticePropError):
    """Point or displacement has the wrong number of spatial coordinates"""


class UnsupportedSpace(LatticePropError):
    """Operation is not defined for this lattice geometry"""


class ReversedTime(LatticePropError):
    """Target point lies before the source point"""

    def __init__(self, delta_t: int):
        super().__init__(f"Time runs backwards: delta t = {delta_t} < 0")
        self.delta_t = delta_t


class MembershipError(LatticePropError):
    """Point does not lie in the space"""


class NonGenerableStep(LatticePropError):
    """Vertex difference is not a positive multiple of any axis of symmetry"""


class CapacityExceeded(LatticePropError):
    """Request exceeds a configured enumeration or degree cap"""


class TruncationError(LatticePropError):
    """Series did not reach the requested tolerance within the degree cap

    Args:
        message (str): reason
        achieved (float): tail bound reached before giving up
    """

    def __init__(self, message: str, achieved: float):
        super().__init__(f"{message} (achieved tail bound {achieved:.3e})")
        self.achieved = achieved


class QuadratureError(LatticePropError):
    """Successive quadrature refinements still disagree at the point cap"""


class ResolutionError(LatticePropError):
    """Accumulated potential needs more buckets than allowed

    Args:
        buckets (int): buckets that would have been needed
        suggested (float): bucket width that fits under the cap
    """

    def __init__(self, buckets: int, suggested: float):
        super().__init__(
            f"Potential histogram needs {buckets} buckets; "
            f"retry with bucket width >= {suggested:.6g}"
        )
        self.buckets = buckets
        self.suggested = suggested
