"""
utils for latticeprop
"""

import logging
import math
import os
import tempfile
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy import integrate
from scipy.special import gammaln

from latticeprop.resources import constants as cns
from latticeprop.utils.exceptions import QuadratureError

log = logging.getLogger("root")


def multinomial(counts: Sequence[int]) -> int:
    """
    Args:\n
        - counts: nonnegative integer multiplicities
    Returns:\n
        - int: exact (Σ counts)! / Π counts!
    """
    result = 1
    running = 0
    for count in counts:
        if count < 0:
            return 0
        running += count
        result *= math.comb(running, count)
    return result


def log_multinomial(counts: Sequence[float]) -> float:
    """
    Args:\n
        - counts: nonnegative reals
    Returns:\n
        - float: log Γ(Σ+1) − Σ log Γ(c+1)
    """
    counts = np.asarray(counts, dtype=float)
    return float(gammaln(counts.sum() + 1.0) - gammaln(counts + 1.0).sum())


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> tuple:
    """
    Args:\n
        - total: sum of every composition
        - parts: number of nonnegative parts
    Returns:\n
        - tuple: all weak compositions of total into parts, lexicographic
    """
    if parts == 1:
        return ((total,),)
    out = []
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            out.append((head,) + tail)
    return tuple(out)


def round_half_away(value: float) -> int:
    """
    Args:\n
        - value: real
    Returns:\n
        - int: nearest integer, ties away from zero
    """
    return int(math.copysign(math.floor(abs(value) + 0.5), value))


def simpson(func: Callable[[np.ndarray], np.ndarray], lower: float, upper: float, points: int):
    """
    Args:\n
        - func: vectorized integrand
        - lower, upper: interval
        - points: number of sub-intervals (made even)
    Returns:\n
        - composite Simpson estimate
    """
    if upper <= lower:
        return 0.0
    points += points % 2
    points = max(points, 2)
    grid = np.linspace(lower, upper, points + 1)
    values = func(grid)
    if np.iscomplexobj(values):
        return complex(
            integrate.simpson(values.real, x=grid), integrate.simpson(values.imag, x=grid)
        )
    return float(integrate.simpson(values, x=grid))


def refine_simpson(
    func: Callable[[np.ndarray], np.ndarray],
    lower: float,
    upper: float,
    points: int = cns.QUAD_MIN_POINTS,
    tol: float = cns.QUAD_TOL,
    max_points: int = cns.QUAD_MAX_POINTS,
):
    """Composite Simpson, doubling the point count until two successive
    estimates agree to tol relative (absolute when the value is tiny)

    Args:
        func (Callable): vectorized integrand, may be complex valued
        lower (float): lower limit
        upper (float): upper limit
        points (int, optional): starting sub-interval count
        tol (float, optional): relative agreement target
        max_points (int, optional): cap on sub-intervals

    Raises:
        QuadratureError: cap reached before agreement

    Returns:
        tuple: (estimate, points used)
    """
    previous = simpson(func, lower, upper, points)
    while points < max_points:
        points *= 2
        current = simpson(func, lower, upper, points)
        scale = max(abs(current), 1e-300)
        if abs(current - previous) <= tol * scale or abs(current - previous) < 1e-14:
            log.debug("simpson converged on [%s, %s] with %s points", lower, upper, points)
            return current, points
        previous = current
    raise QuadratureError(
        f"Simpson rule on [{lower}, {upper}] did not settle to {tol} within {max_points} points"
    )


def thread_count(requested: int = None) -> int:
    """
    Args:\n
        - requested: explicit --threads value or None
    Returns:\n
        - int: worker count, falling back to LATTICEPROP_THREADS then 1
    """
    if requested is None:
        env_value = os.getenv(cns.THREADS_ENV)
        if env_value is None:
            return 1
        try:
            requested = int(env_value)
        except ValueError as exc:
            raise ValueError(f"{cns.THREADS_ENV} must be an integer, got {env_value!r}") from exc
    if requested < 1:
        raise ValueError("thread count must be at least 1")
    return min(requested, cns.MAX_WORKERS)


def atomic_write(path: str, payload, mode: str = "w"):
    """
    Args:\n
        - path: destination file
        - payload: str or bytes
        - mode: "w" or "wb"
    Returns:\n
        - None; the destination appears only once fully written
    """
    directory = os.path.dirname(os.path.abspath(path))
    handle, temp_path = tempfile.mkstemp(dir=directory, prefix=".latticeprop-")
    try:
        encoding = None if "b" in mode else "utf-8"
        with os.fdopen(handle, mode, encoding=encoding, newline="" if encoding else None) as file:
            file.write(payload)
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise
