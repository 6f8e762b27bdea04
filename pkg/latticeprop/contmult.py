"""
Continuous multinomial coefficients and continuum propagator profiles
"""
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np
from scipy.special import hankel2

from latticeprop import utils
from latticeprop.utils import data_format
from latticeprop.propagators.histogram import Amplitude
from latticeprop.resources import constants as cns
from latticeprop.utils.exceptions import CapacityExceeded, QuadratureError, TruncationError

log = logging.getLogger("root")


@dataclass(frozen=True)
class RealArgs:
    """Nonnegative real arguments x_1..x_l, l >= 2"""

    args: Tuple[float, ...]

    def __post_init__(self):
        args = tuple(float(x) for x in self.args)
        if len(args) < 2:
            raise ValueError("continuous multinomial needs at least two arguments")
        if any(x < 0 or math.isnan(x) for x in args):
            raise ValueError(f"arguments must be nonnegative, got {args}")
        object.__setattr__(self, "args", args)

    @property
    def l(self) -> int:
        return len(self.args)

    @property
    def total(self) -> float:
        return sum(self.args)


def _as_args(x) -> RealArgs:
    return x if isinstance(x, RealArgs) else RealArgs(tuple(x))


### Smirnov words


@lru_cache(maxsize=None)
def _smirnov_words(remaining: Tuple[int, ...], last: int) -> int:
    if not any(remaining):
        return 1
    total = 0
    for letter, count in enumerate(remaining):
        if count and letter != last:
            reduced = remaining[:letter] + (count - 1,) + remaining[letter + 1 :]
            total += _smirnov_words(reduced, letter)
    return total


def smirnov_frequency_count(nu: Sequence[int]) -> int:
    """
    Args:\n
        nu (Sequence[int]): letter multiplicities\n
    Returns:\n
        int: words with these multiplicities and no two equal neighbours\n
    """
    nu = tuple(int(k) for k in nu)
    if any(k < 0 for k in nu):
        raise ValueError(f"multiplicities must be nonnegative, got {nu}")
    # the count is symmetric, so sort to share the cache
    return _smirnov_words(tuple(sorted(nu, reverse=True)), -1)


def _positive_shell(total: int, letters: int):
    """multi-indices with every entry >= 1 summing to total"""
    for spare in utils.compositions(total - letters, letters):
        yield tuple(k + 1 for k in spare)


def _log_tail(letters: int, total: float, degree: int) -> float:
    """log of the tail majorant beyond degree"""
    if total <= 0:
        return -math.inf
    following = degree + 1
    ratio = (letters - 1) * total * ((following + 1) / following) ** (letters / 2) / (following + 1)
    if ratio >= 1:
        return math.inf
    log_majorant = (
        math.log(letters)
        + (following - 1) * math.log(max(letters - 1, 1))
        + (letters / 2) * math.log(following)
        + following * math.log(total)
        - math.lgamma(following + 1)
    )
    return log_majorant - math.log(1 - ratio)


def series_degree(letters: int, total: float, tol: float = cns.SERIES_TOL) -> int:
    """smallest degree whose tail majorant is below tol"""
    degree = letters
    while _log_tail(letters, total, degree) >= math.log(tol):
        degree += 1
        if degree > cns.SERIES_MAX_DEGREE:
            raise TruncationError(
                f"no degree <= {cns.SERIES_MAX_DEGREE} brings the tail below {tol}",
                math.exp(min(_log_tail(letters, total, cns.SERIES_MAX_DEGREE), 700)),
            )
    return degree


def _smirnov_series(x: RealArgs, tol: float) -> float:
    logs = [math.log(v) for v in x.args]
    value = 0.0
    degree = x.l
    while True:
        shell = 0.0
        for nu in _positive_shell(degree, x.l):
            count = smirnov_frequency_count(nu)
            if not count:
                continue
            log_term = sum(k * lx + 0.5 * math.log(k) - math.lgamma(k + 1) for k, lx in zip(nu, logs))
            shell += count * math.exp(log_term)
        value += shell
        scale = tol * max(1.0, value)
        tail = _log_tail(x.l, x.total, degree)
        if shell <= scale and tail < math.log(scale):
            log.debug("smirnov series settled at degree %s", degree)
            return value
        degree += 1
        if degree > cns.SERIES_MAX_DEGREE:
            raise TruncationError(
                f"continuous multinomial of {x.args} did not settle to {tol}",
                math.exp(min(tail, 700)),
            )


### Taylor recursion


@lru_cache(maxsize=None)
def _coefficient(key: Tuple[int, ...]) -> float:
    """Taylor coefficient for the sorted positive entries of a multi-index.

    Zero entries drop out because restricting a letter to zero gives the
    table with one letter fewer; a_() = 1, a_(1) = 1, a_(k) = 0 for k >= 2.
    So boundary rows a_(i,0,..,0) vanish for every i >= 2: a word of two or
    more equal letters has neighbours that repeat. The geometric boundary
    ((l-1) / (2l - l^2))^i / i!, e.g. (-2/3)^i / i! for l = 3, does not vanish
    there and would break agreement with the Smirnov series, so the boundary
    comes from the recursion on the smaller table instead.
    """
    if not key:
        return 1.0
    if len(key) == 1:
        return 1.0 if key == (1,) else 0.0
    total = 1.0 if all(k == 1 for k in key) else 0.0
    for mask in range(1, 1 << len(key)):
        chosen = bin(mask).count("1")
        if chosen < 2:
            continue
        reduced: List[int] = []
        divisor = 1
        for position, k in enumerate(key):
            if mask >> position & 1:
                divisor *= k
                if k > 1:
                    reduced.append(k - 1)
            else:
                reduced.append(k)
        total += (chosen - 1) * _coefficient(tuple(sorted(reduced, reverse=True))) / divisor
    return total


def taylor_coefficient(index: Sequence[int]) -> float:
    """a_{i_1..i_l} of the unweighted series"""
    return _coefficient(tuple(sorted((int(i) for i in index if i), reverse=True)))


@lru_cache(maxsize=None)
def _weighted_terms(letters: int, degree: int) -> Tuple[np.ndarray, np.ndarray]:
    """exponents and log weights a_mu * prod sqrt(mu_k) of every nonzero term"""
    exponents, log_weights = [], []
    for total in range(letters, degree + 1):
        for mu in _positive_shell(total, letters):
            coefficient = taylor_coefficient(mu)
            if coefficient <= 0:
                continue
            exponents.append(mu)
            log_weights.append(math.log(coefficient) + 0.5 * sum(math.log(k) for k in mu))
    return np.array(exponents, dtype=float).reshape(-1, letters), np.array(log_weights)


def _evaluate(exponents: np.ndarray, log_weights: np.ndarray, points: np.ndarray, chunk: int = 4_000_000) -> np.ndarray:
    points = np.atleast_2d(np.asarray(points, dtype=float))
    result = np.zeros(points.shape[0])
    live = (points > 0).all(axis=1)
    if not live.any() or exponents.size == 0:
        return result
    logs = np.log(points[live])
    rows = max(1, chunk // max(1, exponents.shape[0]))
    values = []
    for start in range(0, logs.shape[0], rows):
        block = logs[start : start + rows] @ exponents.T + log_weights
        values.append(np.exp(block).sum(axis=1))
    result[live] = np.concatenate(values)
    return result


@dataclass(frozen=True)
class TaylorTable:
    """Taylor coefficients a_{i_1..i_l} of the continuous multinomial up to max_degree"""

    l: int
    max_degree: int
    coeffs: Dict[Tuple[int, ...], float] = field(repr=False)

    @property
    def bound_constant(self) -> float:
        """C_l with |a| <= C_l^(prod i_k) / prod i_k! over nonzero indices"""
        return 2.0 * self.l**self.l

    def __getitem__(self, index: Sequence[int]) -> float:
        return self.coeffs[tuple(index)]

    def evaluate(self, points) -> np.ndarray:
        """weighted series at each row of points, vectorized"""
        exponents, log_weights = _weighted_terms(self.l, self.max_degree)
        return _evaluate(exponents, log_weights, points)


def taylor_table(l: int, max_degree: int) -> TaylorTable:
    """
    Args:\n
        l (int): letter count, >= 3\n
        max_degree (int): largest total degree kept\n
    Returns:\n
        TaylorTable: every a_mu with |mu| <= max_degree\n
    """
    if l < 3:
        raise ValueError("taylor_table needs l >= 3; use cont_binomial for two letters")
    if max_degree > cns.TAYLOR_MAX_DEGREE:
        raise CapacityExceeded(f"Taylor degree capped at {cns.TAYLOR_MAX_DEGREE}, got {max_degree}")
    coeffs = {}
    for total in range(max_degree + 1):
        for mu in utils.compositions(total, l):
            coeffs[mu] = taylor_coefficient(mu)
    log.info("taylor_table(l=%s, degree=%s): %s coefficients", l, max_degree, len(coeffs))
    return TaylorTable(l=l, max_degree=max_degree, coeffs=coeffs)


def cont_multinomial(x, tol: float = cns.SERIES_TOL, route: str = "smirnov") -> float:
    """Continuous multinomial {sum x; x_1, ..., x_l}

    Args:
        x (RealArgs | Sequence[float]): nonnegative arguments
        tol (float, optional): relative truncation target. Defaults to SERIES_TOL.
        route (str, optional): smirnov | taylor. Defaults to "smirnov".

    Raises:
        TruncationError: series did not settle within the degree cap

    Returns:
        float: sum over nu of f_nu prod sqrt(nu_k) x_k^nu_k / nu_k!
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    x = _as_args(x)
    if min(x.args) == 0:
        return 0.0
    if route == "smirnov":
        return _smirnov_series(x, tol)
    if route == "taylor":
        degree = series_degree(x.l, x.total, tol / max(1.0, x.total))
        exponents, log_weights = _weighted_terms(x.l, degree)
        return float(_evaluate(exponents, log_weights, np.array([x.args]))[0])
    raise ValueError(f"route must be smirnov or taylor, got {route!r}")


def cont_binomial(x: float, s: float) -> float:
    """
    Args:\n
        x (float): top argument\n
        s (float): lower argument in [0, x]\n
    Returns:\n
        float: continuous binomial {x; s} from its explicit series\n
    """
    if not 0 <= s <= x:
        raise ValueError(f"need 0 <= s <= x, got s={s}, x={x}")
    a, b = s, x - s
    if a == 0 or b == 0:
        return 0.0
    log_a, log_b = math.log(a), math.log(b)
    value = 0.0
    for n in range(1, cns.SERIES_MAX_DEGREE + 1):
        log_base = n * (log_a + log_b) - math.lgamma(n + 1) - math.lgamma(n + 2)
        term = math.exp(log_base) * (
            math.sqrt(n * (n + 1)) * (a + b) + (2 * n + 2) * n
        )
        value += term
        if n > math.sqrt(a * b) + 1 and term < 1e-12 * max(1.0, value):
            return value
    raise TruncationError(f"continuous binomial {{{x}; {s}}} did not settle", term)


### asymptotics


def log_gaussian_asymptotic(x) -> float:
    x = _as_args(x)
    if min(x.args) <= 0:
        raise ValueError("asymptotic form needs strictly positive arguments")
    letters, total = x.l, x.total
    spread = sum((v - total / letters) ** 2 for v in x.args)
    return (
        (total + letters / 2) * math.log(letters)
        - (letters - 1) / 2 * math.log(2 * math.pi * total)
        - letters / (2 * total) * spread
    )


def gaussian_asymptotic(x) -> float:
    """
    Args:\n
        x (RealArgs): strictly positive arguments\n
    Returns:\n
        float: l^(S + l/2) / sqrt(2 pi S)^(l-1) * exp(-(l / 2S) sum (x_i - S/l)^2)\n
    """
    return math.exp(log_gaussian_asymptotic(x))


def entropy_asymptotic(x) -> float:
    """exp(-sum x_i ln(x_i / S)), the leading exponential growth"""
    x = _as_args(x)
    if min(x.args) <= 0:
        raise ValueError("entropy form needs strictly positive arguments")
    return math.exp(-sum(v * math.log(v / x.total) for v in x.args))


### discrete to continuum


def _lattice_weight(counts: Sequence[int], scale: int, tol: float) -> float:
    """sum_nu f_nu prod sqrt(nu_k) C(M_k, nu_k) / m^nu_k"""
    letters = len(counts)
    total = sum(counts) / scale
    value = 0.0
    degree = letters
    ceiling = sum(counts)
    while degree <= ceiling:
        shell = 0.0
        for nu in _positive_shell(degree, letters):
            if any(k > limit for k, limit in zip(nu, counts)):
                continue
            count = smirnov_frequency_count(nu)
            if not count:
                continue
            log_term = math.log(count) + sum(
                math.log(math.comb(limit, k)) - k * math.log(scale) + 0.5 * math.log(k)
                for k, limit in zip(nu, counts)
            )
            shell += math.exp(log_term)
        value += shell
        scale_tol = tol * max(1.0, value)
        if shell <= scale_tol and _log_tail(letters, total, degree) < math.log(scale_tol):
            break
        degree += 1
    return value


def disc_to_cont_check(x, m: int, tol: float = cns.SERIES_TOL) -> float:
    """Distance between the lattice count ratio at scale m and the continuous ratio

    Both ratios divide the configuration [m x] by the centered configuration
    floor(m S / l) in every slot and are evaluated at the same real arguments.

    Args:
        x (RealArgs): positive arguments
        m (int): refinement scale
        tol (float, optional): series target

    Returns:
        float: |lattice ratio - continuous ratio|
    """
    if m < 1:
        raise ValueError("scale m must be a positive integer")
    x = _as_args(x)
    counts = [utils.round_half_away(m * v) for v in x.args]
    centre = [int(math.floor(m * x.total / x.l))] * x.l
    if min(counts) <= 0 or centre[0] <= 0:
        raise ValueError(f"scale {m} is too coarse for {x.args}")
    discrete = _lattice_weight(counts, m, tol) / _lattice_weight(centre, m, tol)
    continuous = cont_multinomial([c / m for c in counts], tol) / cont_multinomial(
        [c / m for c in centre], tol
    )
    deviation = abs(discrete - continuous)
    log.info("disc_to_cont_check %s at m=%s: deviation %.3e", x.args, m, deviation)
    return deviation


def splitting_check(x, points: int = cns.QUAD_MIN_POINTS, tol: float = cns.SERIES_TOL) -> float:
    """Residual of {S; x} = integral over I in [0, x_l] of d/dx_l {.; x_1..x_(l-1), I}

    Args:
        x (RealArgs): l >= 3 arguments
        points (int, optional): Simpson sub-intervals
        tol (float, optional): series target

    Returns:
        float: |left side - quadrature right side|
    """
    x = _as_args(x)
    if x.l < 3:
        raise ValueError("splitting check needs at least three arguments")
    left = cont_multinomial(x, tol)
    last = x.args[-1]
    if min(x.args) == 0:
        return abs(left)
    degree = series_degree(x.l, x.total, tol)
    exponents, log_weights = _weighted_terms(x.l, degree)
    # d/dx_l of x_l^mu_l brings down mu_l and lowers the exponent
    slope_exponents = exponents.copy()
    slope_exponents[:, -1] -= 1
    slope_weights = log_weights + np.log(exponents[:, -1])
    head = np.array(x.args[:-1])

    def integrand(grid):
        logs = np.log(head)
        values = np.empty_like(grid)
        for i, point in enumerate(grid):
            if point <= 0:
                # terms with mu_l = 1 survive at I = 0
                mask = slope_exponents[:, -1] == 0
                values[i] = np.exp(slope_exponents[mask, :-1] @ logs + slope_weights[mask]).sum()
            else:
                full = np.append(logs, math.log(point))
                values[i] = np.exp(slope_exponents @ full + slope_weights).sum()
        return values

    right = utils.simpson(integrand, 0.0, last, points)
    residual = abs(left - right)
    log.info("splitting_check %s with %s points: residual %.3e", x.args, points, residual)
    return residual


def product_split_residual(x, tol: float = cns.SERIES_TOL) -> float:
    """Residual of the two-factor splitting {S; x} ~ {S; x_1..x_(l-2), J} {J; x_(l-1), x_l}

    J = x_(l-1) + x_l. The inner factor has its top fixed by its two lower
    arguments, so the integral form of the splitting collapses onto I = J and
    this product is all that is left of it. Merging the last two letters
    changes which neighbours a word may have, so the product is not exact in
    general; the residual is reported, not bounded. Both sides vanish when any
    argument does.

    Args:
        x (RealArgs): l >= 3 arguments
        tol (float, optional): series target

    Returns:
        float: |direct value - product of the two factors|
    """
    x = _as_args(x)
    if x.l < 3:
        raise ValueError("product splitting needs at least three arguments")
    *head, second_last, last = x.args
    joined = second_last + last
    direct = cont_multinomial(x, tol)
    outer = cont_multinomial(head + [joined], tol)
    inner = cont_multinomial([second_last, last], tol)
    residual = abs(direct - outer * inner)
    log.info(
        "product_split_residual %s: direct %.6g, outer %.6g, inner %.6g, residual %.3e",
        x.args, direct, outer, inner, residual,
    )
    return residual


### continuum profiles


def _trinomial_integrand(t: float, reach: float, mass: float, exponents, log_weights):
    def integrand(grid):
        grid = np.asarray(grid, dtype=float)
        args = np.stack([(grid - reach) / 2, (grid + reach) / 2, t - grid], axis=1)
        values = _evaluate(exponents, log_weights, np.clip(args, 0, None))
        if mass == 0:
            return values
        return values * np.exp(1j * mass * grid)

    return integrand


def _profile_terms(t: float, tol: float):
    return _weighted_terms(3, series_degree(3, t, tol))


def k1_cont_profile(t: float, xs: Sequence[float], m: float, quad_points: int = cns.QUAD_MIN_POINTS) -> List[Amplitude]:
    """Continuum taxicab propagator in one spatial dimension

    Args:
        t (float): elapsed time, > 0
        xs (Sequence[float]): positions inside (-t, t)
        m (float): mass
        quad_points (int, optional): starting Simpson sub-intervals, >= 64

    Raises:
        QuadratureError: refinement cap reached without agreement

    Returns:
        list: Amplitude per x, normalized by the zero-mode integral at x = 0
    """
    if quad_points < cns.QUAD_MIN_POINTS:
        raise ValueError(f"quad_points must be >= {cns.QUAD_MIN_POINTS}")
    if t <= 0:
        raise ValueError("t must be positive")
    if any(abs(x) >= t for x in xs):
        raise ValueError("every x must lie strictly inside (-t, t)")
    exponents, log_weights = _profile_terms(t, cns.SERIES_TOL)
    norm, used = utils.refine_simpson(
        _trinomial_integrand(t, 0.0, 0.0, exponents, log_weights), 0.0, t, quad_points
    )
    log.info("k1_cont_profile: zero mode %.6g with %s points", norm, used)
    profile = []
    for x in xs:
        reach = abs(x)
        value, _ = utils.refine_simpson(
            _trinomial_integrand(t, reach, m, exponents, log_weights), reach, t, quad_points
        )
        profile.append(Amplitude.from_complex(complex(value) / norm))
    return profile


def integrand_peak(t: float, x: float, cells: int = cns.PEAK_SEARCH_CELLS) -> Tuple[float, float, float]:
    """
    Args:\n
        t (float): elapsed time\n
        x (float): position, |x| < t\n
        cells (int): search grid cells over [|x|, t]\n
    Returns:\n
        tuple: (located peak, (4t - sqrt(4t^2 - 3x^2)) / 3, cell width)\n
    """
    reach = abs(x)
    width = (t - reach) / cells
    grid = reach + width * np.arange(cells + 1)
    exponents, log_weights = _profile_terms(t, cns.SERIES_TOL)
    values = _trinomial_integrand(t, reach, 0.0, exponents, log_weights)(grid)
    best = int(np.argmax(values))
    peak = float(grid[best])
    if 0 < best < cells:
        left, centre, right = values[best - 1 : best + 2]
        curvature = left - 2 * centre + right
        if curvature < 0:
            peak += width * 0.5 * (left - right) / curvature
    expected = (4 * t - math.sqrt(4 * t * t - 3 * x * x)) / 3
    return peak, expected, width


def finabo_bounds(moving: float, xs: Sequence[float]) -> List[Tuple[float, float]]:
    """(B_i, T_i) for the first d-1 forward counts at total moving count I"""
    taxicab = sum(abs(v) for v in xs)
    half = (moving + taxicab) / 2
    bounds = []
    covered = 0.0
    for v in xs[:-1]:
        bounds.append((abs(v), half - covered))
        covered += abs(v)
    return bounds


def _highd_value(t: float, xs: Sequence[float], mass: float, points: int, exponents, log_weights) -> complex:
    reach = [abs(v) for v in xs]
    taxicab = sum(reach)
    dims = len(xs)

    def forward_counts(moving):
        """grid of feasible (I_1..I_d) with Simpson weights"""
        half = (moving + taxicab) / 2
        rows = [((), 1.0, half)]
        for i in range(dims - 1):
            lower, _ = finabo_bounds(moving, xs)[i]
            expanded = []
            for prefix, weight, remaining in rows:
                upper = remaining - sum(reach[i + 1 :])
                if upper <= lower:
                    continue
                nodes = np.linspace(lower, upper, points + 1)
                simpson = np.ones(points + 1)
                simpson[1:-1:2], simpson[2:-1:2] = 4, 2
                simpson *= (upper - lower) / (3 * points)
                for node, node_weight in zip(nodes, simpson):
                    expanded.append((prefix + (node,), weight * node_weight, remaining - node))
            rows = expanded
        return [(prefix + (remaining,), weight) for prefix, weight, remaining in rows]

    def integrand(grid):
        out = np.zeros(len(grid), dtype=complex)
        for j, moving in enumerate(grid):
            rows = forward_counts(moving)
            if not rows:
                continue
            args = np.array(
                [
                    [c for count, r in zip(counts, reach) for c in (count, count - r)] + [t - moving]
                    for counts, _ in rows
                ]
            )
            weights = np.array([w for _, w in rows])
            inner = float(weights @ _evaluate(exponents, log_weights, np.clip(args, 0, None)))
            out[j] = inner * np.exp(1j * mass * moving)
        return out

    return complex(utils.simpson(integrand, taxicab, t, points))


def k1_cont_highd(t: float, xs: Sequence[float], m: float, quad: int = cns.HIGHD_MIN_POINTS, tol: float = 1e-4) -> Amplitude:
    """Continuum taxicab propagator in two or three spatial dimensions

    Args:
        t (float): elapsed time
        xs (Sequence[float]): spatial displacement, d in {2, 3}
        m (float): mass
        quad (int, optional): Simpson sub-intervals per nested integral
        tol (float, optional): relative agreement between quad and 2 quad

    Raises:
        QuadratureError: quad and 2 quad still disagree at HIGHD_MAX_POINTS

    Returns:
        Amplitude: value normalized by the zero-mode integral at x = 0
    """
    dims = len(xs)
    if dims not in (2, 3):
        raise ValueError("k1_cont_highd handles d = 2 or 3")
    if t <= 0 or sum(abs(v) for v in xs) >= t:
        raise ValueError("need 0 < |x|_1 < t")
    exponents, log_weights = _weighted_terms(2 * dims + 1, series_degree(2 * dims + 1, t, 1e-10))

    def settled(target, mass):
        points = quad
        previous = _highd_value(t, target, mass, points, exponents, log_weights)
        while points < cns.HIGHD_MAX_POINTS:
            points *= 2
            current = _highd_value(t, target, mass, points, exponents, log_weights)
            if abs(current - previous) <= tol * max(abs(current), 1e-300):
                return current
            previous = current
        raise QuadratureError(f"nested quadrature for x={target} did not settle to {tol}")

    norm = settled([0.0] * dims, 0.0).real
    return Amplitude.from_complex(settled(list(xs), m) / norm)


def desitter_cont(dx: Sequence[float], dt: float, tol: float = cns.SERIES_TOL) -> float:
    """
    Args:\n
        dx (Sequence[float]): spatial displacement, d >= 2\n
        dt (float): elapsed time with sum |dx_i| <= dt\n
    Returns:\n
        float: {.; |dx_i|} / {.; dt/d, ..., dt/d}\n
    """
    reach = [abs(v) for v in dx]
    if len(reach) < 2:
        raise ValueError("de-Sitter continuum ratio needs d >= 2")
    if sum(reach) > dt + 1e-12:
        raise ValueError("displacement lies outside the light cone")
    if min(reach) == 0:
        return 0.0
    return cont_multinomial(reach, tol) / cont_multinomial([dt / len(reach)] * len(reach), tol)


def bessel_reference_profile(t: float, xs: Sequence[float], m: float) -> List[float]:
    """|H_0^(2)(m sqrt(t^2 - x^2))| normalized at x = 0, for shape comparison only"""
    if any(abs(x) >= t for x in xs):
        raise ValueError("every x must lie strictly inside (-t, t)")
    reference = abs(hankel2(0, m * t))
    return [float(abs(hankel2(0, m * math.sqrt(t * t - x * x))) / reference) for x in xs]


def trinomial_integrand(t: float, x: float, grid, m: float = 0.0) -> np.ndarray:
    """{t; (I-|x|)/2, (I+|x|)/2, t-I} e^(imI) on the given I grid"""
    exponents, log_weights = _profile_terms(t, cns.SERIES_TOL)
    return _trinomial_integrand(t, abs(x), m, exponents, log_weights)(np.asarray(grid, dtype=float))


def cont_profile_table(
    t: float,
    xs: Sequence[float],
    m: float,
    quad_points: int = cns.QUAD_MIN_POINTS,
    response_type: str = "panda_df",
):
    """
    Args:\n
        t (float): elapsed time\n
        xs (Sequence[float]): positions inside (-t, t)\n
        m (float): mass\n
        quad_points (int, Optional): starting Simpson sub-intervals. Default 64\n
        response_type (str, Optional): define the response type panda_df | json. Default panda_df\n
    Returns:\n
        Pandas DataFrame: x, re, im, mag\n
      or\n
        Json: same rows as records\n
    """
    profile = k1_cont_profile(t, xs, m, quad_points)
    return data_format.table(data_format.amplitude_rows(xs, profile), ["x", "re", "im", "mag"], response_type)
