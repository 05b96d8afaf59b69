"""The ladder transform phi1 and its reverse iterates.

phi1 is defined operationally: G(phi1(T)) = F(T) with
G(x) = x ln x + (c - ln 2pi) x + c0, i.e. phi1 solves the almost-exact
second-moment equation.  Everything else (derivative, omega, reverse steps)
is exact arithmetic on that definition:

    phi1'(t)  = |zeta(1/2+it)|^2 / G'(phi1(t))
    omega(t)  = G'(phi1(t))            (~ ln t)
    reverse_step(t) solves F(x) = G(t) for x > t.

The c0 constant is configurable and defaults to 0: every law verified here is
a ratio insensitive to an O(1) shift of G, and no published value is assumed.
"""
import math
from dataclasses import dataclass

from scipy.optimize import brentq

from . import engine, integral
from .errors import ConvergenceError, DomainError, PreconditionError
from .integral import EULER_GAMMA, LN_TWO_PI


@dataclass(frozen=True)
class LadderConfig:
    c0: float = 0.0
    T_min: float = 1000.0
    newton_tol: float = 1e-12   # relative, on G(phi1) - F(T)
    bracket_slack: float = 2.0
    k0_max: int = 10            # reverse_iterates depth bound

    def __post_init__(self):
        if self.T_min < 100.0:
            raise PreconditionError(f"T_min must be >= 100; got {self.T_min}")
        if self.newton_tol <= 0.0:
            raise PreconditionError(f"newton_tol must be > 0; got {self.newton_tol}")


DEFAULT = LadderConfig()


@dataclass(frozen=True)
class LadderPoint:
    t: float
    phi1: float
    phi1_prime: float
    omega: float


def G(x: float, cfg: LadderConfig = DEFAULT) -> float:
    if x <= 0.0:
        raise DomainError(f"G requires x > 0; got {x}")
    return x * math.log(x) + (EULER_GAMMA - LN_TWO_PI) * x + cfg.c0


def G_prime(x: float) -> float:
    if x <= 0.0:
        raise DomainError(f"G' requires x > 0; got {x}")
    return math.log(x) + 1.0 + EULER_GAMMA - LN_TWO_PI


def _solve_G(y: float, cfg: LadderConfig) -> float:
    """Root of G(x) = y on the increasing branch x >= 2 (bracketed Newton)."""
    lo, hi = 2.0, max(4.0, y)
    while G(hi, cfg) < y:  # pragma: no cover - y >= G(max(4,y)) in practice
        hi *= 2.0
    if G(lo, cfg) > y:
        raise DomainError(f"G(x) = {y:g} has no root with x >= 2")
    x = min(max(y / max(math.log(y), 1.0), lo), hi) if y > 4.0 else lo
    tol = cfg.newton_tol * max(abs(y), 1.0)
    for _ in range(200):
        g = G(x, cfg) - y
        if abs(g) <= tol:
            return x
        if g > 0.0:
            hi = x
        else:
            lo = x
        step = g / G_prime(x)
        x_new = x - step
        if not (lo < x_new < hi):  # Newton left the bracket: bisect
            x_new = 0.5 * (lo + hi)
        x = x_new
    raise ConvergenceError(
        f"G-inversion stalled: y={y:g}, last x={x:g}, residual={g:.3e}, "
        f"bracket=({lo:g},{hi:g})"
    )


def phi1(cache: integral.IntegralCache, cfg: LadderConfig, T: float) -> LadderPoint:
    """Ladder point at T; extends the cache if T is past its end."""
    if T < cfg.T_min:
        raise PreconditionError(f"phi1 requires T >= T_min={cfg.T_min:g}; got {T}")
    integral.extend(cache, T)
    y = integral.F(cache, T)
    x = _solve_G(y, cfg)
    gp = G_prime(x)
    zsq = engine.zeta_sq(T, cache.engine_cfg)
    return LadderPoint(t=T, phi1=x, phi1_prime=zsq / gp, omega=gp)


def phi1_value(cache: integral.IntegralCache, cfg: LadderConfig, T: float) -> float:
    """phi1(T) without the derivative bundle (skips the engine call)."""
    if T < cfg.T_min:
        raise PreconditionError(f"phi1 requires T >= T_min={cfg.T_min:g}; got {T}")
    integral.extend(cache, T)
    return _solve_G(integral.F(cache, T), cfg)


def reverse_step(cache: integral.IntegralCache, cfg: LadderConfig, t: float) -> float:
    """The x > t with phi1(x) = t, via F(x) = G(t)."""
    if t < cfg.T_min:
        raise PreconditionError(
            f"reverse_step requires t >= T_min={cfg.T_min:g}; got {t}"
        )
    y = G(t, cfg)
    gap = (1.0 - EULER_GAMMA) * t / math.log(t)
    lo = t
    hi = t + cfg.bracket_slack * gap
    integral.extend(cache, hi)
    f_lo = integral.F(cache, lo) - y
    if f_lo >= 0.0:
        raise ConvergenceError(
            f"reverse_step({t:g}): F(t) >= G(t); ladder not expanding here"
        )
    widenings = 0
    while integral.F(cache, hi) - y < 0.0:
        widenings += 1
        if widenings > 8:
            raise ConvergenceError(
                f"reverse_step({t:g}): no sign change after 8 widenings "
                f"(last bracket [{lo:g}, {hi:g}])"
            )
        lo = hi
        hi = t + (hi - t) * 2.0
        integral.extend(cache, hi)
    x = brentq(lambda u: integral.F(cache, u) - y, lo, hi, xtol=1e-9, rtol=1e-15)
    # posterior check against the defining tolerance
    back = _solve_G(integral.F(cache, x), cfg)
    if abs(back - t) > 1e-8 * t:
        raise ConvergenceError(
            f"reverse_step({t:g}): inverse residual {abs(back - t):.3e} "
            f"exceeds 1e-8*t"
        )
    return float(x)


def reverse_iterates(
    cache: integral.IntegralCache, cfg: LadderConfig, T: float, k: int
) -> list:
    """[T, T^(1), ..., T^(k)]: k reverse steps up the ladder."""
    if not 1 <= k <= cfg.k0_max:
        raise PreconditionError(
            f"reverse_iterates requires 1 <= k <= {cfg.k0_max}; got {k}"
        )
    out = [float(T)]
    for _ in range(k):
        out.append(reverse_step(cache, cfg, out[-1]))
    return out
