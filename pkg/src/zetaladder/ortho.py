"""Weighted orthogonality across iterated segments.

The sine system f_n(u) = sin(n pi u / 2l) is orthogonal on [0, 2l] with
A_n = l.  Transplanted through k reverse steps, the functions
F_n(t) = f_n(phi^k(t) - T) weighted by the k-fold derivative product stay
orthogonal: the weight is exactly the Jacobian of the change of variables
u = phi^k(t) - T, so each weighted inner product over the iterated segment
collapses to the flat one.  This module verifies that numerically.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import engine, integral, ladder
from .errors import DomainError, PreconditionError
from .integral import EULER_GAMMA, LN_TWO_PI


@dataclass(frozen=True)
class OrthoConfig:
    l: float
    n_max: int = 5
    k: int = 1
    # target panel count along the base segment; None picks 64*4^(k-1) --
    # each composition level multiplies the weight's local frequency by
    # phi', so the grid must refine with depth
    quad_points: int | None = None

    def __post_init__(self):
        if self.l <= 0.0:
            raise PreconditionError(f"l must be > 0; got {self.l}")
        if self.n_max < 2:
            raise PreconditionError(f"n_max must be >= 2; got {self.n_max}")
        if self.k < 1:
            raise PreconditionError(f"k must be >= 1; got {self.k}")
        if self.quad_points is not None and self.quad_points < 8:
            raise PreconditionError(f"quad_points must be >= 8; got {self.quad_points}")

    @property
    def effective_quad_points(self) -> int:
        if self.quad_points is not None:
            return self.quad_points
        return 64 * 4 ** (self.k - 1)


def basis_f(n: int, u, l: float):
    """f_n(u) = sin(n pi u / 2l) on [0, 2l]; scalar in -> scalar out."""
    if n < 1:
        raise PreconditionError(f"basis index must be >= 1; got {n}")
    ua = np.asarray(u, dtype=np.float64)
    if np.any(ua < 0.0) or np.any(ua > 2.0 * l):
        off = ua[(ua < 0.0) | (ua > 2.0 * l)].flat[0]
        raise DomainError(f"basis argument {off:g} outside [0, {2.0 * l:g}]")
    out = np.sin(n * math.pi * ua / (2.0 * l))
    return float(out) if np.isscalar(u) or getattr(u, "ndim", 1) == 0 else out


def iterate_forward(
    cache: integral.IntegralCache, cfg: ladder.LadderConfig, t: float, k: int
):
    """(phi^k(t), product of phi' along the way) — the transplant Jacobian."""
    if k < 1:
        raise PreconditionError(f"iterate_forward requires k >= 1; got {k}")
    if t < cfg.T_min:
        raise PreconditionError(
            f"iterate_forward requires t >= T_min={cfg.T_min:g}; got {t}"
        )
    value = float(t)
    deriv = 1.0
    for _ in range(k):
        point = ladder.phi1(cache, cfg, value)
        deriv *= point.phi1_prime
        value = point.phi1
    return value, deriv


def _guard_l(ocfg: OrthoConfig, T: float) -> None:
    cap = 0.05 * T / math.log(T)
    if ocfg.l > cap:
        raise PreconditionError(
            f"l={ocfg.l:g} exceeds the o(T/ln T) guard {cap:g} at T={T:g}"
        )


def _mapped_nodes(cache, cfg, ocfg, T):
    """Quadrature nodes on the iterated segment, mapped down to [0, 2l].

    Returns (u, w) with u = phi^k(node) - T and w = quadrature weight times
    the k-fold derivative product at the node.
    """
    lo = ladder.reverse_iterates(cache, cfg, T, ocfg.k)[-1]
    hi = ladder.reverse_iterates(cache, cfg, T + 2.0 * ocfg.l, ocfg.k)[-1]
    pw = min(0.1, 2.0 * ocfg.l / ocfg.effective_quad_points)
    npan = max(1, int(math.ceil((hi - lo) / pw)))
    h = (hi - lo) / npan
    xi, wt = integral.gl_rule(cache.quad_order)
    centers = lo + h * (np.arange(npan) + 0.5)
    ts = (centers[:, None] + (0.5 * h) * xi[None, :]).ravel()
    qw = np.tile(wt * (0.5 * h), npan)

    weight = np.ones_like(ts)
    tv = ts
    for _ in range(ocfg.k):
        Fv = np.array([integral.F(cache, float(t)) for t in tv])
        xv = np.array([ladder._solve_G(float(y), cfg) for y in Fv])
        gp = np.log(xv) + 1.0 + EULER_GAMMA - LN_TWO_PI
        weight *= engine.zeta_sq_block(tv, cache.engine_cfg) / gp
        tv = xv
    return tv - T, qw * weight


def weighted_inner_product(
    cache: integral.IntegralCache,
    cfg: ladder.LadderConfig,
    ocfg: OrthoConfig,
    T: float,
    m: int,
    n: int,
) -> float:
    """Inner product of transplanted f_m, f_n over the iterated segment."""
    if not (1 <= m <= ocfg.n_max and 1 <= n <= ocfg.n_max):
        raise PreconditionError(
            f"indices must lie in [1, n_max={ocfg.n_max}]; got ({m}, {n})"
        )
    _guard_l(ocfg, T)
    u, w = _mapped_nodes(cache, cfg, ocfg, T)
    scale = math.pi / (2.0 * ocfg.l)
    return float(np.sum(np.sin(m * scale * u) * np.sin(n * scale * u) * w))


def gram_matrix(
    cache: integral.IntegralCache,
    cfg: ladder.LadderConfig,
    ocfg: OrthoConfig,
    T: float,
) -> np.ndarray:
    """All pairwise weighted inner products, sharing one node mapping."""
    _guard_l(ocfg, T)
    u, w = _mapped_nodes(cache, cfg, ocfg, T)
    scale = math.pi / (2.0 * ocfg.l)
    B = np.sin(np.outer(np.arange(1, ocfg.n_max + 1), scale * u))
    return (B * w) @ B.T


def gram_csv(gram: np.ndarray, T: float, ocfg: OrthoConfig) -> str:
    lines = [
        f"# T={T:.17g} l={ocfg.l:.17g} k={ocfg.k} n_max={ocfg.n_max} "
        f"quad_points={ocfg.effective_quad_points}",
        "m,n,value",
    ]
    for i in range(gram.shape[0]):
        for j in range(gram.shape[1]):
            lines.append(f"{i + 1},{j + 1},{gram[i, j]:.17g}")
    return "\n".join(lines) + "\n"
