"""F(T) = integral of |zeta(1/2+it)|^2 over [0,T], cached to disk.

Layout: the t-axis is split into fixed panels of `panel_width`, grouped into
checkpoint groups of `checkpoint_stride` panels.  Panel/group boundaries live
on a global grid anchored at 0 (edge j = j*panel_width), so a cache extended
in several steps is bit-identical to one extended in a single step — group
sums never depend on extension history.  Only group boundaries (checkpoints)
are persisted; F at interior points re-integrates the partial group, with the
per-group panel prefix sums memoized in memory.

Accumulation: panel values inside a group are summed with Neumaier
compensation, reset at each checkpoint; checkpoint-to-checkpoint addition is
plain.  This keeps extension deterministic and append-only.
"""
import math
import os
from bisect import bisect_right
from dataclasses import dataclass, field

import numpy as np

from . import engine
from .errors import (
    CacheMismatchError,
    DomainError,
    OutOfRangeError,
    PreconditionError,
)

EULER_GAMMA = 0.5772156649015329
LN_TWO_PI = 1.8378770664093453

# Gauss-Legendre order 8 on [-1,1], hardcoded so cached integrals cannot
# drift under a numpy upgrade; other orders fall back to leggauss.
_GL8_X = [
    -0.96028985649753623,
    -0.79666647741362674,
    -0.52553240991632899,
    -0.18343464249564980,
    0.18343464249564980,
    0.52553240991632899,
    0.79666647741362674,
    0.96028985649753623,
]
_GL8_W = [
    0.10122853629037626,
    0.22238103445337447,
    0.31370664587788729,
    0.36268378337836198,
    0.36268378337836198,
    0.31370664587788729,
    0.22238103445337447,
    0.10122853629037626,
]


def gl_rule(order: int):
    if order == 8:
        return np.array(_GL8_X), np.array(_GL8_W)
    return np.polynomial.legendre.leggauss(order)


@dataclass
class IntegralCache:
    panel_width: float = 0.25
    quad_order: int = 8
    checkpoint_stride: int = 256
    engine_fingerprint: str = ""
    ts: list = field(default_factory=lambda: [0.0])
    Fs: list = field(default_factory=lambda: [0.0])
    path: str | None = None
    engine_cfg: engine.EngineConfig = field(default=engine.DEFAULT, repr=False)
    _prefix: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def group_len(self) -> float:
        return self.checkpoint_stride * self.panel_width

    @property
    def t_max(self) -> float:
        return self.ts[-1]

    def header(self) -> str:
        return (
            f"ZLCACHE 1 {self.panel_width:.17g} {self.quad_order} "
            f"{self.checkpoint_stride} {self.engine_fingerprint}"
        )


def new_cache(
    path=None,
    panel_width=0.25,
    quad_order=8,
    checkpoint_stride=256,
    engine_cfg=engine.DEFAULT,
) -> IntegralCache:
    cache = IntegralCache(
        panel_width=panel_width,
        quad_order=quad_order,
        checkpoint_stride=checkpoint_stride,
        engine_fingerprint=engine.fingerprint(engine_cfg),
        path=path,
        engine_cfg=engine_cfg,
    )
    if path is not None:
        with open(path, "w") as fh:
            fh.write(cache.header() + "\n")
            fh.write("0 0\n")
    return cache


def load_cache(path, engine_cfg=engine.DEFAULT, require_match=True) -> IntegralCache:
    with open(path) as fh:
        head = fh.readline().split()
        if len(head) < 6 or head[0] != "ZLCACHE" or head[1] != "1":
            raise CacheMismatchError(f"{path}: not a recognizable cache file")
        cache = IntegralCache(
            panel_width=float(head[2]),
            quad_order=int(head[3]),
            checkpoint_stride=int(head[4]),
            engine_fingerprint=head[5],
            ts=[],
            Fs=[],
            path=path,
            engine_cfg=engine_cfg,
        )
        for line in fh:
            if not line.strip():
                continue
            a, b = line.split()
            cache.ts.append(float(a))
            cache.Fs.append(float(b))
    if require_match and cache.engine_fingerprint != engine.fingerprint(engine_cfg):
        raise CacheMismatchError(
            f"{path}: cache fingerprint {cache.engine_fingerprint!r} does not "
            f"match engine {engine.fingerprint(engine_cfg)!r}"
        )
    if not cache.ts or cache.ts[0] != 0.0 or cache.Fs[0] != 0.0:
        raise CacheMismatchError(f"{path}: cache must start at (0, 0)")
    if any(b <= a for a, b in zip(cache.ts, cache.ts[1:])):
        raise CacheMismatchError(f"{path}: checkpoint abscissae not increasing")
    return cache


def open_cache(path, **kwargs) -> IntegralCache:
    """Load `path` if it exists, otherwise create it."""
    if os.path.exists(path):
        return load_cache(path, engine_cfg=kwargs.get("engine_cfg", engine.DEFAULT))
    return new_cache(path, **kwargs)


def save_cache(cache: IntegralCache, path) -> None:
    with open(path, "w") as fh:
        fh.write(cache.header() + "\n")
        for t, f in zip(cache.ts, cache.Fs):
            fh.write(f"{t:.17g} {f:.17g}\n")


# --------------------------------------------------------------------------
# quadrature internals
# --------------------------------------------------------------------------

def _group_panel_sums(cache: IntegralCache, g: int):
    """Panel integrals for group g (stride panels), evaluated in one block."""
    if g in cache._prefix:
        return cache._prefix[g]
    stride = cache.checkpoint_stride
    w = cache.panel_width
    xi, wt = gl_rule(cache.quad_order)
    j = g * stride + np.arange(stride, dtype=np.float64)
    # node t for panel j, node i: (j + 0.5 + 0.5*xi_i) * w  -- global grid
    nodes = (j[:, None] + 0.5 + 0.5 * xi[None, :]) * w
    vals = engine.zeta_sq_block(nodes.ravel(), cache.engine_cfg)
    panel = (vals.reshape(stride, len(xi)) * wt).sum(axis=1) * (0.5 * w)
    cache._prefix[g] = panel
    return panel


def _neumaier(values) -> float:
    s = 0.0
    comp = 0.0
    for x in values:
        t = s + x
        if abs(s) >= abs(x):
            comp += (s - t) + x
        else:
            comp += (x - t) + s
        s = t
    return s + comp


def _partial_panel(cache: IntegralCache, edge: float, T: float) -> float:
    if T <= edge:
        return 0.0
    xi, wt = gl_rule(cache.quad_order)
    half = 0.5 * (T - edge)
    nodes = edge + half * (1.0 + xi)
    vals = engine.zeta_sq_block(nodes, cache.engine_cfg)
    return float((vals * wt).sum() * half)


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------

def extend(cache: IntegralCache, to: float) -> IntegralCache:
    """Grow the cache to cover `to` (rounded up to a whole checkpoint group)."""
    if to <= cache.t_max:
        return cache
    G = cache.group_len
    g_end = int(math.ceil(to / G - 1e-12))
    fh = open(cache.path, "a") if cache.path is not None else None
    try:
        for g in range(len(cache.ts) - 1, g_end):
            group_sum = _neumaier(_group_panel_sums(cache, g))
            t_next = (g + 1) * cache.checkpoint_stride * cache.panel_width
            F_next = cache.Fs[-1] + group_sum
            cache.ts.append(t_next)
            cache.Fs.append(F_next)
            if fh is not None:
                fh.write(f"{t_next:.17g} {F_next:.17g}\n")
    finally:
        if fh is not None:
            fh.close()
    return cache


def F(cache: IntegralCache, T: float) -> float:
    """Integral over [0, T]; T must be within the cached range."""
    if T < 0.0:
        raise DomainError(f"F requires T >= 0; got {T}")
    if T > cache.t_max:
        raise OutOfRangeError(
            f"F({T:g}) beyond cached maximum {cache.t_max:g}; "
            f"extend the cache to at least {T:g} first"
        )
    i = bisect_right(cache.ts, T) - 1
    if i == len(cache.ts) - 1:  # T is the last checkpoint exactly
        return cache.Fs[i]
    t0 = cache.ts[i]
    if T == t0:
        return cache.Fs[i]
    stride = cache.checkpoint_stride
    w = cache.panel_width
    m = min(int((T - t0) / w), stride - 1)
    panel = _group_panel_sums(cache, i)
    head = float(panel[:m].sum())
    edge = (i * stride + m) * w
    return cache.Fs[i] + head + _partial_panel(cache, edge, T)


def segment_integral(cache: IntegralCache, a: float, b: float) -> float:
    if a < 0.0:
        raise DomainError(f"segment_integral requires a >= 0; got {a}")
    if b < a:
        raise PreconditionError(f"segment_integral requires a <= b; got ({a}, {b})")
    v = F(cache, b) - F(cache, a)
    return v if v > 0.0 else 0.0


@dataclass(frozen=True)
class ErrorTermSample:
    t: float
    r: float
    r_quarter_ratio: float
    r_third_ratio: float


def r_term(cache: IntegralCache, T: float, t_min: float = 1000.0) -> ErrorTermSample:
    """Deviation of F(T) from its two leading terms, with scale ratios."""
    if T < t_min:
        raise DomainError(f"r_term requires T >= {t_min:g}; got {T}")
    r = F(cache, T) - (T * math.log(T) + (2.0 * EULER_GAMMA - 1.0 - LN_TWO_PI) * T)
    return ErrorTermSample(
        t=T,
        r=r,
        r_quarter_ratio=abs(r) / T**0.25,
        r_third_ratio=abs(r) / T ** (1.0 / 3.0),
    )
