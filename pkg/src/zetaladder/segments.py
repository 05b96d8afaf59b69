"""Chains of reversely iterated segments and their measures/gaps.

A chain is the family [T^(r), (T+H)^(r)], r = 0..k, where ^(r) is the r-fold
reverse step.  Structural facts asserted at construction: positive measures,
strict interleaving (each segment lies wholly left of the next), and
containment in [T, 2T] at desk scale.
"""
import io
import math
import warnings
from dataclasses import dataclass

from . import integral, ladder
from .errors import PreconditionError
from .integral import EULER_GAMMA


@dataclass(frozen=True)
class SegmentChain:
    T: float
    H: float
    k: int
    left: tuple   # T^(0) .. T^(k)
    right: tuple  # (T+H)^(0) .. (T+H)^(k)


@dataclass(frozen=True)
class ChainMetrics:
    measures: tuple  # right[r] - left[r]
    gaps: tuple      # left[l] - right[l-1], l = 1..k
    gap_model: float  # (1-c) T / ln T


def build_chain(
    cache: integral.IntegralCache,
    cfg: ladder.LadderConfig,
    T: float,
    H: float,
    k: int,
) -> SegmentChain:
    if H <= 0.0:
        raise PreconditionError(f"build_chain requires H > 0; got {H}")
    guard = 0.1 * T / math.log(T)
    if H > guard:
        warnings.warn(
            f"H={H:g} exceeds the o(T/ln T) guard {guard:g} at T={T:g}; "
            f"asymptotic trends may not apply",
            stacklevel=2,
        )
    left = ladder.reverse_iterates(cache, cfg, T, k)
    right = ladder.reverse_iterates(cache, cfg, T + H, k)
    chain = SegmentChain(T=T, H=H, k=k, left=tuple(left), right=tuple(right))
    _validate(chain)
    return chain


def _validate(chain: SegmentChain) -> None:
    for r in range(chain.k + 1):
        if not chain.left[r] < chain.right[r]:
            raise PreconditionError(
                f"segment {r} degenerate: [{chain.left[r]!r}, {chain.right[r]!r}]"
            )
        if r < chain.k and not chain.right[r] < chain.left[r + 1]:
            raise PreconditionError(
                f"interleaving violated between segments {r} and {r + 1}: "
                f"right[{r}]={chain.right[r]!r} >= left[{r + 1}]={chain.left[r + 1]!r}"
            )
    if chain.right[chain.k] > 2.0 * chain.T:
        raise PreconditionError(
            f"chain escapes [T, 2T]: right[{chain.k}]={chain.right[chain.k]:g} "
            f"> {2.0 * chain.T:g}"
        )


def metrics(chain: SegmentChain) -> ChainMetrics:
    measures = tuple(r - l for l, r in zip(chain.left, chain.right))
    gaps = tuple(
        chain.left[i] - chain.right[i - 1] for i in range(1, chain.k + 1)
    )
    return ChainMetrics(
        measures=measures,
        gaps=gaps,
        gap_model=(1.0 - EULER_GAMMA) * chain.T / math.log(chain.T),
    )


def in_delta(chain: SegmentChain, tau: float) -> bool:
    """Membership in the disconnected union of the chain's segments."""
    return any(
        l <= tau <= r for l, r in zip(chain.left, chain.right)
    )


def chain_csv(chain: SegmentChain) -> str:
    """CSV form: r,left,right,measure,gap (gap empty on the base row)."""
    m = metrics(chain)
    buf = io.StringIO()
    buf.write("r,left,right,measure,gap\n")
    for r in range(chain.k + 1):
        gap = f"{m.gaps[r - 1]:.17g}" if r >= 1 else ""
        buf.write(
            f"{r},{chain.left[r]:.17g},{chain.right[r]:.17g},"
            f"{m.measures[r]:.17g},{gap}\n"
        )
    return buf.getvalue()
