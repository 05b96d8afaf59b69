"""Executable checks of the measure laws, each yielding a LawReport.

Two ratio conventions, recorded per law and honored by the verdict rule:

* asymptotic laws (theorem1): ratios are observed/comparator quotients and
  the verdict is pass iff every ratio lies in [1-tol, 1+tol];
* bound laws: for the upper-level scans (corollary1/2) ratios are plain
  quotients measured-against-level and pass means ratio < 1; for the lower
  bounds (lower_bound, rh_bound) ratios are natural-log margins
  ln(observed) - ln(bound) — finite even where the bound itself underflows —
  and pass means margin > 0.  The slack factor of a lower bound is
  exp(min(ratios)).

A premise that fails to hold yields verdict "inconclusive", not "fail":
conditional statements are not falsified by an unmet hypothesis.
"""
import csv
import io
import json
import math
from dataclasses import asdict, dataclass

from . import integral, ladder, segments
from .errors import PreconditionError


@dataclass(frozen=True)
class LawReport:
    law_id: str
    inputs: dict
    observed: dict
    comparator: dict
    ratios: list
    tolerance: float
    verdict: str  # pass | fail | inconclusive


def law_to_json(report: LawReport) -> str:
    return json.dumps(asdict(report))


def law_to_csv(report: LawReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["law_id", "name", "observed", "comparator", "ratio",
                "tolerance", "verdict"])
    for (name, obs), comp, ratio in zip(
        report.observed.items(), report.comparator.values(), report.ratios
    ):
        w.writerow([
            report.law_id, name, f"{obs:.17g}", f"{comp:.17g}",
            f"{ratio:.17g}", f"{report.tolerance:.17g}", report.verdict,
        ])
    return buf.getvalue()


def _within(ratios, tol) -> bool:
    return all(1.0 - tol <= r <= 1.0 + tol for r in ratios)


# --------------------------------------------------------------------------
# stabilization law
# --------------------------------------------------------------------------

def theorem1_check(
    cache: integral.IntegralCache,
    cfg: ladder.LadderConfig,
    T: float,
    Hbar: float,
    n: int,
    eps: float,
    tol: float = 0.10,
) -> LawReport:
    """Iterated-segment measure stabilizes at Hbar once above T^(1/3+eps).

    The o(T/ln T) side condition on Hbar goes through build_chain's warning
    channel (the flagship desk-scale instance sits slightly above the 0.1
    guard and is still expected to stabilize).
    """
    if not 1 <= n <= cfg.k0_max:
        raise PreconditionError(f"theorem1 requires 1 <= n <= {cfg.k0_max}; got {n}")
    if eps <= 0.0:
        raise PreconditionError(f"theorem1 requires eps > 0; got {eps}")
    chain = segments.build_chain(cache, cfg, T, Hbar, n)
    m = segments.metrics(chain)
    level = T ** (1.0 / 3.0 + eps)
    premise = m.measures[n] >= level
    observed = {"measure_n": m.measures[n]}
    comparator = {"Hbar": Hbar}
    for r in range(1, n + 1):
        observed[f"cascade_{r}"] = m.measures[r] / m.measures[r - 1]
        comparator[f"one_{r}"] = 1.0
    ratios = [o / c for o, c in zip(observed.values(), comparator.values())]
    if not premise:
        verdict = "inconclusive"
    else:
        verdict = "pass" if _within(ratios, tol) else "fail"
    return LawReport(
        law_id="theorem1",
        inputs={"T": T, "Hbar": Hbar, "n": n, "eps": eps,
                "premise_level": level, "premise_measure": m.measures[n]},
        observed=observed,
        comparator=comparator,
        ratios=ratios,
        tolerance=tol,
        verdict=verdict,
    )


# --------------------------------------------------------------------------
# level scans from below/above
# --------------------------------------------------------------------------

def corollary1_check(
    cache: integral.IntegralCache,
    cfg: ladder.LadderConfig,
    T: float,
    eps: float,
    A_of_T: float,
    k_max: int,
) -> LawReport:
    """Base length below the level: every iterated measure stays below it."""
    if not 0.0 < A_of_T < 1.0:
        raise PreconditionError(f"corollary1 requires 0 < A(T) < 1; got {A_of_T}")
    level = T ** (1.0 / 3.0 + eps)
    H1 = A_of_T * level
    chain = segments.build_chain(cache, cfg, T, H1, k_max)
    m = segments.metrics(chain)
    observed = {f"measure_{k}": m.measures[k] for k in range(1, k_max + 1)}
    comparator = {f"level_{k}": level for k in range(1, k_max + 1)}
    ratios = [o / level for o in observed.values()]
    verdict = "pass" if all(r < 1.0 for r in ratios) else "fail"
    return LawReport(
        law_id="corollary1",
        inputs={"T": T, "eps": eps, "A_of_T": A_of_T, "k_max": k_max, "H1": H1},
        observed=observed,
        comparator=comparator,
        ratios=ratios,
        tolerance=0.0,
        verdict=verdict,
    )


def corollary2_check(
    cache: integral.IntegralCache,
    cfg: ladder.LadderConfig,
    T: float,
    eps: float,
    B_of_T: float,
    k_max: int,
    tol: float = 0.0,
    a_default: float = 0.9,
) -> LawReport:
    """Base length above the level: once a measure drops below a_default
    times the level, no later measure may re-cross the level.  If no drop
    occurs within k_max steps the premise is unmet (inconclusive)."""
    if B_of_T <= 1.0:
        raise PreconditionError(f"corollary2 requires B(T) > 1; got {B_of_T}")
    level = T ** (1.0 / 3.0 + eps)
    H2 = B_of_T * level
    chain = segments.build_chain(cache, cfg, T, H2, k_max)
    m = segments.metrics(chain)
    drop = None
    for k in range(1, k_max + 1):
        if m.measures[k] < a_default * level:
            drop = k
            break
    observed = {f"measure_{k}": m.measures[k] for k in range(1, k_max + 1)}
    comparator = {f"level_{k}": level for k in range(1, k_max + 1)}
    ratios = [o / level for o in observed.values()]
    if drop is None:
        verdict = "inconclusive"
    else:
        verdict = (
            "pass"
            if all(m.measures[k] < level for k in range(drop + 1, k_max + 1))
            else "fail"
        )
    return LawReport(
        law_id="corollary2",
        inputs={"T": T, "eps": eps, "B_of_T": B_of_T, "k_max": k_max,
                "H2": H2, "a_default": a_default,
                "drop_index": -1 if drop is None else drop},
        observed=observed,
        comparator=comparator,
        ratios=ratios,
        tolerance=tol,
        verdict=verdict,
    )


# --------------------------------------------------------------------------
# lower bounds
# --------------------------------------------------------------------------

def lower_bound_check(
    cache: integral.IntegralCache,
    cfg: ladder.LadderConfig,
    T: float,
    H: float,
    k0: int,
) -> LawReport:
    """Unconditional lower bound on iterated measures, compared in log space.

    The bound (ln^3 T / 64 T)^(k0/3) * H underflows for large k0; margins are
    ln(measure) - ln(bound), finite for any k0.  Chains are built to
    min(k0, config depth bound); the bound itself uses the full k0.
    """
    if k0 < 1:
        raise PreconditionError(f"lower_bound requires k0 >= 1; got {k0}")
    k_build = min(k0, cfg.k0_max)
    chain = segments.build_chain(cache, cfg, T, H, k_build)
    m = segments.metrics(chain)
    lnT = math.log(T)
    log_rhs = (k0 / 3.0) * (3.0 * math.log(lnT) - math.log(64.0) - lnT) + math.log(H)
    observed = {f"log_measure_{k}": math.log(m.measures[k])
                for k in range(1, k_build + 1)}
    comparator = {f"log_bound_{k}": log_rhs for k in range(1, k_build + 1)}
    ratios = [o - log_rhs for o in observed.values()]
    verdict = "pass" if all(r > 0.0 for r in ratios) else "fail"
    return LawReport(
        law_id="lower_bound",
        inputs={"T": T, "H": H, "k0": k0, "k_checked": k_build},
        observed=observed,
        comparator=comparator,
        ratios=ratios,
        tolerance=0.0,
        verdict=verdict,
    )


def rh_bound_check(
    cache: integral.IntegralCache,
    cfg: ladder.LadderConfig,
    T: float,
    Delta: float,
    k0: int,
    D: float = 1.0,
    delta_slack: float = 0.1,
) -> LawReport:
    """Conditional lower bound T^(Delta - o(1)), again via log margins.

    Checks both the H*T^(-2 k0 D / ln ln T) form and the T^(Delta-delta_slack)
    reading of the o(1) exponent loss.
    """
    if not 0.0 < Delta < 1.0:
        raise PreconditionError(f"rh_bound requires 0 < Delta < 1; got {Delta}")
    if D <= 0.0:
        raise PreconditionError(f"rh_bound requires D > 0; got {D}")
    lnT = math.log(T)
    H = T**Delta
    k_build = min(k0, cfg.k0_max)
    chain = segments.build_chain(cache, cfg, T, H, k_build)
    m = segments.metrics(chain)
    log_main = Delta * lnT - k0 * (2.0 * D / math.log(lnT)) * lnT
    log_aux = (Delta - delta_slack) * lnT
    observed = {}
    comparator = {}
    for k in range(1, k_build + 1):
        observed[f"log_measure_{k}"] = math.log(m.measures[k])
        comparator[f"log_bound_{k}"] = log_main
    for k in range(1, k_build + 1):
        observed[f"log_measure_{k}_aux"] = math.log(m.measures[k])
        comparator[f"log_level_{k}_aux"] = log_aux
    ratios = [o - c for o, c in zip(observed.values(), comparator.values())]
    verdict = "pass" if all(r > 0.0 for r in ratios) else "fail"
    return LawReport(
        law_id="rh_bound",
        inputs={"T": T, "Delta": Delta, "k0": k0, "D": D,
                "delta_slack": delta_slack, "H": H, "k_checked": k_build},
        observed=observed,
        comparator=comparator,
        ratios=ratios,
        tolerance=0.0,
        verdict=verdict,
    )


def bound_comparison_report(T_list, Delta: float, k0: int, D: float = 1.0) -> LawReport:
    """Tabulate the two lower bounds side by side in log10.

    Flags (inputs["uncond_trivial"]) the regime where the unconditional
    exponent Delta - k0/3 is negative, making that bound vacuous against the
    conditional one.
    """
    if not 0.0 < Delta < 1.0:
        raise PreconditionError(f"comparison requires 0 < Delta < 1; got {Delta}")
    if k0 < 1:
        raise PreconditionError(f"comparison requires k0 >= 1; got {k0}")
    observed = {}
    comparator = {}
    for T in T_list:
        lnT = math.log(T)
        l10 = math.log10(T)
        observed[f"log10_uncond_T{T:g}"] = (
            k0 * math.log10(lnT / 4.0) + (Delta - k0 / 3.0) * l10
        )
        comparator[f"log10_cond_T{T:g}"] = (
            Delta - 2.0 * k0 * D / math.log(lnT)
        ) * l10
    ratios = [o - c for o, c in zip(observed.values(), comparator.values())]
    return LawReport(
        law_id="bound_comparison",
        inputs={"Delta": Delta, "k0": k0, "D": D,
                "uncond_trivial": 1.0 if Delta - k0 / 3.0 < 0.0 else 0.0},
        observed=observed,
        comparator=comparator,
        ratios=ratios,
        tolerance=0.0,
        verdict="pass",
    )
