"""Curvature inequalities and identities, each checked with a signed margin.

Every check produces a :class:`CheckRecord` whose ``margin = rhs - lhs`` is
nonnegative when the inequality ``lhs <= rhs`` holds. Checks whose
hypotheses fail (typically nonpositive minimum curvature) come back with
``applicable=False`` and a reason instead of a verdict.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .curvature import CurvatureResult, curvature, edge_balance, inverse_residual
from .errors import BadMeasure, NegativeCurvature
from .graph import DistanceTable, Graph, bfs_distances, is_bipartite
from .resistance import ResistanceData, foster_check, mckay_check, resistance_matrix
from .walks import tv_curves

PASS_RTOL = 1e-9
TOUGHNESS_MAX_N = 14
MIXING_MAX_N = 64


@dataclass
class CheckRecord:
    name: str
    applicable: bool
    reason: str = ""
    lhs: float = math.nan
    rhs: float = math.nan
    extra: dict = field(default_factory=dict)

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.lhs), abs(self.rhs))

    @property
    def passed(self) -> bool | None:
        if not self.applicable:
            return None
        return bool(self.margin >= -PASS_RTOL * self.scale)

    def to_json(self) -> dict:
        def num(v):
            v = float(v)
            return v if math.isfinite(v) else None

        out = {
            "name": self.name,
            "applicable": self.applicable,
            "lhs": num(self.lhs) if self.applicable else None,
            "rhs": num(self.rhs) if self.applicable else None,
            "margin": num(self.margin) if self.applicable else None,
            "pass": self.passed,
        }
        if self.reason:
            out["reason"] = self.reason
        if self.extra:
            out["extra"] = {k: num(v) if isinstance(v, (int, float)) else v
                            for k, v in self.extra.items()}
        return out


def _skip(name, reason) -> CheckRecord:
    return CheckRecord(name, False, reason)


def _need_positive(name, cr) -> CheckRecord | None:
    if cr.kmin <= linalg.numerics().zero_band:
        return _skip(name, f"minimum curvature {cr.kmin:.6g} is not positive")
    return None


def _need_nonnegative(name, cr) -> CheckRecord | None:
    if cr.kmin < -linalg.numerics().zero_band:
        return _skip(name, f"minimum curvature {cr.kmin:.6g} is negative")
    return None


def check_bonnet_myers(g: Graph, cr: CurvatureResult, dt: DistanceTable | None = None):
    """Diameter bound ``diam <= ceil(sqrt(maxdeg / K) * ln n)``."""
    name = "diameter"
    if skip := _need_positive(name, cr):
        return skip
    dt = dt or bfs_distances(g)
    root = math.sqrt(g.max_degree / cr.kmin)
    return CheckRecord(
        name, True,
        lhs=dt.diameter,
        rhs=math.ceil(root * math.log(g.n)),
        extra={"rhs_log2": math.ceil(root * math.log2(g.n))},
    )


def check_lichnerowicz(rd: ResistanceData, cr: CurvatureResult):
    """Spectral gap ``2K <= lambda_2``."""
    name = "spectral_gap"
    if skip := _need_positive(name, cr):
        return skip
    return CheckRecord(
        name, True, lhs=2 * cr.kmin, rhs=rd.lambda2,
        extra={"gap_over_K": rd.lambda2 / cr.kmin},
    )


def commute_times(g: Graph, rd: ResistanceData) -> np.ndarray:
    return 2 * g.m * rd.omega


def check_commute_pinching(g: Graph, rd: ResistanceData, cr: CurvatureResult) -> list[CheckRecord]:
    """Two-sided commute-time bounds, plain and with total curvature.

    The lower bounds are checked for every start vertex, i.e. against
    ``min_x max_y commute(x, y)``.
    """
    names = ("commute_lower", "commute_upper", "commute_lower_total", "commute_upper_total")
    skip = _need_positive(names[0], cr)
    if skip:
        return [_skip(n, skip.reason) for n in names]
    ct = commute_times(g, rd)
    per_start = ct.max(axis=1)
    worst = float(ct.max())
    density = g.m / g.n
    return [
        CheckRecord(names[0], True, lhs=2 / cr.kmax * density, rhs=float(per_start.min())),
        CheckRecord(
            names[1], True, lhs=worst, rhs=4 / cr.kmin * density,
            extra={"constant_ratio": worst * cr.kmin / density},
        ),
        CheckRecord(names[2], True, lhs=2 * g.m / cr.total, rhs=float(per_start.min())),
        CheckRecord(
            names[3], True, lhs=worst, rhs=4 * g.m / cr.total,
            extra={"constant_ratio": worst * cr.total / g.m},
        ),
    ]


def check_kirchhoff_bounds(rd: ResistanceData, cr: CurvatureResult) -> list[CheckRecord]:
    """``n / (2 K2) <= Kf <= n / (2 K)``."""
    names = ("kirchhoff_lower", "kirchhoff_upper")
    skip = _need_positive(names[0], cr)
    if skip:
        return [_skip(n, skip.reason) for n in names]
    n = rd.n
    return [
        CheckRecord(names[0], True, lhs=n / (2 * cr.kmax), rhs=rd.kirchhoff),
        CheckRecord(names[1], True, lhs=rd.kirchhoff, rhs=n / (2 * cr.kmin)),
    ]


def _validate_measure(mu, n) -> np.ndarray:
    mu = np.asarray(mu, dtype=np.float64)
    if mu.shape != (n,):
        raise BadMeasure(f"measure must have {n} entries")
    if (mu < 0).any() or abs(mu.sum() - 1.0) > 1e-12 * n:
        raise BadMeasure("measure must be nonnegative and sum to 1")
    return mu


def check_minimax(rd: ResistanceData, cr: CurvatureResult, mu, label: str = "") -> CheckRecord:
    """``min_a (Omega mu)_a <= 1 / sum(kappa) <= max_b (Omega mu)_b``.

    Both sides fold into one margin, ``min(value - min, max - value)``; the
    three numbers themselves go to ``extra``.
    """
    name = "minimax" + (f"[{label}]" if label else "")
    mu = _validate_measure(mu, rd.n)
    if skip := _need_nonnegative(name, cr):
        return skip
    field_ = rd.omega @ mu
    value = 1.0 / cr.total
    lo, hi = float(field_.min()), float(field_.max())
    slack = min(value - lo, hi - value)
    return CheckRecord(
        name, True, lhs=value - slack, rhs=value,
        extra={"min": lo, "value": value, "max": hi},
    )


def minimax_refutes(rd: ResistanceData, cr: CurvatureResult, alpha: float) -> bool:
    """True if the equilibrium measure ``kappa / sum(kappa)`` violates one of
    the two minimax inequalities for ``alpha``.
    """
    if cr.kmin < -linalg.numerics().zero_band:
        raise NegativeCurvature("equilibrium measure needs nonnegative curvature")
    field_ = rd.omega @ (cr.kappa / cr.total)
    # the field is flat at 1/sum(kappa); allow rounding around it
    tol = PASS_RTOL * max(1.0, abs(alpha))
    return bool(field_.min() > alpha + tol or field_.max() < alpha - tol)


def max_excess_components(g: Graph) -> tuple[int, tuple[int, ...]]:
    """``max over nonempty proper S of components(G - S) - |S|`` and a witness."""
    nbr = [sum(1 << w for w in nb) for nb in g.neighbors]
    full = (1 << g.n) - 1
    best, witness = -g.n, ()
    for mask in range(1, full):
        remaining = full & ~mask
        comps = 0
        while remaining:
            low = remaining & -remaining
            frontier = seen = low
            while frontier:
                v = frontier.bit_length() - 1
                frontier &= ~(1 << v)
                new = nbr[v] & remaining & ~seen
                seen |= new
                frontier |= new
            remaining &= ~seen
            comps += 1
        excess = comps - mask.bit_count()
        if excess > best:
            best = excess
            witness = tuple(i for i in range(g.n) if mask >> i & 1)
    return best, witness


def check_toughness(g: Graph, cr: CurvatureResult) -> CheckRecord:
    """Positive curvature implies 1-toughness; exhaustive over vertex subsets."""
    name = "toughness"
    if skip := _need_positive(name, cr):
        return skip
    if g.n > TOUGHNESS_MAX_N:
        return _skip(name, f"n = {g.n} exceeds brute-force limit {TOUGHNESS_MAX_N}")
    excess, witness = max_excess_components(g)
    return CheckRecord(
        name, True, lhs=excess, rhs=0,
        extra={"witness": [g.labels[i] for i in witness]},
    )


def check_distance_sum(g: Graph, cr: CurvatureResult, dt: DistanceTable | None = None) -> CheckRecord:
    """Pairwise distance sum against the maximum curvature.

    Asserts ``n / (2 K2) <= sum_{u<v} d(u, v)``, which follows from
    ``Omega <= d`` and the lower Kirchhoff bound. The stronger constant
    ``n / K2`` is reported in ``extra`` and fails on cycles.
    """
    name = "distance_sum"
    if skip := _need_nonnegative(name, cr):
        return skip
    if cr.kmax <= 0:
        return _skip(name, "maximum curvature is not positive")
    dt = dt or bfs_distances(g)
    pair_sum = float(np.triu(dt.dist, k=1).sum())
    return CheckRecord(
        name, True, lhs=g.n / (2 * cr.kmax), rhs=pair_sum,
        extra={"strong_rhs": g.n / cr.kmax, "strong_margin": pair_sum - g.n / cr.kmax},
    )


def check_max_curvature(g: Graph, cr: CurvatureResult) -> CheckRecord:
    """``K <= n / (2n - 2)`` for positively curved graphs."""
    name = "max_curvature"
    if skip := _need_positive(name, cr):
        return skip
    return CheckRecord(name, True, lhs=cr.kmin, rhs=g.n / (2 * g.n - 2))


def check_constant_floor(g: Graph, cr: CurvatureResult) -> CheckRecord:
    """Constant curvature is at least ``1 / (n (n - 1))``."""
    name = "constant_floor"
    if not cr.constant:
        return _skip(name, "curvature is not constant")
    return CheckRecord(name, True, lhs=1 / (g.n * (g.n - 1)), rhs=cr.kmin)


def check_foster(g: Graph, rd: ResistanceData) -> CheckRecord:
    return CheckRecord("foster", True, lhs=foster_check(g, rd), rhs=1e-9 * g.n)


def check_mckay(rd: ResistanceData) -> CheckRecord:
    return CheckRecord("mckay", True, lhs=mckay_check(rd), rhs=1e-8 * rd.kirchhoff)


def check_inverse_formula(g: Graph, rd: ResistanceData, cr: CurvatureResult) -> CheckRecord:
    if abs(cr.total) <= linalg.numerics().zero_band:
        return _skip("inverse_formula", "total curvature vanishes")
    return CheckRecord("inverse_formula", True, lhs=inverse_residual(g, rd, cr), rhs=1e-8)


def check_edge_balance(g: Graph, rd: ResistanceData, cr: CurvatureResult) -> CheckRecord:
    """Curvature is ``total`` times the edge-balance vector."""
    p = edge_balance(g, rd)
    resid = float(np.abs(cr.kappa - cr.total * p).max())
    return CheckRecord("edge_balance", True, lhs=resid, rhs=1e-8 * max(1.0, np.abs(cr.kappa).max()))


def check_mixing(g: Graph, cr: CurvatureResult, horizon: int | None = None) -> CheckRecord:
    """Exact TV from every start against ``(4 / K) (|E| / |V|) / t``.

    Only the non-lazy walk is checked, so bipartite graphs are inapplicable.
    """
    name = "mixing"
    if skip := _need_positive(name, cr):
        return skip
    if is_bipartite(g)[0]:
        return _skip(name, "bipartite graph: simple walk is periodic")
    if horizon is None:
        if g.n > MIXING_MAX_N:
            return _skip(name, f"n = {g.n} exceeds exact-evolution limit {MIXING_MAX_N}")
        horizon = 10 * g.n ** 2
    curves = tv_curves(g, horizon)[1:].max(axis=1)
    t = np.arange(1, horizon + 1)
    const = 4 / cr.kmin * g.m / g.n
    # worst scaled excess tv*t - const; passes when <= 0
    worst = int(np.argmax(curves * t - const))
    return CheckRecord(
        name, True, lhs=float(curves[worst] * t[worst]), rhs=const,
        extra={"horizon": horizon, "worst_t": int(t[worst])},
    )


@dataclass
class TheoremReport:
    records: list[CheckRecord]
    n: int
    m: int

    @property
    def passed(self) -> bool:
        return all(r.passed is not False for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.passed is False]

    def __getitem__(self, name: str) -> CheckRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "schema": "rescurv/1",
            "n": self.n,
            "m": self.m,
            "pass": self.passed,
            "checks": [r.to_json() for r in self.records],
        }


def verify_all(
    g: Graph,
    rd: ResistanceData | None = None,
    cr: CurvatureResult | None = None,
    mixing: bool = True,
) -> TheoremReport:
    rd = rd or resistance_matrix(g)
    cr = cr or curvature(rd)
    dt = bfs_distances(g)
    recs = [
        check_foster(g, rd),
        check_mckay(rd),
        check_inverse_formula(g, rd, cr),
        check_edge_balance(g, rd, cr),
        check_bonnet_myers(g, cr, dt),
        check_lichnerowicz(rd, cr),
        *check_commute_pinching(g, rd, cr),
        *check_kirchhoff_bounds(rd, cr),
        check_max_curvature(g, cr),
        check_constant_floor(g, cr),
        check_toughness(g, cr),
        check_distance_sum(g, cr, dt),
    ]
    uniform = np.full(g.n, 1.0 / g.n)
    point = np.zeros(g.n)
    point[0] = 1.0
    recs.append(check_minimax(rd, cr, uniform, "uniform"))
    recs.append(check_minimax(rd, cr, point, f"delta:{g.labels[0]}"))
    if cr.kmin >= -linalg.numerics().zero_band:
        recs.append(check_minimax(rd, cr, np.clip(cr.kappa, 0, None) / np.clip(cr.kappa, 0, None).sum(), "equilibrium"))
    if mixing:
        recs.append(check_mixing(g, cr))
    return TheoremReport(recs, g.n, g.m)
