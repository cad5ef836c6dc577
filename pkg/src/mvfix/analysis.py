"""Pairwise contraction checks and the empirical certification sweep.

For a pair (x, y) the quantities of interest are

* h        the distance between the value sets T(x) and T(y), either the
           two-sided Hausdorff distance or the one-sided excess of T(x)
           over T(y) depending on ``mode``
* m        the generalized displacement
           max(|x - y|, D(x, Tx), D(y, Ty), (D(x, Ty) + D(y, Tx)) / 2)
* margin   F(Phi(m)) - F(Phi(h)), defined when h > 0

A pair with h = 0 is vacuous: the contraction inequality quantifies only
over pairs whose value sets differ.  The empirical contraction modulus
``tau_star`` is the smallest margin seen across a deterministic grid plus
seeded random pairs; any tau below it makes the inequality
``tau + F(Phi(h)) <= F(Phi(m))`` hold on every pair examined.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, MvfixError
from .ffunctions import FFunction, f_eval
from .integrand import Integrand, capital_phi
from .maps import MultiMap, apply_map
from .sets1d import CompactSet, dist_point_set, domain_grid, excess, hausdorff, sample_point

__all__ = [
    "MODES",
    "VERDICT_SLACK",
    "PairCheck",
    "PairEvaluation",
    "CertificateReport",
    "m_value",
    "evaluate_pair",
    "check_pair_f_integral",
    "check_pair_ojha",
    "check_pair_nadler",
    "certify",
]

MODES = ("hausdorff", "excess")

# single comparison slack used by every verdict in this module
VERDICT_SLACK = 1e-12


class PairCheck(Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    VACUOUS = "vacuous"


@dataclass(frozen=True)
class PairEvaluation:
    """All quantities computed for one ordered pair (x, y)."""

    x: float
    y: float
    h: float
    m: float
    phi_h: float
    phi_m: float
    margin: float | None  # None exactly when the pair is vacuous (h == 0)


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of a certification sweep.

    ``tau_star`` is None when every pair was vacuous.  ``pairs`` holds all
    successful evaluations in canonical (x, y) order; ``errors`` holds
    (x, y, message) rows for pairs whose evaluation raised, without
    aborting the sweep.
    """

    mode: str
    seed: int
    grid_size: int
    random_pairs: int
    tau_star: float | None
    worst_pair: PairEvaluation | None
    violations: tuple[PairEvaluation, ...]
    vacuous_pairs: int
    evaluated_pairs: int
    pairs: tuple[PairEvaluation, ...]
    errors: tuple[tuple[float, float, str], ...] = ()


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")


def _pair_distance(Sx: CompactSet, Sy: CompactSet, mode: str) -> float:
    return hausdorff(Sx, Sy) if mode == "hausdorff" else excess(Sx, Sy)


def m_value(T: MultiMap, x: float, y: float) -> float:
    """Generalized displacement m(x, y) for the map T."""
    Sx, Sy = apply_map(T, x), apply_map(T, y)
    return max(
        abs(x - y),
        dist_point_set(x, Sx),
        dist_point_set(y, Sy),
        0.5 * (dist_point_set(x, Sy) + dist_point_set(y, Sx)),
    )


def _evaluate(
    F: FFunction,
    f: Integrand,
    x: float,
    y: float,
    Sx: CompactSet,
    Sy: CompactSet,
    mode: str,
) -> PairEvaluation:
    h = _pair_distance(Sx, Sy, mode)
    m = max(
        abs(x - y),
        dist_point_set(x, Sx),
        dist_point_set(y, Sy),
        0.5 * (dist_point_set(x, Sy) + dist_point_set(y, Sx)),
    )
    phi_h = capital_phi(f, h)
    phi_m = capital_phi(f, m)
    if h == 0.0:
        return PairEvaluation(x, y, h, m, phi_h, phi_m, None)
    # h > 0 forces x != y, hence m >= |x - y| > 0, so both F values exist
    margin = f_eval(F, phi_m) - f_eval(F, phi_h)
    return PairEvaluation(x, y, h, m, phi_h, phi_m, margin)


def evaluate_pair(
    T: MultiMap,
    F: FFunction,
    f: Integrand,
    x: float,
    y: float,
    mode: str = "hausdorff",
) -> PairEvaluation:
    """Evaluate h, m, their transforms, and the margin for one pair."""
    _check_mode(mode)
    return _evaluate(F, f, x, y, apply_map(T, x), apply_map(T, y), mode)


def check_pair_f_integral(
    T: MultiMap,
    F: FFunction,
    f: Integrand,
    tau: float,
    x: float,
    y: float,
    mode: str = "hausdorff",
) -> PairCheck:
    """Check tau + F(Phi(h)) <= F(Phi(m)) on one pair.

    Vacuous when h = 0; otherwise holds iff tau <= margin + 1e-12.
    """
    if not tau > 0.0:
        raise DomainError(f"tau must be positive, got {tau}")
    ev = evaluate_pair(T, F, f, x, y, mode)
    if ev.margin is None:
        return PairCheck.VACUOUS
    return PairCheck.HOLDS if tau <= ev.margin + VERDICT_SLACK else PairCheck.VIOLATED


def check_pair_ojha(
    T: MultiMap,
    f: Integrand,
    alpha: float,
    x: float,
    y: float,
    mode: str = "hausdorff",
) -> PairCheck:
    """Check the linear integral condition Phi(h) <= alpha * Phi(m)."""
    if not (0.0 <= alpha < 1.0):
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
    _check_mode(mode)
    Sx, Sy = apply_map(T, x), apply_map(T, y)
    h = _pair_distance(Sx, Sy, mode)
    m = m_value(T, x, y)
    lhs = capital_phi(f, h)
    rhs = alpha * capital_phi(f, m)
    return PairCheck.HOLDS if lhs <= rhs + VERDICT_SLACK else PairCheck.VIOLATED


def check_pair_nadler(
    T: MultiMap,
    lam: float,
    x: float,
    y: float,
    mode: str = "hausdorff",
) -> PairCheck:
    """Check the plain Lipschitz condition h <= lam * |x - y|."""
    if not (0.0 <= lam < 1.0):
        raise DomainError(f"lambda must lie in [0, 1), got {lam}")
    _check_mode(mode)
    Sx, Sy = apply_map(T, x), apply_map(T, y)
    h = _pair_distance(Sx, Sy, mode)
    return PairCheck.HOLDS if h <= lam * abs(x - y) + VERDICT_SLACK else PairCheck.VIOLATED


def certify(
    T: MultiMap,
    F: FFunction,
    f: Integrand,
    grid_size: int = 101,
    random_pairs: int = 1000,
    seed: int = 42,
    mode: str = "hausdorff",
) -> CertificateReport:
    """Sweep grid and seeded random pairs, reporting the empirical modulus.

    All unordered pairs from a deterministic ``grid_size``-point grid over
    the domain are evaluated, plus ``random_pairs`` pairs drawn with a
    seeded generator; each pair is ordered x < y before evaluation, and
    results are reported in canonical (x, y) order, so a repeated run
    with the same seed is bit-identical.  Per-pair failures are collected
    instead of aborting the sweep.
    """
    _check_mode(mode)
    if grid_size < 2:
        raise DomainError(f"grid_size must be at least 2, got {grid_size}")
    if random_pairs < 0:
        raise DomainError(f"random_pairs must be >= 0, got {random_pairs}")

    grid = domain_grid(T.domain, grid_size)
    pair_args: list[tuple[float, float]] = []
    for i in range(len(grid)):
        for j in range(i + 1, len(grid)):
            pair_args.append((grid[i], grid[j]))
    rng = np.random.default_rng(seed)
    for _ in range(random_pairs):
        a = sample_point(T.domain, rng)
        b = sample_point(T.domain, rng)
        pair_args.append((min(a, b), max(a, b)))

    cache: dict[float, CompactSet] = {}

    def image(x: float) -> CompactSet:
        S = cache.get(x)
        if S is None:
            S = apply_map(T, x)
            cache[x] = S
        return S

    evaluations: list[PairEvaluation] = []
    errors: list[tuple[float, float, str]] = []
    for x, y in pair_args:
        try:
            evaluations.append(_evaluate(F, f, x, y, image(x), image(y), mode))
        except MvfixError as err:
            errors.append((x, y, str(err)))

    evaluations.sort(key=lambda p: (p.x, p.y))
    errors.sort(key=lambda row: (row[0], row[1]))

    tau_star: float | None = None
    worst: PairEvaluation | None = None
    vacuous = 0
    violations = []
    for ev in evaluations:
        if ev.margin is None:
            vacuous += 1
            continue
        if tau_star is None or ev.margin < tau_star:
            tau_star = ev.margin
            worst = ev
        if ev.margin <= 0.0:
            violations.append(ev)

    return CertificateReport(
        mode=mode,
        seed=seed,
        grid_size=grid_size,
        random_pairs=random_pairs,
        tau_star=tau_star,
        worst_pair=worst,
        violations=tuple(violations),
        vacuous_pairs=vacuous,
        evaluated_pairs=len(evaluations),
        pairs=tuple(evaluations),
        errors=tuple(errors),
    )
