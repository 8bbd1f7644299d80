"""Catalyst search: exact 2x2 feasibility and randomized simplex search.

For 2-level candidates (x, 1-x) the combined spectra src (x) c and
tgt (x) c consist of two linear families {a_i * x} and {a_i * (1-x)},
so each top-l prefix sum of the sorted union is a piecewise-linear
convex function of x whose kinks sit where two members cross:
a_i * x = a_j * (1-x), i.e. x = a_j / (a_i + a_j).  Between consecutive
kinks every majorization constraint is a single linear inequality in x,
which makes 2x2 feasibility exactly decidable: enumerate the kinks,
solve the inequalities piece by piece, and return the union of feasible
closed intervals.  An empty union is a certificate that no 2x2 catalyst
exists.

For p >= 3 no such certificate is available and the search falls back
to seeded uniform sampling of the probability simplex, pruned by the
dim * smallest-coefficient bound before any tensor work.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .catalysis import CatalystVerdict, is_catalyst, necessary_conditions, quasi_pmax
from .errors import InvalidProbabilityError, NotIncomparableError
from .spectra import (
    DEFAULT_CONFIG,
    NumericConfig,
    SchmidtSpectrum,
    _from_sorted,
    common_dim,
    make_spectrum,
)
from .transform import TransformClassification, classify, pmax

# Breakpoints closer than this collapse to one; also the merge slack for
# adjacent feasible intervals.  Well below epsilon, well above float noise.
_X_TOL = 1e-12


class SearchMode(enum.Enum):
    EXACT2 = "exact2"
    RANDOM = "random"


@dataclass(frozen=True)
class SearchConfig:
    """Catalyst search parameters.

    ``target_probability`` = 1 searches for full catalysts; below 1 it
    searches for states boosting the conversion probability to at least
    that value.  Exact mode supports only p = 2 and full catalysis.
    """

    p: int = 2
    mode: SearchMode = SearchMode.RANDOM
    sample_count: int = 100_000
    target_probability: float = 1.0
    cfg: NumericConfig = field(default_factory=NumericConfig)

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"catalyst dimension must be >= 2, got {self.p}")
        if self.sample_count < 1:
            raise ValueError(f"sample count must be >= 1, got {self.sample_count}")
        if not 0.0 < self.target_probability <= 1.0:
            raise InvalidProbabilityError(
                f"target probability must lie in (0, 1], got {self.target_probability}"
            )
        if self.mode is SearchMode.EXACT2 and self.p != 2:
            raise ValueError("exact mode requires a 2-level catalyst")
        if self.mode is SearchMode.EXACT2 and self.target_probability != 1.0:
            raise ValueError("exact mode requires target probability 1")


@dataclass(frozen=True)
class Found:
    """A working candidate, re-verified before being returned."""

    catalyst: SchmidtSpectrum
    verdict: CatalystVerdict
    achieved_probability: float = 1.0


@dataclass(frozen=True)
class FoundInterval:
    """Exact 2x2 success: closed feasible intervals for the larger coefficient."""

    feasible_x_intervals: tuple[tuple[float, float], ...]
    breakpoints_examined: int


@dataclass(frozen=True)
class NonExistence:
    """Exact 2x2 certificate that no 2-level catalyst exists for the pair."""

    breakpoints_examined: int
    feasible_intervals: tuple = ()


@dataclass(frozen=True)
class NotFound:
    """Randomized search exhausted its samples without a hit."""

    samples_tested: int
    samples_pruned_by_bound: int
    failed_conditions: tuple[str, ...] = ()


@dataclass(frozen=True)
class TrivialAlreadyTransformable:
    """The bare pair already reaches the requested probability."""


SearchOutcome = (
    Found | FoundInterval | NonExistence | NotFound | TrivialAlreadyTransformable
)


def _sample_rows(p: int, count: int, seed: int) -> np.ndarray:
    # Spacings of sorted uniforms: count x p rows, each sorted descending.
    rng = np.random.default_rng(seed)
    if p == 1:
        return np.ones((count, 1))
    u = np.sort(rng.random((count, p - 1)), axis=1)
    spac = np.diff(u, axis=1, prepend=0.0, append=1.0)
    spac.sort(axis=1)
    return np.ascontiguousarray(spac[:, ::-1])


def sample_simplex(p: int, count: int, seed: int = 0) -> list[SchmidtSpectrum]:
    """Uniform samples from the (p-1)-simplex, each sorted descending.

    Reproducible per seed; the k-th sample for a given (p, seed) never
    depends on ``count``.
    """
    if p < 1:
        raise ValueError(f"dimension must be >= 1, got {p}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    rows = _sample_rows(p, count, seed)
    eps = DEFAULT_CONFIG.epsilon
    return [_from_sorted(row.copy(), eps) for row in rows]


def _piece_prefix_coeffs(v: np.ndarray, x_mid: float) -> tuple[np.ndarray, np.ndarray]:
    # Prefix sums of the sorted union {v_i * x} U {v_i * (1-x)} are linear
    # on a breakpoint-free piece: prefix_l(x) = X[l]*x + Y[l]*(1-x), with the
    # sort order read off at the piece midpoint.
    prods = np.concatenate([v * x_mid, v * (1.0 - x_mid)])
    slope_x = np.concatenate([v, np.zeros_like(v)])
    slope_1mx = np.concatenate([np.zeros_like(v), v])
    order = np.argsort(-prods, kind="stable")
    return np.cumsum(slope_x[order]), np.cumsum(slope_1mx[order])


def _feasible_on_piece(
    a: np.ndarray, b: np.ndarray, lo: float, hi: float
) -> tuple[float, float] | None:
    # Intersect the 2n linear majorization constraints with [lo, hi].
    mid = 0.5 * (lo + hi)
    xs, ys = _piece_prefix_coeffs(a, mid)
    xt, yt = _piece_prefix_coeffs(b, mid)
    # Constraint per l: prefix_src - prefix_tgt <= 0, i.e. c1*x + c0 <= 0
    # with c1 = (Xs-Xt) - (Ys-Yt) and c0 = Ys-Yt.
    c0 = ys - yt
    c1 = (xs - xt) - c0
    f_lo, f_hi = lo, hi
    for c1_l, c0_l in zip(c1, c0):
        if abs(c1_l) <= 1e-14:
            if c0_l > _X_TOL:
                return None
            continue
        bound = -c0_l / c1_l
        if c1_l > 0.0:
            f_hi = min(f_hi, bound)
        else:
            f_lo = max(f_lo, bound)
        if f_lo > f_hi:
            return None
    return f_lo, f_hi


def search_exact_p2(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> SearchOutcome:
    """Exactly decide 2x2 catalyst existence for an incomparable pair.

    Returns FoundInterval with the closed feasible intervals of the
    larger catalyst coefficient x, or NonExistence when no (x, 1-x)
    works.  Pairs already convertible return TrivialAlreadyTransformable;
    pairs convertible only target-to-source raise NotIncomparableError.
    """
    relation = classify(src, tgt, cfg)
    if relation in (
        TransformClassification.EQUIVALENT_SPECTRA,
        TransformClassification.SOURCE_TO_TARGET_DETERMINISTIC,
    ):
        return TrivialAlreadyTransformable()
    if relation is TransformClassification.TARGET_TO_SOURCE_DETERMINISTIC:
        raise NotIncomparableError(
            "pair is deterministically convertible target-to-source only"
        )
    a, b = common_dim(src, tgt)
    pm = pmax(src, tgt, cfg)
    # No catalyst can beat the dim * smallest-coefficient bound, so the
    # domain starts at the bound (widened by float slack), never below 1/2.
    lo = max(0.5, 1.0 - pm / 2.0 - _X_TOL)

    points = {lo, 1.0}
    for fam in (a, b):
        for ai in fam:
            for aj in fam:
                s = ai + aj
                if s > 0.0:
                    x = aj / s
                    if lo < x < 1.0:
                        points.add(x)
    bps: list[float] = []
    for x in sorted(points):
        if not bps or x - bps[-1] > _X_TOL:
            bps.append(x)

    intervals: list[tuple[float, float]] = []
    for u, v in zip(bps, bps[1:]):
        piece = _feasible_on_piece(a, b, u, v)
        if piece is None:
            continue
        p_lo, p_hi = piece
        if intervals and p_lo - intervals[-1][1] <= _X_TOL:
            intervals[-1] = (intervals[-1][0], max(intervals[-1][1], p_hi))
        else:
            intervals.append((p_lo, p_hi))

    if not intervals:
        return NonExistence(breakpoints_examined=len(bps))
    return FoundInterval(
        feasible_x_intervals=tuple(intervals),
        breakpoints_examined=len(bps),
    )


_CONDITION_NAMES = ("largest_coeff", "smallest_coeff", "entropy", "incomparable")


def search_random(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    sc: SearchConfig,
) -> SearchOutcome:
    """Seeded randomized catalyst search on the (p-1)-simplex.

    Samples are tested most-uniform first (descending smallest
    coefficient): saturated catalysts sit exactly at the pruning bound,
    so near-uniform survivors are the most promising heuristically.
    The outcome is a pure function of (src, tgt, config): samples are
    assigned deterministic indices and the first hit in index order
    wins, independent of any execution parallelism.
    """
    if sc.mode is not SearchMode.RANDOM:
        raise ValueError("search_random requires a RANDOM-mode config")
    eps = sc.cfg.epsilon
    pm = pmax(src, tgt, sc.cfg)
    full = sc.target_probability >= 1.0
    if full:
        relation = classify(src, tgt, sc.cfg)
        if relation in (
            TransformClassification.EQUIVALENT_SPECTRA,
            TransformClassification.SOURCE_TO_TARGET_DETERMINISTIC,
        ):
            return TrivialAlreadyTransformable()
        screen = necessary_conditions(src, tgt, sc.cfg)
        if not screen.passes:
            failed = tuple(
                name
                for name, ok in zip(
                    _CONDITION_NAMES,
                    (
                        screen.largest_coeff_ok,
                        screen.smallest_coeff_ok,
                        screen.entropy_ok,
                        screen.incomparable,
                    ),
                )
                if not ok
            )
            return NotFound(
                samples_tested=0, samples_pruned_by_bound=0, failed_conditions=failed
            )
    elif pm + eps >= sc.target_probability:
        return TrivialAlreadyTransformable()

    rows = _sample_rows(sc.p, sc.sample_count, sc.cfg.seed)
    order = np.argsort(-rows[:, -1], kind="stable")
    rows = np.ascontiguousarray(rows[order])

    a, b = common_dim(src, tgt)
    bound = pm / sc.target_probability
    idx, tested, pruned = kernels.catalyst_scan(
        a, b, rows, bound, sc.target_probability, eps
    )
    if idx < 0:
        return NotFound(samples_tested=tested, samples_pruned_by_bound=pruned)

    cand = make_spectrum(rows[idx], sc.cfg)
    verdict = is_catalyst(src, tgt, cand, sc.cfg)
    achieved = 1.0 if full else quasi_pmax(src, tgt, cand, sc.cfg)
    if full and not verdict.is_catalyst:
        raise AssertionError("scan hit failed re-verification; kernel bug")
    return Found(catalyst=cand, verdict=verdict, achieved_probability=achieved)
