"""Catalyst screening, verification, and bounds.

A catalyst for an LOCC-incomparable pair (src, tgt) is a spectrum c such
that src (x) c converts to tgt (x) c deterministically although src
alone cannot reach tgt.  Necessary conditions for a pair to admit any
catalyst: the largest source coefficient must not exceed the target's,
the smallest must not be below it, and the marginal entropy must not
increase.  Every working p-level catalyst c is itself constrained by

    p * min(c) <= P_max(src -> tgt),

because c -> (uniform p-level) succeeds with probability p * min(c) and
attaching a maximally entangled state never changes P_max.  Catalysts
meeting the bound with equality are called saturated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidProbabilityError
from .spectra import (
    DEFAULT_CONFIG,
    DEFAULT_SIZE_CAP,
    NumericConfig,
    SchmidtSpectrum,
    common_dim,
    entropy,
    pad_to,
    tensor,
)
from .transform import (
    TransformClassification,
    classify,
    pmax,
    pmax_multicopy,
)
from . import kernels

# Probability arguments may exceed their exact range by this much before
# being rejected, so values computed in floating point pass through.
_PROB_SLACK = 1e-12


@dataclass(frozen=True)
class NecessaryConditionsReport:
    """Screen for pairs that could possibly be catalyzed.

    All flags are evaluated on the zero-padded common dimension with
    epsilon slack.  ``passes`` requires every coefficient/entropy flag
    plus incomparability (catalysis is moot for comparable pairs).
    ``marginally_isentropic`` notes |S_src - S_tgt| <= epsilon: such
    pairs are either equivalent up to local unitaries or not
    deterministically convertible at all, so a passing screen with this
    flag set deserves suspicion.
    """

    largest_coeff_ok: bool
    smallest_coeff_ok: bool
    entropy_ok: bool
    incomparable: bool
    marginally_isentropic: bool
    passes: bool


@dataclass(frozen=True)
class CatalystVerdict:
    """Outcome of testing one candidate catalyst.

    ``bound_value`` is dim * smallest coefficient of the candidate;
    ``saturated`` flags |bound_value - pmax_pair| <= epsilon.  A failed
    candidate carries the smallest violated prefix length of the
    combined spectra in ``first_violation``.
    """

    is_catalyst: bool
    first_violation: int | None
    bound_value: float
    pmax_pair: float
    saturated: bool


def necessary_conditions(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> NecessaryConditionsReport:
    """Evaluate the catalyzability screen for a (source, target) pair."""
    eps = cfg.epsilon
    a, b = common_dim(src, tgt)
    s_src = entropy(src)
    s_tgt = entropy(tgt)
    largest_ok = a[0] <= b[0] + eps
    smallest_ok = a[-1] >= b[-1] - eps
    entropy_ok = s_src >= s_tgt - eps
    incomparable = classify(src, tgt, cfg) is TransformClassification.INCOMPARABLE
    return NecessaryConditionsReport(
        largest_coeff_ok=bool(largest_ok),
        smallest_coeff_ok=bool(smallest_ok),
        entropy_ok=bool(entropy_ok),
        incomparable=incomparable,
        marginally_isentropic=bool(abs(s_src - s_tgt) <= eps),
        passes=bool(largest_ok and smallest_ok and entropy_ok and incomparable),
    )


def catalyst_bound(pmax_pair: float, p: int) -> float:
    """Largest admissible smallest coefficient of a p-level catalyst.

    Any catalyst c for a pair with optimal conversion probability
    ``pmax_pair`` satisfies min(c) <= pmax_pair / p.  For p = 2 this
    reads: the larger coefficient must be at least 1 - pmax_pair / 2.
    """
    if p < 1:
        raise ValueError(f"catalyst dimension must be >= 1, got {p}")
    if not 0.0 < pmax_pair <= 1.0 + _PROB_SLACK:
        raise InvalidProbabilityError(f"pmax must lie in (0, 1], got {pmax_pair!r}")
    return pmax_pair / p


def quasi_catalyst_bound(pmax_pair: float, target_probability: float, p: int) -> float:
    """Cap on dim * smallest coefficient for boosting to ``target_probability``.

    A p-level state raising the conversion probability to P' must have
    p * min(c) <= pmax_pair / P'; the cap never exceeds 1 since
    p * min(c) <= 1 for any spectrum.  With P' = 1 this reduces to the
    full-catalysis bound.
    """
    if p < 1:
        raise ValueError(f"catalyst dimension must be >= 1, got {p}")
    if not 0.0 < pmax_pair <= 1.0 + _PROB_SLACK:
        raise InvalidProbabilityError(f"pmax must lie in (0, 1], got {pmax_pair!r}")
    if not 0.0 < target_probability <= 1.0 + _PROB_SLACK:
        raise InvalidProbabilityError(
            f"target probability must lie in (0, 1], got {target_probability!r}"
        )
    return min(1.0, pmax_pair / target_probability)


def is_catalyst(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    cand: SchmidtSpectrum,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> CatalystVerdict:
    """Test whether ``cand`` makes src -> tgt deterministic.

    Decides majorization of src (x) cand by tgt (x) cand on the padded
    common dimension.  Candidates with zero entries are legal but the
    zero dimensions are wasted.
    """
    eps = cfg.epsilon
    n = max(src.dim, tgt.dim)
    sc = tensor(pad_to(src, n), cand)
    tc = tensor(pad_to(tgt, n), cand)
    l = kernels.prefix_first_violation(tc.coefficients, sc.coefficients, eps)
    bound_value = cand.dim * cand.smallest
    pmax_pair = pmax(src, tgt, cfg)
    return CatalystVerdict(
        is_catalyst=(l == 0),
        first_violation=None if l == 0 else l,
        bound_value=bound_value,
        pmax_pair=pmax_pair,
        saturated=bool(abs(bound_value - pmax_pair) <= eps),
    )


def quasi_pmax(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    cand: SchmidtSpectrum,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> float:
    """Optimal conversion probability with ``cand`` attached to both sides.

    Never below pmax(src, tgt): attaching and ignoring the extra state
    is always available.  Never above pmax / (dim * min(cand)) when the
    candidate has full rank.
    """
    n = max(src.dim, tgt.dim)
    return pmax(tensor(pad_to(src, n), cand), tensor(pad_to(tgt, n), cand), cfg)


def multicopy_check(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    n: int,
    cfg: NumericConfig = DEFAULT_CONFIG,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> bool:
    """Necessary condition for a saturated catalyst to exist.

    True iff the n-copy conversion probability is at least the
    single-copy one.  A False result certifies that no saturated
    catalyst exists for the pair; True is not a proof of existence.
    """
    return (
        pmax_multicopy(src, tgt, n, cfg, size_cap=size_cap)
        >= pmax(src, tgt, cfg) - cfg.epsilon
    )
