"""LOCC transformability decisions and optimal conversion probabilities.

A source spectrum converts to a target deterministically under LOCC iff
the source OSCs are majorized by the target OSCs (Nielsen's criterion).
When neither direction holds the pair is incomparable, and the best one
can do is a probabilistic conversion whose optimal probability is the
minimum ratio of tail sums (Vidal's formula):

    P_max(src -> tgt) = min_l  E_l(src) / E_l(tgt),
    E_l(s) = s_l + s_{l+1} + ... (the entanglement monotones).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .spectra import (
    DEFAULT_CONFIG,
    DEFAULT_SIZE_CAP,
    NumericConfig,
    SchmidtSpectrum,
    _from_sorted,
    common_dim,
    entropy,
    tensor_power,
)


class TransformClassification(enum.Enum):
    """Mutually exclusive LOCC relation between a (source, target) pair."""

    EQUIVALENT_SPECTRA = "equivalent_spectra"
    SOURCE_TO_TARGET_DETERMINISTIC = "source_to_target_deterministic"
    TARGET_TO_SOURCE_DETERMINISTIC = "target_to_source_deterministic"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, eq=False)
class TransformReport:
    """Full transformability analysis of a (source, target) pair.

    Monotone tables are computed on the zero-padded common dimension so
    the two lists align index by index.
    """

    classification: TransformClassification
    pmax_forward: float
    pmax_backward: float
    entropy_source: float
    entropy_target: float
    monotones_source: np.ndarray
    monotones_target: np.ndarray


def monotone_tails(s: SchmidtSpectrum) -> np.ndarray:
    """Tail sums E_l = sum_{i>=l} s_i for l = 1..dim.

    E_1 = 1, the sequence is nonincreasing, and E_dim is the smallest
    coefficient.  Each E_l is nonincreasing under LOCC.
    """
    return kernels.tail_sums(s.coefficients)


def nielsen_transformable(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> bool:
    """True iff src converts to tgt with certainty under LOCC.

    Holds iff src's OSCs are majorized by tgt's, i.e. every prefix sum
    of src is at most the matching prefix sum of tgt (plus epsilon).
    """
    a, b = common_dim(src, tgt)
    return kernels.prefix_first_violation(b, a, cfg.epsilon) == 0


def classify(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> TransformClassification:
    """Decide the four-way LOCC relation of the pair.

    Both directions majorized means the padded spectra agree
    elementwise (up to tolerance): equivalent.  Exactly one direction
    gives a deterministic conversion; neither means incomparable.
    """
    fwd = nielsen_transformable(src, tgt, cfg)
    bwd = nielsen_transformable(tgt, src, cfg)
    if fwd and bwd:
        return TransformClassification.EQUIVALENT_SPECTRA
    if fwd:
        return TransformClassification.SOURCE_TO_TARGET_DETERMINISTIC
    if bwd:
        return TransformClassification.TARGET_TO_SOURCE_DETERMINISTIC
    return TransformClassification.INCOMPARABLE


def pmax_witness(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> tuple[float, int]:
    """Optimal conversion probability and the 1-based index attaining it.

    Tail indices where the target's tail is at most epsilon contribute
    no constraint (a padded zero tail cannot bind).  The index l = 1
    always contributes ratio 1, so the result lies in [0, 1].
    """
    a, b = common_dim(src, tgt)
    value, wit = kernels.pmax_witness(a, b, cfg.epsilon)
    return value, wit


def pmax(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> float:
    """Optimal LOCC conversion probability src -> tgt.

    Equals 1 exactly when the conversion is deterministic.
    """
    return pmax_witness(src, tgt, cfg)[0]


def pmax_multicopy(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    n: int,
    cfg: NumericConfig = DEFAULT_CONFIG,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> float:
    """Optimal conversion probability for n copies: src^(x)n -> tgt^(x)n."""
    return pmax(tensor_power(src, n, size_cap=size_cap),
                tensor_power(tgt, n, size_cap=size_cap), cfg)


def uniform_spectrum(p: int) -> SchmidtSpectrum:
    """Spectrum of the p x p maximally entangled state: p entries of 1/p."""
    if p < 1:
        raise ValueError(f"dimension must be >= 1, got {p}")
    return _from_sorted(np.full(p, 1.0 / p), DEFAULT_CONFIG.epsilon)


def transform_report(
    src: SchmidtSpectrum,
    tgt: SchmidtSpectrum,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> TransformReport:
    """Classification, both conversion probabilities, entropies, monotones."""
    a, b = common_dim(src, tgt)
    return TransformReport(
        classification=classify(src, tgt, cfg),
        pmax_forward=pmax(src, tgt, cfg),
        pmax_backward=pmax(tgt, src, cfg),
        entropy_source=entropy(src),
        entropy_target=entropy(tgt),
        monotones_source=kernels.tail_sums(a),
        monotones_target=kernels.tail_sums(b),
    )
