"""Ordered Schmidt-coefficient spectra and their algebra.

For pure bipartite states, every LOCC question answered by this package
depends only on the ordered Schmidt coefficients (OSCs): the squared
Schmidt amplitudes sorted in descending order, a probability vector.
This module provides the immutable value type for such spectra and the
operations everything else builds on: validated construction,
zero-padding, tensor products and powers, marginal entropy, and the
majorization partial order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    DimTooSmallError,
    EmptyInputError,
    NegativeEntryError,
    NotNormalizedError,
    SizeCapExceededError,
)

# Tensor powers beyond this many entries raise instead of allocating.
DEFAULT_SIZE_CAP = 1_000_000


@dataclass(frozen=True)
class NumericConfig:
    """Tolerance and seed policy governing all comparisons and sampling.

    Parameters
    ----------
    epsilon : float
        Absolute tolerance used by every numeric comparison.
    seed : int
        Seed for every randomized procedure.  Identical seed and inputs
        give identical outputs everywhere, regardless of parallelism.
    """

    epsilon: float = 1e-9
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.epsilon >= 0:
            raise ValueError(f"epsilon must be nonnegative, got {self.epsilon}")
        if int(self.seed) != self.seed or self.seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed}")


DEFAULT_CONFIG = NumericConfig()


@dataclass(frozen=True, eq=False)
class SchmidtSpectrum:
    """Descending-ordered probability vector of squared Schmidt amplitudes.

    Attributes
    ----------
    coefficients : numpy.ndarray
        Float64 array sorted descending; entries in [0, 1], summing to 1
        within tolerance.  The array is marked read-only.
    dim : int
        Number of entries, including explicit trailing zeros.
    rank : int
        Number of entries strictly above the construction tolerance
        (the Schmidt rank); trailing zeros do not count.
    """

    coefficients: np.ndarray
    dim: int
    rank: int

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.coefficients, dtype=np.float64)
        arr.flags.writeable = False
        object.__setattr__(self, "coefficients", arr)
        if self.dim != arr.shape[0]:
            raise ValueError(f"dim {self.dim} does not match {arr.shape[0]} entries")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchmidtSpectrum):
            return NotImplemented
        return bool(np.array_equal(self.coefficients, other.coefficients))

    def __repr__(self) -> str:
        vals = ", ".join(repr(float(c)) for c in self.coefficients)
        return f"SchmidtSpectrum(({vals}), rank={self.rank})"

    @property
    def smallest(self) -> float:
        """The last (smallest) coefficient, zeros included."""
        return float(self.coefficients[-1])


def _from_sorted(arr: np.ndarray, epsilon: float) -> SchmidtSpectrum:
    # Internal constructor: trusts ordering/normalization, computes rank.
    rank = int(np.count_nonzero(arr > epsilon))
    return SchmidtSpectrum(arr, arr.shape[0], rank)


def make_spectrum(
    raw,
    cfg: NumericConfig = DEFAULT_CONFIG,
    *,
    renormalize: bool = False,
) -> SchmidtSpectrum:
    """Validate and sort raw coefficients into a spectrum.

    Entries within epsilon below zero are clamped to 0.  The sum must be
    within epsilon of 1 unless ``renormalize`` is set, in which case the
    entries are divided by their sum.  Accepted inputs are used as-is
    (no silent renormalization), so downstream reports reflect exactly
    what was supplied.

    Raises
    ------
    EmptyInputError, NegativeEntryError, NotNormalizedError
    """
    arr = np.atleast_1d(np.asarray(raw, dtype=np.float64)).ravel()
    if arr.size == 0:
        raise EmptyInputError("spectrum needs at least one coefficient")
    eps = cfg.epsilon
    low = arr.min()
    if low < -eps:
        raise NegativeEntryError(f"coefficient {low!r} is below -epsilon")
    arr = np.clip(arr, 0.0, None)
    total = float(arr.sum())
    if renormalize:
        if total <= 0.0:
            raise NotNormalizedError("cannot renormalize an all-zero spectrum")
        arr = arr / total
    elif abs(total - 1.0) > eps:
        raise NotNormalizedError(f"coefficients sum to {total!r}, not 1 within epsilon")
    arr = np.sort(arr, kind="stable")[::-1].copy()
    return _from_sorted(arr, eps)


def pad_to(s: SchmidtSpectrum, dim: int) -> SchmidtSpectrum:
    """Append zeros up to ``dim`` entries; rank and order are unchanged."""
    if dim < s.dim:
        raise DimTooSmallError(f"cannot pad dim {s.dim} spectrum down to {dim}")
    if dim == s.dim:
        return s
    arr = np.concatenate([s.coefficients, np.zeros(dim - s.dim)])
    return SchmidtSpectrum(arr, dim, s.rank)


def common_dim(a: SchmidtSpectrum, b: SchmidtSpectrum) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient arrays of both spectra, zero-padded to equal length."""
    n = max(a.dim, b.dim)
    pa = pad_to(a, n).coefficients
    pb = pad_to(b, n).coefficients
    return pa, pb


def tensor(a: SchmidtSpectrum, b: SchmidtSpectrum) -> SchmidtSpectrum:
    """Spectrum of the joint state: all pairwise products, sorted descending."""
    prods = kernels.outer_sorted(a.coefficients, b.coefficients)
    return _from_sorted(prods, DEFAULT_CONFIG.epsilon)


def tensor_power(
    s: SchmidtSpectrum, n: int, *, size_cap: int = DEFAULT_SIZE_CAP
) -> SchmidtSpectrum:
    """n-fold tensor product of ``s`` with itself.

    Raises SizeCapExceededError when dim ** n would exceed ``size_cap``.
    """
    if n < 1:
        raise ValueError(f"copies must be >= 1, got {n}")
    if s.dim**n > size_cap:
        raise SizeCapExceededError(
            f"{s.dim}^{n} entries exceed the cap of {size_cap}"
        )
    out = s
    for _ in range(n - 1):
        out = tensor(out, s)
    return out


def entropy(s: SchmidtSpectrum) -> float:
    """Marginal von Neumann entropy in bits: -sum s_i log2 s_i (0 log 0 = 0).

    Equals the Shannon entropy of the spectrum; lies in [0, log2 dim].
    """
    v = s.coefficients[s.coefficients > 0.0]
    return float(-np.dot(v, np.log2(v)))


def majorizes(
    a: SchmidtSpectrum,
    b: SchmidtSpectrum,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> tuple[bool, int | None]:
    """Whether a's prefix sums dominate b's, i.e. b is majorized by a.

    Spectra of unequal dimension are zero-padded to a common length.
    Returns ``(True, None)`` when every prefix of b is at most the
    matching prefix of a plus epsilon, else ``(False, l)`` with l the
    smallest violating 1-based prefix length.
    """
    pa, pb = common_dim(a, b)
    l = kernels.prefix_first_violation(pa, pb, cfg.epsilon)
    return (True, None) if l == 0 else (False, l)
