"""Pure numpy fallback for the compiled kernels in ``_ckernels``.

Same signatures and semantics as the extension module; used when the
extension is not built or when ``ENTCAT_BACKEND=python`` is set.
"""

import numpy as np


def tail_sums(v):
    """Suffix sums t[l] = v[l] + v[l+1] + ... for a descending array.

    Accumulating over the reversed (ascending) array keeps the relative
    error of every tail small, which is what the conversion-probability
    ratios need; the compiled kernel uses a compensated scan instead.
    """
    return np.cumsum(v[::-1])[::-1].copy()


def prefix_first_violation(a, b, eps):
    """Smallest 1-based l with sum(b[:l]) > sum(a[:l]) + eps, else 0.

    Zero means a's prefix sums dominate b's, i.e. a majorizes b.
    Plain sequential sums, bit-identical to a naive accumulation loop.
    """
    pa = np.cumsum(a)
    pb = np.cumsum(b)
    viol = pb > pa + eps
    if not viol.any():
        return 0
    return int(np.argmax(viol)) + 1


def pmax_witness(src, tgt, eps):
    """Minimum tail-sum ratio min_l tails(src)[l] / tails(tgt)[l].

    Indices with tails(tgt) <= eps contribute no constraint.  Returns
    (value, l) with l the smallest 1-based index attaining the minimum.
    """
    ts = tail_sums(src)
    tt = tail_sums(tgt)
    ok = tt > eps
    ratios = np.where(ok, ts / np.where(ok, tt, 1.0), np.inf)
    wit = int(np.argmin(ratios))
    return float(ratios[wit]), wit + 1


def outer_sorted(a, b):
    """All pairwise products a_i * b_j, sorted descending."""
    return np.sort(np.multiply.outer(a, b), axis=None)[::-1].copy()


def catalyst_scan(src, tgt, cands, bound, target_prob, eps):
    """Test candidate catalysts in row order against a (src, tgt) pair.

    ``src`` and ``tgt`` are padded to a common length and sorted
    descending; each row of ``cands`` is a descending catalyst spectrum.
    Rows whose dim * smallest coefficient exceeds ``bound + eps`` are
    pruned without any tensor work.  Survivors pass when the combined
    spectra satisfy majorization (``target_prob >= 1``) or when the
    combined conversion probability reaches ``target_prob - eps``.

    Returns (index of first passing row or -1, tested, pruned).
    """
    p = cands.shape[1]
    tested = 0
    pruned = 0
    for i in range(cands.shape[0]):
        row = cands[i]
        if p * row[p - 1] > bound + eps:
            pruned += 1
            continue
        tested += 1
        sc = outer_sorted(src, row)
        tc = outer_sorted(tgt, row)
        if target_prob >= 1.0:
            hit = prefix_first_violation(tc, sc, eps) == 0
        else:
            hit = pmax_witness(sc, tc, eps)[0] >= target_prob - eps
        if hit:
            return i, tested, pruned
    return -1, tested, pruned
