"""NumPy fallback for the hot kernels.

Results are bit-identical to the compiled backend; only speed differs.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"

_BLOCK = 4096


def weight_counts(gen: np.ndarray, p: int) -> np.ndarray:
    """Hamming-weight histogram over all p^k codewords of a k x n generator.

    Enumerates messages in mixed-radix order, block by block, evaluating each
    codeword directly; returns int64 counts indexed by weight 0..n.
    """
    gen = np.ascontiguousarray(gen, dtype=np.int64) % p
    k, n = gen.shape
    total = p**k
    counts = np.zeros(n + 1, dtype=np.int64)
    radix = p ** np.arange(k, dtype=np.int64)
    for start in range(0, total, _BLOCK):
        idx = np.arange(start, min(start + _BLOCK, total), dtype=np.int64)
        msgs = (idx[:, None] // radix[None, :]) % p
        words = msgs @ gen % p
        weights = np.count_nonzero(words, axis=1)
        counts += np.bincount(weights, minlength=n + 1)
    return counts


def char_histograms(base: np.ndarray, rot: np.ndarray, p: int) -> np.ndarray:
    """Exponent histograms of base[a] + rot[(a+b) mod L] over a, for every b.

    ``base`` and ``rot`` are length-L vectors of residues mod p.  Returns an
    (L, p) int64 array; row b is the histogram of (base[a] + rot[a+b]) mod p.
    """
    base = np.ascontiguousarray(base, dtype=np.int64)
    rot = np.ascontiguousarray(rot, dtype=np.int64)
    L = base.shape[0]
    rot2 = np.concatenate([rot, rot])
    out = np.empty((L, p), dtype=np.int64)
    for b in range(L):
        tmp = base + rot2[b : b + L]  # values in [0, 2p-2]
        cnt = np.bincount(tmp, minlength=2 * p)
        out[b] = cnt[:p] + cnt[p : 2 * p]
    return out
