"""Griesmer and sphere-packing bounds with exact integer arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


class BoundError(ValueError):
    """Invalid bound parameters."""


def griesmer_min_length(k: int, d: int, q: int) -> int:
    """Minimum length admitted by the Griesmer bound: sum of ceil(d / q^i)."""
    if k < 1 or d < 1:
        raise BoundError("dimension and distance must be positive")
    total = 0
    qi = 1
    for _ in range(k):
        total += -(-d // qi)
        qi *= q
    return total


def griesmer_max_d(n: int, k: int, q: int) -> int:
    """Largest d whose Griesmer minimum length fits in n."""
    if n < k or k < 1:
        raise BoundError("need n >= k >= 1")
    d = 1
    while griesmer_min_length(k, d + 1, q) <= n:
        d += 1
    return d


def hamming_max_d(n: int, k: int, p: int) -> int:
    """Largest d admitted by the sphere-packing bound (Singleton-capped)."""
    if n < k or k < 1:
        raise BoundError("need n >= k >= 1")
    space = p ** (n - k)
    best = 1
    for d in range(2, n - k + 2):
        t = (d - 1) // 2
        vol = sum(comb(n, i) * (p - 1) ** i for i in range(t + 1))
        if vol <= space:
            best = d
        else:
            break
    return best


@dataclass
class BoundVerdict:
    """Bound values and optimality labels for an [n, k, d] code over GF(p)."""

    n: int
    k: int
    d: int
    p: int
    griesmer_min_length: int
    griesmer_max_d: int
    hamming_max_d: int
    labels: list

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "p": self.p,
            "griesmer_min_length": self.griesmer_min_length,
            "griesmer_max_d": self.griesmer_max_d,
            "hamming_max_d": self.hamming_max_d,
            "labels": self.labels,
        }


def bound_verdict(n: int, k: int, d: int, p: int) -> BoundVerdict:
    """Classify [n, k, d] against the Griesmer and sphere-packing bounds.

    "Optimal" is read as d equal to the largest Griesmer-admissible distance
    at (n, k); "almost optimal" as one below it.
    """
    gmax = griesmer_max_d(n, k, p)
    hmax = hamming_max_d(n, k, p)
    labels = []
    if d == gmax:
        labels.append("griesmer-optimal")
    elif d + 1 == gmax:
        labels.append("griesmer-almost-optimal")
    if d <= hmax:
        labels.append("within-hamming")
    return BoundVerdict(
        n=n,
        k=k,
        d=d,
        p=p,
        griesmer_min_length=griesmer_min_length(k, d, p),
        griesmer_max_d=gmax,
        hamming_max_d=hmax,
        labels=labels,
    )
