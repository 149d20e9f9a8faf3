"""Exact weight distributions, closed-form predictions, and derived checks.

Enumerated distributions come from walking all p^k messages (kernel-backed);
predicted ones instantiate the two- and three-weight closed forms.  The
printed third multiplicity of the three-weight table contradicts both worked
examples and the total-count constraint, so the prediction uses the
complement rule; the discrepancy is surfaced by the verification harness.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import kernels
from .codes import LinearCode

ENUMERATION_BUDGET = 2**24


class WeightError(ValueError):
    """Invalid distribution request."""


@dataclass
class WeightDistribution:
    """Exact map weight -> multiplicity for an [n, k] code over GF(p)."""

    n: int
    k: int
    p: int
    counts: dict  # weight -> multiplicity, weight 0 included

    def total(self) -> int:
        return sum(self.counts.values())

    def nonzero_weights(self) -> list:
        return sorted(w for w in self.counts if w > 0)

    def min_weight(self) -> int:
        ws = self.nonzero_weights()
        if not ws:
            raise WeightError("zero code has no nonzero weight")
        return ws[0]

    def max_weight(self) -> int:
        ws = self.nonzero_weights()
        if not ws:
            raise WeightError("zero code has no nonzero weight")
        return ws[-1]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "p": self.p,
            "counts": {str(w): c for w, c in sorted(self.counts.items())},
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["weight", "multiplicity"])
        for w in sorted(self.counts):
            writer.writerow([w, self.counts[w]])
        return buf.getvalue()


def weight_distribution(code: LinearCode, backend: Optional[str] = None) -> WeightDistribution:
    """Exact distribution by enumerating all p^k messages."""
    if code.p**code.k > ENUMERATION_BUDGET:
        raise WeightError(
            f"p^k = {code.p}^{code.k} exceeds enumeration budget {ENUMERATION_BUDGET}"
        )
    kern = kernels.get_backend(backend)
    counts = kern.weight_counts(code.gen, code.p)
    return WeightDistribution(
        n=code.n,
        k=code.k,
        p=code.p,
        counts={int(w): int(c) for w, c in enumerate(counts) if c},
    )


def predicted_distribution(family: str, p: int, m: int, e: Optional[int] = None) -> WeightDistribution:
    """Closed-form distribution of the D1 / D1BAR / D2 family at (p, m, e)."""
    family = family.upper()
    if family in ("D1", "D1BAR"):
        if e is None or m % e or e >= m:
            raise WeightError("two-weight prediction requires e | m and e < m")
        q = p ** (2 * m)
        n1 = p ** (2 * m - e) + p ** (m - e) - p**m - 1
        w1 = p ** (2 * m - e) - p ** (2 * m - e - 1)
        w2 = (p ** (2 * m - e - 1) - p ** (m - 1)) * (p - 1)
        a1 = p ** (2 * m - e) - (p**e - 1) * p ** (m - e) - 1
        a2 = (p**e - 1) * (q + p**m) // p**e
        if family == "D1BAR":
            n1 //= p - 1
            w1 //= p - 1
            w2 //= p - 1
        counts = {0: 1}
        counts[w1] = counts.get(w1, 0) + a1
        counts[w2] = counts.get(w2, 0) + a2
        return WeightDistribution(n=n1, k=2 * m, p=p, counts=counts)
    if family == "D2":
        n2 = p ** (2 * m) - 1
        w1 = p ** (2 * m - 1) * (p - 1)
        w2 = (p ** (2 * m - 1) + p ** (m - 1)) * (p - 1)
        w3 = p ** (2 * m - 1) * (p - 1) - p ** (m - 1)
        a1 = p ** (2 * m) - 1
        a2 = p ** (m - 1) * (p**m - 1) * (p**m - p + 1)
        a3 = p ** (3 * m) - 1 - a1 - a2  # complement rule, not the printed formula
        counts = {0: 1}
        for w, a in ((w1, a1), (w2, a2), (w3, a3)):
            if a:
                counts[w] = counts.get(w, 0) + a
        return WeightDistribution(n=n2, k=3 * m, p=p, counts=counts)
    raise WeightError(f"unknown family {family!r}")


def printed_third_multiplicity(p: int, m: int) -> int:
    """The three-weight table's printed lowest-weight multiplicity, as published."""
    return (p**m - 1) * (p - 1) * (p ** (2 * m) - 1)


def power_moment_residuals(dist: WeightDistribution) -> tuple:
    """Residuals of the first three power-moment identities.

    r0 vanishes always, r1 when the dual distance is >= 2, and r2 when it is
    >= 3.  Exact rationals are reduced to ints when integral.
    """
    p, k, n = dist.p, dist.k, dist.n
    s0 = sum(c for w, c in dist.counts.items() if w > 0)
    s1 = sum(w * c for w, c in dist.counts.items())
    s2 = sum(w * w * c for w, c in dist.counts.items())
    r0 = s0 - (p**k - 1)
    r1 = s1 - Fraction(p**k, p) * n * (p - 1)
    r2 = s2 - Fraction(p**k, p**2) * n * (p - 1) * (n * p - n + 1)
    out = []
    for r in (r0, r1, r2):
        fr = Fraction(r)
        out.append(int(fr) if fr.denominator == 1 else fr)
    return tuple(out)


@dataclass
class RatioVerdict:
    """Exact comparison of w_min/w_max against (p-1)/p."""

    ratio: Fraction
    threshold: Fraction
    passes: bool

    def to_json_dict(self) -> dict:
        return {
            "ratio": [self.ratio.numerator, self.ratio.denominator],
            "threshold": [self.threshold.numerator, self.threshold.denominator],
            "passes": self.passes,
        }


def wmin_wmax_check(dist: WeightDistribution) -> RatioVerdict:
    """Strict w_min/w_max > (p-1)/p test, decided by cross-multiplication."""
    wmin, wmax = dist.min_weight(), dist.max_weight()
    ratio = Fraction(wmin, wmax)
    threshold = Fraction(dist.p - 1, dist.p)
    passes = wmin * dist.p > wmax * (dist.p - 1)
    return RatioVerdict(ratio=ratio, threshold=threshold, passes=passes)
