"""Claim-by-claim verification harness with a versioned discrepancy allowlist.

Every worked example, table instantiation, lemma sweep, dual-distance
statement, power-moment identity, and weight-ratio claim is re-derived from
scratch and compared against its published value.  Claims whose published
value is known to be inconsistent with the constructions themselves are
listed in ``data/known_discrepancies.json`` and downgraded from ``mismatch``
to ``informational-discrepancy`` — never to silent success.
"""

from __future__ import annotations

import fnmatch
import json
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from importlib import resources
from typing import Optional

from .bounds import bound_verdict
from .charsums import adjudicate_trace_readings, lemma_sweep
from .codes import build_family_code
from .duals import dual_code, dual_min_distance, verify_dual_theorems
from .field import make_field, second_modulus
from .weights import (
    power_moment_residuals,
    predicted_distribution,
    printed_third_multiplicity,
    weight_distribution,
    wmin_wmax_check,
)

MATCH = "match"
MISMATCH = "mismatch"
INFORMATIONAL = "informational-discrepancy"

# parameter sets realizing the worked examples
DEFAULT_D1 = [(2, 3, 1), (3, 2, 1), (3, 3, 1), (5, 2, 1)]
DEFAULT_D2 = [(3, 2), (5, 1)]
# the full sweep: every (p, m, e) combination plus every in-budget D2 field
SWEEP_D1 = sorted(
    (p, m, e) for p in (2, 3, 5) for m, e in ((2, 1), (3, 1), (2, 2))
)
SWEEP_D2 = sorted((p, m) for p in (2, 3, 5) for m in (1, 2, 3) if p ** (3 * m) <= 2**24)

# column-dependency search is only run below this length in sweep mode
_DUAL_SEARCH_MAX_N = 150
# exhaustive dual enumeration cross-check budget (number of dual codewords)
_DUAL_ENUM_BUDGET = 2**20


@dataclass
class ClaimResult:
    """One verified claim: published value, recomputed value, verdict."""

    claim_id: str
    expected: object
    computed: object
    status: str
    note: Optional[str] = None

    def to_json_dict(self) -> dict:
        out = {
            "claim_id": self.claim_id,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    """Order-stable collection of claim results plus summary counts."""

    items: list = dc_field(default_factory=list)

    def summary(self) -> dict:
        counts = {MATCH: 0, MISMATCH: 0, INFORMATIONAL: 0}
        for item in self.items:
            counts[item.status] += 1
        counts["total"] = len(self.items)
        return counts

    def has_mismatch(self) -> bool:
        return any(item.status == MISMATCH for item in self.items)

    def to_json_lines(self) -> str:
        lines = [json.dumps(item.to_json_dict(), sort_keys=True) for item in self.items]
        lines.append(json.dumps({"summary": self.summary()}, sort_keys=True))
        return "\n".join(lines) + "\n"


def load_allowlist() -> list:
    """The shipped known-discrepancy entries (pattern + reason)."""
    text = resources.files("tracecodes.data").joinpath("known_discrepancies.json").read_text()
    data = json.loads(text)
    return data["entries"]


def _counts_key(dist) -> dict:
    return {str(w): int(c) for w, c in sorted(dist.counts.items()) if w > 0}


class _ClaimBuilder:
    """Accumulates claims, caching built codes and distributions."""

    def __init__(self, backend: Optional[str] = None) -> None:
        self.backend = backend
        self.allowlist = load_allowlist()
        self.items: list = []
        self._codes: dict = {}
        self._dists: dict = {}
        self._duals: dict = {}

    # -- plumbing -----------------------------------------------------------

    def add(self, claim_id: str, expected, computed, ok: bool) -> None:
        if ok:
            status, note = MATCH, None
        else:
            note = next(
                (
                    entry["reason"]
                    for entry in self.allowlist
                    if fnmatch.fnmatchcase(claim_id, entry["pattern"])
                ),
                None,
            )
            status = INFORMATIONAL if note is not None else MISMATCH
        self.items.append(ClaimResult(claim_id, expected, computed, status, note))

    def code(self, family: str, p: int, m: int, e: Optional[int] = None,
             modulus=None):
        key = (family, p, m, e, tuple(modulus) if modulus is not None else None)
        if key not in self._codes:
            self._codes[key] = build_family_code(family, p, m, e, modulus=modulus)
        return self._codes[key]

    def dist(self, family: str, p: int, m: int, e: Optional[int] = None,
             modulus=None):
        key = (family, p, m, e, tuple(modulus) if modulus is not None else None)
        if key not in self._dists:
            self._dists[key] = weight_distribution(self.code(family, p, m, e, modulus),
                                                   backend=self.backend)
        return self._dists[key]

    def dual_report(self, family: str, p: int, m: int, e: Optional[int] = None):
        key = (family, p, m, e)
        if key not in self._duals:
            self._duals[key] = dual_min_distance(self.code(family, p, m, e))
        return self._duals[key]

    # -- worked examples ----------------------------------------------------

    def _parameters_claim(self, claim_id: str, family: str, p: int, m: int,
                          e: Optional[int], expected_nkd: tuple) -> None:
        code = self.code(family, p, m, e)
        d = self.dist(family, p, m, e).min_weight()
        computed = [code.n, code.k, d]
        self.add(claim_id, list(expected_nkd), computed, computed == list(expected_nkd))

    def _enumerator_claim(self, claim_id: str, family: str, p: int, m: int,
                          e: Optional[int], expected_counts: dict) -> None:
        expected = {str(w): c for w, c in sorted(expected_counts.items())}
        computed = _counts_key(self.dist(family, p, m, e))
        self.add(claim_id, expected, computed, computed == expected)

    def _optimality_claim(self, claim_id: str, n: int, k: int, d: int, p: int,
                          expected_label: str, want: bool = True) -> None:
        verdict = bound_verdict(n, k, d, p)
        computed = {"labels": verdict.labels, "griesmer_max_d": verdict.griesmer_max_d}
        ok = (expected_label in verdict.labels) == want
        expected = expected_label if want else f"not {expected_label}"
        self.add(claim_id, expected, computed, ok)

    def example_claims(self) -> None:
        b = self
        b._parameters_claim("Example 2.1 parameters", "D1", 3, 2, 1, (20, 4, 12))
        b._enumerator_claim("Example 2.1 enumerator", "D1", 3, 2, 1, {12: 60, 18: 20})
        b._optimality_claim("Example 2.1 optimality", 20, 4, 12, 3, "griesmer-optimal")

        b._parameters_claim("Example 2.2 parameters", "D1", 5, 2, 1, (104, 4, 80))
        b._enumerator_claim("Example 2.2 enumerator", "D1", 5, 2, 1, {80: 520, 100: 104})
        b._optimality_claim(
            "Example 2.2 optimality", 104, 4, 80, 5, "griesmer-almost-optimal"
        )

        b._parameters_claim("Example 2.3 parameters", "D1", 3, 3, 1, (224, 6, 144))
        b._optimality_claim(
            "Example 2.3 non-optimality", 224, 6, 144, 3, "griesmer-optimal", want=False
        )
        b._parameters_claim(
            "Example 2.3 parameters punctured", "D1BAR", 3, 3, 1, (112, 6, 72)
        )
        b._enumerator_claim(
            "Example 2.3 enumerator punctured", "D1BAR", 3, 3, 1, {72: 504, 81: 224}
        )
        b._optimality_claim(
            "Example 2.3 optimality punctured", 112, 6, 72, 3, "griesmer-optimal"
        )

        b._parameters_claim("Example 2.4 parameters", "D1BAR", 5, 2, 1, (26, 4, 20))
        b._optimality_claim("Example 2.4 optimality", 26, 4, 20, 5, "griesmer-optimal")

        b._parameters_claim("Example 2.5 parameters", "D2", 5, 1, None, (24, 3, 19))
        b._enumerator_claim("Example 2.5 enumerator", "D2", 5, 1, None,
                            {19: 96, 20: 24, 24: 4})
        b._optimality_claim("Example 2.5 optimality", 24, 3, 19, 5, "griesmer-optimal")

        b._parameters_claim("Example 2.6 parameters", "D2", 3, 2, None, (80, 6, 51))
        b._enumerator_claim("Example 2.6 enumerator", "D2", 3, 2, None,
                            {51: 480, 54: 80, 60: 168})
        b._optimality_claim("Example 2.6 optimality", 80, 6, 51, 3, "griesmer-optimal")

    # -- table instantiations ----------------------------------------------

    def table_claims(self, d1_params: list, d2_params: list) -> None:
        for p, m, e in d1_params:
            if e >= m:
                continue  # outside the two-weight theorem hypothesis
            predicted = predicted_distribution("D1", p, m, e)
            computed = _counts_key(self.dist("D1", p, m, e))
            self.add(f"Table I ({p},{m},{e})", _counts_key(predicted), computed,
                     computed == _counts_key(predicted))
            predicted_bar = predicted_distribution("D1BAR", p, m, e)
            computed_bar = _counts_key(self.dist("D1BAR", p, m, e))
            self.add(f"Table II ({p},{m},{e})", _counts_key(predicted_bar), computed_bar,
                     computed_bar == _counts_key(predicted_bar))
        for p, m in d2_params:
            predicted = predicted_distribution("D2", p, m)
            dist = self.dist("D2", p, m)
            computed = _counts_key(dist)
            self.add(f"Table III ({p},{m})", _counts_key(predicted), computed,
                     computed == _counts_key(predicted))
            w3 = p ** (2 * m - 1) * (p - 1) - p ** (m - 1)
            printed = printed_third_multiplicity(p, m)
            enumerated = dist.counts.get(w3, 0)
            self.add(f"Table III printed multiplicity ({p},{m})", printed, enumerated,
                     printed == enumerated)

    # -- character-sum lemmas ----------------------------------------------

    def lemma_claims(self, d1_params: list) -> None:
        fields = {}
        for p, m, e in d1_params:
            if (p, m) not in fields:
                fields[p, m] = make_field(p, 2 * m)

        def sweep(args):
            p, m, e = args
            return args, lemma_sweep(fields[p, m], e, backend=self.backend)

        workers = max(1, int(os.environ.get("TRACECODE_THREADS", "1")))
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(sweep, d1_params))
        else:
            results = [sweep(args) for args in d1_params]

        for (p, m, e), sw in results:
            tag = f"({p},{m},{e})"
            self.add(f"Lemma 3.1 sweep {tag}",
                     "exhaustive sum equals the closed form for all lambda, beta",
                     {"ok": sw.lemma31_ok}, sw.lemma31_ok)
            expected_a = {"A": -(p**e - 1) * p**m,
                          "n1": (p ** (2 * m) - (p**e - 1) * p**m) // p**e - 1}
            computed_a = {"A": sw.A, "n1": sw.n1}
            self.add(f"Lemma 3.2 A {tag}", expected_a, computed_a,
                     computed_a == expected_a)
            adjudication = adjudicate_trace_readings(fields[p, m], e)
            self.add(f"Lemma 3.2 trace-reading adjudication {tag}",
                     "both trace readings reproduce the stated value",
                     adjudication,
                     sorted(adjudication["matching_readings"]) == ["full", "half"])
            failures = sum(1 for row in sw.rows if not row["ok"])
            self.add(f"Lemma 3.3 and N_beta sweep {tag}",
                     "B dichotomy, N_beta expansion, and codeword weights hold "
                     "for every beta",
                     {"betas": len(sw.rows), "failures": failures, "all_ok": sw.all_ok},
                     sw.all_ok)

    # -- dual codes ---------------------------------------------------------

    def _dual_example(self, label: str, family: str, p: int, m: int,
                      e: Optional[int], expected_nk: tuple, expected_d: int,
                      optimality: str) -> None:
        code = self.code(family, p, m, e)
        dual = dual_code(code)
        self.add(f"{label} parameters", list(expected_nk), [dual.n, dual.k],
                 [dual.n, dual.k] == list(expected_nk))
        report = self.dual_report(family, p, m, e)
        self.add(f"{label} dual distance", expected_d, report.d_dual,
                 report.d_dual == expected_d)
        d_actual = report.d_dual if report.d_dual is not None else expected_d
        self._optimality_claim(f"{label} dual optimality", dual.n, dual.k, d_actual,
                               p, optimality)

    def dual_example_claims(self) -> None:
        self._dual_example("Example 4.1", "D1", 3, 2, 1, (20, 16), 3,
                           "griesmer-optimal")
        self._dual_example("Example 4.2", "D1", 2, 3, 1, (27, 21), 3,
                           "griesmer-almost-optimal")
        self._dual_example("Example 4.3", "D2", 5, 1, None, (24, 21), 3,
                           "griesmer-optimal")
        self._dual_example("Example 4.4", "D2", 3, 2, None, (80, 74), 3,
                           "griesmer-optimal")

    def theorem_claims(self, d1_params: list, d2_params: list) -> None:
        for p, m, e in d1_params:
            if e >= m:
                continue
            code = self.code("D1", p, m, e)
            if code.n <= code.k or code.n > _DUAL_SEARCH_MAX_N:
                continue
            report = self.dual_report("D1", p, m, e)
            verdicts = verify_dual_theorems(code, report)
            self.add(f"Theorem 4.1 verdict ({p},{m},{e})",
                     "2 <= d_dual <= 4, with d_dual = 3 for p = 2, m >= 3",
                     verdicts, all(v["ok"] for v in verdicts))
            self._dual_enum_cross_check(f"D1 ({p},{m},{e})", code, report)
        for p, m in d2_params:
            code = self.code("D2", p, m)
            if code.n <= code.k or code.n > _DUAL_SEARCH_MAX_N:
                continue
            report = self.dual_report("D2", p, m, None)
            verdicts = verify_dual_theorems(code, report)
            self.add(f"Theorem 4.2 verdict ({p},{m})",
                     "3 <= d_dual <= 4, with the GF(3) coefficient dichotomy",
                     verdicts, all(v["ok"] for v in verdicts))
            self._dual_enum_cross_check(f"D2 ({p},{m})", code, report)

    def _dual_enum_cross_check(self, tag: str, code, report) -> None:
        """Compare the column-dependency search with full dual enumeration."""
        if code.p ** (code.n - code.k) > _DUAL_ENUM_BUDGET:
            return
        dual = dual_code(code)
        d_enum = weight_distribution(dual, backend=self.backend).min_weight()
        computed = {"search": report.d_dual, "enumeration": d_enum}
        ok = report.d_dual == d_enum or (report.d_dual is None and d_enum > report.cap)
        self.add(f"Dual enumeration cross-check {tag}",
                 "dependency search agrees with exhaustive dual enumeration",
                 computed, ok)

    # -- power moments and weight ratios ------------------------------------

    def moment_and_ratio_claims(self, d1_params: list, d2_params: list) -> None:
        for p, m, e in d1_params:
            if e >= m:
                continue
            verdict = wmin_wmax_check(self.dist("D1", p, m, e))
            self.add(f"Section 5 ratio C_D1 ({p},{m},{e})",
                     "w_min/w_max strictly greater than (p-1)/p",
                     verdict.to_json_dict(), verdict.passes)
        for p, m in d2_params:
            dist = self.dist("D2", p, m)
            residuals = power_moment_residuals(dist)
            self.add(f"Power moments D2 ({p},{m})", [0, 0, 0],
                     [str(r) if not isinstance(r, int) else r for r in residuals],
                     all(r == 0 for r in residuals))
            verdict = wmin_wmax_check(dist)
            self.add(f"Section 5 ratio C_D2 ({p},{m})",
                     "w_min/w_max strictly greater than (p-1)/p",
                     verdict.to_json_dict(), verdict.passes)

    # -- representation independence ----------------------------------------

    def representation_claims(self) -> None:
        cases = [
            ("Representation independence Example 2.1", "D1", 3, 2, 1),
            ("Representation independence Example 2.5", "D2", 5, 1, None),
            ("Representation independence Example 2.6", "D2", 3, 2, None),
        ]
        for claim_id, family, p, m, e in cases:
            baseline = self.dist(family, p, m, e)
            alt = second_modulus(p, 2 * m)
            alt_dist = self.dist(family, p, m, e, modulus=alt)
            expected = {"n": baseline.n, "k": baseline.k, "counts": _counts_key(baseline)}
            computed = {"n": alt_dist.n, "k": alt_dist.k, "counts": _counts_key(alt_dist)}
            self.add(claim_id, expected, computed, computed == expected)


def run_verification(sweep: bool = False, backend: Optional[str] = None) -> VerificationReport:
    """Recompute every published claim; ``sweep`` widens the parameter grid."""
    d1_params = SWEEP_D1 if sweep else DEFAULT_D1
    d2_params = SWEEP_D2 if sweep else DEFAULT_D2
    builder = _ClaimBuilder(backend=backend)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        builder.example_claims()
        builder.table_claims(d1_params, d2_params)
        builder.lemma_claims(d1_params)
        builder.dual_example_claims()
        builder.theorem_claims(d1_params, d2_params)
        builder.moment_and_ratio_claims(d1_params, d2_params)
        builder.representation_claims()
    report = VerificationReport(items=sorted(builder.items, key=lambda c: c.claim_id))
    return report
