"""Acceptance suite: one pass/fail line per criterion, timed where required."""

import time
import warnings

import pytest

from tracecodes.bounds import griesmer_max_d
from tracecodes.charsums import lemma_sweep
from tracecodes.codes import build_family_code
from tracecodes.duals import dual_code, dual_min_distance, verify_dual_theorems
from tracecodes.field import make_field, second_modulus
from tracecodes.harness import SWEEP_D1, SWEEP_D2, run_verification
from tracecodes.weights import (
    power_moment_residuals,
    printed_third_multiplicity,
    weight_distribution,
    wmin_wmax_check,
)


@pytest.fixture(scope="module")
def announce(request):
    cap = request.config.pluginmanager.getplugin("capturemanager")

    def _announce(num, desc, ok):
        line = f"[criterion {num:2d}] {desc}: {'PASS' if ok else 'FAIL'}"
        if cap is not None:
            with cap.global_and_fixture_disabled():
                print(line, flush=True)
        else:
            print(line, flush=True)

    return _announce


@pytest.fixture(scope="module")
def default_report():
    return run_verification()


def _run(announce, num, desc, fn):
    try:
        fn()
    except BaseException:
        announce(num, desc, False)
        raise
    announce(num, desc, True)


def _build_and_distribution(family, p, m, e=None, modulus=None):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        code = build_family_code(family, p, m, e, modulus=modulus)
    return code, weight_distribution(code)


def test_criterion_01(announce):
    def check():
        start = time.perf_counter()
        code, dist = _build_and_distribution("D1", 3, 2, 1)
        assert (code.n, code.k, dist.min_weight()) == (20, 4, 12)
        assert dist.counts == {0: 1, 12: 60, 18: 20}
        assert griesmer_max_d(20, 4, 3) == 12
        assert time.perf_counter() - start < 1.0

    _run(announce, 1, "two-weight (3,2,1): [20,4,12], counts, bound", check)


def test_criterion_02(announce):
    def check():
        start = time.perf_counter()
        code, dist = _build_and_distribution("D1", 5, 2, 1)
        assert (code.n, code.k, dist.min_weight()) == (104, 4, 80)
        assert dist.counts == {0: 1, 80: 520, 100: 104}
        assert time.perf_counter() - start < 1.0

    _run(announce, 2, "two-weight (5,2,1): [104,4,80] with exact counts", check)


def test_criterion_03(announce):
    def check():
        start = time.perf_counter()
        code, dist = _build_and_distribution("D1", 3, 3, 1)
        assert (code.n, code.k, dist.min_weight()) == (224, 6, 144)
        bar, bar_dist = _build_and_distribution("D1BAR", 3, 3, 1)
        assert (bar.n, bar.k, bar_dist.min_weight()) == (112, 6, 72)
        bar5, bar5_dist = _build_and_distribution("D1BAR", 5, 2, 1)
        assert (bar5.n, bar5.k, bar5_dist.min_weight()) == (26, 4, 20)
        assert griesmer_max_d(26, 4, 5) == 20
        assert time.perf_counter() - start < 5.0

    _run(announce, 3, "punctured codes: [224,6,144], [112,6,72], [26,4,20]", check)


def test_criterion_04(announce):
    def check():
        start = time.perf_counter()
        _, d51 = _build_and_distribution("D2", 5, 1)
        assert d51.counts == {0: 1, 19: 96, 20: 24, 24: 4}
        _, d32 = _build_and_distribution("D2", 3, 2)
        assert d32.counts == {0: 1, 51: 480, 54: 80, 60: 168}
        assert time.perf_counter() - start < 10.0

    _run(announce, 4, "three-weight enumerators at (5,1) and (3,2)", check)


def test_criterion_05(announce, default_report, dists):
    def check():
        assert printed_third_multiplicity(5, 1) == 384
        assert dists("D2", 5, 1).counts[19] == 96
        assert printed_third_multiplicity(3, 2) == 1280
        assert dists("D2", 3, 2).counts[51] == 480
        by_id = {item.claim_id: item for item in default_report.items}
        for tag in ("(5,1)", "(3,2)"):
            assert by_id[f"Table III printed multiplicity {tag}"].status == \
                "informational-discrepancy"
            assert by_id[f"Table III {tag}"].status == "match"  # complement rule

    _run(announce, 5, "published low-weight multiplicity flagged, complement rule matches",
         check)


def test_criterion_06(announce):
    def check():
        start = time.perf_counter()
        fields = {}
        for p, m, e in SWEEP_D1:
            if (p, m) not in fields:
                fields[p, m] = make_field(p, 2 * m)
            sweep = lemma_sweep(fields[p, m], e)
            assert sweep.all_ok, (p, m, e)
            assert sweep.A == -(p**e - 1) * p**m, (p, m, e)
        assert time.perf_counter() - start < 60.0

    _run(announce, 6, "character-sum sweeps: all identities for all beta, < 60 s",
         check)


def test_criterion_07(announce, codes):
    def check():
        cases = {
            ("D1", 3, 2, 1): (20, 16, 3),
            ("D1", 2, 3, 1): (27, 21, 3),
            ("D2", 5, 1, None): (24, 21, 3),
            ("D2", 3, 2, None): (80, 74, 3),
        }
        computed = {}
        for (family, p, m, e), _ in cases.items():
            code = codes(family, p, m, e)
            dual = dual_code(code)
            report = dual_min_distance(code)
            computed[family, p, m, e] = (dual.n, dual.k, report.d_dual)
            if family == "D2" and (p, m) == (3, 2):
                assert report.pattern_summary == {"all_equal": 0, "mixed": 320}
            if code.p ** (code.n - code.k) <= 2**20:
                enum_d = weight_distribution(dual).min_weight()
                assert enum_d == report.d_dual, (family, p, m, e)
        assert computed == cases

    _run(announce, 7, "dual parameters reproduced exactly with witness dichotomy",
         check)


def test_criterion_08(announce):
    def check():
        for p, m in SWEEP_D2:
            _, dist = _build_and_distribution("D2", p, m)
            assert power_moment_residuals(dist) == (0, 0, 0), (p, m)

    _run(announce, 8, "power-moment residuals vanish for every three-weight code",
         check)


def test_criterion_09(announce, dists):
    def check():
        for family, p, m, e in (("D1", 3, 2, 1), ("D2", 5, 1, None), ("D2", 3, 2, None)):
            baseline = dists(family, p, m, e)
            alt = dists(family, p, m, e, modulus=second_modulus(p, 2 * m))
            assert baseline.counts == alt.counts, (family, p, m, e)
            assert (baseline.n, baseline.k) == (alt.n, alt.k)

    _run(announce, 9, "identical results under a second primitive modulus", check)


def test_criterion_10(announce, default_report, dists):
    def check():
        by_id = {item.claim_id: item for item in default_report.items}
        boundary = by_id["Section 5 ratio C_D1 (3,2,1)"]
        assert boundary.status == "informational-discrepancy"
        assert wmin_wmax_check(dists("D1", 3, 2, 1)).ratio == \
            wmin_wmax_check(dists("D1", 3, 2, 1)).threshold
        for p, m in ((3, 2), (5, 1)):
            verdict = wmin_wmax_check(dists("D2", p, m))
            assert verdict.passes, (p, m, verdict.ratio, verdict.threshold)

    _run(announce, 10, "weight-ratio threshold: strict for three-weight codes, "
         "boundary case flagged", check)
