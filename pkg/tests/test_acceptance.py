"""Acceptance suite: one test per criterion, all exact (no tolerances to tune).

Each test prints a `PASS <criterion>` line with its runtime; run
`pytest tests/test_acceptance.py -v -s` to see one line per criterion.
"""

import json
import random
import time
from fractions import Fraction

from lahbell.bellpoly import (
    bell_poly_eval,
    bell_poly_ones_is_stirling,
    bell_poly_scaling_check,
    faa_di_bruno_nth_derivative,
)
from lahbell.cli import main
from lahbell.derivative import (
    exp_recip_derivative_formula,
    exp_recip_derivative_series_oracle,
    proof_identity_check,
    proof_rhs_series,
)
from lahbell.series import Series, gf_bell_alternating_check, gf_bell_check, gf_stirling_check
from lahbell.tables import (
    LAH,
    TriangleTable,
    bell_classic,
    bell_enumeration_oracle,
    bell_lah_stirling,
    bell_triangle,
    factorial,
    lah,
    stirling2_explicit,
    stirling2_recurrence,
)


def _stamp(name, started):
    print(f"PASS {name} ({time.perf_counter() - started:.2f}s)")


def test_theorem_reproduction():
    started = time.perf_counter()
    for n in range(1, 61):
        assert bell_lah_stirling(n) == bell_classic(n) == bell_triangle(n)
    _stamp("theorem reproduction: Lah/Stirling formula == row sum == triangle, n <= 60", started)


def test_ground_truth_partitions():
    started = time.perf_counter()
    for n in range(0, 13):
        truth = bell_enumeration_oracle(n)
        assert bell_classic(n) == truth
        assert bell_triangle(n) == truth
        if n >= 1:
            assert bell_lah_stirling(n) == truth
    _stamp("ground-truth partitions: all methods == enumeration count, n <= 12", started)


def test_stirling_consistency():
    started = time.perf_counter()
    for n in range(1, 41):
        for k in range(1, n + 1):
            # stirling2_explicit asserts exact divisibility by k! internally
            assert stirling2_explicit(n, k) == stirling2_recurrence(n, k)
    _stamp("stirling consistency: explicit sum == recurrence, 1 <= k <= n <= 40", started)


def test_lah_consistency():
    started = time.perf_counter()
    recurrence = TriangleTable(LAH)
    for n in range(1, 31):
        for k in range(1, n + 1):
            assert lah(n, k) == recurrence.entry(n, k)
        assert lah(n, 1) == factorial(n)
        assert lah(n, n) == 1
    _stamp("lah consistency: closed form == recurrence, L(n,1)=n!, L(n,n)=1, n <= 30", started)


def test_partial_bell_polynomials():
    started = time.perf_counter()
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert bell_poly_ones_is_stirling(n, k)
    rng = random.Random(0)
    for n in range(1, 11):
        for k in range(1, n + 1):
            for _ in range(20):
                a = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
                b = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
                xs = [Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(n - k + 1)]
                assert bell_poly_scaling_check(n, k, a, b, xs)
    _stamp("partial Bell polynomials: all-ones == S(n,k) (n <= 12), scaling law 20 seeded trials per cell (n <= 10)", started)


def test_faa_di_bruno_bridge():
    started = time.perf_counter()
    rng = random.Random(0)
    for n in range(1, 11):
        for _ in range(5):
            f_derivs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
            h_derivs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
            outer = Series([0] + [f_derivs[j - 1] / factorial(j) for j in range(1, n + 1)])
            inner = Series([0] + [h_derivs[j - 1] / factorial(j) for j in range(1, n + 1)])
            composed = outer.compose(inner).coefficient(n) * factorial(n)
            assert faa_di_bruno_nth_derivative(f_derivs, h_derivs, n) == composed
    _stamp("Faa di Bruno bridge: chain-rule formula == n! x series composition, n <= 10", started)


def test_generating_functions():
    started = time.perf_counter()
    assert gf_bell_check(15)
    assert gf_bell_alternating_check(15)
    for k in range(1, 9):
        assert gf_stirling_check(k, 15)
    _stamp("generating functions: Bell (both signs) and Stirling k <= 8 at order 15", started)


def test_derivative_formula():
    started = time.perf_counter()
    points = (Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 3))
    for n in range(1, 11):
        for sign in (1, -1):
            for t0 in points:
                assert exp_recip_derivative_formula(n, t0, sign) == (
                    exp_recip_derivative_series_oracle(n, t0, sign)
                )
    _stamp("derivative formula: Lah ratio == series oracle, n <= 10, both signs, 4 base points", started)


def test_proof_reconstruction():
    started = time.perf_counter()
    for n in range(1, 9):
        assert proof_identity_check(n, n + 8)
        constant = proof_rhs_series(n, 0).coefficient(0)
        assert constant == (-bell_classic(n) if n % 2 else bell_classic(n))
    _stamp("proof reconstruction: series identity to order n+8 and constant term (-1)^n B_n, n <= 8", started)


def test_bench_integrity(tmp_path, capsys):
    started = time.perf_counter()
    out_path = tmp_path / "bench.json"
    code = main([
        "bench", "--max-n", "40", "--methods", "classic,lah-stirling,triangle",
        "--repeat", "5", "--out", str(out_path),
    ])
    capsys.readouterr()
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["values_agree"] is True
    values = {}
    for entry in report["entries"]:
        values.setdefault(entry["n"], set()).add(entry["value"])
        assert entry["median_ns"] >= entry["min_ns"] >= 0
        assert entry["repeats"] == 5
    assert set(values) == set(range(1, 41))
    assert all(len(v) == 1 for v in values.values())
    with capsys.disabled():
        _stamp("bench integrity: classic/lah-stirling/triangle agree on every value, n <= 40", started)


def test_bell_poly_direct_values():
    # spot values feeding several criteria above, frozen from enumeration
    assert bell_poly_eval(3, 2, [1, 1]) == 3
    assert bell_poly_eval(4, 2, [1, 1, 1]) == 7
