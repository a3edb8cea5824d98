"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""
import csv
import json
import math
import time

import numpy as np
import pytest

from uurjpdd.bounds import verify_uur
from uurjpdd.cli import main
from uurjpdd.fixtures import fourier, hadamard
from uurjpdd.majorization import UncertaintyMeasure, majorizes, measure_value, shannon
from uurjpdd.measurement import overlap_stats
from uurjpdd.omega import build_norm_table, omega_k, omega_vector
from uurjpdd.oracle import brute_force_omega_k

from conftest import ACCEPTANCE_LINES, random_pair


def record(name, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    return ok


def ensemble():
    return [random_pair(d, 1000 * d + i) for d in (2, 3, 4, 5) for i in range(25)]


@pytest.fixture(scope="module")
def oracle_reports():
    pairs = [hadamard(), random_pair(2, 1), random_pair(2, 2), fourier(3), random_pair(3, 1), random_pair(3, 2)]
    t0 = time.perf_counter()
    reports = [(pair, brute_force_omega_k(pair, k, starts=64, seed=1, exhaustive=True))
               for pair in pairs for k in range(1, pair.dim + 1)]
    return reports, time.perf_counter() - t0


def test_c1_closed_form_omega1():
    t0 = time.perf_counter()
    worst = 0.0
    for pair in ensemble():
        v, _ = omega_k(1, pair, build_norm_table(pair))
        worst = max(worst, abs(v - (1 + overlap_stats(pair).c) ** 2 / 4))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-10 and dt < 10
    assert record("C1 Omega_1 = (1+c)^2/4", ok, f"max err {worst:.2e} (tol 1e-10), 100 pairs, {dt:.2f}s (<10s)")


def test_c2_closed_form_omega2():
    t0 = time.perf_counter()
    worst = 0.0
    for pair in ensemble():
        v, _ = omega_k(2, pair, build_norm_table(pair))
        worst = max(worst, abs(v - (1 + overlap_stats(pair).c_prime) ** 2 / 4))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-10 and dt < 10
    assert record("C2 Omega_2 = (1+c')^2/4", ok, f"max err {worst:.2e} (tol 1e-10), 100 pairs, {dt:.2f}s (<10s)")


def test_c3_normalisation():
    worst_last = worst_sum = 0.0
    for pair in ensemble() + [hadamard(), fourier(3), fourier(4)]:
        w, tab = omega_vector(pair)
        worst_last = max(worst_last, abs(tab.omega_k[-1] - 1))
        worst_sum = max(worst_sum, abs(w.sum() - 1))
    ok = worst_last <= 1e-12 and worst_sum <= 1e-9
    assert record("C3 normalisation", ok, f"|Omega_d-1| {worst_last:.1e} (tol 1e-12), |sum w-1| {worst_sum:.1e} (tol 1e-9)")


def test_c4_oracle_agreement(oracle_reports):
    reports, dt = oracle_reports
    worst_neg = min(r.gap for _, r in reports)
    worst_d2 = max(abs(r.gap) for p, r in reports if p.dim == 2)
    findings = [(p.metadata.get("preset", "random"), r.k, r.gap) for p, r in reports if r.gap < -1e-6]
    ok = worst_neg >= -1e-6 and worst_d2 <= 1e-6 and dt < 60
    detail = (f"min(formula-oracle) {worst_neg:.2e} (>= -1e-6), d=2 max|gap| {worst_d2:.2e} (<= 1e-6), "
              f"{len(reports)} cases, {dt:.1f}s (<60s)")
    if findings:
        detail += f"; findings {findings}"
    assert record("C4 oracle agreement", ok, detail)


def test_c5_lemma(oracle_reports):
    reports, dt = oracle_reports
    worst = max(r.oracle_value - r.best_partition_value for _, r in reports)
    ok = worst <= 1e-6 and all(r.best_region_is_partition_shaped for _, r in reports) and dt < 60
    assert record("C5 partition-shaped optimum", ok, f"max(best - best partition-shaped) {worst:.2e} (tol 1e-6)")


def test_c6_uur_verification():
    t0 = time.perf_counter()
    maj = ent = 0
    worst_deficit = -np.inf
    for d in (2, 3, 4):
        for i in range(10):
            rep = verify_uur(random_pair(d, 5000 + 100 * d + i), samples=10_000, seed=1, tol=1e-9)
            maj += rep.violations_majorization
            ent += rep.violations_entropy
            worst_deficit = max(worst_deficit, rep.worst_prefix_deficit)
    dt = time.perf_counter() - t0
    ok = maj == 0 and ent == 0 and dt < 180
    assert record("C6 UUR on Haar states", ok,
                  f"majorization violations {maj}, entropy violations {ent}, worst deficit {worst_deficit:.1e}, "
                  f"30 pairs x 1e4 states, {dt:.1f}s (<180s)")


def test_c7_mub_qubit_value():
    t0 = time.perf_counter()
    w, _ = omega_vector(hadamard())
    h = measure_value(UncertaintyMeasure(), w)
    dt = time.perf_counter() - t0
    w_err = float(np.max(np.abs(w - [0.7285534, 0.2714466, 0, 0])))
    ok = abs(h - 0.584691) <= 1e-3 and w_err <= 1e-6 and dt < 1
    assert record("C7 d=2 MUB", ok, f"H(omega) {h:.6f} (0.584691 +- 1e-3), omega err {w_err:.1e} (tol 1e-6), {dt:.3f}s")


def test_c8_fig7_scan(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    t0 = time.perf_counter()
    code = main(["scan-theta", "--preset", "fig7", "--from", "0", "--to", repr(2 * math.pi),
                 "--steps", "200", "--out", str(out)])
    dt = time.perf_counter() - t0
    capsys.readouterr()
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    b = np.array([float(r["b_jpdd"]) for r in rows])
    theta = np.array([float(r["theta"]) for r in rows])
    meta = json.loads(out.with_name("scan.csv.meta.json").read_text())
    jump = float(np.max(np.abs(np.diff(b))))
    ok = (code == 0 and len(rows) == 200 and np.all(np.isfinite(b)) and np.all(b >= 0) and jump < 0.2
          and theta.min() >= 0 and theta.max() < 2 * math.pi
          and meta.get("reorthonormalized") and meta.get("max_pre_correction_deviation", 0) > 0 and dt < 120)
    assert record("C8 fig7 theta scan", ok,
                  f"200 rows, min b_jpdd {b.min():.4f}, max jump {jump:.4f} (<0.2), "
                  f"reortho deviation {meta.get('max_pre_correction_deviation', float('nan')):.2e}, {dt:.2f}s (<120s)")


def test_c9_schur_concavity():
    measures = [UncertaintyMeasure("shannon"), UncertaintyMeasure("renyi", 0.5), UncertaintyMeasure("renyi", 2.0),
                UncertaintyMeasure("tsallis", 0.5), UncertaintyMeasure("tsallis", 2.0)]
    rng = np.random.default_rng(9)
    t0 = time.perf_counter()
    failures = 0
    worst = np.inf
    for _ in range(1000):
        n = int(rng.integers(2, 12))
        y = rng.dirichlet(np.ones(n) * rng.uniform(0.1, 3))
        x = y.copy()
        for _ in range(int(rng.integers(1, 8))):
            i, j = rng.choice(n, 2, replace=False)
            lam = rng.uniform()
            x[i], x[j] = lam * x[i] + (1 - lam) * x[j], lam * x[j] + (1 - lam) * x[i]
        if not majorizes(y, x, 1e-12):
            failures += 1
            continue
        for m in measures:
            margin = measure_value(m, x) - measure_value(m, y)
            worst = min(worst, margin)
            failures += margin < -1e-9
    dt = time.perf_counter() - t0
    ok = failures == 0 and dt < 10
    assert record("C9 Schur-concavity", ok, f"1000 pairs x 5 measures, failures {failures}, min margin {worst:.1e}, {dt:.2f}s (<10s)")
