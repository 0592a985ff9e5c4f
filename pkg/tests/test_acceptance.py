"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run pytest with -s to see them all) and
then asserts, so the suite doubles as a human-readable checklist.
"""

import math
import time

import numpy as np

from qsodyn.catalog import (
    CATALOG_PARTITION,
    classify_catalog,
    conjugate,
    matches_reference,
    operator_tensor,
    pair_partitions,
    partition_structure_check,
)
from qsodyn.cli import main
from qsodyn.dynamics import (
    CYCLE_PARAM_SUP,
    edge_fixed_height,
    fixed_points_exact,
    fixed_points_numeric,
    scalar_map_report,
    slice_cycle_heights,
    slice_fixed_height,
    verify_predictions,
)
from qsodyn.jsonio import dumps
from qsodyn.operators import apply_array, validate
from qsodyn.permutations import Permutation
from qsodyn.simplex import l1_distance, sample

from printed_forms import PRINTED_FORMS, quad_coefficients

DYADIC_A = (0.0, 0.25, 0.5, 0.75, 1.0)


def _report(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {number} {name}: {status}{suffix}")
    return ok


def test_criterion_1_catalog_fidelity():
    start = time.perf_counter()
    exact = True
    for op_id, fn in PRINTED_FORMS.items():
        for a in DYADIC_A:
            T = operator_tensor(op_id, a)
            M = quad_coefficients(fn, a)
            for i in range(3):
                for j in range(3):
                    for k in range(3):
                        if T.table[i, j, k] != M[i][j][k]:
                            exact = False
    all_valid = all(
        validate(operator_tensor(op_id, a)).ok
        for op_id in range(1, 37) for a in DYADIC_A)
    elapsed = time.perf_counter() - start
    ok = exact and all_valid and elapsed < 1.0
    assert _report(1, "catalog-fidelity", ok,
                   f"coefficient-exact at 5 parameters, {elapsed:.2f}s")


def test_criterion_2_classification():
    start = time.perf_counter()
    ok = True
    for a in (0.1, 0.3, 0.7, 0.9):
        classes = classify_catalog(a)
        if len(classes) != 20 or not matches_reference(classes):
            ok = False
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    assert _report(2, "conjugacy-classification", ok,
                   f"20 reference classes at 4 parameters, {elapsed:.2f}s")


def test_criterion_3_partition_structure():
    start = time.perf_counter()
    swap12 = Permutation((2, 1, 3))
    xi3 = pair_partitions()[2]
    ok = True
    for op_id in range(1, 37):
        for tenth in range(1, 10):
            T = operator_tensor(op_id, tenth / 10)
            if not partition_structure_check(T, CATALOG_PARTITION).passed:
                ok = False
            if not partition_structure_check(conjugate(T, swap12), xi3).passed:
                ok = False
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    assert _report(3, "separated-family-checks", ok,
                   f"36 operators x 9 parameters, plus swap(1,2) images, {elapsed:.2f}s")


def test_criterion_4_scalar_map():
    start = time.perf_counter()
    ok = True
    for a in (0.1, 0.2, 0.8, 0.9):
        report = scalar_map_report(a, tol=1e-9, max_iter=10 ** 5)
        if not report.passed:
            ok = False
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    assert _report(4, "scalar-map-properties", ok,
                   f"101-point grids, orbits within 1e-9, {elapsed:.2f}s")


def test_criterion_5_op13_limits():
    start = time.perf_counter()
    vertex_reports = verify_predictions(13, (0.2, 0.8), seeds=100,
                                        tol=1e-6, max_iter=10 ** 5)
    balanced_reports = verify_predictions(13, (0.5,), seeds=100,
                                          tol=1e-4, max_iter=10 ** 6)
    ok = all(r.passed for r in vertex_reports + balanced_reports)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 30.0
    assert _report(5, "op13-omega-limits", ok,
                   f"100 seeds per case at a in (0.2, 0.8, 0.5), {elapsed:.1f}s")


def test_criterion_6_op4_limits():
    start = time.perf_counter()
    ok = True

    # exact off-vertex fixed point at generic a
    h = (3 - math.sqrt(5)) / 2
    p = np.array((0.0, h, 1.0 - h))
    T = operator_tensor(4, 0.3)
    if np.abs(apply_array(T, p) - p).sum() > 1e-12:
        ok = False

    # fixed curve and cycle curves at a = 1/2
    T_half = operator_tensor(4, 0.5)
    for b in np.linspace(0.0, 1.0, 100):
        hb = slice_fixed_height(float(b))
        q = np.array((b, hb, 1.0 - b - hb))
        if np.abs(apply_array(T_half, apply_array(T_half, q)) - q).sum() > 1e-12:
            ok = False
    for c in np.linspace(0.0, CYCLE_PARAM_SUP, 100, endpoint=False):
        lo, hi = slice_cycle_heights(float(c))
        for hc in (lo, hi):
            q = np.array((c, hc, 1.0 - c - hc))
            if np.abs(apply_array(T_half, apply_array(T_half, q)) - q).sum() > 1e-12:
                ok = False

    # numeric oracle against the exact fixed sets
    for op_id in (13, 4, 28, 25):
        for a in (0.1, 0.3, 0.7, 0.9):
            found = fixed_points_numeric(operator_tensor(op_id, a))
            exact = fixed_points_exact(op_id, a).sample()
            if len(found) != len(exact):
                ok = False
                continue
            h_dist = max(
                max(min(l1_distance(u, v) for v in exact) for u in found),
                max(min(l1_distance(u, v) for v in found) for u in exact))
            if h_dist > 1e-9:
                ok = False

    # omega-limit branches (a > 1/2 and a = 1/2)
    reports = verify_predictions(4, (0.8,), seeds=100, tol=1e-6, max_iter=10 ** 5)
    reports += verify_predictions(4, (0.5,), seeds=100, tol=1e-4, max_iter=10 ** 6)
    if not all(r.passed for r in reports):
        ok = False

    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60.0
    assert _report(6, "op4-limits-and-curves", ok,
                   f"curves within 1e-12, oracle within 1e-9, {elapsed:.1f}s")


def test_criterion_7_op28_limits():
    start = time.perf_counter()
    ok = True

    # edge fixed point residual over an a-grid that skips 1/2
    for a in np.linspace(0.0, 1.0, 100):
        h = edge_fixed_height(float(a))
        p = np.array((0.0, h, 1.0 - h))
        T = operator_tensor(28, float(a))
        if np.abs(apply_array(T, p) - p).sum() > 1e-12:
            ok = False

    # exact 2-periodicity on the edge at a = 1/2
    T_half = operator_tensor(28, 0.5)
    rng = np.random.default_rng(2024)
    count = 0
    while count < 100:
        u = float(rng.random())
        point = np.array((0.0, u, 1.0 - u))
        if np.abs(point - np.array((0.0, 0.5, 0.5))).sum() <= 1e-9:
            continue
        count += 1
        image = apply_array(T_half, point)
        two_step = apply_array(T_half, image)
        if np.abs(two_step - point).sum() > 1e-14:
            ok = False
        if np.abs(image - point).sum() == 0.0:
            ok = False  # genuine 2-cycle, not a fixed point

    reports = verify_predictions(28, (0.3,), seeds=100, tol=1e-6, max_iter=10 ** 5)
    reports += verify_predictions(28, (0.5,), seeds=100, tol=1e-6, max_iter=10 ** 5)
    if not all(r.passed for r in reports):
        ok = False

    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 30.0
    assert _report(7, "op28-limits-and-cycles", ok,
                   f"edge residuals within 1e-12/1e-14, {elapsed:.1f}s")


def test_criterion_8_op25_limits():
    start = time.perf_counter()
    reports = verify_predictions(25, (0.2, 0.5, 0.8), seeds=100,
                                 tol=1e-6, max_iter=10 ** 5)
    ok = all(r.passed for r in reports)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 30.0
    assert _report(8, "op25-omega-limits", ok,
                   f"100 seeds per case at 3 parameters, {elapsed:.1f}s")


def test_criterion_9_determinism(tmp_path):
    ok = True

    # library level: identical seeds reproduce identical serialized reports
    first = dumps(verify_predictions(13, (0.2,), seeds=30)[0].to_json_dict())
    second = dumps(verify_predictions(13, (0.2,), seeds=30)[0].to_json_dict())
    if first != second:
        ok = False

    # sampling level
    if sample(3, 404, 100) != sample(3, 404, 100):
        ok = False

    # CLI level: byte-identical output files
    paths = [tmp_path / name for name in ("one.json", "two.json")]
    for path in paths:
        code = main(["simulate", "--op", "28", "--a", "0.3", "--seed", "11",
                     "--count", "5", "--out", str(path)])
        if code != 0:
            ok = False
    if paths[0].read_bytes() != paths[1].read_bytes():
        ok = False

    assert _report(9, "determinism", ok, "byte-identical reports under fixed seeds")
