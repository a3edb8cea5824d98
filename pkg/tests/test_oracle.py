import math
import warnings

import numpy as np
import pytest

from uurjpdd.errors import DimensionCapExceeded, EmptyTrialsWarning
from uurjpdd.fixtures import fourier, hadamard, identity
from uurjpdd.linalg import hermitian_max_eigenvalue, projector_sum
from uurjpdd.oracle import (
    all_regions,
    brute_force_omega_k,
    mixed_state_spot_check,
    partition_shaped_regions,
    region_max,
)

from conftest import random_pair

OMEGA1_HADAMARD = ((1 + 1 / math.sqrt(2)) / 2) ** 2


def test_region_max_examples():
    assert region_max(hadamard(), {(1, 1)}) == pytest.approx(OMEGA1_HADAMARD, abs=1e-6)
    full = {(i, j) for i in range(1, 4) for j in range(1, 4)}
    assert region_max(random_pair(3, 0), full, starts=4) == pytest.approx(1.0, abs=1e-12)
    assert region_max(identity(2), {(1, 1)}) == pytest.approx(1.0, abs=1e-9)


def test_region_max_single_cell_closed_form():
    pair = random_pair(4, 5)
    a = np.abs(pair.unitary)
    for m in range(4):
        for n in range(4):
            assert region_max(pair, {(m + 1, n + 1)}, starts=8) == pytest.approx(((1 + a[m, n]) / 2) ** 2, abs=1e-8)


def test_region_max_cap():
    with pytest.raises(DimensionCapExceeded):
        region_max(random_pair(6, 0), {(1, 1)})


def test_region_max_set_semantics():
    pair = random_pair(3, 2)
    a = region_max(pair, [(1, 2), (2, 1), (3, 3)], starts=16)
    b = region_max(pair, [(3, 3), (1, 2), (2, 1), (1, 2)], starts=16)
    assert a == b


@pytest.mark.parametrize("seed", range(3))
def test_region_max_below_projector_bound(seed):
    pair = random_pair(3, seed)
    rng = np.random.default_rng(seed)
    regions = all_regions(3, 3)
    for idx in rng.choice(len(regions), 10, replace=False):
        region = regions[idx]
        rows = {i for i, _ in region}
        cols = {j for _, j in region}
        bound = hermitian_max_eigenvalue(projector_sum(pair, rows, cols)) ** 2 / 4
        assert region_max(pair, region, starts=16) <= bound + 1e-6


def test_region_max_monotone_under_growth():
    pair = random_pair(3, 9)
    small = {(1, 1), (2, 3)}
    assert region_max(pair, small | {(3, 2)}, starts=16) >= region_max(pair, small, starts=16) - 1e-9


def test_region_families():
    assert len(all_regions(3, 3)) == 84
    shaped = partition_shaped_regions(2, 3)
    # two cells in one row or one column: 3 * 3 + 3 * 3
    assert len(shaped) == 18
    assert len(partition_shaped_regions(1, 4)) == 16


def test_brute_force_examples():
    r = brute_force_omega_k(hadamard(), 1)
    assert r.oracle_value == pytest.approx(OMEGA1_HADAMARD, abs=1e-6)
    assert abs(r.gap) <= 1e-6
    r = brute_force_omega_k(hadamard(), 2)
    assert r.oracle_value == pytest.approx(1.0, abs=1e-9)
    assert r.formula_value == pytest.approx(1.0, abs=1e-12)
    assert r.best_region_is_partition_shaped
    r = brute_force_omega_k(random_pair(4, 1), 4, starts=8, exhaustive=False)
    assert not r.exhaustive
    assert r.oracle_value == pytest.approx(1.0, abs=1e-9)


def test_brute_force_caps():
    with pytest.raises(DimensionCapExceeded):
        brute_force_omega_k(random_pair(4, 0), 1, exhaustive=True)


def test_report_sign_convention():
    r = brute_force_omega_k(fourier(3), 2, starts=16)
    assert r.gap == r.formula_value - r.oracle_value
    assert 0 <= r.oracle_value <= 1


def test_mixed_state_spot_checks():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert mixed_state_spot_check(hadamard(), {(1, 1)}, 0) == 0.0
    assert any(issubclass(w.category, EmptyTrialsWarning) for w in caught)
    assert mixed_state_spot_check(hadamard(), {(1, 1)}, 10_000) <= OMEGA1_HADAMARD + 1e-6
    assert mixed_state_spot_check(identity(2), {(1, 1)}, 1000) <= 1.0
    with pytest.raises(DimensionCapExceeded):
        mixed_state_spot_check(random_pair(5, 0), {(1, 1)}, 10)


def test_mixed_states_do_not_beat_pure_optimum():
    pair = random_pair(3, 4)
    region = {(1, 1), (1, 2), (2, 1)}
    assert mixed_state_spot_check(pair, region, 5000, seed=3) <= region_max(pair, region) + 1e-6
