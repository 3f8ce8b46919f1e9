"""Lattice enumeration: censuses, sectors, and partition functions."""

import math

import pytest

from reference_enum import slow_partition_functions
from torusloop.lattice import (
    SizeGuardError,
    census_counter,
    enumerate_configs,
    lattice_Z,
)
from torusloop.model import ModelSpec, face_weights


def spec_dense(p=2, pq=3, u=0.37, alpha=1.0):
    return ModelSpec("dense", p, pq, u, alpha=alpha)


def spec_dilute(p=2, pq=3, u=0.37, alpha=1.0):
    return ModelSpec("dilute", p, pq, u, alpha=alpha)


def test_face_weights_dense_special_points():
    s = ModelSpec("dense", 2, 3, 0.0)
    w = face_weights(s)
    assert w[:7] == (0.0,) * 7
    assert math.isclose(w[7], 1.0) and w[8] == 0.0
    iso = s.isotropic()
    wi = face_weights(iso)
    assert math.isclose(wi[7], wi[8])


def test_face_weights_dilute_u0():
    s = ModelSpec("dilute", 2, 3, 0.0)
    w = face_weights(s)
    assert w[8] == 0.0 and w[5] == w[6] == 0.0 and w[3] == w[4] == 0.0
    # the empty tile and both lower/upper corners 2,3 survive, plus tile 8
    assert w[0] != 0.0 and w[1] == w[2] != 0.0 and w[7] != 0.0


def test_modelspec_validation():
    with pytest.raises(ValueError):
        ModelSpec("dense", 2, 4, 0.1)
    with pytest.raises(ValueError):
        ModelSpec("sparse", 1, 2, 0.1)
    s = ModelSpec("dilute", 1, 2, 0.3, gamma=0.7)
    assert math.isclose(s.alpha, 2 * math.cos(0.7))


def test_dense_2x2_has_16_configs():
    configs = list(enumerate_configs(spec_dense(), 2, 2))
    assert len(configs) == 16
    for grid, census in configs:
        assert set(grid.tiles) <= {8, 9}
        assert sum(census.tile_counts[:7]) == 0


def test_dense_2x2_all_tile9_census():
    for grid, census in enumerate_configs(spec_dense(), 2, 2):
        if grid.tiles == (9, 9, 9, 9):
            # hand-traced: two loops, each winding once around both periods
            assert census.n_beta == 0
            assert census.windings == (((1, 1), 2),)
            assert (census.H, census.V) == (2, 2)
            break
    else:
        pytest.fail("all-9 configuration not enumerated")


def test_dense_2x2_all_tile8_census():
    for grid, census in enumerate_configs(spec_dense(), 2, 2):
        if grid.tiles == (8, 8, 8, 8):
            assert census.windings == (((-1, 1), 2),)
            break
    else:
        pytest.fail("all-8 configuration not enumerated")


def test_dilute_1x1_vacuum():
    for grid, census in enumerate_configs(spec_dilute(), 1, 1):
        if grid.tiles == (1,):
            assert census.n_beta == 0 and census.windings == ()
            assert census.sector_from_cuts() == (0, 0)
            break
    else:
        pytest.fail("vacuum configuration not enumerated")


def test_dilute_1x1_sectors():
    by_tile = {grid.tiles[0]: census
               for grid, census in enumerate_configs(spec_dilute(), 1, 1)}
    assert set(by_tile) == {1, 6, 7, 8, 9}
    assert by_tile[6].sector_from_cuts() == (0, 1)   # horizontal loop
    assert by_tile[7].sector_from_cuts() == (1, 0)   # vertical loop
    assert by_tile[8].sector_from_cuts() == (1, 1)
    assert by_tile[9].sector_from_cuts() == (1, 1)
    assert by_tile[8].windings == (((-1, 1), 1),)
    assert by_tile[9].windings == (((1, 1), 1),)


@pytest.mark.parametrize("kind, M, N", [
    ("dense", 2, 2), ("dense", 3, 3), ("dense", 2, 4),
    ("dilute", 1, 2), ("dilute", 2, 2), ("dilute", 2, 3), ("dilute", 3, 3),
])
def test_sector_classifications_agree(kind, M, N):
    """Cut-line parity and winding-class parity give the same sector."""
    spec = spec_dense() if kind == "dense" else spec_dilute()
    for _, census in enumerate_configs(spec, M, N):
        assert census.sector_from_cuts() == census.sector_from_windings()
        if census.windings:
            (i, j), _ = census.windings[0]
            assert math.gcd(abs(i), j) == 1 and j >= 0


def test_dense_sector_forced_by_parity():
    spec = spec_dense()
    for _, census in enumerate_configs(spec, 3, 2):
        assert census.sector_from_cuts() == (0, 1)
    with pytest.raises(ValueError):
        lattice_Z(spec, 3, 2, sector=(0, 0))


def test_sectors_partition_the_configurations():
    spec = spec_dilute(u=0.53, alpha=0.8)
    total = lattice_Z(spec, 2, 3)
    sectors = sum(lattice_Z(spec, 2, 3, sector=hv)
                  for hv in [(0, 0), (0, 1), (1, 0), (1, 1)])
    assert math.isclose(total, sectors, rel_tol=1e-12)


def test_beta_zero_kills_contractible_loops():
    # (1,2): beta = 0; configurations with a contractible loop must not count
    spec = ModelSpec("dense", 1, 2, 0.4, alpha=1.0)
    assert spec.beta == pytest.approx(0.0, abs=1e-15)
    z = lattice_Z(spec, 2, 2)
    by_hand = 0.0
    rho = face_weights(spec)
    for grid, census in enumerate_configs(spec, 2, 2):
        if census.n_beta:
            continue
        w = 1.0 * spec.alpha ** census.n_noncontractible
        for t, n in zip(range(1, 10), census.tile_counts):
            w *= rho[t - 1] ** n
        by_hand += w
    assert math.isclose(z, by_hand, rel_tol=1e-12)


def test_dilute_2x2_fixture_against_slow_reference():
    """Frozen golden values from the in-tree slow enumerator (lambda = pi/3 branch)."""
    spec = spec_dilute().isotropic()   # u = 3 lam / 2, lam = pi/3
    golden = {
        (0, 0): 19.753086419753124,
        (0, 1): 19.753086419753107,
        (1, 0): 19.753086419753107,
        (1, 1): 19.75308641975311,
    }
    slow = slow_partition_functions("dilute", 2, 2, spec.beta, 1.0, face_weights(spec))
    for hv, val in golden.items():
        assert math.isclose(slow[hv], val, rel_tol=1e-12)
        assert math.isclose(lattice_Z(spec, 2, 2, sector=hv), val, rel_tol=1e-10)
    assert math.isclose(sum(slow.values()), 79.01234567901244, rel_tol=1e-12)


@pytest.mark.parametrize("kind, M, N, u, alpha", [
    ("dense", 2, 4, 0.37, 0.6),
    ("dilute", 2, 2, 0.37, 1.0),
    ("dilute", 1, 2, 0.61, 2.0),
])
def test_fast_matches_slow_reference(kind, M, N, u, alpha):
    spec = ModelSpec(kind, 2, 3, u, alpha=alpha)
    slow = slow_partition_functions(kind, M, N, spec.beta, alpha, face_weights(spec))
    for hv, val in slow.items():
        if kind == "dense" and hv != (N % 2, M % 2):
            assert val == 0.0
            continue
        assert math.isclose(lattice_Z(spec, M, N, sector=hv), val,
                            rel_tol=1e-11, abs_tol=1e-13)


def test_per_class_fugacity_map():
    spec = spec_dilute(alpha=1.0)
    # give horizontal-type loops a different weight from everything else
    z_map = lattice_Z(spec, 2, 2, alphas={(1, 0): 3.0}, alpha=1.0)
    by_hand = 0.0
    rho = face_weights(spec)
    for _, census in enumerate_configs(spec, 2, 2):
        w = spec.beta ** census.n_beta
        for cls, n in census.windings:
            w *= (3.0 if cls == (1, 0) else 1.0) ** n
        for t, n in zip(range(1, 10), census.tile_counts):
            w *= rho[t - 1] ** n
        by_hand += w
    assert math.isclose(z_map, by_hand, rel_tol=1e-12)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        list(enumerate_configs(spec_dilute(), 3, 7))
    with pytest.raises(SizeGuardError):
        list(enumerate_configs(spec_dense(), 6, 7))


def test_workers_reproduce_serial_census():
    serial = census_counter("dilute", 2, 2, workers=1)
    parallel = census_counter("dilute", 2, 2, workers=2)
    assert serial == parallel
