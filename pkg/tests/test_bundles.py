import numpy as np
import pytest

from hktlab.bundles import (bianchi_residual, catalog_names, curvature,
                            curvature_entry_forms, curvature_scale,
                            get_connection, invariance_residual,
                            type11_residual)
from hktlab.fields import sample_points

# star pairs on 2-forms of R^4, orientation dx0 dx1 dx2 dx3
STAR_PAIRS = [((0, 1), (2, 3)), ((0, 2), (3, 1)), ((0, 3), (1, 2))]


def entry(F, a, b):
    mu, nu = (a, b) if a < b else (b, a)
    sgn = 1.0 if a < b else -1.0
    return sgn * np.array(F[mu][nu], dtype=complex)


def test_catalog_and_aliases():
    names = catalog_names()
    assert set(names) == {"flat", "bpst", "direct-sum", "nonholo-demo"}
    assert get_connection("instanton").name == "bpst"
    assert get_connection("direct-sum(F,F*)").name == "direct-sum"
    with pytest.raises(KeyError, match="unknown bundle"):
        get_connection("mystery")


def test_flat_curvature_vanishes(rng):
    conn = get_connection("flat")
    for pt in sample_points(rng, 4, 5):
        F = curvature(conn, pt)
        assert max(np.max(np.abs(entry(F, mu, nu)))
                   for mu in range(4) for nu in range(4)) == 0.0


def test_instanton_coefficients_are_antihermitian(rng):
    conn = get_connection("bpst")
    for pt in sample_points(rng, 4, 5):
        for Amu in conn.coeff(pt):
            A = np.array(Amu, dtype=complex)
            assert np.max(np.abs(A + A.conj().T)) < 1e-14


def test_curvature_is_antisymmetric(rng):
    conn = get_connection("bpst")
    pt = list(rng.standard_normal(4))
    F = curvature(conn, pt)
    for mu in range(4):
        for nu in range(4):
            assert np.allclose(np.array(F[mu][nu], dtype=complex),
                               -np.array(F[nu][mu], dtype=complex))


def test_instanton_curvature_is_anti_self_dual(rng):
    # the self-dual part (F + *F)/2 must vanish while F itself does not
    conn = get_connection("bpst")
    for pt in sample_points(rng, 4, 10):
        F = curvature(conn, pt)
        assert curvature_scale(conn, pt) > 1e-3
        for (a, b), (c, d) in STAR_PAIRS:
            sd = entry(F, a, b) + entry(F, c, d)
            assert np.max(np.abs(sd)) < 1e-12


def test_direct_sum_blocks(rng):
    conn = get_connection("direct-sum")
    small = get_connection("bpst")
    pt = list(rng.standard_normal(4))
    F = curvature(conn, pt)
    f = curvature(small, pt)
    for mu in range(4):
        for nu in range(4):
            big = np.array(F[mu][nu], dtype=complex)
            blk = np.array(f[mu][nu], dtype=complex)
            assert np.allclose(big[:2, :2], blk)
            assert np.allclose(big[2:, 2:], -blk.T)
            assert np.max(np.abs(big[:2, 2:])) == 0.0
            assert np.max(np.abs(big[2:, :2])) == 0.0


def test_entry_forms_match_curvature(rng):
    conn = get_connection("bpst")
    pt = list(rng.standard_normal(4))
    F = curvature(conn, pt)
    grid = curvature_entry_forms(conn, pt)
    for a in range(2):
        for b in range(2):
            for (mu, nu), c in grid[a][b].items():
                assert c == pytest.approx(complex(F[mu][nu][a][b]))


@pytest.mark.parametrize("name", ["flat", "bpst", "direct-sum", "nonholo-demo"])
def test_bianchi_identity(rng, name):
    conn = get_connection(name)
    for pt in sample_points(rng, 4, 3):
        assert bianchi_residual(conn, pt) < 1e-12


@pytest.mark.parametrize("name", ["flat", "bpst", "direct-sum"])
def test_invariance_and_type_criteria_pass(rng, name):
    conn = get_connection(name)
    assert conn.hyperholomorphic
    for pt in sample_points(rng, 4, 5):
        assert invariance_residual(conn, pt) < 1e-12
        assert type11_residual(conn, pt) < 1e-12


def test_nonholo_demo_fails_both_criteria(rng):
    conn = get_connection("nonholo-demo")
    assert not conn.hyperholomorphic
    worst_inv = 0.0
    worst_type = 0.0
    for pt in sample_points(rng, 4, 10):
        worst_inv = max(worst_inv, invariance_residual(conn, pt))
        worst_type = max(worst_type, type11_residual(conn, pt))
    assert worst_inv > 0.1
    assert worst_type > 0.1


def test_criteria_agree_across_catalog(rng):
    # curvature of type (1,1) for I, J, K exactly when its weight-2 part dies
    pts = sample_points(rng, 4, 5)
    for name in catalog_names():
        conn = get_connection(name)
        inv = max(invariance_residual(conn, pt) for pt in pts)
        typ = max(type11_residual(conn, pt) for pt in pts)
        assert (inv < 1e-9) == (typ < 1e-9) == conn.hyperholomorphic


def test_fresh_connection_objects():
    a = get_connection("bpst")
    b = get_connection("bpst")
    assert a is not b
