import numpy as np
import pytest

from hktlab.charts import flat_chart, to_frame
from hktlab.exterior import eadd, enorm, escale, esub, wedge
from hktlab.fields import (FormField, d_plus, del_bar, del_hol, del_j,
                           dolbeault, exterior_d, hodge_field, ladder_constant,
                           ladder_map, nijenhuis_residual, random_form_field,
                           random_polynomial, random_pq_field, sample_points)
from hktlab.quaternions import hypercomplex_matrices


def fd_exterior_d(field, pt, h=1e-5):
    # central differences on each coefficient function
    out = {}
    for mu in range(field.chart.dim):
        up = list(pt)
        dn = list(pt)
        up[mu] += h
        dn[mu] -= h
        plus = field.at(up)
        minus = field.at(dn)
        for mono in set(plus) | set(minus):
            dc = (plus.get(mono, 0.0) - minus.get(mono, 0.0)) / (2 * h)
            out = eadd(out, wedge({(mu,): 1.0}, {mono: dc}))
    return out


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_exterior_d_matches_finite_differences(rng, degree):
    ch = flat_chart(1)
    if degree == 0:
        field = random_polynomial(ch, rng, degree=3, real=False)
    else:
        field = random_form_field(ch, degree, rng)
    for pt in sample_points(rng, 4, 3):
        exact = exterior_d(field).at(pt)
        approx = fd_exterior_d(field, pt)
        assert enorm(esub(exact, approx)) < 1e-6


def test_d_squared_is_zero(rng):
    ch = flat_chart(1)
    field = random_form_field(ch, 1, rng)
    dd = exterior_d(exterior_d(field))
    for pt in sample_points(rng, 4, 3):
        assert enorm(dd.at(pt)) < 1e-12


def test_d_splits_into_del_and_dbar(rng):
    ch = flat_chart(2)
    f = random_polynomial(ch, rng, real=False)
    df = exterior_d(f)
    split = del_hol(f)
    dbf = del_bar(f)
    for pt in sample_points(rng, 8, 3):
        total = eadd(split.at(pt), dbf.at(pt))
        assert enorm(esub(df.at(pt), total)) < 1e-10


def test_dolbeault_lands_in_expected_type(rng):
    ch = flat_chart(1)
    field = random_pq_field(ch, 1, 0, rng)
    dl = del_hol(field)
    db = del_bar(field)
    for pt in sample_points(rng, 4, 2):
        fr = dl.frame_at(pt)
        assert enorm(esub(ch.ctx.component(fr, 2, 0), fr)) < 1e-12
        fr = db.frame_at(pt)
        assert enorm(esub(ch.ctx.component(fr, 1, 1), fr)) < 1e-12


def test_del_j_on_functions_is_j_of_dbar(rng):
    ch = flat_chart(1)
    f = random_polynomial(ch, rng, real=False)
    dj = del_j(f)
    db = del_bar(f)
    for pt in sample_points(rng, 4, 3):
        lhs = dj.frame_at(pt)
        rhs = ch.ctx.cov_mult("J", db.frame_at(pt))
        assert enorm(esub(lhs, rhs)) < 1e-12


def test_del_j_anticommutes_with_del(rng):
    ch = flat_chart(1)
    f = random_polynomial(ch, rng, real=False)
    mixed = eadd(del_hol(del_j(f)).at([0.3, -0.2, 0.7, 0.1]),
                 del_j(del_hol(f)).at([0.3, -0.2, 0.7, 0.1]))
    assert enorm(mixed) < 1e-10


def test_ladder_constant_table():
    assert ladder_constant(0, 0) == 1.0
    assert ladder_constant(3, 0) == 1.0
    assert ladder_constant(0, 1) == 1.0
    assert ladder_constant(1, 1) == 2.0
    assert ladder_constant(2, 1) == 3.0
    assert ladder_constant(0, 2) == 4.0
    assert ladder_constant(1, 2) == 12.0
    assert ladder_constant(2, 2) == 24.0


@pytest.mark.parametrize("p,q", [(0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2)])
def test_ladder_scalar_action(rng, p, q):
    # lowering q times then raising q times multiplies (p+q, 0)-forms by c_{p,q}
    ch = flat_chart(2)
    ctx = ch.ctx
    monos = ctx.basis_pq(p + q, 0)
    el = {monos[int(rng.integers(0, len(monos)))]: 1.0 + 0.5j}
    down = el
    for _ in range(q):
        down = ctx.lowering(down)
    up = down
    for _ in range(q):
        up = ctx.raising(up)
    assert enorm(esub(up, escale(el, ladder_constant(p, q)))) < 1e-12


@pytest.mark.parametrize("kind", ["prime", "second"])
def test_ladder_correspondence_spot(rng, kind):
    p, q = 1, 1
    ch = flat_chart(2)
    field = random_pq_field(ch, p, q, rng, top_weight=True)
    tp, tq = (p + 1, q) if kind == "prime" else (p, q + 1)
    kappa = (p + 1) / (p + q + 1) if kind == "prime" else 1.0 / (p + q + 1)
    lhs = ladder_map(d_plus(field, p, q, kind), tp, tq)
    phi = ladder_map(field, p, q)
    rhs = del_hol(phi) if kind == "prime" else del_j(phi)
    for pt in sample_points(rng, 8, 2):
        a = lhs.at(pt)
        b = escale(rhs.at(pt), kappa)
        assert enorm(esub(a, b)) < 1e-8 * max(1.0, enorm(a))


def test_d_plus_is_del_on_p0(rng):
    ch = flat_chart(1)
    field = random_pq_field(ch, 1, 0, rng)
    dp = d_plus(field, 1, 0, "prime")
    dl = del_hol(field)
    for pt in sample_points(rng, 4, 2):
        assert enorm(esub(dp.at(pt), dl.at(pt))) < 1e-10


def test_hodge_field_projects(rng):
    ch = flat_chart(1)
    field = random_form_field(ch, 2, rng)
    parts = [hodge_field(field, p, 2 - p) for p in range(3)]
    pt = [0.2, -0.4, 0.9, 0.3]
    total = {}
    for part in parts:
        total = eadd(total, part.at(pt))
    assert enorm(esub(total, field.at(pt))) < 1e-12


def test_top_weight_fields_are_weight_fixed(rng):
    ch = flat_chart(2)
    field = random_pq_field(ch, 1, 1, rng, top_weight=True)
    pt = list(rng.standard_normal(8))
    fr = field.frame_at(pt)
    assert enorm(esub(ch.ctx.weight_project(fr, 2), fr)) < 1e-12


def test_sample_points_shape(rng):
    pts = sample_points(rng, 8, 5, scale=2.0)
    assert len(pts) == 5
    assert all(len(p) == 8 for p in pts)


def test_nijenhuis_zero_for_constant_structure(rng):
    I4 = hypercomplex_matrices(1)["I"]

    def const_field(pt):
        return [[I4[i, j] for j in range(4)] for i in range(4)]

    for pt in sample_points(rng, 4, 5):
        assert nijenhuis_residual(const_field, pt, 4) == 0.0


def test_nijenhuis_detects_twisted_structure(rng):
    # coordinate-dependent rescaling of one rotation block breaks closure
    # of the (1, 0) distribution; the tensor must see it
    def twisted(pt):
        c = 1.0 + pt[1] * pt[1]
        return [[0.0, -1.0, 0.0, 0.0],
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, -c],
                [0.0, 0.0, 1.0 / c, 0.0]]

    for pt in sample_points(rng, 4, 3):
        L = np.array(twisted(pt))
        assert np.allclose(L @ L, -np.eye(4))
    worst = max(nijenhuis_residual(twisted, pt, 4)
                for pt in sample_points(rng, 4, 10))
    assert worst > 0.05
