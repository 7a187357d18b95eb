from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from twistinv.filtration import (fil_alpha_dim, fil_alpha_dim_via_F, fil_contains, fil_kT_dim,
                                 filtration_profile, gr_polynomial, multifil_dim, nu_h,
                                 polynomial_at_one, specialize_equal, stabilization_bound,
                                 twisted_graded_dims)
from twistinv.repn import build_irreducible, direct_sum, freudenthal
from twistinv.rootdata import build_root_datum
from twistinv.twist import in_image, validate_automorphism

from epsilon import eps_a
from support import automorphism


def irr(group, lam):
    return build_irreducible(build_root_datum(group), tuple(lam))


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_sl2_filtration(n):
    v = irr("A1", (n,))
    for k in range(n + 1):
        nu = (n - 2 * k,)
        for i in range(n + 2):
            expected = 0 if i < k else 1
            assert fil_alpha_dim(v, nu, 0, i) == expected
            assert fil_alpha_dim_via_F(v, nu, 0, i) == expected
        assert gr_polynomial(v, nu) == {(k,): 1}


def test_adjoint_a2_examples():
    adj = irr("A2", (1, 1))
    assert fil_alpha_dim(adj, (0, 0), 0, 0) == 1
    assert fil_alpha_dim_via_F(adj, (0, 0), 0, 0) == 1
    for i in range(2):
        n = stabilization_bound(adj, (0, 0), i)
        assert fil_alpha_dim(adj, (0, 0), i, n) == 2
        assert fil_alpha_dim(adj, (1, 1), i, 0) == 1
        assert fil_alpha_dim_via_F(adj, (1, 1), i, 0) == 1
    assert multifil_dim(adj, (0, 0), (1, 1)) == 2
    assert multifil_dim(irr("A1", (2,)), (0,), (0,)) == 0
    assert polynomial_at_one(gr_polynomial(adj, (0, 0))) == 2
    assert gr_polynomial(adj, (0, 0)) == {(0, 1): 1, (1, 0): 1}


E_VS_F = [("A2", (1, 1)), ("A2", (2, 1)), ("B2", (1, 1)), ("G2", (1, 0)), ("A3", (1, 0, 1)),
          ("C3", (0, 1, 0))]


@pytest.mark.parametrize("group,lam", E_VS_F)
def test_e_and_f_kernels_agree(group, lam):
    v = irr(group, lam)
    for nu in v.weight_index:
        for i in range(v.datum.rank):
            top = stabilization_bound(v, nu, i)
            dims = [fil_alpha_dim(v, nu, i, k) for k in range(top + 2)]
            assert dims == [fil_alpha_dim_via_F(v, nu, i, k) for k in range(top + 2)]
            assert dims == sorted(dims) and dims[top] == v.mult(nu)


@pytest.mark.parametrize("group,lam", [("A2", (1, 1)), ("B2", (1, 1)), ("A3", (0, 1, 1))])
def test_monotone_containment(group, lam):
    v = irr(group, lam)
    for nu in v.weight_index:
        bounds = [stabilization_bound(v, nu, i) for i in range(v.datum.rank)]
        box = list(product(*(range(b + 1) for b in bounds)))
        for small in box:
            for i in range(len(small)):
                big = tuple(x + (k == i) for k, x in enumerate(small))
                if big[i] <= bounds[i]:
                    assert fil_contains(v, nu, small, big)
                    assert multifil_dim(v, nu, small) <= multifil_dim(v, nu, big)


@pytest.mark.parametrize("group,lam", [("A2", (2, 1)), ("B2", (0, 2)), ("G2", (1, 0)), ("A3", (1, 1, 0))])
def test_compressed_profile_matches_full_box(group, lam):
    v = irr(group, lam)
    for nu in v.weight_index:
        full = filtration_profile(v, nu, compress=False)
        assert full.graded == gr_polynomial(v, nu)
        assert full.total == v.mult(nu)
        for key in full.graded:
            assert all(k <= b for k, b in zip(key, full.bounds))


def test_equal_variable_specialization_counts_multiplicity():
    d = build_root_datum("B2")
    v = build_irreducible(d, (2, 1))
    for nu in v.weight_index:
        if d.is_dominant(nu):
            poly = specialize_equal(gr_polynomial(v, nu))
            assert sum(poly.values()) == freudenthal(d, (2, 1), nu)
            assert all(c > 0 for c in poly.values())


def test_direct_sum_is_additive():
    a, b = irr("A2", (1, 1)), irr("A2", (3, 0))
    s = direct_sum([a, b])
    for nu in set(a.weight_index) | set(b.weight_index):
        for lam in product(range(3), range(3)):
            assert multifil_dim(s, nu, lam) == multifil_dim(a, nu, lam) + multifil_dim(b, nu, lam)


def test_nu_h_examples():
    d = build_root_datum("A2")
    ident = validate_automorphism(d, (0, 1))
    assert nu_h(ident, (2, 1), (0, 0)) == (2, 1)
    a3 = automorphism("A3", "(1 3)")
    lam1 = tuple(x + y for x, y in zip(eps_a(3, 2), eps_a(3, 3)))
    assert nu_h(a3, (0, 0, 0), lam1) == eps_a(3, 1)
    a2 = automorphism("A2", "(1 2)")
    assert nu_h(a2, (0, 0), eps_a(2, 2)) == eps_a(2, 1)
    with pytest.raises(ValueError):
        nu_h(a3, (0, 0, 0), (0, 1, 0))


@pytest.mark.parametrize("group,cycles", [("A3", "(1 3)"), ("D4", "(1 3 4)"), ("A4", "(1 4)(2 3)")])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_nu_h_minimality(group, cycles, data):
    sigma = automorphism(group, cycles)
    r = sigma.datum.rank
    nu0 = data.draw(st.tuples(*[st.integers(0, 3)] * r))
    x = data.draw(st.tuples(*[st.integers(-3, 3)] * r))
    xi = tuple(a - b for a, b in zip(sigma.act(x), x))
    nu = nu_h(sigma, nu0, xi)
    assert all(a >= b for a, b in zip(nu, nu0))
    assert tuple(a - b for a, b in zip(sigma.act(nu), nu)) == xi
    for orbit in sigma.node_orbits():
        assert any(nu[k] == nu0[k] for k in orbit)


TWISTED = [("A3", "(1 3)", (0, 1, 0)), ("A3", "(1 3)", (1, 0, 1)), ("A2", "(1 2)", (1, 0)),
           ("A2", "(1 2)", (1, 1)), ("A2", "(1 2)", (2, 2)), ("D4", "(3 4)", (1, 0, 0, 0)),
           ("D4", "(1 3 4)", (0, 1, 0, 0)), ("A4", "(1 4)(2 3)", (1, 0, 0, 1))]


@pytest.mark.parametrize("group,cycles,lam", TWISTED)
def test_twisted_graded_dims_sum_to_multiplicity(group, cycles, lam):
    sigma = automorphism(group, cycles)
    v = irr(group, lam)
    for xi in v.weight_index:
        if not in_image(xi, sigma):
            continue
        dims = twisted_graded_dims(v, sigma, xi)
        assert sum(dims.values()) == v.mult(xi)
        for nu in dims:
            assert tuple(a - b for a, b in zip(sigma.act(nu), nu)) == xi


def test_twisted_graded_examples():
    a3 = automorphism("A3", "(1 3)")
    lam1 = tuple(x + y for x, y in zip(eps_a(3, 2), eps_a(3, 3)))
    assert sum(twisted_graded_dims(irr("A3", (0, 1, 0)), a3, lam1).values()) == 1
    a2 = automorphism("A2", "(1 2)")
    assert sum(twisted_graded_dims(irr("A2", (1, 0)), a2, eps_a(2, 2)).values()) == 1


def test_untwisted_reduces_to_gr_polynomial():
    v = irr("A2", (2, 2))
    ident = validate_automorphism(v.datum, (0, 1))
    assert twisted_graded_dims(v, ident, (0, 0)) == gr_polynomial(v, (0, 0), compress=False)


def brute_fil_kT(datum, nu, radius=8):
    count = 0
    for lam in product(range(-radius, radius + 1), repeat=datum.rank):
        if datum.dominance_leq(datum.dominant_conjugate(lam)[0], nu):
            count += 1
    return count


def test_fil_kT_dim():
    a1, a2, b2 = (build_root_datum(g) for g in ("A1", "A2", "B2"))
    assert fil_kT_dim(a2, (0, 0)) == 1
    assert fil_kT_dim(a2, (1, 1)) == 7
    for n in range(0, 8, 2):
        assert fil_kT_dim(a1, (n,)) == n + 1
    for d, nu in [(a1, (5,)), (a2, (2, 1)), (a2, (3, 0)), (b2, (1, 1)), (b2, (2, 0))]:
        assert fil_kT_dim(d, nu) == brute_fil_kT(d, nu)
