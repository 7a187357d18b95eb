import pytest
from hypothesis import given, strategies as st

from twistinv.rootdata import build_root_datum, weyl_group_order
from twistinv.twist import (coinvariant_class, coinvariants, fold, format_cycles, generated_group_order,
                            in_image, parse_cycles, sigma_orbits, validate_automorphism, word_matrix)


def auto(group, cycles):
    d = build_root_datum(group)
    return validate_automorphism(d, parse_cycles(cycles, d.rank))


FOLDS = [("A2", "(1 2)", "B1"), ("A3", "(1 3)", "B2"), ("D4", "(1 3 4)", "G2"),
         ("A1xA1xA1xA1", "(1 2 3 4)", "A1"), ("A4", "(1 4)(2 3)", "B2"),
         ("A5", "(1 5)(2 4)", "B3"), ("D4", "(3 4)", "C3"), ("D5", "(4 5)", "C4"),
         ("E6", "(1 6)(3 5)", "F4"), ("A3", "()", "A3")]


def test_cycle_parsing():
    assert parse_cycles("(1 3)", 3) == (2, 1, 0)
    assert parse_cycles("()", 2) == (0, 1)
    assert format_cycles(parse_cycles("(1 3 4)", 4)) == "(1 3 4)"
    for bad in ["(1 5)", "(1 1)", "(1 2", "1 2)", "(a b)"]:
        with pytest.raises(ValueError):
            parse_cycles(bad, 4)


def test_automorphism_examples():
    d = build_root_datum("A2")
    ident = validate_automorphism(d, (0, 1))
    swap = validate_automorphism(d, "(1 2)")
    assert ident.order == 1 and swap.order == 2
    assert swap.compose(swap).is_identity
    with pytest.raises(ValueError):
        validate_automorphism(build_root_datum("A3"), "(1 2)")
    with pytest.raises(ValueError):
        validate_automorphism(build_root_datum("B2"), "(1 2)")


def _types_by_definition(sigma):
    """Orbit types straight from the definition: compare alpha_O across orbits."""
    out = {}
    orbits = {o.roots: o for o in sigma_orbits(sigma)}
    sums = {}
    for roots in orbits:
        sums.setdefault(tuple(map(sum, zip(*roots))), []).append(roots)
    for alpha, group in sums.items():
        if len(group) == 1:
            out[group[0]] = "A"
        else:
            small, big = sorted(group, key=len)
            assert len(big) == 2 * len(small)
            out[big], out[small] = "BCminus", "BCplus"
    return out


@pytest.mark.parametrize("group,cycles,folded", FOLDS)
def test_fold_table(group, cycles, folded):
    sigma = auto(group, cycles)
    f = fold(sigma)
    assert f.folded_type == folded
    assert len(f.simple_folded_roots) == len(sigma.node_orbits())
    for o in sigma_orbits(sigma):
        assert sigma.is_fixed(o.alpha_O)
        assert (o.divisor_sign == -1) == (o.orbit_type == "BCplus")
    assert {o.roots: o.orbit_type for o in sigma_orbits(sigma)} == _types_by_definition(sigma)
    kind, n = folded[0], int(folded[1:])
    assert generated_group_order(sigma.datum, f.w0_generators) == weyl_group_order(kind, n)


def test_orbit_examples():
    a2 = auto("A2", "(1 2)")
    by_type = {}
    for o in sigma_orbits(a2):
        by_type.setdefault(o.orbit_type, set()).update(o.roots)
    assert {(2, -1), (-1, 2)} <= by_type["BCminus"]
    assert (1, 1) in by_type["BCplus"]
    assert all(o.orbit_type == "A" for o in sigma_orbits(auto("A3", "(1 3)")))
    ident = auto("B3", "()")
    assert all(len(o.roots) == 1 and o.orbit_type == "A" for o in sigma_orbits(ident))


def test_identity_fold_is_original():
    for name in ("A2", "B3", "G2"):
        d = build_root_datum(name)
        f = fold(validate_automorphism(d, tuple(range(d.rank))))
        assert f.cartan == d.cartan
        assert list(f.w0_generators) == [(i,) for i in range(d.rank)]


def test_w0_generator_examples():
    a2 = auto("A2", "(1 2)")
    gen = fold(a2).w0_generators[0]
    theta = (1, 1)
    reflect = word_matrix(a2.datum, gen)
    for v in [(1, 0), (0, 1)]:
        moved = tuple(sum(reflect[i][j] * v[j] for j in range(2)) for i in range(2))
        assert moved == a2.datum.reflect(v, theta)
    a3 = auto("A3", "(1 3)")
    f = fold(a3)
    outer = [g for g in f.w0_generators if len(g) == 2][0]
    assert sorted(outer) == [0, 2]
    m = word_matrix(a3.datum, outer)
    ident = tuple(tuple(int(i == j) for j in range(3)) for i in range(3))
    assert tuple(tuple(sum(m[i][k] * m[k][j] for k in range(3)) for j in range(3)) for i in range(3)) == ident
    for lam in [(1, 0, 1), (0, 1, 0), (2, 3, 2)]:
        assert a3.is_fixed(a3.datum.apply_word(outer, lam))


def test_coinvariant_examples():
    d = build_root_datum("A2")
    assert coinvariant_class((3, -2), validate_automorphism(d, (0, 1))) == (3, -2)
    a3 = auto("A3", "(1 3)")
    assert in_image((-1, 0, 1), a3) and in_image((1, 0, -1), a3)
    assert not in_image((0, 1, 0), a3)


PERMS = [("A2", "(1 2)"), ("A3", "(1 3)"), ("D4", "(1 3 4)"), ("A1xA1xA1xA1", "(1 2 3 4)"),
         ("A1xA1xA1xA1", "(1 2)(3 4)"), ("E6", "(1 6)(3 5)")]


@pytest.mark.parametrize("group,cycles", PERMS)
@given(data=st.data())
def test_coinvariants_against_orbit_sums(group, cycles, data):
    """X/(sigma-1)X is free on node orbits: the class is the vector of orbit sums."""
    sigma = auto(group, cycles)
    r = sigma.datum.rank
    mu = data.draw(st.tuples(*[st.integers(-4, 4)] * r))
    nu = data.draw(st.tuples(*[st.integers(-4, 4)] * r))
    sums = [sum(mu[i] for i in orb) for orb in sigma.node_orbits()]
    assert in_image(mu, sigma) == (not any(sums))
    co = coinvariants(sigma)
    assert co.torsion == [] and co.free_rank == len(sigma.node_orbits())
    added = tuple(a + b for a, b in zip(mu, nu))
    total = tuple(a + b for a, b in zip(co.class_of(mu), co.class_of(nu)))
    assert co.class_of(added) == total
    assert in_image(tuple(a - b for a, b in zip(sigma.act(mu), mu)), sigma)
