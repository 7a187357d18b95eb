"""Twisted characters, the tautological endomorphism on the torus, Cayley-Hamilton."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .laurent import GroupAlgebraElement, mat_mul
from .repn import DimensionCapExceeded, dim_cap, exterior_power, sigma_hull, twisted_character
from .twist import fold


@dataclass
class TorusEndomorphism:
    module: object
    matrix: list          # matrix[i][j]: GroupAlgebraElement

    @property
    def size(self):
        return len(self.matrix)


@dataclass
class CharPolynomial:
    coefficients: list    # coefficients[i] multiplies x^i; monic of degree d

    @property
    def degree(self):
        return len(self.coefficients) - 1


def ensure_sigma(module, sigma):
    """Module with a sigma map; non sigma-stable irreducibles are replaced by their hull."""
    if module.sigma_map is not None and module.sigma == sigma:
        return module
    return sigma_hull(module, sigma)


def gamma_taut(module, sigma):
    """Matrix of t -> rho(t sigma): block (mu -> sigma mu) is e^{sigma mu} times the sigma map."""
    v = ensure_sigma(module, sigma)
    n, rank = v.dim, v.datum.rank
    zero = GroupAlgebraElement.zero(rank)
    mat = [[zero] * n for _ in range(n)]
    for j in range(n):
        exp = sigma.act(v.weights[j])
        for i, c in v.sigma_map[j].items():
            if v.weights[i] != exp:
                raise AssertionError("sigma map does not send V(mu) to V(sigma mu)")
            mat[i][j] = GroupAlgebraElement.monomial(exp, c)
    return TorusEndomorphism(v, mat)


def char_polynomial(module, sigma):
    """det(x - gamma) = sum_i (-1)^{d-i} chi_{wedge^{d-i} V}(t sigma) x^i."""
    v = ensure_sigma(module, sigma)
    d = v.dim
    rank = v.datum.rank
    if sum(comb(d, k) for k in range(d + 1)) > dim_cap():
        raise DimensionCapExceeded(f"exterior powers of a {d}-dimensional module exceed the cap")
    coeffs = [None] * (d + 1)
    for k in range(d + 1):
        if k == 0:
            chi = GroupAlgebraElement.constant(1, rank, "A")
        else:
            chi = twisted_character(exterior_power(v, k))
        sign = -1 if k % 2 else 1
        coeffs[d - k] = chi * sign
    return CharPolynomial(coeffs)


def char_polynomial_from_traces(endo):
    """det(x - gamma) through Newton's identities on traces of powers of gamma."""
    mat = endo.matrix
    d = len(mat)
    rank = endo.module.datum.rank
    one = GroupAlgebraElement.constant(1, rank)
    power = mat
    traces = []
    for k in range(1, d + 1):
        if k > 1:
            power = mat_mul(power, mat, rank)
        tr = GroupAlgebraElement.zero(rank)
        for i in range(d):
            tr = tr + power[i][i]
        traces.append(tr)
    elem = [one]
    for k in range(1, d + 1):
        acc = GroupAlgebraElement.zero(rank)
        for i in range(1, k + 1):
            term = elem[k - i] * traces[i - 1]
            acc = acc + term if i % 2 else acc - term
        elem.append(acc * Fraction(1, k))
    coeffs = [None] * (d + 1)
    for k in range(d + 1):
        coeffs[d - k] = elem[k] * (-1 if k % 2 else 1)
    return CharPolynomial(coeffs)


def evaluate_polynomial(poly, endo):
    mat = endo.matrix
    d = len(mat)
    rank = endo.module.datum.rank
    zero = GroupAlgebraElement.zero(rank)
    # Horner: (((c_d) g + c_{d-1}) g + ...)
    acc = [[poly.coefficients[-1] if i == j else zero for j in range(d)] for i in range(d)]
    for c in reversed(poly.coefficients[:-1]):
        acc = mat_mul(acc, mat, rank)
        for i in range(d):
            acc[i][i] = acc[i][i] + c
    return acc


def cayley_hamilton_check(module, sigma):
    endo = gamma_taut(module, sigma)
    poly = char_polynomial(module, sigma)
    value = evaluate_polynomial(poly, endo)
    return all(x.is_zero() for row in value for x in row)


def vandermonde_minuscule(module):
    """prod_{j < j'} (e^{lam_j} - e^{lam_j'}) over the weights of a minuscule module."""
    datum = module.datum
    weights = module.weights
    if len(set(weights)) != len(weights):
        raise ValueError("module is not minuscule: repeated weights")
    if weights and datum.weyl_orbit(weights[0]) != set(weights):
        raise ValueError("module is not minuscule: weights form several orbits")
    out = GroupAlgebraElement.constant(1, datum.rank)
    for a in range(len(weights)):
        for b in range(a + 1, len(weights)):
            out = out * (GroupAlgebraElement.monomial(weights[a]) - GroupAlgebraElement.monomial(weights[b]))
    return out


def vandermonde_factors(module):
    """For each pair, (root, monomial exponent, unit) with e^a - e^b = unit * e^m * (e^root - 1)."""
    datum = module.datum
    out = []
    w = module.weights
    for a in range(len(w)):
        for b in range(a + 1, len(w)):
            diff = tuple(x - y for x, y in zip(w[a], w[b]))
            if not datum.is_root(diff):
                raise ValueError(f"weight difference {diff} is not a root")
            # e^a - e^b = e^b (e^{a-b} - 1)
            out.append((diff, w[b], Fraction(1)))
    return out


def chevalley_w0_invariance(sigma, chi):
    datum = sigma.datum
    for word in fold(sigma).w0_generators:
        if chi.map_exponents(lambda e: datum.apply_word(word, e)) != chi:
            return False
    return True
