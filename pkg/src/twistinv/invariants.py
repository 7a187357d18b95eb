"""Invariant tensors, their torus restrictions, and the pairing matrix.

For dominant nu, invariants live in sigma(S_nu^*) (x) S_nu (x) V. The first
factor is realized literally as the sigma-twist of the dual of S_nu, so its
basis vector i is sigma(e_i^*) and pairs with sigma(e_j) to delta_ij.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from .filtration import _FilCache, nu_h, stabilization_bound
from .laurent import GroupAlgebraElement, mat_det
from .linalg import nullspace, rank as mat_rank, solve
from .repn import build_irreducible, dual, r_V, twist_module, zeta
from .twist import coinvariants, fold, sigma_orbits


class ConsistencyError(RuntimeError):
    pass


@dataclass
class InvariantTensor:
    sigma: object
    nu: tuple
    first: object        # sigma(S_nu^*)
    middle: object       # S_nu
    module: object       # V
    coeffs: dict         # (a, b, c) -> Fraction

    def apply(self, ops_first, ops_middle, ops_module):
        out = {}
        for (a, b, c), x in self.coeffs.items():
            for t, y in ops_first[a].items():
                key = (t, b, c)
                out[key] = out.get(key, 0) + x * y
            for t, y in ops_middle[b].items():
                key = (a, t, c)
                out[key] = out.get(key, 0) + x * y
            for t, y in ops_module[c].items():
                key = (a, b, t)
                out[key] = out.get(key, 0) + x * y
        return {k: v for k, v in out.items() if v}

    def is_invariant(self):
        r = self.module.datum.rank
        for i in range(r):
            if self.apply(self.first.e[i], self.middle.e[i], self.module.e[i]):
                return False
            if self.apply(self.first.f[i], self.middle.f[i], self.module.f[i]):
                return False
        return True


def triple_factors(sigma, nu):
    datum = sigma.datum
    middle = build_irreducible(datum, tuple(nu))
    first = twist_module(dual(middle), sigma)
    return first, middle


def _zero_weight_triples(first, middle, module):
    vindex = module.weight_index
    out = []
    for a, wa in enumerate(first.weights):
        for b, wb in enumerate(middle.weights):
            need = tuple(-x - y for x, y in zip(wa, wb))
            for c in vindex.get(need, ()):
                out.append((a, b, c))
    return out


def invariant_basis(sigma, nu, module):
    """Echelon basis of (sigma(S_nu^*) (x) S_nu (x) V)^G.

    A weight-zero vector killed by every e_i is a highest weight vector of
    weight zero, hence invariant; the f_i conditions are then verified.
    """
    nu = tuple(nu)
    first, middle = triple_factors(sigma, nu)
    unknowns = _zero_weight_triples(first, middle, module)
    if not unknowns:
        return []
    rows = {}
    r = module.datum.rank
    for i in range(r):
        for n, (a, b, c) in enumerate(unknowns):
            for t, y in first.e[i][a].items():
                rows.setdefault((i, t, b, c), {})[n] = rows.get((i, t, b, c), {}).get(n, 0) + y
            for t, y in middle.e[i][b].items():
                rows.setdefault((i, a, t, c), {})[n] = rows.get((i, a, t, c), {}).get(n, 0) + y
            for t, y in module.e[i][c].items():
                rows.setdefault((i, a, b, t), {})[n] = rows.get((i, a, b, t), {}).get(n, 0) + y
    m = len(unknowns)
    dense = []
    for entries in rows.values():
        row = [Fraction(0)] * m
        for n, y in entries.items():
            row[n] = y
        if any(row):
            dense.append(row)
    kernel = nullspace(dense, m)
    out = []
    for vec in kernel:
        coeffs = {unknowns[n]: x for n, x in enumerate(vec) if x}
        inv = InvariantTensor(sigma, nu, first, middle, module, coeffs)
        if not inv.is_invariant():
            raise ConsistencyError("kernel vector is not invariant under the f_i")
        out.append(inv)
    return out


def leading_term(inv):
    """Coefficient vector on sigma(e_0^*) (x) e_0, as {basis index of V: coeff}."""
    return {c: x for (a, b, c), x in inv.coeffs.items() if a == 0 and b == 0}


@dataclass
class TorusValuedFunction:
    module: object
    components: dict     # basis index of V -> GroupAlgebraElement

    def component(self, c):
        return self.components.get(c, GroupAlgebraElement.zero(self.module.datum.rank))

    def is_zero(self):
        return all(p.is_zero() for p in self.components.values())


def restrict_to_torus(inv):
    """t -> sum_i e^{sigma(wt e_i)}(t) v_ii, with v_ij the V-part on sigma(e_i^*) (x) e_j."""
    sigma = inv.sigma
    comps = {}
    for (a, b, c), x in inv.coeffs.items():
        if a != b:
            continue
        exp = sigma.act(inv.middle.weights[b])
        term = GroupAlgebraElement.monomial(exp, x)
        comps[c] = comps[c] + term if c in comps else term
    comps = {c: p for c, p in comps.items() if not p.is_zero()}
    return TorusValuedFunction(inv.module, comps)


# -- basis of J(V) ------------------------------------------------------------------

@dataclass
class BasisElement:
    xi: tuple
    nu: tuple
    lead: dict               # leading vector in V(xi), {basis index: coeff}
    invariant: InvariantTensor
    function: TorusValuedFunction


def _s_prime_points(sigma, base, limits):
    orbits = sigma.node_orbits()
    pts = sorted(product(*(range(m + 1) for m in limits)), key=lambda ns: (sum(ns), ns))
    out = []
    for ns in pts:
        nu = list(base)
        for n, orbit in zip(ns, orbits):
            for k in orbit:
                nu[k] += n
        out.append((ns, tuple(nu)))
    return out


def homogeneous_basis(sigma, module):
    """Lifts of homogeneous bases of gr' V(xi) for every xi in (sigma - 1)X.

    At each nu in nu^h + N{omega_O}, vectors of fil_nu V(xi) completing the
    sum of the strictly smaller filtration pieces are chosen, and each is
    lifted to the unique invariant tensor with that leading term.
    """
    datum = module.datum
    co = coinvariants(sigma)
    orbits = sigma.node_orbits()
    elements = []
    for xi in sorted(module.weight_index, reverse=True):
        if not co.is_zero(xi):
            continue
        d = module.mult(xi)
        base = nu_h(sigma, datum.zero, xi)
        bounds = [stabilization_bound(module, xi, i) for i in range(datum.rank)]
        limits = [max(0, max(bounds[k] - base[k] for k in o)) for o in orbits]
        cache = _FilCache(module, xi)

        def clip(nu):
            return tuple(min(a, b) for a, b in zip(nu, bounds))

        points = _s_prime_points(sigma, base, limits)
        lookup = dict(points)
        chosen = 0
        idx = module.basis_of(xi)
        for ns, nu in points:
            here = cache.space(clip(nu))
            below = []
            for t in range(len(orbits)):
                if ns[t] > 0:
                    p = list(ns)
                    p[t] -= 1
                    below += cache.space(clip(lookup[tuple(p)]))
            rk = mat_rank(below, d) if below else 0
            picks = []
            for vec in here:
                if mat_rank(below + picks + [vec], d) > rk + len(picks):
                    picks.append(vec)
            if not picks:
                continue
            invs = invariant_basis(sigma, nu, module)
            leads = []
            for inv in invs:
                lt = leading_term(inv)
                leads.append([lt.get(k, Fraction(0)) for k in idx])
            if mat_rank(leads, d) != len(invs):
                raise ConsistencyError("leading term map is not injective")
            if mat_rank(leads, d) != len(here):
                raise ConsistencyError("leading terms do not span fil_nu V(xi)")
            cols = [list(x) for x in zip(*leads)]
            for vec in picks:
                x = solve(cols, vec)
                if x is None:
                    raise ConsistencyError("chosen vector is not a leading term")
                coeffs = {}
                for a, inv in zip(x, invs):
                    if a:
                        for key, y in inv.coeffs.items():
                            coeffs[key] = coeffs.get(key, 0) + a * y
                coeffs = {k: v for k, v in coeffs.items() if v}
                inv0 = invs[0]
                comb = InvariantTensor(sigma, nu, inv0.first, inv0.middle, module, coeffs)
                lead = {k: c for k, c in zip(idx, vec) if c}
                elements.append(BasisElement(xi, nu, lead, comb, restrict_to_torus(comb)))
            chosen += len(picks)
        if chosen != d:
            raise ConsistencyError(f"graded pieces at {xi} sum to {chosen}, expected {d}")
    return elements


# -- pairing matrix --------------------------------------------------------------

@dataclass
class PairingMatrix:
    sigma: object
    entries: list
    row_labels: list
    col_labels: list
    determinant: GroupAlgebraElement
    predicted: GroupAlgebraElement = None
    factored: dict = field(default_factory=dict)

    @property
    def size(self):
        return len(self.entries)


def pair_functions(f, g):
    """sum_c f[c] g[c]: V-valued against V*-valued in the dual basis."""
    rank = f.module.datum.rank
    total = GroupAlgebraElement.zero(rank)
    for c, p in f.components.items():
        q = g.components.get(c)
        if q is not None:
            total = total + p * q
    return total


def apply_word_to_element(datum, word, elem):
    return elem.map_exponents(lambda e: datum.apply_word(word, e))


def is_w0_invariant(sigma, elem):
    datum = sigma.datum
    return all(apply_word_to_element(datum, w, elem) == elem for w in fold(sigma).w0_generators)


def pairing_matrix(sigma, module):
    datum = module.datum
    dmod = dual(module)
    rows = homogeneous_basis(sigma, module)
    cols = homogeneous_basis(sigma, dmod)
    if len(rows) != len(cols):
        raise ConsistencyError("J(V) and J(V*) have different ranks")
    entries = []
    for f in rows:
        line = []
        for g in cols:
            p = pair_functions(f.function, g.function)
            for exp in p.terms:
                if not sigma.is_fixed(exp):
                    raise ConsistencyError(f"pairing entry has a non sigma-fixed exponent {exp}")
            p = GroupAlgebraElement(p.terms, datum.rank, "A")
            if not is_w0_invariant(sigma, p):
                raise ConsistencyError("pairing entry is not W0-invariant")
            line.append(p)
        entries.append(line)
    det = mat_det(entries, datum.rank)
    det = GroupAlgebraElement(det.terms, datum.rank, "A")
    predicted, factored = predicted_determinant(sigma, module)
    return PairingMatrix(sigma, entries, [(b.xi, b.nu) for b in rows], [(b.xi, b.nu) for b in cols],
                         det, predicted, factored)


def predicted_determinant(sigma, module):
    """prod (e^{alpha_O} - 1)^zeta_O over types A, BC-, times (e^{alpha_O} + 1)^zeta_O over BC+."""
    rank = module.datum.rank
    total = GroupAlgebraElement.constant(1, rank, "A")
    factored = {}
    for orbit in sigma_orbits(sigma):
        z = zeta(module, sigma, orbit)
        if not z:
            continue
        factored[orbit] = z
        factor = GroupAlgebraElement.monomial(orbit.alpha_O, 1, "A") - orbit.divisor_sign
        total = total * factor ** z
    return total, factored


@dataclass
class DeterminantReport:
    matches: bool
    unit: Fraction = None
    quotient: GroupAlgebraElement = None
    size: int = 0
    r_V: int = 0


def determinant_check(sigma, module, matrix=None):
    pm = matrix or pairing_matrix(sigma, module)
    q = pm.determinant.divmod_exact(pm.predicted) if not pm.determinant.is_zero() else None
    matches = q is not None and q.is_constant() and not q.is_zero()
    unit = q.constant_term() if matches else None
    return DeterminantReport(matches, unit, q, pm.size, r_V(module, sigma))


def equal_up_to_units(m, p):
    """Whether m_ij = r_i c_j p_{pi(i) tau(j)} for constants r, c and permutations pi, tau."""
    n = len(m)
    if n != len(p):
        return False
    for pi in permutations(range(n)):
        for tau in permutations(range(n)):
            ratios = {}
            ok = True
            for i in range(n):
                for j in range(n):
                    a, b = m[i][j], p[pi[i]][tau[j]]
                    if a.is_zero() != b.is_zero():
                        ok = False
                        break
                    if a.is_zero():
                        continue
                    q = a.divmod_exact(b)
                    if q is None or not q.is_constant():
                        ok = False
                        break
                    ratios[(i, j)] = q.constant_term()
                if not ok:
                    break
            if ok and _rank_one(ratios, n):
                return True
    return False


def _rank_one(ratios, n):
    for (i, j), x in ratios.items():
        for (k, l), y in ratios.items():
            if (i, l) in ratios and (k, j) in ratios:
                if x * y != ratios[(i, l)] * ratios[(k, j)]:
                    return False
    return True
