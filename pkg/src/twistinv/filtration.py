"""Multi-filtrations on weight spaces and their graded dimensions.

For a simple root alpha, fil^alpha_i V(nu) is the kernel of E_alpha^{i+1} on
V(nu); fil_lam V(nu) intersects these over the simple roots with i = lam_alpha.
Index vectors lam are tuples in N^rank, identified with dominant weights.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .linalg import nullspace, rank as mat_rank, in_span
from .repn import apply_op
from .twist import coinvariants


def _local(v, nu):
    return v.basis_of(nu)


def _power_matrix(v, nu, ops, step, p):
    """Matrix (rows over target weight space) of op^p restricted to V(nu)."""
    src = _local(v, nu)
    tgt_wt = tuple(a + p * b for a, b in zip(nu, step))
    tgt = _local(v, tgt_wt)
    if not tgt:
        return []
    pos = {k: n for n, k in enumerate(tgt)}
    cols = []
    for k in src:
        vec = {k: Fraction(1)}
        for _ in range(p):
            vec = apply_op(ops, vec)
            if not vec:
                break
        col = [Fraction(0)] * len(tgt)
        for idx, c in vec.items():
            col[pos[idx]] = c
        cols.append(col)
    return [list(r) for r in zip(*cols)] if cols else []


def stabilization_bound(v, nu, i):
    """N_alpha(nu) = max{n >= 0 : V(nu + n alpha) != 0}."""
    alpha = v.datum.simple_roots[i]
    n = 0
    while v.mult(tuple(a + (n + 1) * b for a, b in zip(nu, alpha))):
        n += 1
    return n


def _e_kernel_rows(v, nu, i, k):
    alpha = v.datum.simple_roots[i]
    return _power_matrix(v, nu, v.e[i], alpha, k + 1)


def fil_alpha_basis(v, nu, i, k):
    nu = tuple(nu)
    d = v.mult(nu)
    if d == 0:
        return []
    return nullspace(_e_kernel_rows(v, nu, i, k), d)


def fil_alpha_dim(v, nu, i, k):
    return len(fil_alpha_basis(v, nu, i, k))


def fil_alpha_dim_via_F(v, nu, i, k):
    """Same dimension through lowering operators: ker F^{<nu,alpha^vee> + k + 1}.

    When that exponent is <= 0 the family of divided powers contains F^(0) = 1,
    so the kernel is zero.
    """
    nu = tuple(nu)
    d = v.mult(nu)
    if d == 0:
        return 0
    p = nu[i] + k + 1
    if p <= 0:
        return 0
    alpha = tuple(-a for a in v.datum.simple_roots[i])
    rows = _power_matrix(v, nu, v.f[i], alpha, p)
    return d - mat_rank(rows, d) if rows else d


def multifil_basis(v, nu, lam):
    nu = tuple(nu)
    d = v.mult(nu)
    if d == 0:
        return []
    rows = []
    for i, k in enumerate(lam):
        if k < 0:
            return []
        rows += _e_kernel_rows(v, nu, i, k)
    return nullspace(rows, d) if rows else nullspace([], d)


def multifil_dim(v, nu, lam):
    return len(multifil_basis(v, nu, lam))


@dataclass
class FiltrationProfile:
    weight: tuple
    bounds: tuple                     # N_alpha per simple root
    alpha_dims: tuple                 # dim fil^alpha_i for 0 <= i <= N_alpha
    graded: dict = field(default_factory=dict)

    @property
    def total(self):
        return sum(self.graded.values())


class _FilCache:
    """Kernels of E_alpha^{k+1} on one weight space, with powers built incrementally."""

    def __init__(self, v, nu):
        self.v, self.nu = v, tuple(nu)
        self.d = v.mult(self.nu)
        self.src = _local(v, self.nu)
        self.rows = {}
        self.spaces = {}
        self.powers = {}              # i -> {p: images of the basis under E_i^p}

    def _images(self, i, p):
        """Images of the basis of V(nu) under E_i^p, stepping up from the nearest cached power."""
        cached = self.powers.setdefault(i, {0: [{k: Fraction(1)} for k in self.src]})
        have = max(q for q in cached if q <= p)
        images = cached[have]
        while have < p:
            images = [apply_op(self.v.e[i], vec) if vec else vec for vec in images]
            have += 1
        cached[p] = images
        return images

    def _rows_for_power(self, i, p):
        step = self.v.datum.simple_roots[i]
        tgt = _local(self.v, tuple(a + p * b for a, b in zip(self.nu, step)))
        if not tgt:
            return []
        images = self._images(i, p)
        pos = {k: n for n, k in enumerate(tgt)}
        rows = [[Fraction(0)] * len(images) for _ in tgt]
        for c, vec in enumerate(images):
            for idx, x in vec.items():
                rows[pos[idx]][c] = x
        return rows

    def kernel_rows(self, i, k):
        key = (i, k)
        if key not in self.rows:
            self.rows[key] = self._rows_for_power(i, k + 1)
        return self.rows[key]

    def alpha_dim(self, i, k):
        if not self.d:
            return 0
        rows = self.kernel_rows(i, k)
        return self.d - mat_rank(rows, self.d) if rows else self.d

    def space(self, lam):
        lam = tuple(lam)
        if lam not in self.spaces:
            if any(k < 0 for k in lam):
                self.spaces[lam] = []
            else:
                rows = []
                for i, k in enumerate(lam):
                    rows += self.kernel_rows(i, k)
                self.spaces[lam] = nullspace(rows, self.d)
        return self.spaces[lam]


def _levels(cache, i, bound):
    """dim fil^alpha_k for 0 <= k <= bound and the levels where it jumps.

    The filtration is increasing in k, so an interval whose endpoints agree is
    constant; bisection then needs only logarithmically many kernels.
    """
    dims = {0: cache.alpha_dim(i, 0), bound: cache.alpha_dim(i, bound)}

    def split(lo, hi):
        if hi - lo <= 1 or dims[lo] == dims[hi]:
            return
        mid = (lo + hi) // 2
        dims[mid] = cache.alpha_dim(i, mid)
        split(lo, mid)
        split(mid, hi)

    split(0, bound)
    full, last = [], dims[0]
    for k in range(bound + 1):
        last = dims.get(k, last)
        full.append(last)
    levels = [k for k in range(bound + 1) if full[k] > (full[k - 1] if k else 0)]
    return full, levels


def _graded_from(cache, lam, preds):
    here = cache.space(lam)
    if not here:
        return 0
    below = []
    for p in preds:
        below += cache.space(p)
    return len(here) - (mat_rank(below, cache.d) if below else 0)


def filtration_profile(v, nu, compress=True):
    nu = tuple(nu)
    r = v.datum.rank
    bounds = tuple(stabilization_bound(v, nu, i) for i in range(r))
    cache = _FilCache(v, nu)
    alpha_dims, levels = [], []
    for i in range(r):
        dims, lev = _levels(cache, i, bounds[i])
        alpha_dims.append(tuple(dims))
        levels.append(lev if compress else list(range(bounds[i] + 1)))
    graded = {}
    if cache.d:
        for lam in product(*levels):
            preds = []
            for i in range(r):
                if lam[i] > 0:
                    p = list(lam)
                    p[i] -= 1
                    preds.append(tuple(p))
            g = _graded_from(cache, lam, preds)
            if g:
                graded[tuple(lam)] = g
    return FiltrationProfile(nu, bounds, tuple(alpha_dims), graded)


def gr_polynomial(v, nu, compress=True):
    """P_{mu,nu}: {lam: dim gr_lam V(nu)} with zero coefficients dropped."""
    return dict(filtration_profile(v, nu, compress).graded)


def polynomial_at_one(poly):
    return sum(poly.values())


def specialize_equal(poly):
    """Set every q_alpha = q; returns {degree: coeff}."""
    out = {}
    for lam, c in poly.items():
        out[sum(lam)] = out.get(sum(lam), 0) + c
    return out


def fil_contains(v, nu, lam_small, lam_big):
    big = multifil_basis(v, nu, lam_big)
    d = v.mult(tuple(nu))
    return all(in_span(big, x, d) for x in multifil_basis(v, nu, lam_small))


# -- twisted index sets -------------------------------------------------------------

def nu_h(sigma, nu0, xi):
    """Minimal nu >= nu0 (componentwise) with sigma(nu) - nu = xi."""
    nu0, xi = tuple(nu0), tuple(xi)
    if not coinvariants(sigma).is_zero(xi):
        raise ValueError("xi is not in the image of sigma - 1")
    inv = sigma.inverse_perm
    nu = [None] * len(xi)
    for orbit in sigma.node_orbits():
        # along the cycle: nu_{sigma^-1(j)} = nu_j + xi_j
        offset = {orbit[0]: 0}
        j = orbit[0]
        while True:
            nxt = inv[j]
            if nxt in offset:
                if offset[nxt] != offset[j] + xi[j]:
                    raise ValueError("xi is not in the image of sigma - 1")
                break
            offset[nxt] = offset[j] + xi[j]
            j = nxt
        t = max(nu0[k] - offset[k] for k in orbit)
        for k in orbit:
            nu[k] = t + offset[k]
    nu = tuple(nu)
    assert tuple(a - b for a, b in zip(sigma.act(nu), nu)) == xi
    return nu


def twisted_index_bounds(v, sigma, xi, base):
    bounds = [stabilization_bound(v, xi, i) for i in range(v.datum.rank)]
    out = []
    for orbit in sigma.node_orbits():
        out.append(max(0, max(bounds[k] - base[k] for k in orbit)))
    return out, bounds


def twisted_graded_dims(v, sigma, xi, nu0=None):
    """Graded dims of fil_nu V(xi) over nu in nu^h + N{omega_O}, inside the box."""
    xi = tuple(xi)
    datum = v.datum
    nu0 = tuple(nu0) if nu0 is not None else datum.zero
    base = nu_h(sigma, nu0, xi)
    if not v.mult(xi):
        return {}
    orbits = sigma.node_orbits()
    limits, bounds = twisted_index_bounds(v, sigma, xi, base)
    cache = _FilCache(v, xi)

    def point(ns):
        nu = list(base)
        for n, orbit in zip(ns, orbits):
            for k in orbit:
                nu[k] += n
        return tuple(nu)

    def clip(nu):
        return tuple(min(a, b) for a, b in zip(nu, bounds))

    out = {}
    for ns in product(*(range(m + 1) for m in limits)):
        nu = point(ns)
        preds = []
        for t in range(len(orbits)):
            if ns[t] > 0:
                p = list(ns)
                p[t] -= 1
                preds.append(clip(point(p)))
        g = _graded_from(cache, clip(nu), preds)
        if g:
            out[nu] = g
    return out


def fil_kT_dim(datum, nu):
    """dim of span{e^lam : lam_dom <= nu} = sum of orbit sizes of dominant mu <= nu."""
    return sum(len(datum.weyl_orbit(mu)) for mu in datum.dominant_weights_below(tuple(nu)))
