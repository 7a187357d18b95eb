"""Highest-weight modules with explicit Chevalley generator matrices.

Operators are stored sparsely by column: op[j] is a dict {row: coeff} giving
the image of basis vector j. Vectors are dicts {index: coeff}.
"""

import os
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .laurent import GroupAlgebraElement, frac_str
from .linalg import inverse, rref, solve
from .twist import PinnedAutomorphism, coinvariants

DEFAULT_DIM_CAP = 5000


class DimensionCapExceeded(RuntimeError):
    pass


def dim_cap():
    raw = os.environ.get("TWISTINV_DIM_CAP")
    return int(raw) if raw else DEFAULT_DIM_CAP


# -- sparse helpers -----------------------------------------------------------

def apply_op(op, vec):
    out = {}
    for j, c in vec.items():
        for i, a in op[j].items():
            v = out.get(i, 0) + a * c
            if v:
                out[i] = v
            else:
                out.pop(i, None)
    return out


def compose(a, b):
    """a o b."""
    return [apply_op(a, col) for col in b]


def op_equal(a, b):
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))


def op_scale(op, c):
    return [{i: a * c for i, a in col.items()} for col in op]


def identity_op(n):
    return [{j: Fraction(1)} for j in range(n)]


def op_add(a, b):
    out = []
    for ca, cb in zip(a, b):
        col = dict(ca)
        for i, v in cb.items():
            s = col.get(i, 0) + v
            if s:
                col[i] = s
            else:
                col.pop(i, None)
        out.append(col)
    return out


def op_to_dense(op, nrows):
    m = [[Fraction(0)] * len(op) for _ in range(nrows)]
    for j, col in enumerate(op):
        for i, a in col.items():
            m[i][j] = a
    return m


class HighestWeightModule:
    """A finite-dimensional module given by a weight basis and e_i, f_i.

    `highest` is set for irreducible modules. `paths[k] = (i, parent)` records
    that basis vector k was produced as f_i applied to basis vector `parent`;
    it is what lets intertwiners be propagated from the highest weight vector.
    """

    def __init__(self, datum, weights, e, f, highest=None, paths=None, name="",
                 sigma=None, sigma_map=None):
        self.datum = datum
        self.weights = [tuple(w) for w in weights]
        self.e = e
        self.f = f
        self.highest = tuple(highest) if highest is not None else None
        self.paths = paths
        self.name = name
        self.sigma = sigma
        self.sigma_map = sigma_map
        self.weight_index = {}
        for k, w in enumerate(self.weights):
            self.weight_index.setdefault(w, []).append(k)

    @property
    def dim(self):
        return len(self.weights)

    def __repr__(self):
        return f"HighestWeightModule({self.name or self.highest}, dim={self.dim})"

    def basis_of(self, wt):
        return self.weight_index.get(tuple(wt), [])

    def mult(self, wt):
        return len(self.weight_index.get(tuple(wt), ()))

    def character(self):
        return {w: len(ix) for w, ix in self.weight_index.items()}

    def character_element(self):
        return GroupAlgebraElement(self.character(), self.datum.rank)

    def h_eigen(self, i, k):
        return self.weights[k][i]

    def with_sigma(self, sigma, sigma_map):
        return HighestWeightModule(self.datum, self.weights, self.e, self.f, self.highest,
                                   self.paths, self.name, sigma, sigma_map)

    def check_relations(self):
        """[e_i, f_j] = delta_ij h_i and weight compatibility, exactly."""
        r = self.datum.rank
        alphas = self.datum.simple_roots
        for i in range(r):
            for k in range(self.dim):
                for row in self.e[i][k]:
                    if self.weights[row] != tuple(a + b for a, b in zip(self.weights[k], alphas[i])):
                        return False
                for row in self.f[i][k]:
                    if self.weights[row] != tuple(a - b for a, b in zip(self.weights[k], alphas[i])):
                        return False
        for i in range(r):
            for j in range(r):
                ef = compose(self.e[i], self.f[j])
                fe = compose(self.f[j], self.e[i])
                for k in range(self.dim):
                    col = dict(ef[k])
                    for row, v in fe[k].items():
                        col[row] = col.get(row, 0) - v
                    if i == j:
                        col[k] = col.get(k, 0) - self.weights[k][i]
                    if any(col.values()):
                        return False
        return True

    def check_sigma_map(self):
        if self.sigma_map is None:
            return False
        return check_intertwiner(self, self, self.sigma, self.sigma_map)


def check_intertwiner(source, target, sigma, phi):
    """phi o e_i = e_{sigma(i)} o phi and likewise for f_i."""
    for i in range(source.datum.rank):
        j = sigma.perm[i]
        if not op_equal(compose(phi, source.e[i]), compose(target.e[j], phi)):
            return False
        if not op_equal(compose(phi, source.f[i]), compose(target.f[j], phi)):
            return False
    return True


# -- irreducible modules --------------------------------------------------------

def build_irreducible(datum, lam, cap=None):
    """Irreducible module of highest weight lam as a quotient by the Shapovalov radical.

    Weight spaces are filled by depth below lam. At weight mu the spanning
    candidates are f_i b for basis vectors b of V(mu + alpha_i); the
    contravariant form on them is <f_i b, f_k b'> = <b, e_i f_k b'>, and a
    maximal nonsingular principal block of that Gram matrix is kept as the
    basis of V(mu).
    """
    lam = tuple(lam)
    if len(lam) != datum.rank:
        raise ValueError("rank mismatch")
    if any(x < 0 for x in lam):
        raise ValueError("highest weight must be dominant")
    return _build_irreducible(datum, lam, cap if cap is not None else dim_cap())


@lru_cache(maxsize=256)
def _build_irreducible(datum, lam, cap):
    r = datum.rank
    alphas = datum.simple_roots

    def plus(mu, i):
        return tuple(a + b for a, b in zip(mu, alphas[i]))

    # per weight: list of candidate descriptors for basis vectors, Gram matrix,
    # e-images (list over basis of list over i of coordinate vectors or None)
    basis = {lam: [None]}
    gram = {lam: [[Fraction(1)]]}
    e_loc = {lam: [[None] * r]}
    f_loc = {}          # (mu, i) -> list over basis of V(mu+alpha_i) of coords in V(mu)
    order = [lam]
    total = 1
    layer = [lam]
    while layer:
        nxt_weights = []
        seen = set()
        for mu0 in layer:
            for i in range(r):
                mu = tuple(a - b for a, b in zip(mu0, alphas[i]))
                if mu not in seen:
                    seen.add(mu)
                    nxt_weights.append(mu)
        new_layer = []
        for mu in sorted(nxt_weights, reverse=True):
            cands = []
            for i in range(r):
                up = plus(mu, i)
                if up in basis:
                    cands += [(i, k) for k in range(len(basis[up]))]
            if not cands:
                continue
            # e_j applied to each candidate, as coordinates in V(mu + alpha_j)
            images = []
            for (i, k) in cands:
                up = plus(mu, i)
                imgs = []
                for j in range(r):
                    tgt = plus(mu, j)
                    if tgt not in basis:
                        imgs.append(None)
                        continue
                    vec = [Fraction(0)] * len(basis[tgt])
                    ej_b = e_loc[up][k][j]
                    if ej_b is not None:
                        fmat = f_loc[(tgt, i)]
                        for m, c in enumerate(ej_b):
                            if c:
                                for t, x in enumerate(fmat[m]):
                                    if x:
                                        vec[t] += c * x
                    if i == j:
                        vec[k] += up[i]
                    imgs.append(vec if any(vec) else None)
                images.append(imgs)
            n = len(cands)
            g = [[Fraction(0)] * n for _ in range(n)]
            for a, (i, k) in enumerate(cands):
                gi = gram[plus(mu, i)][k]
                for b in range(n):
                    img = images[b][i]
                    if img is not None:
                        g[a][b] = sum((x * y for x, y in zip(gi, img) if x and y), Fraction(0))
            _, piv = rref(g, n)
            if not piv:
                continue
            total += len(piv)
            if total > cap:
                raise DimensionCapExceeded(f"module dimension exceeds cap {cap}")
            gpp = [[g[a][b] for b in piv] for a in piv]
            coords = []
            for c in range(n):
                x = solve(gpp, [g[a][c] for a in piv])
                coords.append(x)
            basis[mu] = [cands[p] for p in piv]
            gram[mu] = gpp
            e_loc[mu] = [images[p] for p in piv]
            for i in range(r):
                up = plus(mu, i)
                if up in basis:
                    f_loc[(mu, i)] = [None] * len(basis[up])
            for c, (i, k) in enumerate(cands):
                f_loc[(mu, i)][k] = coords[c]
            order.append(mu)
            new_layer.append(mu)
        layer = new_layer

    # global indexing
    offset = {}
    weights = []
    for mu in order:
        offset[mu] = len(weights)
        weights += [mu] * len(basis[mu])
    dim = len(weights)
    e = [[{} for _ in range(dim)] for _ in range(r)]
    f = [[{} for _ in range(dim)] for _ in range(r)]
    paths = [None] * dim
    for mu in order:
        for k, cand in enumerate(basis[mu]):
            g_idx = offset[mu] + k
            if cand is not None:
                i, pk = cand
                paths[g_idx] = (i, offset[plus(mu, i)] + pk)
            for j in range(r):
                img = e_loc[mu][k][j]
                if img is not None:
                    tgt = plus(mu, j)
                    e[j][g_idx] = {offset[tgt] + t: x for t, x in enumerate(img) if x}
        for i in range(r):
            up = plus(mu, i)
            if (mu, i) in f_loc:
                for k, col in enumerate(f_loc[(mu, i)]):
                    f[i][offset[up] + k] = {offset[mu] + t: x for t, x in enumerate(col) if x}
    return HighestWeightModule(datum, weights, e, f, highest=lam, paths=paths,
                               name="V(" + ",".join(map(str, lam)) + ")")


def trivial_module(datum):
    return build_irreducible(datum, datum.zero)


# -- independent multiplicity oracles -------------------------------------------

def weyl_dim(datum, lam):
    num = Fraction(1)
    for beta in datum.positive_roots:
        num *= Fraction(datum.pair(tuple(a + 1 for a in lam), beta), datum.pair(datum.rho, beta))
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=256)
def freudenthal_dominant(datum, lam):
    """Dominant-weight multiplicities of V(lam) by Freudenthal's recursion."""
    lam = tuple(lam)
    doms = datum.dominant_weights_below(lam)
    rho = datum.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = datum.inner(lr, lr)

    def height(mu):
        return sum(datum.to_root_coords(tuple(a - b for a, b in zip(lam, mu))))

    mult = {}

    def m(nu):
        d = datum.dominant_conjugate(nu)[0]
        return mult.get(d, 0) if d in doms else 0

    for mu in sorted(doms, key=height):
        if mu == lam:
            mult[mu] = 1
            continue
        acc = Fraction(0)
        for beta in datum.positive_roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, beta))
                if datum.dominant_conjugate(nu)[0] not in doms:
                    break
                acc += m(nu) * datum.inner(nu, beta)
                k += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        val = 2 * acc / (top - datum.inner(mr, mr))
        assert val.denominator == 1
        mult[mu] = int(val)
    return mult


def freudenthal(datum, lam, nu):
    dom = freudenthal_dominant(datum, tuple(lam))
    d = datum.dominant_conjugate(tuple(nu))[0]
    return dom.get(d, 0)


def freudenthal_character(datum, lam):
    out = {}
    for mu, c in freudenthal_dominant(datum, tuple(lam)).items():
        if c:
            for w in datum.weyl_orbit(mu):
                out[w] = c
    return out


@lru_cache(maxsize=16)
def _weyl_elements(datum):
    return datum.weyl_group_elements()


def weyl_character(datum, lam):
    """Character of V(lam) as the exact quotient A_{lam+rho} / A_rho."""
    r = datum.rank
    rho = datum.rho
    lr = tuple(a + b for a, b in zip(lam, rho))

    def alternant(x):
        terms = {}
        for mat, sign in _weyl_elements(datum):
            img = tuple(sum(mat[i][j] * x[j] for j in range(r)) for i in range(r))
            terms[img] = terms.get(img, 0) + sign
        return GroupAlgebraElement(terms, r)

    return alternant(lr) / alternant(rho)


# -- functorial constructions --------------------------------------------------------

def tensor(v, w):
    """V (x) W with basis index i * dim W + j."""
    datum = v.datum
    dw = w.dim
    weights = [tuple(a + b for a, b in zip(x, y)) for x in v.weights for y in w.weights]

    def leibniz(av, aw):
        out = []
        for i in range(v.dim):
            for j in range(dw):
                col = {}
                for k, c in av[i].items():
                    col[k * dw + j] = c
                for k, c in aw[j].items():
                    idx = i * dw + k
                    col[idx] = col.get(idx, 0) + c
                out.append({k: c for k, c in col.items() if c})
        return out

    e = [leibniz(v.e[i], w.e[i]) for i in range(datum.rank)]
    f = [leibniz(v.f[i], w.f[i]) for i in range(datum.rank)]
    smap = None
    sigma = None
    if v.sigma_map is not None and w.sigma_map is not None and v.sigma == w.sigma:
        sigma = v.sigma
        smap = []
        for i in range(v.dim):
            for j in range(dw):
                col = {}
                for a, x in v.sigma_map[i].items():
                    for b, y in w.sigma_map[j].items():
                        col[a * dw + b] = x * y
                smap.append(col)
    return HighestWeightModule(datum, weights, e, f, name=f"({v.name} x {w.name})",
                               sigma=sigma, sigma_map=smap)


def _transpose(op, n):
    out = [{} for _ in range(n)]
    for j, col in enumerate(op):
        for i, a in col.items():
            out[i][j] = a
    return out


def _block_inverse(module, op):
    """Inverse of an operator that maps weight spaces bijectively onto weight spaces."""
    n = module.dim
    out = [{} for _ in range(n)]
    done = set()
    for wt, idx in module.weight_index.items():
        if idx[0] in done:
            continue
        rows = sorted({i for j in idx for i in op[j]})
        if len(rows) != len(idx):
            raise ValueError("operator is not invertible on weight spaces")
        m = [[op[j].get(i, Fraction(0)) for j in idx] for i in rows]
        inv = inverse(m)
        # inv maps row-space coordinates back to idx coordinates
        for b, i in enumerate(rows):
            out[i] = {idx[a]: inv[a][b] for a in range(len(idx)) if inv[a][b]}
        done.update(idx)
    return out


def dual(v):
    """Dual module on the dual basis: X acts by -X^T."""
    n = v.dim
    weights = [tuple(-x for x in w) for w in v.weights]
    e = [op_scale(_transpose(v.e[i], n), -1) for i in range(v.datum.rank)]
    f = [op_scale(_transpose(v.f[i], n), -1) for i in range(v.datum.rank)]
    smap = None
    if v.sigma_map is not None:
        smap = _transpose(_block_inverse(v, v.sigma_map), n)
    highest = v.datum.star(v.highest) if v.highest is not None else None
    return HighestWeightModule(v.datum, weights, e, f, highest=highest,
                               name=f"{v.name}*", sigma=v.sigma if smap else None,
                               sigma_map=smap)


def _wedge_apply(op, subset, index):
    """Apply a derivation to v_{s1} ^ ... ^ v_{sk}; returns {wedge index: coeff}."""
    out = {}
    for pos, s in enumerate(subset):
        for t, c in op[s].items():
            if t in subset and t != s:
                continue
            new = list(subset)
            new[pos] = t
            sign = 1
            # sort with sign
            arr = new
            for a in range(len(arr)):
                for b in range(len(arr) - 1 - a):
                    if arr[b] > arr[b + 1]:
                        arr[b], arr[b + 1] = arr[b + 1], arr[b]
                        sign = -sign
            if len(set(arr)) < len(arr):
                continue
            key = index[tuple(arr)]
            v = out.get(key, 0) + sign * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _wedge_group(op, subset, index):
    """Apply a group-like operator g to v_{s1} ^ ... ^ v_{sk} (g v1 ^ ... ^ g vk)."""
    terms = {(): Fraction(1)}
    for s in subset:
        new = {}
        for seq, c in terms.items():
            for t, a in op[s].items():
                if t in seq:
                    continue
                key = seq + (t,)
                new[key] = new.get(key, 0) + c * a
        terms = new
    out = {}
    for seq, c in terms.items():
        arr = list(seq)
        sign = 1
        for a in range(len(arr)):
            for b in range(len(arr) - 1 - a):
                if arr[b] > arr[b + 1]:
                    arr[b], arr[b + 1] = arr[b + 1], arr[b]
                    sign = -sign
        key = index[tuple(arr)]
        v = out.get(key, 0) + sign * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def exterior_power(v, k):
    datum = v.datum
    subsets = list(combinations(range(v.dim), k))
    index = {s: n for n, s in enumerate(subsets)}
    zero = datum.zero
    weights = []
    for s in subsets:
        w = zero
        for t in s:
            w = tuple(a + b for a, b in zip(w, v.weights[t]))
        weights.append(w)
    e = [[_wedge_apply(v.e[i], s, index) for s in subsets] for i in range(datum.rank)]
    f = [[_wedge_apply(v.f[i], s, index) for s in subsets] for i in range(datum.rank)]
    smap = None
    if v.sigma_map is not None:
        smap = [_wedge_group(v.sigma_map, s, index) for s in subsets]
    assert len(subsets) == comb(v.dim, k)
    return HighestWeightModule(datum, weights, e, f, name=f"wedge{k}({v.name})",
                               sigma=v.sigma if smap is not None else None, sigma_map=smap)


def twist_module(v, sigma):
    """The sigma-twist: same space, basis sigma(v), e'_k = e_{sigma^-1(k)}."""
    inv = sigma.inverse_perm
    weights = [sigma.act(w) for w in v.weights]
    e = [v.e[inv[k]] for k in range(v.datum.rank)]
    f = [v.f[inv[k]] for k in range(v.datum.rank)]
    highest = sigma.act(v.highest) if v.highest is not None else None
    return HighestWeightModule(v.datum, weights, e, f, highest=highest, paths=v.paths,
                               name=f"sigma({v.name})")


def direct_sum(modules, name=None):
    datum = modules[0].datum
    weights, e, f = [], [[] for _ in range(datum.rank)], [[] for _ in range(datum.rank)]
    off = 0
    for m in modules:
        weights += m.weights
        for i in range(datum.rank):
            e[i] += [{a + off: c for a, c in col.items()} for col in m.e[i]]
            f[i] += [{a + off: c for a, c in col.items()} for col in m.f[i]]
        off += m.dim
    return HighestWeightModule(datum, weights, e, f,
                               name=name or "+".join(m.name for m in modules))


# -- sigma structures ------------------------------------------------------------------

def sigma_structure(v, sigma, target=None):
    """Intertwiner phi with phi e_i = e_{sigma(i)} phi, fixing the highest weight vector.

    If sigma fixes the highest weight the map is V -> V; otherwise it is
    V -> V(sigma(lam)), built (or taken from `target`) separately.
    """
    if v.paths is None or v.highest is None:
        raise ValueError("sigma_structure needs an irreducible module built from its highest weight")
    if isinstance(sigma, PinnedAutomorphism) and sigma.is_identity:
        return identity_op(v.dim)
    new_hw = sigma.act(v.highest)
    if target is None:
        target = v if new_hw == v.highest else build_irreducible(v.datum, new_hw)
    if target.highest != new_hw:
        raise ValueError("target module has the wrong highest weight")
    phi = [None] * v.dim
    phi[0] = {0: Fraction(1)}
    for k in range(1, v.dim):
        i, parent = v.paths[k]
        phi[k] = apply_op(target.f[sigma.perm[i]], phi[parent])
    if not check_intertwiner(v, target, sigma, phi):
        raise AssertionError("propagated map is not an intertwiner")
    return phi


def with_sigma_structure(v, sigma):
    return v.with_sigma(sigma, sigma_structure(v, sigma))


def sigma_hull(v, sigma):
    """The G x <sigma>-module generated by V.

    If sigma fixes the highest weight this is V with its normalized
    intertwiner. Otherwise it is V + sigma V + ... + sigma^{m-1} V with sigma
    cycling the summands, closed up by the normalized intertwiner for
    sigma^m, which does fix the highest weight.
    """
    if v.highest is None:
        raise ValueError("sigma_hull needs an irreducible module")
    m = 1
    while sigma.power(m).act(v.highest) != v.highest:
        m += 1
    if m == 1:
        return with_sigma_structure(v, sigma)
    parts = [v]
    for k in range(1, m):
        parts.append(twist_module(parts[-1], sigma))
    total = direct_sum(parts, name=f"hull({v.name})")
    n = v.dim
    closing = sigma_structure(v, sigma.power(m))
    smap = []
    for k in range(m):
        for j in range(n):
            if k < m - 1:
                smap.append({(k + 1) * n + j: Fraction(1)})
            else:
                smap.append(dict(closing[j]))
    hull = total.with_sigma(sigma, smap)
    if not check_intertwiner(hull, hull, sigma, smap):
        raise AssertionError("hull sigma map is not an intertwiner")
    return hull


def pinned_adjoint_action(datum, sigma):
    """Adjoint module with the action of the pinned automorphism itself.

    The normalized intertwiner fixes the highest root vector, while the
    pinned sigma permutes the Chevalley generators e_i. The two differ by a
    scalar c, found by locating the images of the e_i inside the abstract
    adjoint module: psi(e_i) = s_i x_i with s_j / s_i read off from
    e_j f_i x_i = a_ij (s_j / s_i) x_j.
    """
    theta = max(datum.positive_roots_rc, key=sum)
    adj = build_irreducible(datum, datum.from_root_coords(theta))
    phi = sigma_structure(adj, sigma)
    r = datum.rank
    x = [adj.basis_of(datum.simple_roots[i])[0] for i in range(r)]
    scale = {0: Fraction(1)}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j == i or datum.cartan[i][j] == 0 or j in scale:
                continue
            kappa = apply_op(adj.e[j], apply_op(adj.f[i], {x[i]: Fraction(1)})).get(x[j], Fraction(0))
            scale[j] = scale[i] * kappa / datum.cartan[i][j]
            stack.append(j)
    cs = set()
    for i in range(r):
        j = sigma.perm[i]
        ratio = phi[x[i]][x[j]]
        cs.add(scale[j] / (scale[i] * ratio))
    if len(cs) != 1:
        raise AssertionError("inconsistent pinned scalar")
    c = cs.pop()
    return adj, op_scale(phi, c), c


# -- counts attached to sigma ----------------------------------------------------------------

def r_V(v, sigma):
    co = coinvariants(sigma)
    return sum(m for w, m in v.character().items() if co.is_zero(w))


def zeta(v, sigma, orbit):
    """sum_{n >= 1} dim of the n * alpha weight space of V restricted to T^sigma."""
    co = coinvariants(sigma)
    alpha = orbit.roots[0]
    ca = co.class_of(alpha)
    free = [k for k, d in enumerate(_class_moduli(co)) if d == 0 and ca[k]]
    if not free:
        raise AssertionError("root with torsion coinvariant class")
    k0 = free[0]
    total = 0
    for w, m in v.character().items():
        cw = co.class_of(w)
        n, rem = divmod(cw[k0], ca[k0])
        if rem or n < 1:
            continue
        if co.is_zero(tuple(a - n * b for a, b in zip(w, alpha))):
            total += m
    return total


def _class_moduli(co):
    return [d for d in co.diag if d != 1]


def twisted_character(v, sigma=None):
    """sum over sigma-fixed weights mu of trace(sigma on V(mu)) e^mu."""
    if v.sigma_map is None:
        if v.highest is None or sigma is None:
            raise ValueError("sigma_map unavailable")
        v = sigma_hull(v, sigma)
    sigma = v.sigma
    terms = {}
    for w, idx in v.weight_index.items():
        if sigma.act(w) != w:
            continue
        tr = sum((v.sigma_map[k].get(k, Fraction(0)) for k in idx), Fraction(0))
        if tr:
            terms[w] = tr
    return GroupAlgebraElement(terms, v.datum.rank, "A")


# -- bundles -----------------------------------------------------------------------------------

def _op_triples(op):
    return [[i, j, frac_str(a)] for j, col in enumerate(op) for i, a in sorted(col.items())]


def _op_from_triples(triples, n):
    op = [{} for _ in range(n)]
    for i, j, a in triples:
        op[j][i] = Fraction(a)
    return op


def to_bundle(v):
    return {
        "group": v.datum.name,
        "name": v.name,
        "highest": list(v.highest) if v.highest is not None else None,
        "weights": [list(w) for w in v.weights],
        "e": [_op_triples(op) for op in v.e],
        "f": [_op_triples(op) for op in v.f],
        "paths": [list(p) if p else None for p in v.paths] if v.paths else None,
        "sigma": list(v.sigma.perm) if v.sigma is not None else None,
        "sigma_map": _op_triples(v.sigma_map) if v.sigma_map is not None else None,
    }


def from_bundle(data):
    from .rootdata import build_root_datum

    datum = build_root_datum(data["group"])
    n = len(data["weights"])
    paths = [tuple(p) if p else None for p in data["paths"]] if data.get("paths") else None
    sigma = PinnedAutomorphism(datum, data["sigma"]) if data.get("sigma") is not None else None
    smap = _op_from_triples(data["sigma_map"], n) if data.get("sigma_map") is not None else None
    return HighestWeightModule(datum, [tuple(w) for w in data["weights"]],
                               [_op_from_triples(t, n) for t in data["e"]],
                               [_op_from_triples(t, n) for t in data["f"]],
                               highest=data.get("highest"), paths=paths, name=data.get("name", ""),
                               sigma=sigma, sigma_map=smap)


def modules_equal(a, b):
    return (a.weights == b.weights and all(op_equal(x, y) for x, y in zip(a.e, b.e))
            and all(op_equal(x, y) for x, y in zip(a.f, b.f))
            and ((a.sigma_map is None and b.sigma_map is None)
                 or (a.sigma_map is not None and b.sigma_map is not None
                     and op_equal(a.sigma_map, b.sigma_map))))
