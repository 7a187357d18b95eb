"""Pinned automorphisms, sigma-orbits of roots, folding and the coinvariant lattice."""

import re
from dataclasses import dataclass
from functools import lru_cache

from .linalg import smith_normal_form

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, rank):
    """'(1 3)(2 4)' with 1-based node labels -> 0-based image tuple."""
    text = (text or "").strip()
    perm = list(range(rank))
    if text in ("", "()", "id", "1"):
        return tuple(perm)
    if _CYCLE.sub("", text).strip():
        raise ValueError(f"malformed cycle notation {text!r}")
    touched = set()
    for body in _CYCLE.findall(text):
        items = body.replace(",", " ").split()
        try:
            nodes = [int(x) - 1 for x in items]
        except ValueError:
            raise ValueError(f"malformed cycle {body!r}") from None
        for k in nodes:
            if not 0 <= k < rank:
                raise ValueError(f"node {k + 1} out of range 1..{rank}")
            if k in touched:
                raise ValueError(f"node {k + 1} appears twice")
            touched.add(k)
        for a, b in zip(nodes, nodes[1:] + nodes[:1]):
            perm[a] = b
    return tuple(perm)


def format_cycles(perm):
    seen, parts = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            seen.add(i)
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = perm[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


class PinnedAutomorphism:
    """A Dynkin diagram automorphism; perm[i] is the image of node i."""

    def __init__(self, datum, perm):
        self.datum = datum
        self.perm = tuple(perm)
        n = datum.rank
        if sorted(self.perm) != list(range(n)):
            raise ValueError("sigma is not a permutation of the nodes")
        a = datum.cartan
        for i in range(n):
            for j in range(n):
                if a[self.perm[i]][self.perm[j]] != a[i][j]:
                    raise ValueError("permutation is not compatible with the Cartan matrix")
        order, p = 1, self.perm
        while p != tuple(range(n)):
            p = tuple(self.perm[x] for x in p)
            order += 1
        self.order = order
        self.inverse_perm = tuple(self.perm.index(i) for i in range(n))

    def __eq__(self, other):
        return isinstance(other, PinnedAutomorphism) and (self.datum, self.perm) == (other.datum, other.perm)

    def __hash__(self):
        return hash((self.datum, self.perm))

    def __repr__(self):
        return f"PinnedAutomorphism({self.datum.name}, {format_cycles(self.perm)})"

    @property
    def is_identity(self):
        return self.order == 1

    def act(self, lam):
        """sigma(omega_i) = omega_{sigma(i)}."""
        out = [0] * len(lam)
        for i, x in enumerate(lam):
            out[self.perm[i]] = x
        return tuple(out)

    def act_inverse(self, lam):
        return tuple(lam[self.perm[i]] for i in range(len(lam)))

    def power(self, k):
        p = tuple(range(len(self.perm)))
        for _ in range(k % self.order):
            p = tuple(self.perm[x] for x in p)
        return PinnedAutomorphism(self.datum, p)

    def compose(self, other):
        """self o other."""
        return PinnedAutomorphism(self.datum, tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))

    def is_fixed(self, lam):
        return self.act(lam) == tuple(lam)

    def node_orbits(self):
        seen, orbits = set(), []
        for i in range(len(self.perm)):
            if i in seen:
                continue
            orb, j = [], i
            while j not in seen:
                seen.add(j)
                orb.append(j)
                j = self.perm[j]
            orbits.append(tuple(sorted(orb)))
        return orbits

    def fixed_lattice_basis(self):
        """omega_O = sum of omega_i over each node orbit; a Z-basis of X^sigma."""
        basis = []
        for orb in self.node_orbits():
            basis.append(tuple(int(i in orb) for i in range(len(self.perm))))
        return basis


def validate_automorphism(datum, perm):
    if isinstance(perm, str):
        perm = parse_cycles(perm, datum.rank)
    return PinnedAutomorphism(datum, perm)


@dataclass(frozen=True)
class SigmaOrbit:
    roots: tuple
    orbit_type: str          # "A", "BCminus" or "BCplus"
    alpha_O: tuple
    divisor_sign: int
    partner: tuple = None    # roots of the paired orbit for types BC

    def representative(self):
        return self.roots[0]


@lru_cache(maxsize=None)
def sigma_orbits(sigma):
    """All sigma-orbits of roots with their type A / BC- / BC+."""
    datum = sigma.datum
    pending = list(datum.roots)
    seen = set()
    raw = []
    for beta in pending:
        if beta in seen:
            continue
        orb, g = [], beta
        while g not in seen:
            seen.add(g)
            orb.append(g)
            g = sigma.act(g)
        raw.append(tuple(sorted(orb, reverse=True)))
    by_alpha = {}
    for orb in raw:
        alpha = tuple(map(sum, zip(*orb)))
        by_alpha.setdefault(alpha, []).append(orb)
    out = []
    for orb in raw:
        alpha = tuple(map(sum, zip(*orb)))
        group = by_alpha[alpha]
        if len(group) == 1:
            out.append(SigmaOrbit(orb, "A", alpha, 1))
            continue
        if len(group) != 2:
            raise AssertionError("more than two orbits share alpha_O")
        other = group[0] if group[1] == orb else group[1]
        if len(orb) == 2 * len(other):
            out.append(SigmaOrbit(orb, "BCminus", alpha, 1, other))
        elif 2 * len(orb) == len(other):
            out.append(SigmaOrbit(orb, "BCplus", alpha, -1, other))
        else:
            raise AssertionError("paired orbits do not have sizes in ratio 2:1")
    return tuple(out)


def orbit_of_root(sigma, root):
    root = tuple(root)
    for orb in sigma_orbits(sigma):
        if root in orb.roots:
            return orb
    raise KeyError(root)


def positive_orbits(sigma):
    pos = set(sigma.datum.positive_roots)
    return tuple(o for o in sigma_orbits(sigma) if o.roots[0] in pos)


@dataclass(frozen=True)
class FoldedDatum:
    sigma: PinnedAutomorphism
    simple_folded_roots: tuple      # SigmaOrbit per node orbit
    node_orbits: tuple
    cartan: tuple
    folded_type: str
    w0_generators: tuple            # Weyl words in the simple reflections of G


def _classify_component(a, nodes, bc_flags):
    n = len(nodes)
    sub = [[a[i][j] for j in nodes] for i in nodes]
    if n == 1:
        return "B1" if bc_flags[nodes[0]] else "A1"
    degree = [sum(1 for j in range(n) if j != i and sub[i][j]) for i in range(n)]
    prods = {(i, j): sub[i][j] * sub[j][i] for i in range(n) for j in range(i + 1, n) if sub[i][j]}
    if any(p == 3 for p in prods.values()):
        return "G2"
    doubles = [(i, j) for (i, j), p in prods.items() if p == 2]
    if doubles:
        i, j = doubles[0]
        short, long_ = (i, j) if sub[i][j] == -2 else (j, i)
        if n == 2:
            return "B2"

        def side(start, blocked):
            seen, stack = {start}, [start]
            while stack:
                x = stack.pop()
                for y in range(n):
                    if y != x and sub[x][y] and y not in seen and y != blocked:
                        seen.add(y)
                        stack.append(y)
            return len(seen)

        s, l = side(short, long_), side(long_, short)
        if s == 2 and l == 2:
            return "F4"
        if s == 1:
            return f"B{n}"
        if l == 1:
            return f"C{n}"
        raise AssertionError("unrecognized doubly laced diagram")
    branch = [i for i in range(n) if degree[i] == 3]
    if not branch:
        return f"A{n}"
    b = branch[0]
    arms = []
    for start in (j for j in range(n) if j != b and sub[b][j]):
        length, prev, cur = 1, b, start
        while True:
            nxt = [y for y in range(n) if y not in (cur, prev) and sub[cur][y]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return f"E{n}"
    raise AssertionError("unrecognized simply laced diagram")


def _components(a, nodes):
    left, comps = set(nodes), []
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in nodes:
                if y not in comp and a[x][y]:
                    comp.add(y)
                    stack.append(y)
        left -= comp
        comps.append(sorted(comp))
    return comps


@lru_cache(maxsize=None)
def fold(sigma):
    datum = sigma.datum
    orbits = sigma_orbits(sigma)
    node_orbits = sigma.node_orbits()
    simple = []
    for no in node_orbits:
        root = datum.simple_roots[no[0]]
        simple.append(next(o for o in orbits if root in o.roots))
    cartan = []
    for o in simple:
        reps = o.roots if o.orbit_type == "A" else o.partner
        row = []
        for o2 in simple:
            vals = {datum.pair(o2.alpha_O, g) for g in reps}
            if len(vals) != 1:
                raise AssertionError("folded Cartan entry depends on the representative")
            row.append(vals.pop())
        cartan.append(tuple(row))
    bc = [o.orbit_type != "A" for o in simple]
    comps = _components(cartan, list(range(len(simple))))
    names = [_classify_component(cartan, c, bc) for c in comps]
    gens = []
    for o, no in zip(simple, node_orbits):
        if o.orbit_type == "A":
            gens.append(tuple(no))
        else:
            word = []
            for beta in o.partner:
                rc = datum.to_root_coords(beta)
                i, j = [k for k, c in enumerate(rc) if c]
                word += [i, j, i]
            gens.append(tuple(word))
    return FoldedDatum(sigma, tuple(simple), tuple(node_orbits), tuple(cartan),
                       "x".join(names), tuple(gens))


def w0_generators(folded):
    return list(folded.w0_generators)


def word_matrix(datum, word):
    cols = [datum.apply_word(word, tuple(int(i == j) for i in range(datum.rank)))
            for j in range(datum.rank)]
    return tuple(tuple(cols[j][i] for j in range(datum.rank)) for i in range(datum.rank))


def generated_group_order(datum, words, limit=10 ** 6):
    r = datum.rank
    gens = [word_matrix(datum, w) for w in words]
    ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = tuple(tuple(sum(g[i][k] * m[k][j] for k in range(r)) for j in range(r))
                          for i in range(r))
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
                    if len(seen) > limit:
                        raise RuntimeError("group too large to enumerate")
        frontier = nxt
    return len(seen)


class Coinvariants:
    """X / (sigma - 1) X via the Smith normal form of sigma - 1."""

    def __init__(self, sigma):
        self.sigma = sigma
        r = sigma.datum.rank
        m = [[0] * r for _ in range(r)]
        for i in range(r):
            m[sigma.perm[i]][i] += 1
            m[i][i] -= 1
        self.matrix = m
        d, u, _ = smith_normal_form(m)
        self.diag = [d[i][i] for i in range(r)]
        self.u = u

    def class_of(self, mu):
        out = []
        for k, row in enumerate(self.u):
            y = sum(a * b for a, b in zip(row, mu))
            dk = self.diag[k]
            if dk == 1:
                continue
            out.append(y % dk if dk else y)
        return tuple(out)

    def is_zero(self, mu):
        return not any(self.class_of(mu))

    @property
    def torsion(self):
        return [d for d in self.diag if d > 1]

    @property
    def free_rank(self):
        return sum(1 for d in self.diag if d == 0)


@lru_cache(maxsize=None)
def coinvariants(sigma):
    return Coinvariants(sigma)


def coinvariant_class(mu, sigma):
    return coinvariants(sigma).class_of(tuple(mu))


def in_image(mu, sigma):
    return coinvariants(sigma).is_zero(tuple(mu))
