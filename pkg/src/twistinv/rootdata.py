"""Root data of simply-connected semisimple groups and Weyl combinatorics.

Weights are integer tuples in the fundamental-weight basis, so coordinate i
of a weight is its pairing with the i-th simple coroot. The Cartan matrix
follows a_ij = <alpha_j, alpha_i^vee> with Bourbaki labels; column j of the
Cartan matrix is therefore the simple root alpha_j in weight coordinates.
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .laurent import GroupAlgebraElement
from .linalg import inverse

Weight = tuple

_FACTOR = re.compile(r"^([A-G])(\d+)$")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def simple_cartan(kind, n):
    """Cartan matrix of one simple factor, Bourbaki labeling."""
    if kind == "A":
        return _chain(n)
    if kind == "B":
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a
    if kind == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if kind == "D":
        a = _chain(n)
        # node n hangs off node n-2 instead of node n-1
        a[n - 1][n - 2] = a[n - 2][n - 1] = 0
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1
        return a
    if kind == "E":
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i, j in edges:
            a[i][j] = a[j][i] = -1
        return a
    if kind == "F":
        a = _chain(4)
        a[2][1] = -2
        return a
    if kind == "G":
        return [[2, -3], [-1, 2]]
    raise ValueError(f"unknown type {kind}")


def parse_group(spec):
    """Parse 'A2', 'D4', 'A1xA1xA1' into a tuple of (type, rank)."""
    if not isinstance(spec, str) or not spec.strip():
        raise ValueError("empty group spec")
    factors = []
    for token in spec.strip().split("x"):
        m = _FACTOR.match(token.strip())
        if not m:
            raise ValueError(f"malformed group factor {token!r}")
        kind, n = m.group(1), int(m.group(2))
        if kind in _EXCEPTIONAL:
            if n not in _EXCEPTIONAL[kind]:
                raise ValueError(f"rank out of range for type {kind}: {n}")
        elif n < _MIN_RANK[kind]:
            raise ValueError(f"rank out of range for type {kind}: {n}")
        factors.append((kind, n))
    return tuple(factors)


def positive_root_count(kind, n):
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(n), "F": 24, "G": 6}[kind]


def weyl_group_order(kind, n):
    return {"A": factorial(n + 1), "B": 2 ** n * factorial(n), "C": 2 ** n * factorial(n),
            "D": 2 ** (n - 1) * factorial(n),
            "E": {6: 51840, 7: 2903040, 8: 696729600}.get(n), "F": 1152, "G": 12}[kind]


def _symmetrizer(a):
    """Positive integers d_i with d_i a_ij = d_j a_ji, short roots get 1."""
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        comp = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if a[i][j] and j != i:
                    val = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                        comp.append(j)
                    elif d[j] != val:
                        raise ValueError("Cartan matrix is not symmetrizable")
        low = min(d[k] for k in comp)
        for k in comp:
            d[k] = d[k] / low
    if any(x.denominator != 1 for x in d):
        raise ValueError("Cartan matrix is not symmetrizable")
    return tuple(int(x) for x in d)


class RootDatum:
    """Root datum of a simply-connected semisimple group; immutable."""

    def __init__(self, factors):
        self.factors = tuple(factors)
        blocks = [simple_cartan(k, n) for k, n in self.factors]
        r = sum(len(b) for b in blocks)
        a = [[0] * r for _ in range(r)]
        off = 0
        for b in blocks:
            for i, row in enumerate(b):
                for j, v in enumerate(row):
                    a[off + i][off + j] = v
            off += len(b)
        self.rank = r
        self.cartan = tuple(tuple(row) for row in a)
        self._validate_cartan()
        self.symmetrizer = _symmetrizer(a)
        self.inv_cartan = tuple(tuple(row) for row in inverse(a))
        self.simple_roots = tuple(tuple(a[i][j] for i in range(r)) for j in range(r))
        self._build_roots()
        self.w0_word = self.dominant_conjugate(tuple(-1 for _ in range(r)))[1]

    def _validate_cartan(self):
        a = self.cartan
        for i in range(self.rank):
            if a[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(self.rank):
                if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                    raise ValueError("invalid off-diagonal Cartan entry")

    def __eq__(self, other):
        return isinstance(other, RootDatum) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return "RootDatum(" + "x".join(f"{k}{n}" for k, n in self.factors) + ")"

    @property
    def name(self):
        return "x".join(f"{k}{n}" for k, n in self.factors)

    # -- roots ----------------------------------------------------------------
    def _build_roots(self):
        r = self.rank
        simple_rc = [tuple(int(i == j) for i in range(r)) for j in range(r)]
        found = set(simple_rc)
        order = list(simple_rc)
        queue = list(simple_rc)
        while queue:
            beta = queue.pop(0)
            wt = self.from_root_coords(beta)
            for i in range(r):
                if beta == simple_rc[i]:
                    continue
                gamma = list(beta)
                gamma[i] -= wt[i]
                gamma = tuple(gamma)
                if min(gamma) >= 0 and gamma not in found:
                    found.add(gamma)
                    order.append(gamma)
                    queue.append(gamma)
        order.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
        self.positive_roots_rc = tuple(order)
        self.positive_roots = tuple(self.from_root_coords(c) for c in order)
        self.roots = self.positive_roots + tuple(tuple(-x for x in b) for b in self.positive_roots)
        coroots = {}
        for c, wt in zip(order, self.positive_roots):
            norm2 = sum(cj * dj * bj for cj, dj, bj in zip(c, self.symmetrizer, wt))
            half = Fraction(norm2, 2)
            kappa = tuple(Fraction(cj * dj) / half for cj, dj in zip(c, self.symmetrizer))
            if any(k.denominator != 1 for k in kappa):
                raise AssertionError("non-integral coroot")
            kappa = tuple(int(k) for k in kappa)
            coroots[wt] = kappa
            coroots[tuple(-x for x in wt)] = tuple(-k for k in kappa)
        self._coroots = coroots
        expected = sum(positive_root_count(k, n) for k, n in self.factors)
        if len(self.positive_roots) != expected:
            raise AssertionError("positive root enumeration is incomplete")

    def is_root(self, wt):
        return tuple(wt) in self._coroots

    def coroot(self, root):
        """Coroot of `root` in simple-coroot coordinates."""
        return self._coroots[tuple(root)]

    def pair(self, weight, root):
        """<weight, root^vee>."""
        return sum(k * x for k, x in zip(self._coroots[tuple(root)], weight))

    def to_root_coords(self, wt):
        """Coordinates in the simple-root basis (Fractions)."""
        return tuple(sum((c * x for c, x in zip(row, wt)), Fraction(0)) for row in self.inv_cartan)

    def from_root_coords(self, c):
        return tuple(sum(self.cartan[i][j] * c[j] for j in range(self.rank)) for i in range(self.rank))

    def is_positive_root(self, wt):
        return tuple(wt) in set(self.positive_roots)

    def inner(self, lam, mu):
        """The W-invariant form, normalized so short roots have length 2."""
        total = Fraction(0)
        for i in range(self.rank):
            for j in range(self.rank):
                if lam[i] and mu[j]:
                    total += lam[i] * mu[j] * self.symmetrizer[i] * self.inv_cartan[i][j]
        return total

    @property
    def rho(self):
        return (1,) * self.rank

    @property
    def zero(self):
        return (0,) * self.rank

    # -- Weyl group -------------------------------------------------------------
    def weyl_order(self):
        out = 1
        for k, n in self.factors:
            out *= weyl_group_order(k, n)
        return out

    def simple_reflection(self, lam, i):
        c = lam[i]
        if not c:
            return tuple(lam)
        alpha = self.simple_roots[i]
        return tuple(x - c * a for x, a in zip(lam, alpha))

    def reflect(self, lam, root):
        c = self.pair(lam, root)
        return tuple(x - c * a for x, a in zip(lam, root))

    def apply_word(self, word, lam):
        """Apply s_{w[0]} s_{w[1]} ... s_{w[-1]}; the rightmost acts first."""
        lam = tuple(lam)
        for i in reversed(word):
            lam = self.simple_reflection(lam, i)
        return lam

    def weyl_orbit(self, lam):
        lam = tuple(lam)
        seen = {lam}
        stack = [lam]
        while stack:
            mu = stack.pop()
            for i in range(self.rank):
                nu = self.simple_reflection(mu, i)
                if nu not in seen:
                    seen.add(nu)
                    stack.append(nu)
        return seen

    def dominant_conjugate(self, lam):
        """(dominant weight, word w) with apply_word(w, lam) dominant."""
        lam = tuple(lam)
        steps = []
        while True:
            i = next((k for k, x in enumerate(lam) if x < 0), None)
            if i is None:
                return lam, list(reversed(steps))
            lam = self.simple_reflection(lam, i)
            steps.append(i)

    def w0(self, lam):
        return self.apply_word(self.w0_word, lam)

    def star(self, lam):
        return tuple(-x for x in self.w0(lam))

    def weyl_group_elements(self):
        """All elements as (integer matrix on weight coordinates, sign)."""
        r = self.rank
        ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        elems = {self.rho: (ident, 1)}
        frontier = [self.rho]
        while frontier:
            nxt = []
            for key in frontier:
                mat, sign = elems[key]
                for i in range(r):
                    image = self.simple_reflection(key, i)
                    if image in elems:
                        continue
                    alpha = self.simple_roots[i]
                    # s_i o mat: subtract (row i of mat) times alpha
                    new = tuple(tuple(mat[k][j] - alpha[k] * mat[i][j] for j in range(r))
                                for k in range(r))
                    elems[image] = (new, -sign)
                    nxt.append(image)
            frontier = nxt
        return list(elems.values())

    # -- orders -----------------------------------------------------------------
    def dominance_leq(self, lam1, lam2):
        if len(lam1) != self.rank or len(lam2) != self.rank:
            raise ValueError("rank mismatch")
        diff = tuple(b - a for a, b in zip(lam1, lam2))
        c = self.to_root_coords(diff)
        return all(x.denominator == 1 and x >= 0 for x in c)

    def componentwise_leq(self, lam1, lam2):
        if len(lam1) != len(lam2):
            raise ValueError("rank mismatch")
        return all(a <= b for a, b in zip(lam1, lam2))

    def is_dominant(self, lam):
        return all(x >= 0 for x in lam)

    def dominant_weights_below(self, lam):
        """Dominant weights mu with mu <= lam in the dominance order.

        Walks down by positive roots through dominant weights only; covering
        relations among dominant weights are positive roots, so this reaches
        every such mu.
        """
        lam = tuple(lam)
        seen = {lam}
        stack = [lam]
        while stack:
            mu = stack.pop()
            for beta in self.positive_roots:
                nu = tuple(a - b for a, b in zip(mu, beta))
                if nu not in seen and all(x >= 0 for x in nu):
                    seen.add(nu)
                    stack.append(nu)
        return seen

    # -- group algebra helpers -----------------------------------------------
    def monomial(self, lam, c=1):
        return GroupAlgebraElement.monomial(tuple(lam), c)

    def zero_element(self):
        return GroupAlgebraElement.zero(self.rank)

    def one(self):
        return GroupAlgebraElement.constant(1, self.rank)


@lru_cache(maxsize=None)
def build_root_datum(spec):
    """Build (and memoize) the root datum for a group spec string or factor tuple."""
    factors = parse_group(spec) if isinstance(spec, str) else tuple(spec)
    return RootDatum(factors)


def dominance_leq(datum, lam1, lam2):
    return datum.dominance_leq(lam1, lam2)


def componentwise_leq(lam1, lam2):
    if len(lam1) != len(lam2):
        raise ValueError("rank mismatch")
    return all(a <= b for a, b in zip(lam1, lam2))


def weyl_orbit(datum, lam):
    return datum.weyl_orbit(lam)


def dominant_conjugate(datum, lam):
    return datum.dominant_conjugate(lam)


def star(datum, lam):
    return datum.star(lam)
