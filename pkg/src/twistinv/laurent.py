"""The group algebra k[X] of a weight lattice: exact Laurent polynomials."""

from fractions import Fraction


class GroupAlgebraElement:
    """Finitely supported map exponent -> Fraction.

    `lattice` is a tag, "T" for the full character lattice or "A" for the
    sigma-fixed sublattice. Exponents are always stored in full
    fundamental-weight coordinates, so the tag only records where the element
    is known to live.
    """

    __slots__ = ("terms", "nvars", "lattice")

    def __init__(self, terms=None, nvars=None, lattice="T"):
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(exp)] = c
        if nvars is None:
            if not clean:
                raise ValueError("nvars needed for an empty element")
            nvars = len(next(iter(clean)))
        for exp in clean:
            if len(exp) != nvars:
                raise ValueError("exponent length mismatch")
        self.terms = clean
        self.nvars = nvars
        self.lattice = lattice

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars, lattice="T"):
        return cls({}, nvars, lattice)

    @classmethod
    def constant(cls, c, nvars, lattice="T"):
        return cls({(0,) * nvars: c}, nvars, lattice)

    @classmethod
    def monomial(cls, exp, c=1, lattice="T"):
        return cls({tuple(exp): c}, len(exp), lattice)

    # -- queries ------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0,) * self.nvars}

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def support(self):
        return sorted(self.terms)

    def leading(self):
        """Largest exponent in lex order with its coefficient."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    def trailing(self):
        exp = min(self.terms)
        return exp, self.terms[exp]

    def evaluate_at_one(self):
        return sum(self.terms.values(), Fraction(0))

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, GroupAlgebraElement):
            if other.nvars != self.nvars:
                raise ValueError("rank mismatch")
            return other
        return GroupAlgebraElement.constant(other, self.nvars, self.lattice)

    def _tag(self, other):
        return "A" if self.lattice == other.lattice == "A" else "T"

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return GroupAlgebraElement(out, self.nvars, self._tag(other))

    __radd__ = __add__

    def __neg__(self):
        return GroupAlgebraElement({e: -c for e, c in self.terms.items()}, self.nvars, self.lattice)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            c = Fraction(other)
            return GroupAlgebraElement({e: c * v for e, v in self.terms.items()},
                                       self.nvars, self.lattice)
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return GroupAlgebraElement(out, self.nvars, self._tag(other))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible")
            (e, c), = self.terms.items()
            return GroupAlgebraElement.monomial(tuple(x * n for x in e), c ** n, self.lattice)
        result = GroupAlgebraElement.constant(1, self.nvars, self.lattice)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self.terms == GroupAlgebraElement.constant(other, self.nvars).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_exponents(self, fn, lattice=None):
        out = {}
        for e, c in self.terms.items():
            e2 = tuple(fn(e))
            out[e2] = out.get(e2, 0) + c
        return GroupAlgebraElement(out, self.nvars, lattice or self.lattice)

    def shift(self, exp):
        return self.map_exponents(lambda e: tuple(a + b for a, b in zip(e, exp)))

    def divmod_exact(self, divisor):
        """Exact quotient by `divisor`, or None if it does not divide.

        Lex order is a total group order on Z^n, so long division by leading
        terms terminates once the leading exponent of the remainder drops
        below low(self) - low(divisor) + lead(divisor).
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero element")
        if self.is_zero():
            return GroupAlgebraElement.zero(self.nvars, self.lattice)
        dlead, dc = divisor.leading()
        dlow = divisor.trailing()[0]
        floor = tuple(a - b for a, b in zip(self.trailing()[0], dlow))
        quot = {}
        rem = dict(self.terms)
        while rem:
            rlead = max(rem)
            qexp = tuple(a - b for a, b in zip(rlead, dlead))
            if qexp < floor:
                return None
            qc = rem[rlead] / dc
            quot[qexp] = qc
            for e, c in divisor.terms.items():
                t = tuple(a + b for a, b in zip(qexp, e))
                v = rem.get(t, 0) - qc * c
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return GroupAlgebraElement(quot, self.nvars, self.lattice)

    def __truediv__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self * (1 / Fraction(other))
        q = self.divmod_exact(other)
        if q is None:
            raise ArithmeticError("inexact division in group algebra")
        return q

    # -- serialization --------------------------------------------------------
    def to_json(self):
        return [{"exp": list(e), "coeff": _frac_str(self.terms[e])} for e in sorted(self.terms)]

    @classmethod
    def from_json(cls, data, nvars, lattice="T"):
        return cls({tuple(t["exp"]): Fraction(t["coeff"]) for t in data}, nvars, lattice)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if any(e):
                mono = "e^(" + ",".join(map(str, e)) + ")"
                parts.append(mono if c == 1 else f"{c}*{mono}")
            else:
                parts.append(str(c))
        return " + ".join(parts)


def _frac_str(c):
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def frac_str(c):
    return _frac_str(c)


def mat_mul(a, b, nvars):
    """Product of two matrices with GroupAlgebraElement entries."""
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = GroupAlgebraElement.zero(nvars)
            for t in range(k):
                if a[i][t].terms and b[t][j].terms:
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_det(m, nvars):
    """Determinant by cofactor expansion along the first row (small sizes)."""
    n = len(m)
    if n == 0:
        return GroupAlgebraElement.constant(1, nvars)
    if n == 1:
        return m[0][0]
    total = GroupAlgebraElement.zero(nvars)
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * mat_det(minor, nvars)
        total = total + term if j % 2 == 0 else total - term
    return total
