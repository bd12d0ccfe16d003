"""Exact integer polynomial arithmetic.

Two coefficient-map classes: QPoly, a Laurent polynomial in a single
variable q, and QTPoly, a (Laurent) polynomial in two variables.  All
coefficients are Python ints, so nothing ever overflows or rounds.
"""

from fractions import Fraction


def _strip(coeffs):
    return {e: c for e, c in coeffs.items() if c != 0}


class QPoly:
    """Integer Laurent polynomial in q, stored as {exponent: coefficient}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = _strip(dict(coeffs or {}))

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def q(cls):
        return cls({1: 1})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls({exp: c})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def degree(self):
        """Largest exponent; None for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else None

    def valuation(self):
        return min(self.coeffs) if self.coeffs else None

    def leading_coefficient(self):
        return self.coeffs[self.degree()] if self.coeffs else 0

    def is_monic(self):
        return self.leading_coefficient() == 1

    def constant_term(self):
        return self.coeffs.get(0, 0)

    def __call__(self, q):
        """Evaluate at an integer; exact (Fraction only if Laurent)."""
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += Fraction(c) * Fraction(q) ** e
        if total.denominator == 1:
            return int(total)
        return total

    def as_dict(self):
        return {str(e): c for e, c in sorted(self.coeffs.items(), reverse=True)}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = "q" if e == 1 else "q^%d" % e
                body = var if a == 1 else "%d*%s" % (a, var)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append("%s %s" % (sign, body))
        return " ".join(parts)

    __repr__ = __str__


class QTPoly:
    """Integer Laurent polynomial in two variables, default (q, T).

    Stored as {(q_exp, t_exp): coefficient}; exponents may be negative,
    which the rational-function substitutions need.
    """

    __slots__ = ("coeffs", "vars")

    def __init__(self, coeffs=None, vars=("q", "T")):
        self.coeffs = _strip(dict(coeffs or {}))
        self.vars = vars

    @classmethod
    def const(cls, c, vars=("q", "T")):
        return cls({(0, 0): c}, vars)

    @classmethod
    def monomial(cls, i, j, c=1, vars=("q", "T")):
        return cls({(i, j): c}, vars)

    @classmethod
    def from_qpoly(cls, p, t_exp=0, vars=("q", "T")):
        return cls({(e, t_exp): c for e, c in p.coeffs.items()}, vars)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other, self.vars)
        return isinstance(other, QTPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other, self.vars)
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QTPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return QTPoly({e: -c for e, c in self.coeffs.items()}, self.vars)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QTPoly({e: c * other for e, c in self.coeffs.items()}, self.vars)
        if isinstance(other, QPoly):
            other = QTPoly.from_qpoly(other, vars=self.vars)
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return QTPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QTPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def deg_t(self):
        return max(j for _, j in self.coeffs) if self.coeffs else None

    def val_t(self):
        return min(j for _, j in self.coeffs) if self.coeffs else None

    def deg_q(self):
        return max(i for i, _ in self.coeffs) if self.coeffs else None

    def val_q(self):
        return min(i for i, _ in self.coeffs) if self.coeffs else None

    def t_coefficient(self, j):
        """Coefficient of T^j as a QPoly in q."""
        return QPoly({i: c for (i, jj), c in self.coeffs.items() if jj == j})

    def t_coefficients(self):
        """Map t_exp -> QPoly, covering all nonzero T-slices."""
        out = {}
        for (i, j), c in self.coeffs.items():
            out.setdefault(j, {})[i] = c
        return {j: QPoly(d) for j, d in out.items()}

    def subs_t_scale(self, k):
        """Substitute T -> q^k * T."""
        return QTPoly({(i + k * j, j): c for (i, j), c in self.coeffs.items()}, self.vars)

    def invert_vars(self):
        """Substitute (q, T) -> (1/q, 1/T); stays Laurent."""
        return QTPoly({(-i, -j): c for (i, j), c in self.coeffs.items()}, self.vars)

    def shift(self, dq, dt):
        return QTPoly({(i + dq, j + dt): c for (i, j), c in self.coeffs.items()}, self.vars)

    def evaluate(self, x, y):
        """Evaluate with x, y ints or QPoly; exponents must be >= 0."""
        total = QPoly()
        for (i, j), c in self.coeffs.items():
            if i < 0 or j < 0:
                raise ValueError("cannot evaluate a Laurent polynomial here")
            xv = x if isinstance(x, QPoly) else QPoly.const(x)
            yv = y if isinstance(y, QPoly) else QPoly.const(y)
            total = total + (xv ** i) * (yv ** j) * c
        return total

    def content(self):
        from math import gcd
        g = 0
        for c in self.coeffs.values():
            g = gcd(g, abs(c))
        return g

    def as_dict(self):
        return {"%d,%d" % e: c for e, c in sorted(self.coeffs.items(), reverse=True)}

    def _sorted_keys(self):
        if self.vars == ("q", "T"):
            return sorted(self.coeffs, key=lambda e: (e[1], e[0]), reverse=True)
        return sorted(self.coeffs, reverse=True)

    def __str__(self):
        if not self.coeffs:
            return "0"
        v1, v2 = self.vars
        parts = []
        for (i, j) in self._sorted_keys():
            c = self.coeffs[(i, j)]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            factors = []
            if a != 1 or (i == 0 and j == 0):
                factors.append(str(a))
            if i != 0:
                factors.append(v1 if i == 1 else "%s^%d" % (v1, i))
            if j != 0:
                factors.append(v2 if j == 1 else "%s^%d" % (v2, j))
            body = "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append("%s %s" % (sign, body))
        return " ".join(parts)

    __repr__ = __str__


def divide_exact_by_t_factor(p, c):
    """Exact division of p by (1 - q^c * T); raises ValueError if inexact.

    Works on Laurent input by clearing the minimal T-exponent first.
    """
    if not p:
        return QTPoly(vars=p.vars)
    vt = p.val_t()
    work = p.shift(0, -vt) if vt else p
    slices = work.t_coefficients()
    top = max(slices)
    qc = QPoly.monomial(c)
    out = {}
    prev = QPoly()
    for j in range(0, top):
        hj = slices.get(j, QPoly()) + qc * prev
        if hj:
            out[j] = hj
        prev = hj
    if slices.get(top, QPoly()) + qc * prev != QPoly():
        raise ValueError("division by (1 - q^%d*T) is not exact" % c)
    quot = {}
    for j, poly in out.items():
        for i, cc in poly.coeffs.items():
            quot[(i, j + (vt or 0))] = cc
    return QTPoly(quot, p.vars)


def divides_t_factor(p, c):
    try:
        divide_exact_by_t_factor(p, c)
        return True
    except ValueError:
        return False
