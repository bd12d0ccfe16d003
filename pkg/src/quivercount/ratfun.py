"""Exact rational functions in (q, T) with denominators that are products
of factors (1 - q^c * T).

Every generating function this library produces lives in this class: the
filtration sums, their T -> q^k T rescalings and (q, T) -> (1/q, 1/T)
inversions all stay inside it, so no multivariate gcd is ever needed.
Common factors are cancelled by exact division; equality is decided by
cross-multiplication, which is insensitive to any remaining common factor.
"""

from math import comb

from .polynomials import QPoly, QTPoly, divide_exact_by_t_factor, divides_t_factor


class RatQT:
    """num / prod_c (1 - q^c * T)^mult; num an integer Laurent polynomial."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if isinstance(num, int):
            num = QTPoly.const(num)
        if isinstance(num, QPoly):
            num = QTPoly.from_qpoly(num)
        self.num = num
        self.den = {int(c): int(m) for c, m in (den or {}).items() if m}
        if any(m < 0 for m in self.den.values()):
            raise ValueError("negative denominator multiplicity")
        if not self.num:
            self.den = {}
        elif reduce:
            self._reduce()

    def _reduce(self):
        for c in sorted(self.den):
            while self.den.get(c, 0) > 0 and divides_t_factor(self.num, c):
                self.num = divide_exact_by_t_factor(self.num, c)
                self.den[c] -= 1
            if self.den.get(c) == 0:
                del self.den[c]

    @classmethod
    def zero(cls):
        return cls(QTPoly())

    @classmethod
    def one(cls):
        return cls(QTPoly.const(1))

    @classmethod
    def geometric(cls, c):
        """1 / (1 - q^c * T)."""
        return cls(QTPoly.const(1), {c: 1})

    def den_poly(self):
        """Denominator expanded as a QTPoly."""
        out = QTPoly.const(1)
        for c, m in self.den.items():
            factor = QTPoly.const(1) - QTPoly.monomial(c, 1)
            out = out * factor ** m
        return out

    def den_t_degree(self):
        return sum(self.den.values())

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, QPoly, QTPoly)):
            other = RatQT(other)
        if not isinstance(other, RatQT):
            return NotImplemented
        return self.num * other.den_poly() == other.num * self.den_poly()

    def __hash__(self):
        raise TypeError("RatQT is not hashable")

    def __add__(self, other):
        if isinstance(other, (int, QPoly, QTPoly)):
            other = RatQT(other)
        den = {c: max(self.den.get(c, 0), other.den.get(c, 0))
               for c in set(self.den) | set(other.den)}
        a = self.num
        for c, m in den.items():
            extra = m - self.den.get(c, 0)
            if extra:
                a = a * (QTPoly.const(1) - QTPoly.monomial(c, 1)) ** extra
        b = other.num
        for c, m in den.items():
            extra = m - other.den.get(c, 0)
            if extra:
                b = b * (QTPoly.const(1) - QTPoly.monomial(c, 1)) ** extra
        return RatQT(a + b, den)

    __radd__ = __add__

    def __neg__(self):
        return RatQT(-self.num, dict(self.den), reduce=False)

    def __sub__(self, other):
        if isinstance(other, (int, QPoly, QTPoly)):
            other = RatQT(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, QPoly, QTPoly)):
            return RatQT(self.num * other, dict(self.den))
        den = {c: self.den.get(c, 0) + other.den.get(c, 0)
               for c in set(self.den) | set(other.den)}
        return RatQT(self.num * other.num, den)

    __rmul__ = __mul__

    def subs_t_scale(self, k):
        """Substitute T -> q^k * T (exact; factors shift by k)."""
        num = self.num.subs_t_scale(k)
        den = {c + k: m for c, m in self.den.items()}
        if any(c < 0 for c in den):
            raise ValueError("substitution would leave the factored class")
        return RatQT(num, den, reduce=False)

    def t_shift(self, j):
        """Multiply by T^j (j may be negative; numerator stays Laurent)."""
        return RatQT(self.num.shift(0, j), dict(self.den), reduce=False)

    def invert_vars(self):
        """Substitute (q, T) -> (1/q, 1/T), cleared back into the class.

        Each factor satisfies 1 - q^-c T^-1 = -q^-c T^-1 (1 - q^c T), so
        the substituted function equals
        (-1)^M q^(sum c*m) T^M num(1/q, 1/T) / prod (1 - q^c T)^m
        with M the total multiplicity.  Exact; no rational exponents appear.
        """
        m_total = self.den_t_degree()
        c_total = sum(c * m for c, m in self.den.items())
        num = self.num.invert_vars().shift(c_total, m_total)
        if m_total % 2:
            num = -num
        return RatQT(num, dict(self.den), reduce=False)

    def series_coefficient(self, d):
        """Coefficient of T^d in the power-series expansion at T = 0."""
        if d < 0:
            raise ValueError("d >= 0 required")
        if self.num and self.num.val_t() < 0:
            raise ValueError("numerator has a pole at T = 0")
        # Expand each 1/(1-q^c T)^m as sum_j C(m-1+j, j) q^(c j) T^j.
        series = {0: QPoly.const(1)}
        for c, m in self.den.items():
            factor = {j: QPoly.monomial(c * j, comb(m - 1 + j, j)) for j in range(d + 1)}
            series = _truncated_product(series, factor, d)
        num_slices = self.num.t_coefficients()
        out = QPoly()
        for j, p in num_slices.items():
            if j <= d and (d - j) in series:
                out = out + p * series[d - j]
        return out

    def series(self, order):
        """List of T-coefficients up to T^order inclusive."""
        return [self.series_coefficient(d) for d in range(order + 1)]

    def numerator_t_degree(self):
        return self.num.deg_t()

    def as_json(self):
        return {"num": self.num.as_dict(), "den": self.den_poly().as_dict()}

    def __str__(self):
        num = str(self.num)
        if not self.den:
            return num
        parts = []
        for c in sorted(self.den):
            m = self.den[c]
            if c == 0:
                base = "(1-T)"
            elif c == 1:
                base = "(1-q*T)"
            else:
                base = "(1-q^%d*T)" % c
            parts.append(base if m == 1 else "%s^%d" % (base, m))
        return "(%s) / %s" % (num, "*".join(parts))

    __repr__ = __str__


def _truncated_product(a, b, order):
    out = {}
    for i, p in a.items():
        for j, r in b.items():
            k = i + j
            if k > order:
                continue
            out[k] = out.get(k, QPoly()) + p * r
    return out
