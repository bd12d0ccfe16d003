"""Exact arithmetic in Z[zeta_m], reduced modulo the m-th cyclotomic
polynomial.  Only what the character-weighted orbit counts need: root
powers, integer linear combinations, and the rational-integer test.
No floating point anywhere.
"""

from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients (ascending) of Phi_m, by exact division of x^m - 1
    by the product of Phi_d over proper divisors d."""
    if m < 1:
        raise ValueError("m >= 1 required")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d:
            continue
        num = _poly_div_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_div_exact(num, den):
    num = num[:]
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        coef = num[len(den) - 1 + i]
        if coef % den[-1]:
            raise ArithmeticError("inexact polynomial division")
        coef //= den[-1]
        quot[i] = coef
        for j, dc in enumerate(den):
            num[i + j] -= coef * dc
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def _power_table(m):
    """x^j mod Phi_m for j = 0..m-1, as coefficient tuples."""
    phi = list(cyclotomic_polynomial(m))
    deg = len(phi) - 1
    table = []
    current = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(m):
        table.append(tuple(current))
        nxt = [0] + current[:]
        if len(nxt) > deg:
            lead = nxt.pop()
            if lead:
                nxt = [a - lead * b for a, b in zip(nxt, phi[:deg])]
        current = nxt + [0] * (deg - len(nxt))
    return tuple(table)


class CycInt:
    """An element of Z[x]/(Phi_m): integer coordinates on 1, x, ..,
    x^(deg Phi_m - 1)."""

    __slots__ = ("m", "coords")

    def __init__(self, m, coords=None):
        self.m = m
        deg = len(cyclotomic_polynomial(m)) - 1
        coords = tuple(coords or ())
        if len(coords) < deg:
            coords = coords + (0,) * (deg - len(coords))
        if len(coords) != deg:
            raise ValueError("expected %d coordinates" % deg)
        self.coords = coords

    @classmethod
    def zero(cls, m):
        return cls(m)

    @classmethod
    def root_power(cls, m, e):
        """zeta_m^e reduced mod Phi_m."""
        return cls(m, _power_table(m)[e % m])

    def __add__(self, other):
        if self.m != other.m:
            raise ValueError("mixed cyclotomic orders")
        return CycInt(self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CycInt(self.m, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, k):
        return CycInt(self.m, tuple(k * a for a in self.coords))

    def __eq__(self, other):
        return isinstance(other, CycInt) and self.m == other.m and self.coords == other.coords

    def __hash__(self):
        return hash((self.m, self.coords))

    def is_rational_integer(self):
        return all(c == 0 for c in self.coords[1:])

    def as_integer(self):
        if not self.is_rational_integer():
            raise ArithmeticError("value %r is not a rational integer" % (self.coords,))
        return self.coords[0] if self.coords else 0

    def __repr__(self):
        return "CycInt(m=%d, %r)" % (self.m, self.coords)
