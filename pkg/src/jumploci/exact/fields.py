"""Exact coefficient fields: the rationals and prime fields F_p.

Every computation in the engine runs over one of these two fields; there is
no floating point anywhere.  Field objects are tiny stateless drivers so that
polynomials and matrices can be generic over the coefficient field.
"""

from fractions import Fraction


class RationalField:
    """The field Q, with elements represented as fractions.Fraction."""

    name = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError("cannot coerce %r into QQ" % (x,))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def pow(self, a, e):
        if e >= 0:
            return a ** e
        return self.inv(a) ** (-e)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for a prime p; elements are ints in [0, p)."""

    def __init__(self, p):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        self.p = p
        self.name = "GF(%d)" % p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            num = x.numerator % self.p
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator of %s vanishes mod %d" % (x, self.p))
            return num * pow(den, -1, self.p) % self.p
        raise TypeError("cannot coerce %r into %s" % (x, self.name))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in %s" % self.name)
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    # deterministic Miller-Rabin, valid far beyond the sizes used here
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_for_root_of_unity(order, lower_bound=10 ** 6):
    """Smallest prime p > lower_bound with p = 1 (mod order).

    F_p then contains exact primitive roots of unity of the given order.
    """
    if order < 1:
        raise ValueError("order must be positive")
    p = lower_bound + 1
    r = p % order
    if r != 1:
        p += (1 - r) % order
    while not is_prime(p):
        p += order
    return p


def primitive_root_of_unity(field, order):
    """An element of exact multiplicative order `order` in F_p."""
    p = field.p
    if (p - 1) % order != 0:
        raise ValueError("no root of unity of order %d in %s" % (order, field.name))
    e = (p - 1) // order
    g = 2
    while True:
        z = pow(g, e, p)
        if z != 1 and all(pow(z, order // q, p) != 1 for q in _prime_factors(order)):
            return z
        g += 1


def _prime_factors(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out
