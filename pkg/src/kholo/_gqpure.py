"""Pure-Python coefficient kernel.

Twin of the compiled kernel in ``_gqkernel.pyx``; ``kholo._coeff`` selects
whichever is importable.  The two implementations must stay behaviourally
identical: same canonical representation, same hashes, same errors.

A Gaussian rational a + b*i is stored as four integers (an, ad, bn, bd) with
a = an/ad, b = bn/bd, ad > 0, bd > 0 and both fractions reduced.
"""

from fractions import Fraction
from math import gcd

from kholo.errors import DivisionByZero

BACKEND_NAME = "python"


def _norm(n, d):
    # reduce n/d with d > 0
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return n, d


def _ratio(value):
    if isinstance(value, int):
        return value, 1
    if isinstance(value, Fraction):
        return value.numerator, value.denominator
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class GaussianRational:
    """Exact element a + b*i of Q(i); immutable, canonical, hashable."""

    __slots__ = ("an", "ad", "bn", "bd")

    def __init__(self, re=0, im=0):
        an, ad = _ratio(re)
        bn, bd = _ratio(im)
        self.an, self.ad = _norm(an, ad)
        self.bn, self.bd = _norm(bn, bd)

    @staticmethod
    def _raw(an, ad, bn, bd):
        # parts must already be canonical
        self = GaussianRational.__new__(GaussianRational)
        self.an, self.ad, self.bn, self.bd = an, ad, bn, bd
        return self

    @property
    def re(self):
        return Fraction(self.an, self.ad)

    @property
    def im(self):
        return Fraction(self.bn, self.bd)

    @property
    def raw(self):
        return self.an, self.ad, self.bn, self.bd

    def is_real(self):
        return self.bn == 0

    def conjugate(self):
        return GaussianRational._raw(self.an, self.ad, -self.bn, self.bd)

    def __bool__(self):
        return self.an != 0 or self.bn != 0

    def __hash__(self):
        return hash((self.an, self.ad, self.bn, self.bd))

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self.an == other.an and self.ad == other.ad
                and self.bn == other.bn and self.bd == other.bd)

    def __repr__(self):
        return f"GQ({self.re}, {self.im})"

    def __neg__(self):
        return GaussianRational._raw(-self.an, self.ad, -self.bn, self.bd)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        an, ad = _norm(self.an * other.ad + other.an * self.ad, self.ad * other.ad)
        bn, bd = _norm(self.bn * other.bd + other.bn * self.bd, self.bd * other.bd)
        return GaussianRational._raw(an, ad, bn, bd)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        an, ad = _norm(self.an * other.ad - other.an * self.ad, self.ad * other.ad)
        bn, bd = _norm(self.bn * other.bd - other.bn * self.bd, self.bd * other.bd)
        return GaussianRational._raw(an, ad, bn, bd)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (a+bi)(c+di) = (ac - bd) + (ad + bc)i
        acn = self.an * other.an
        acd = self.ad * other.ad
        bdn = self.bn * other.bn
        bdd = self.bd * other.bd
        adn = self.an * other.bn
        add_ = self.ad * other.bd
        bcn = self.bn * other.an
        bcd = self.bd * other.ad
        an, ad = _norm(acn * bdd - bdn * acd, acd * bdd)
        bn, bd = _norm(adn * bcd + bcn * add_, add_ * bcd)
        return GaussianRational._raw(an, ad, bn, bd)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.an == 0 and other.bn == 0:
            raise DivisionByZero("division by zero in Q(i)")
        # multiply by the conjugate and divide by |other|^2
        num = self * other.conjugate()
        nn = other.an * other.an * other.bd * other.bd \
            + other.bn * other.bn * other.ad * other.ad
        nd = other.ad * other.ad * other.bd * other.bd
        an, ad = _norm(num.an * nd, num.ad * nn)
        bn, bd = _norm(num.bn * nd, num.bd * nn)
        return GaussianRational._raw(an, ad, bn, bd)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = GaussianRational._raw(1, 1, 0, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, int):
        return GaussianRational._raw(value, 1, 0, 1)
    if isinstance(value, Fraction):
        return GaussianRational._raw(value.numerator, value.denominator, 0, 1)
    return None


# -- term-map kernels ---------------------------------------------------------
#
# A term map is a dict {exponent tuple: nonzero GaussianRational}.  These four
# functions carry the polynomial ring arithmetic; everything above them in the
# toolkit is per-term bookkeeping.

def terms_add(a, b):
    out = dict(a)
    for e, c in b.items():
        prev = out.get(e)
        if prev is None:
            out[e] = c
        else:
            s = prev + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def terms_sub(a, b):
    out = dict(a)
    for e, c in b.items():
        prev = out.get(e)
        if prev is None:
            out[e] = -c
        else:
            s = prev - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def terms_scale(a, c):
    if not c:
        return {}
    return {e: coeff * c for e, coeff in a.items()}


def terms_mul(a, b):
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = ca * cb
            prev = out.get(e)
            if prev is None:
                out[e] = c
            else:
                s = prev + c
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out
