# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled coefficient kernel.

Twin of ``_gqpure``; see that module for the representation contract.  Keep
the two implementations behaviourally identical: same canonical form, same
hashes, same errors.
"""

from fractions import Fraction
from math import gcd as _pygcd

from kholo.errors import DivisionByZero

BACKEND_NAME = "cython"

cdef object _GCD = _pygcd


cdef inline tuple _norm(object n, object d):
    if d < 0:
        n = -n
        d = -d
    g = _GCD(n, d)
    if g > 1:
        n = n // g
        d = d // g
    return (n, d)


def _ratio(value):
    if isinstance(value, int):
        return value, 1
    if isinstance(value, Fraction):
        return value.numerator, value.denominator
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


cdef class GaussianRational:
    """Exact element a + b*i of Q(i); immutable, canonical, hashable."""

    cdef readonly object an, ad, bn, bd

    def __init__(self, re=0, im=0):
        an, ad = _ratio(re)
        bn, bd = _ratio(im)
        self.an, self.ad = _norm(an, ad)
        self.bn, self.bd = _norm(bn, bd)

    @staticmethod
    cdef GaussianRational _make(object an, object ad, object bn, object bd):
        cdef GaussianRational self = GaussianRational.__new__(GaussianRational)
        self.an = an
        self.ad = ad
        self.bn = bn
        self.bd = bd
        return self

    @staticmethod
    def _raw(an, ad, bn, bd):
        return GaussianRational._make(an, ad, bn, bd)

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
        return GaussianRational._make(self.an, self.ad, -self.bn, self.bd)

    def __bool__(self):
        return self.an != 0 or self.bn != 0

    def __hash__(self):
        return hash((self.an, self.ad, self.bn, self.bd))

    def __eq__(self, other):
        cdef GaussianRational b = _coerce(other)
        if b is None:
            return NotImplemented
        return (self.an == b.an and self.ad == b.ad
                and self.bn == b.bn and self.bd == b.bd)

    def __repr__(self):
        return f"GQ({self.re}, {self.im})"

    def __neg__(self):
        return GaussianRational._make(-self.an, self.ad, -self.bn, self.bd)

    def __pos__(self):
        return self

    def __add__(left, right):
        cdef GaussianRational a = _coerce(left)
        cdef GaussianRational b = _coerce(right)
        if a is None or b is None:
            return NotImplemented
        an, ad = _norm(a.an * b.ad + b.an * a.ad, a.ad * b.ad)
        bn, bd = _norm(a.bn * b.bd + b.bn * a.bd, a.bd * b.bd)
        return GaussianRational._make(an, ad, bn, bd)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(left, right):
        cdef GaussianRational a = _coerce(left)
        cdef GaussianRational b = _coerce(right)
        if a is None or b is None:
            return NotImplemented
        an, ad = _norm(a.an * b.ad - b.an * a.ad, a.ad * b.ad)
        bn, bd = _norm(a.bn * b.bd - b.bn * a.bd, a.bd * b.bd)
        return GaussianRational._make(an, ad, bn, bd)

    def __rsub__(self, other):
        cdef GaussianRational a = _coerce(other)
        if a is None:
            return NotImplemented
        return a.__sub__(self)

    def __mul__(left, right):
        cdef GaussianRational a = _coerce(left)
        cdef GaussianRational b = _coerce(right)
        if a is None or b is None:
            return NotImplemented
        return _mul(a, b)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(left, right):
        cdef GaussianRational a = _coerce(left)
        cdef GaussianRational b = _coerce(right)
        if a is None or b is None:
            return NotImplemented
        if b.an == 0 and b.bn == 0:
            raise DivisionByZero("division by zero in Q(i)")
        num = _mul(a, b.conjugate())
        nn = b.an * b.an * b.bd * b.bd + b.bn * b.bn * b.ad * b.ad
        nd = b.ad * b.ad * b.bd * b.bd
        an, ad = _norm(num.an * nd, num.ad * nn)
        bn, bd = _norm(num.bn * nd, num.bd * nn)
        return GaussianRational._make(an, ad, bn, bd)

    def __rtruediv__(self, other):
        cdef GaussianRational a = _coerce(other)
        if a is None:
            return NotImplemented
        return a.__truediv__(self)

    def __pow__(self, exponent, modulo):
        if modulo is not None:
            return NotImplemented
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        cdef GaussianRational result = GaussianRational._make(1, 1, 0, 1)
        cdef GaussianRational base = self
        cdef object e = exponent
        while e:
            if e & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            e >>= 1
        return result


cdef inline GaussianRational _mul(GaussianRational a, GaussianRational b):
    # (a+bi)(c+di) = (ac - bd) + (ad + bc)i
    acn = a.an * b.an
    acd = a.ad * b.ad
    bdn = a.bn * b.bn
    bdd = a.bd * b.bd
    adn = a.an * b.bn
    add_ = a.ad * b.bd
    bcn = a.bn * b.an
    bcd = a.bd * b.ad
    an, ad = _norm(acn * bdd - bdn * acd, acd * bdd)
    bn, bd = _norm(adn * bcd + bcn * add_, add_ * bcd)
    return GaussianRational._make(an, ad, bn, bd)


cdef GaussianRational _coerce(object value):
    if isinstance(value, GaussianRational):
        return <GaussianRational>value
    if isinstance(value, int):
        return GaussianRational._make(value, 1, 0, 1)
    if isinstance(value, Fraction):
        return GaussianRational._make(value.numerator, value.denominator, 0, 1)
    return None


# -- term-map kernels ---------------------------------------------------------

def terms_add(dict a, dict b):
    cdef dict out = dict(a)
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


def terms_sub(dict a, dict b):
    cdef dict out = dict(a)
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


def terms_scale(dict a, c):
    if not c:
        return {}
    cdef dict out = {}
    for e, coeff in a.items():
        out[e] = coeff * c
    return out


def terms_mul(dict a, dict b):
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    cdef dict out = {}
    cdef Py_ssize_t k, idx
    cdef tuple ea, eb, e
    cdef list buf
    for ea, ca in a.items():
        k = len(ea)
        for eb, cb in b.items():
            buf = [0] * k
            for idx in range(k):
                buf[idx] = <object>(ea[idx]) + <object>(eb[idx])
            e = tuple(buf)
            c = _mul(<GaussianRational>ca, <GaussianRational>cb)
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
