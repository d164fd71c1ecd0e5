"""Exact coefficient fields: the rationals and rational functions in ``q``.

A field element is either a :class:`fractions.Fraction` or a
:class:`RatFunc`.  Arithmetic on :class:`RatFunc` collapses to a
``Fraction`` whenever the result is constant, so every element of Q(q)
that happens to lie in Q is stored as a ``Fraction`` and equality stays
structural.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from .errors import InputError, InvalidScalarError, RootOfUnityError

ZERO = Fraction(0)
ONE = Fraction(1)


# --- dense univariate polynomials over Q, coefficients low -> high ---------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _integral(a):
    """``(ints, D)`` with ``a == ints / D`` coefficientwise."""
    den = 1
    for x in a:
        d = x.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    return [x.numerator * (den // x.denominator) for x in a], den


def _pmul(a, b):
    # integer convolution: Fraction products dominate the cost otherwise
    if not a or not b:
        return ()
    ia, da = _integral(a)
    ib, db = _integral(b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(ia):
        if x:
            for j, y in enumerate(ib):
                out[i + j] += x * y
    den = da * db
    return _trim(Fraction(c, den) for c in out)


def _pscale(a, c):
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    lead = b[-1]
    db = len(b) - 1
    if len(r) - 1 < db:
        return (), _trim(r)
    qt = [ZERO] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] / lead
        qt[k] = c
        if c:
            for i, y in enumerate(b):
                r[k + i] -= c * y
    return _trim(qt), _trim(r[:db])


def _pmonic(a):
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(x / lead for x in a)


def _valuation(a):
    for i, x in enumerate(a):
        if x != 0:
            return i
    return len(a)


def _is_monomial(a):
    return bool(a) and _valuation(a) == len(a) - 1


def _pgcd(a, b):
    # monic gcd; q^k is the common case for Laurent data
    if not a:
        return _pmonic(b)
    if not b:
        return _pmonic(a)
    if _is_monomial(a) or _is_monomial(b):
        k = min(_valuation(a), _valuation(b))
        return (ZERO,) * k + (ONE,)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a)


def _peval(a, x):
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _as_poly(x):
    if isinstance(x, RatFunc):
        raise TypeError
    x = Fraction(x)
    return (x,) if x else ()


def _make(num, den):
    """Normalize ``num/den`` and collapse constants to ``Fraction``."""
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return ZERO
    g = _pgcd(num, den)
    if len(g) > 1 and _is_monomial(g):
        num = num[len(g) - 1:]
        den = den[len(g) - 1:]
    elif len(g) > 1:
        num = _pdivmod(num, g)[0]
        den = _pdivmod(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = _pscale(num, 1 / lead)
        den = _pscale(den, 1 / lead)
    if len(den) == 1 and len(num) == 1:
        return num[0]
    obj = RatFunc.__new__(RatFunc)
    obj.num = num
    obj.den = den
    return obj


def _from_shift(num, k):
    """``num / q^k`` in normal form."""
    if not num:
        return ZERO
    m = min(_valuation(num), k)
    num = num[m:]
    k -= m
    if k == 0 and len(num) == 1:
        return num[0]
    obj = RatFunc.__new__(RatFunc)
    obj.num = num
    obj.den = (ZERO,) * k + (ONE,)
    return obj


# Laurent fast paths: with den = q^k no gcd is needed
def _add_parts(a, b):
    if _is_monomial(a[1]) and _is_monomial(b[1]):
        ka, kb = len(a[1]) - 1, len(b[1]) - 1
        k = max(ka, kb)
        return _from_shift(_padd((ZERO,) * (k - ka) + a[0], (ZERO,) * (k - kb) + b[0]), k)
    return _make(_padd(_pmul(a[0], b[1]), _pmul(b[0], a[1])), _pmul(a[1], b[1]))


def _mul_parts(a, b):
    if _is_monomial(a[1]) and _is_monomial(b[1]):
        return _from_shift(_pmul(a[0], b[0]), len(a[1]) + len(b[1]) - 2)
    return _make(_pmul(a[0], b[0]), _pmul(a[1], b[1]))


class RatFunc:
    """Element of Q(q) that is not a constant.

    ``num`` and ``den`` are coprime coefficient tuples (lowest degree
    first) and ``den`` is monic.  Use :data:`q` or :func:`from_laurent`
    to create values; arithmetic keeps the normal form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        r = _make(_trim(Fraction(c) for c in num), _trim(Fraction(c) for c in den))
        if not isinstance(r, RatFunc):
            raise InvalidScalarError("constant rational function; use Fraction")
        self.num, self.den = r.num, r.den

    # conversion helpers
    def _parts(self):
        return self.num, self.den

    @staticmethod
    def _parts_of(x):
        if isinstance(x, RatFunc):
            return x.num, x.den
        if isinstance(x, Rational):
            return _as_poly(x), (ONE,)
        raise TypeError

    def _binop(self, other, f):
        try:
            b = self._parts_of(other)
        except TypeError:
            return NotImplemented
        return f(self._parts(), b)

    def __add__(self, other):
        return self._binop(other, _add_parts)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: _add_parts(a, (_pneg(b[0]), b[1])))

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: _add_parts((_pneg(a[0]), a[1]), b))

    def __mul__(self, other):
        return self._binop(other, _mul_parts)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if other == 0:
            raise ZeroDivisionError("division by zero in Q(q)")
        return self._binop(other, lambda a, b: _make(_pmul(a[0], b[1]), _pmul(a[1], b[0])))

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: _make(_pmul(b[0], a[1]), _pmul(b[1], a[0])))

    def __neg__(self):
        return _make(_pneg(self.num), self.den)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        num, den = self.num, self.den
        if k < 0:
            num, den, k = den, num, -k
        rn, rd = (ONE,), (ONE,)
        bn, bd = num, den
        while k:
            if k & 1:
                rn, rd = _pmul(rn, bn), _pmul(rd, bd)
            bn, bd = _pmul(bn, bn), _pmul(bd, bd)
            k >>= 1
        return _make(rn, rd)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Rational):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return True

    def evaluate(self, value):
        """Specialize ``q`` to a nonzero rational ``value``."""
        value = Fraction(value)
        d = _peval(self.den, value)
        if d == 0:
            raise InvalidScalarError(f"denominator vanishes at q = {value}")
        return _peval(self.num, value) / d

    def laurent(self):
        """Return ``{exponent: coeff}`` if the denominator is a power of q."""
        if not _is_monomial(self.den):
            return None
        shift = len(self.den) - 1
        return {i - shift: c for i, c in enumerate(self.num) if c}

    def sign(self):
        """Sign of the leading numerator coefficient (used for printing)."""
        return 1 if self.num[-1] > 0 else -1

    def __str__(self):
        lau = self.laurent()
        if lau is not None:
            return _format_terms(sorted(lau.items(), reverse=True))
        num = _format_terms(sorted(((i, c) for i, c in enumerate(self.num) if c), reverse=True))
        den = _format_terms(sorted(((i, c) for i, c in enumerate(self.den) if c), reverse=True))
        return f"({num})/({den})"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _format_monomial(c, e):
    if e == 0:
        return str(c)
    power = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return power
    return f"{c}*{power}"


def _format_terms(items):
    out = ""
    for e, c in items:
        if not out:
            out = "-" + _format_monomial(-c, e) if c < 0 else _format_monomial(c, e)
        elif c < 0:
            out += " - " + _format_monomial(-c, e)
        else:
            out += " + " + _format_monomial(c, e)
    return out or "0"


q = RatFunc((0, 1))


def from_laurent(coeffs):
    """Build ``sum c * q^e`` from a mapping ``{e: c}``."""
    if not coeffs:
        return ZERO
    lo = min(min(coeffs), 0)
    num = [ZERO] * (max(max(coeffs), 0) - lo + 1)
    for e, c in coeffs.items():
        num[e - lo] += Fraction(c)
    den = (ZERO,) * (-lo) + (ONE,)
    return _make(_trim(num), den)


def is_scalar(x):
    return isinstance(x, (RatFunc, Rational))


def is_zero(x):
    return not isinstance(x, RatFunc) and x == 0


def specialize(x, value):
    """Evaluate a field element at ``q = value``; rationals pass through."""
    if isinstance(x, RatFunc):
        return x.evaluate(value)
    return Fraction(x)


def format_scalar(x):
    if isinstance(x, RatFunc):
        return str(x)
    return str(Fraction(x))


class Field:
    """One of the two supported coefficient fields, ``Q`` or ``Q(q)``."""

    __slots__ = ("generic",)

    def __init__(self, generic=False):
        self.generic = bool(generic)

    @property
    def name(self):
        return "Q(q)" if self.generic else "Q"

    @property
    def gen(self):
        if not self.generic:
            raise InvalidScalarError("the field Q has no indeterminate q")
        return q

    zero = ZERO
    one = ONE

    def __call__(self, x):
        if isinstance(x, RatFunc):
            if not self.generic:
                raise InvalidScalarError(f"{x} is not a rational number")
            return x
        if isinstance(x, Rational):
            return Fraction(x)
        if isinstance(x, str):
            from .parsing import parse_scalar
            return parse_scalar(x, self)
        raise InvalidScalarError(f"cannot interpret {x!r} as a scalar")

    def contains(self, x):
        return isinstance(x, Rational) or (self.generic and isinstance(x, RatFunc))

    def __eq__(self, other):
        return isinstance(other, Field) and other.generic == self.generic

    def __hash__(self):
        return hash(("Field", self.generic))

    def __repr__(self):
        return f"Field({self.name!r})"


QQ = Field(False)
QQ_q = Field(True)


def field_by_name(name):
    name = name.replace(" ", "")
    if name == "Q":
        return QQ
    if name == "Q(q)":
        return QQ_q
    raise InputError(f"unknown field {name!r}; expected Q or Q(q)")


# --- q-binomial coefficients ------------------------------------------------

def _check_q(qv):
    if not is_scalar(qv):
        raise InvalidScalarError(f"{qv!r} is not a field element")
    if is_zero(qv):
        raise InvalidScalarError("q must be invertible")
    return qv if isinstance(qv, RatFunc) else Fraction(qv)


def qint(n, qv):
    """The quantum integer q^(-n+1) + q^(-n+3) + ... + q^(n-1)."""
    qv = _check_q(qv)
    total = ZERO
    for e in range(-n + 1, n, 2):
        total = total + qv ** e
    return total


def qbinomial(m, k, qv):
    """[m k]_q via the two-term recursion; valid for every nonzero q."""
    qv = _check_q(qv)
    if m < 0:
        raise InputError("m must be nonnegative")
    if k < 0 or k > m:
        return ZERO
    row = [ONE]
    for mm in range(1, m + 1):
        new = []
        for kk in range(mm + 1):
            left = row[kk] * qv ** (-kk) if kk < mm else ZERO
            right = row[kk - 1] * qv ** (mm - kk) if kk >= 1 else ZERO
            new.append(left + right)
        row = new
    return row[k]


def qbinomial_via_product(m, qv):
    """Coefficients [m 0]_q .. [m m]_q read off the centred product.

    Expands (x + q^(-m+1))(x + q^(-m+3))...(x + q^(m-1)); the coefficient
    of x^k is returned at position k.
    """
    qv = _check_q(qv)
    if m < 0:
        raise InputError("m must be nonnegative")
    coeffs = [ONE]
    for e in range(-m + 1, m, 2):
        root = qv ** e
        nxt = [ZERO] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] + c * root
        coeffs = nxt
    return coeffs


def qfactorial_formula(m, k, qv):
    """[m]_q! / ([m-k]_q! [k]_q!), only meaningful away from roots of unity."""
    qv = _check_q(qv)
    if k < 0 or k > m:
        return ZERO

    def fact(n):
        acc = ONE
        for j in range(1, n + 1):
            acc = acc * qint(j, qv)
        return acc

    den = fact(m - k) * fact(k)
    if is_zero(den):
        raise RootOfUnityError(f"a quantum integer [j]_q vanishes at q = {qv}")
    return fact(m) / den
