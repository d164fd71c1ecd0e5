"""Sparse multivariate polynomials over a scalar field, and ring maps."""

from __future__ import annotations

from fractions import Fraction

from .errors import ContextMismatchError, InputError
from .scalars import QQ, Field, RatFunc, format_scalar, is_zero

_IDENT_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")
RESERVED = {"X", "Y", "q"}


class RingCtx:
    """Polynomial ring K[x_1, ..., x_m]; generator order fixes the monomial order."""

    __slots__ = ("names", "field", "_index")

    def __init__(self, names, field: Field = QQ):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise InputError(f"duplicate generator names in {names}")
        for nm in names:
            if not nm or not set(nm) <= _IDENT_OK or nm[0].isdigit():
                raise InputError(f"invalid generator name {nm!r}")
            if nm in RESERVED:
                raise InputError(f"generator name {nm!r} is reserved")
        self.names = names
        self.field = field
        self._index = {nm: i for i, nm in enumerate(names)}

    @property
    def ngens(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown variable {name!r}") from None

    def gen(self, which):
        i = which if isinstance(which, int) else self.index(which)
        e = [0] * self.ngens
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self):
        return [self.gen(i) for i in range(self.ngens)]

    def const(self, c):
        c = self.field(c)
        if is_zero(c):
            return self.zero()
        return Polynomial(self, {(0,) * self.ngens: c})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def __call__(self, x):
        if isinstance(x, Polynomial):
            if x.ctx != self:
                raise ContextMismatchError("polynomial from a different ring")
            return x
        if isinstance(x, str):
            from .parsing import parse_polynomial
            return parse_polynomial(x, self)
        return self.const(x)

    def __eq__(self, other):
        return isinstance(other, RingCtx) and self.names == other.names and self.field == other.field

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return f"RingCtx({list(self.names)!r}, {self.field.name})"


def _monomial_key(e):
    return (sum(e), e)


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero scalars."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: RingCtx, terms):
        self.ctx = ctx
        self.terms = {e: c for e, c in terms.items() if not is_zero(c)}
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        obj._hash = None
        return obj

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatchError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.ctx.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if is_zero(v):
                    del out[e]
                else:
                    out[e] = v
        return Polynomial._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        if is_zero(c):
            return self.ctx.zero()
        return Polynomial._raw(self.ctx, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.ctx.zero()
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial(self.ctx, out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            if not c.is_constant() or c.is_zero():
                raise InputError("can only divide a polynomial by a nonzero scalar")
            c = c.constant_coeff()
        if is_zero(c):
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / Fraction(c) if not isinstance(c, RatFunc) else 1 / c)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("polynomial exponents must be nonnegative integers")
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction, RatFunc)):
            return self == self.ctx.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.ctx.ngens, Fraction(0))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, which):
        i = which if isinstance(which, int) else self.ctx.index(which)
        return max((e[i] for e in self.terms), default=-1)

    def sorted_terms(self):
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda t: _monomial_key(t[0]), reverse=True)

    def leading_coefficient(self):
        return self.sorted_terms()[0][1] if self.terms else Fraction(0)

    def univariate_coefficients(self):
        """Coefficient list (lowest degree first) of a polynomial in one variable."""
        if self.ctx.ngens != 1:
            raise InputError("not a univariate ring")
        d = self.degree_in(0)
        return [self.terms.get((k,), Fraction(0)) for k in range(d + 1)]

    def evaluate(self, values):
        """Substitute scalars for all generators."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                if k:
                    v = v * x ** k
            total = total + v
        return total

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def _format_coefficient(c):
    """Return (sign, text, needs_parens) for a nonzero scalar."""
    if isinstance(c, RatFunc):
        lau = c.laurent()
        if lau is not None and len(lau) == 1:
            (e, v), = lau.items()
            sign = -1 if v < 0 else 1
            return sign, format_scalar(c if sign > 0 else -c), False
        sign = c.sign()
        return sign, format_scalar(c if sign > 0 else -c), True
    sign = -1 if c < 0 else 1
    return sign, str(abs(Fraction(c))), False


def format_monomial(names, e):
    parts = []
    for nm, k in zip(names, e):
        if k == 1:
            parts.append(nm)
        elif k > 1:
            parts.append(f"{nm}^{k}")
    return "*".join(parts)


def format_term(c, mono):
    """Render ``c * mono`` without sign; returns (sign, text)."""
    sign, ctext, parens = _format_coefficient(c)
    if not mono:
        return sign, f"({ctext})" if parens else ctext
    if ctext == "1":
        return sign, mono
    if parens:
        ctext = f"({ctext})"
    return sign, f"{ctext}*{mono}"


def join_terms(pieces):
    out = ""
    for sign, text in pieces:
        if not out:
            out = text if sign > 0 else f"-{text}"
        else:
            out += (" + " if sign > 0 else " - ") + text
    return out or "0"


def format_polynomial(p: Polynomial):
    return join_terms(format_term(c, format_monomial(p.ctx.names, e)) for e, c in p.sorted_terms())


class RingMap:
    """K-algebra automorphism given by generator images and their inverses."""

    __slots__ = ("ctx", "forward", "inverse")

    def __init__(self, ctx: RingCtx, forward, inverse):
        forward = tuple(ctx(p) for p in forward)
        inverse = tuple(ctx(p) for p in inverse)
        if len(forward) != ctx.ngens or len(inverse) != ctx.ngens:
            raise InputError("a ring map needs one image per generator")
        self.ctx = ctx
        self.forward = forward
        self.inverse = inverse

    @classmethod
    def identity(cls, ctx):
        g = ctx.gens()
        return cls(ctx, g, g)

    def __call__(self, p):
        return apply_map(self, p)

    def inv(self):
        return RingMap(self.ctx, self.inverse, self.forward)

    def __eq__(self, other):
        return (isinstance(other, RingMap) and self.ctx == other.ctx
                and self.forward == other.forward and self.inverse == other.inverse)

    def __hash__(self):
        return hash((self.ctx, self.forward, self.inverse))

    def __repr__(self):
        images = ", ".join(f"{nm} -> {img}" for nm, img in zip(self.ctx.names, self.forward))
        return f"RingMap({images})"


def substitute(images, p: Polynomial, target_ctx=None):
    """Evaluate ``p`` at the given generator images."""
    ctx = target_ctx or (images[0].ctx if images else p.ctx)
    result = {}
    powers = {}
    for e, c in p.terms.items():
        term = None
        for i, k in enumerate(e):
            if not k:
                continue
            key = (i, k)
            pw = powers.get(key)
            if pw is None:
                pw = images[i] ** k
                powers[key] = pw
            term = pw if term is None else term * pw
        if term is None:
            acc = result.get((0,) * ctx.ngens)
            result[(0,) * ctx.ngens] = c if acc is None else acc + c
            continue
        for e2, c2 in term.terms.items():
            acc = result.get(e2)
            result[e2] = c * c2 if acc is None else acc + c * c2
    return Polynomial(ctx, result)


def _check_ctx(m, p):
    if p.ctx is not m.ctx and p.ctx != m.ctx:
        raise ContextMismatchError("ring map and polynomial live in different rings")


def apply_map(m: RingMap, p: Polynomial) -> Polynomial:
    _check_ctx(m, p)
    return substitute(m.forward, p, m.ctx)


def compose_maps(a: RingMap, b: RingMap) -> RingMap:
    """The map ``a o b`` (apply ``b`` first)."""
    if a.ctx != b.ctx:
        raise ContextMismatchError("cannot compose maps on different rings")
    fwd = [substitute(a.forward, img, a.ctx) for img in b.forward]
    inv = [substitute(b.inverse, img, a.ctx) for img in a.inverse]
    return RingMap(a.ctx, fwd, inv)


def verify_inverse(m: RingMap) -> bool:
    gens = m.ctx.gens()
    for g, f_img, i_img in zip(gens, m.forward, m.inverse):
        if substitute(m.forward, i_img, m.ctx) != g:
            return False
        if substitute(m.inverse, f_img, m.ctx) != g:
            return False
    return True


def verify_commuting(maps) -> bool:
    maps = list(maps)
    for a in range(len(maps)):
        for b in range(a + 1, len(maps)):
            s, t = maps[a], maps[b]
            if s.ctx != t.ctx:
                raise ContextMismatchError("maps on different rings")
            for img_t, img_s in zip(t.forward, s.forward):
                if substitute(s.forward, img_t, s.ctx) != substitute(t.forward, img_s, s.ctx):
                    return False
    return True
