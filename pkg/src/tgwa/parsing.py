"""Parsers and printers for scalars, polynomials, elements and spec files.

One recursive-descent expression parser serves all three value domains.
A domain object turns literals and identifiers into values and supplies
the arithmetic, so the grammar is written once:

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('-' | '+') unary | power
    power := atom ('^' ['-'] INT)?
    atom  := NUMBER | IDENT | ('X' | 'Y') '(' INT ')' | '(' expr ')'
"""

from __future__ import annotations

import re

from .errors import (IndexRangeError, InputError, ParseError,
                     SpecValidationError)
from .polyring import Polynomial, RingCtx, RingMap
from .scalars import QQ, QQ_q, Field, format_scalar, is_zero
from .tgwc import GradedElement, TGWCData, multiply, validate_tgwc

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>->|[-+*/^(),:]))")


class Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind, self.text, self.line, self.column = kind, text, line, column

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r}, {self.line}:{self.column})"


def tokenize(text, line=1, column=1):
    """Split ``text`` into tokens; ``column`` is the 1-based offset of ``text[0]``."""
    out = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column + pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Token(kind, m.group(kind), line, column + start))
        pos = m.end()
    out.append(Token("end", "", line, column + n))
    return out


class _Parser:
    def __init__(self, tokens, domain):
        self.toks = tokens
        self.pos = 0
        self.dom = domain

    @property
    def cur(self):
        return self.toks[self.pos]

    def error(self, message, expected=None, tok=None):
        tok = tok or self.cur
        return ParseError(message, tok.line, tok.column, expected)

    def accept(self, text):
        if self.cur.kind == "op" and self.cur.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = self.cur.text or "end of input"
            raise self.error(f"unexpected {found!r}", [repr(text)])

    def expect_int(self):
        tok = self.cur
        if tok.kind != "num":
            raise self.error(f"unexpected {tok.text or 'end of input'!r}", ["integer"])
        self.pos += 1
        return int(tok.text)

    def parse_all(self):
        v = self.expr()
        if self.cur.kind != "end":
            raise self.error(f"unexpected {self.cur.text!r}", ["operator", "end of input"])
        return v

    def expr(self):
        v = self.term()
        while True:
            if self.accept("+"):
                v = self.dom.add(v, self.term())
            elif self.accept("-"):
                v = self.dom.add(v, self.dom.neg(self.term()))
            else:
                return v

    def term(self):
        v = self.unary()
        while True:
            if self.accept("*"):
                v = self.dom.mul(v, self.unary())
            elif self.cur.kind == "op" and self.cur.text == "/":
                tok = self.cur
                self.pos += 1
                v = self.dom.div(v, self.unary(), tok)
            else:
                return v

    def unary(self):
        if self.accept("-"):
            return self.dom.neg(self.unary())
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.cur.kind == "op" and self.cur.text == "^":
            tok = self.cur
            self.pos += 1
            sign = -1 if self.accept("-") else 1
            if self.cur.kind != "num":
                raise self.error("malformed power", ["integer exponent"])
            k = sign * self.expect_int()
            v = self.dom.pow(v, k, tok)
        return v

    def atom(self):
        tok = self.cur
        if tok.kind == "num":
            self.pos += 1
            return self.dom.number(int(tok.text))
        if tok.kind == "ident":
            self.pos += 1
            if tok.text in ("X", "Y") and self.cur.kind == "op" and self.cur.text == "(":
                self.pos += 1
                i = self.expect_int()
                self.expect(")")
                return self.dom.letter(tok.text, i, tok)
            return self.dom.ident(tok.text, tok)
        if self.accept("("):
            v = self.expr()
            self.expect(")")
            return v
        found = tok.text or "end of input"
        raise self.error(f"unexpected {found!r}", ["number", "identifier", "'('"])


class _ScalarDomain:
    def __init__(self, field):
        self.field = field

    def number(self, n):
        return self.field(n)

    def ident(self, name, tok):
        if name == "q" and self.field.generic:
            return self.field.gen
        raise ParseError(f"unknown symbol {name!r}", tok.line, tok.column)

    def letter(self, kind, i, tok):
        raise ParseError(f"{kind}({i}) is not allowed here", tok.line, tok.column)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b, tok):
        if is_zero(b):
            raise ParseError("division by zero", tok.line, tok.column)
        return a / b

    def pow(self, a, k, tok):
        if k < 0 and is_zero(a):
            raise ParseError("negative power of zero", tok.line, tok.column)
        return a ** k


class _PolyDomain(_ScalarDomain):
    def __init__(self, ring: RingCtx):
        super().__init__(ring.field)
        self.ring = ring

    def number(self, n):
        return self.ring.const(n)

    def ident(self, name, tok):
        if name in self.ring.names:
            return self.ring.gen(name)
        if name == "q" and self.field.generic:
            return self.ring.const(self.field.gen)
        raise ParseError(f"unknown variable {name!r}", tok.line, tok.column)

    def div(self, a, b, tok):
        if not b.is_constant() or b.is_zero():
            raise ParseError("can only divide by a nonzero scalar", tok.line, tok.column)
        return a / b.constant_coeff()

    def pow(self, a, k, tok):
        if k < 0:
            if not a.is_constant() or a.is_zero():
                raise ParseError("negative power of a non-scalar", tok.line, tok.column)
            return self.ring.const(a.constant_coeff() ** k)
        return a ** k


class _ElementDomain:
    def __init__(self, d: TGWCData):
        self.d = d
        self.poly = _PolyDomain(d.ring)

    def _scalar_part(self, a):
        """The coefficient if ``a`` lives on the empty word only, else None."""
        if not a.terms:
            return self.d.ring.zero()
        if set(a.terms) == {()}:
            return a.terms[()]
        return None

    def number(self, n):
        return self.d.scalar(self.d.ring.const(n))

    def ident(self, name, tok):
        return self.d.scalar(self.poly.ident(name, tok))

    def letter(self, kind, i, tok):
        if not 1 <= i <= self.d.n:
            raise IndexRangeError(f"line {tok.line}, column {tok.column}: "
                                  f"index {i} out of range 1..{self.d.n}")
        return self.d.X(i) if kind == "X" else self.d.Y(i)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return multiply(self.d, a, b)

    def div(self, a, b, tok):
        c = self._scalar_part(b)
        if c is None:
            raise ParseError("can only divide by a scalar", tok.line, tok.column)
        c = self.poly.div(self.d.ring.one(), c, tok)
        return multiply(self.d, self.d.scalar(c), a)

    def pow(self, a, k, tok):
        c = self._scalar_part(a)
        if c is not None:
            return self.d.scalar(self.poly.pow(c, k, tok))
        if k < 1:
            raise ParseError("malformed power: letters take exponents k >= 1",
                             tok.line, tok.column)
        out = a
        for _ in range(k - 1):
            out = multiply(self.d, out, a)
        return out


def _parse(text, domain, line=1, column=1):
    if not isinstance(text, str):
        raise InputError("expected a string")
    return _Parser(tokenize(text, line, column), domain).parse_all()


def parse_scalar(text, field: Field = QQ):
    return _parse(text, _ScalarDomain(field))


def parse_polynomial(text, ring: RingCtx) -> Polynomial:
    return _parse(text, _PolyDomain(ring))


def parse_element(d: TGWCData, text) -> GradedElement:
    """Parse an element such as ``"(H+1)*X(1) - 2*X(1)*Y(2)"``."""
    return _parse(text, _ElementDomain(d))


# -- spec files ----------------------------------------------------------------

def _split_top(text, column):
    """Split on commas at parenthesis depth 0; yields (piece, column of piece)."""
    depth = 0
    start = 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            yield text[start:k], column + start
            start = k + 1
    yield text[start:], column + start


def _strip_with_col(text, column):
    lead = len(text) - len(text.lstrip())
    return text.strip(), column + lead


class _SpecBuilder:
    def __init__(self):
        self.field = None
        self.names = None
        self.ring = None
        self.sigma = {}      # i -> {name: (text, line, col)}
        self.sigma_inv = {}
        self.t = {}          # i -> (text, line, col)
        self.mu = {}         # (i, j) with i < j -> (value, line)
        self.first_line = {}


def _parse_index_list(body, line, column, count):
    """Parse ``count`` positive integers from the head of a directive."""
    toks = tokenize(body, line, column)
    vals = []
    for tok in toks[:-1]:
        if tok.kind != "num":
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.column, ["integer"])
        vals.append(int(tok.text))
    if len(vals) != count:
        raise ParseError(f"expected {count} index(es), got {len(vals)}", line, column)
    for v, tok in zip(vals, toks):
        if v < 1:
            raise ParseError("indices start at 1", tok.line, tok.column)
    return vals


def parse_tgwc_spec(text, validate=True) -> TGWCData:
    """Read the line-oriented spec format.

    With ``validate=True`` the data must pass :func:`validate_tgwc`;
    :class:`SpecValidationError` carries the report otherwise.
    """
    b = _SpecBuilder()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        stripped, col = _strip_with_col(line, 1)
        if not stripped:
            continue
        m = re.match(r"([A-Za-z_]+)", stripped)
        if m is None:
            raise ParseError("expected a directive", lineno, col,
                             ["field", "vars", "sigma", "sigma_inv", "t", "mu"])
        word = m.group(1)
        rest = stripped[m.end():]
        rest_col = col + m.end()
        if word != "field" and b.field is None:
            raise ParseError("missing field declaration", lineno, col)
        if word == "field":
            if b.field is not None:
                raise ParseError("field declared twice", lineno, col)
            name = rest.replace(" ", "")
            if name == "Q":
                b.field = QQ
            elif name == "Q(q)":
                b.field = QQ_q
            else:
                raise ParseError(f"unknown field {rest.strip()!r}", lineno, rest_col, ["Q", "Q(q)"])
        elif word == "vars":
            if b.ring is not None:
                raise ParseError("vars declared twice", lineno, col)
            names = [x for x in re.split(r"[\s,]+", rest.strip()) if x]
            try:
                b.ring = RingCtx(names, b.field)
            except InputError as exc:
                raise ParseError(str(exc), lineno, rest_col) from None
        elif word in ("sigma", "sigma_inv", "t", "mu"):
            if b.ring is None:
                raise ParseError("vars must be declared before " + word, lineno, col)
            if ":" not in rest:
                raise ParseError("missing ':'", lineno, rest_col + len(rest), ["':'"])
            head, body = rest.split(":", 1)
            body_col = rest_col + len(head) + 1
            if word == "mu":
                i, j = _parse_index_list(head, lineno, rest_col, 2)
                if i == j:
                    raise ParseError("mu needs two distinct indices", lineno, rest_col)
                val = _parse(body, _ScalarDomain(b.field), lineno, body_col)
                if is_zero(val):
                    raise ParseError("mu must be nonzero", lineno, body_col)
                key = (min(i, j), max(i, j))
                if key in b.mu and b.mu[key][0] != val:
                    raise ParseError("mu pair declared twice with conflicting values", lineno, col)
                b.mu[key] = (val, lineno)
            elif word == "t":
                (i,) = _parse_index_list(head, lineno, rest_col, 1)
                if i in b.t:
                    raise ParseError(f"t {i} declared twice", lineno, col)
                b.t[i] = _parse(body, _PolyDomain(b.ring), lineno, body_col)
            else:
                (i,) = _parse_index_list(head, lineno, rest_col, 1)
                table = b.sigma if word == "sigma" else b.sigma_inv
                if i in table:
                    raise ParseError(f"{word} {i} declared twice", lineno, col)
                images = {}
                for piece, pcol in _split_top(body, body_col):
                    piece_s, pcol = _strip_with_col(piece, pcol)
                    if not piece_s:
                        continue
                    if "->" not in piece_s:
                        raise ParseError("expected 'generator -> image'", lineno, pcol, ["'->'"])
                    g, img = piece_s.split("->", 1)
                    g_s = g.strip()
                    if g_s not in b.ring.names:
                        raise ParseError(f"unknown variable {g_s!r}", lineno, pcol)
                    if g_s in images:
                        raise ParseError(f"image of {g_s} given twice", lineno, pcol)
                    images[g_s] = _parse(img, _PolyDomain(b.ring), lineno, pcol + len(g) + 2)
                table[i] = images
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, col,
                             ["field", "vars", "sigma", "sigma_inv", "t", "mu"])
    if b.field is None:
        raise ParseError("missing field declaration")
    if b.ring is None:
        raise ParseError("missing vars declaration")
    return _assemble(b, validate)


def _assemble(b, validate):
    indices = set(b.sigma) | set(b.sigma_inv) | set(b.t)
    for i, j in b.mu:
        indices |= {i, j}
    if not indices:
        raise ParseError("no sigma, t or mu directives")
    n = max(indices)
    missing = [i for i in range(1, n + 1) if i not in indices]
    if missing:
        raise ParseError(f"indices must be contiguous 1..{n}; missing {missing}")
    R = b.ring
    sigma = []
    for i in range(1, n + 1):
        if i not in b.sigma or i not in b.sigma_inv:
            raise ParseError(f"index {i} needs both sigma and sigma_inv")
        if i not in b.t:
            raise ParseError(f"missing t {i}")
        fwd = [b.sigma[i].get(nm, R.gen(nm)) for nm in R.names]
        inv = [b.sigma_inv[i].get(nm, R.gen(nm)) for nm in R.names]
        sigma.append(RingMap(R, fwd, inv))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in b.mu:
                raise ParseError(f"missing mu {i} {j}")
    d = TGWCData(R, sigma, [b.t[i] for i in range(1, n + 1)],
                 {k: v for k, (v, _) in b.mu.items()})
    if validate:
        rep = validate_tgwc(d)
        if not rep.ok:
            raise SpecValidationError(rep)
    return d


def print_tgwc_spec(d: TGWCData) -> str:
    """Inverse of :func:`parse_tgwc_spec`; identity images are omitted."""
    if not d.mu_symmetric:
        raise InputError("the spec format stores one mu per unordered pair; mu is not symmetric")
    R = d.ring
    lines = [f"field {d.field.name}", "vars " + " ".join(R.names)]
    for i in range(1, d.n + 1):
        s = d.sigma_of(i)
        for key, images in (("sigma", s.forward), ("sigma_inv", s.inverse)):
            parts = [f"{nm} -> {img}" for nm, img in zip(R.names, images) if img != R.gen(nm)]
            lines.append(f"{key} {i}: " + ", ".join(parts))
    for i in range(1, d.n + 1):
        lines.append(f"t {i}: {d.t_of(i)}")
    for i in range(1, d.n + 1):
        for j in range(i + 1, d.n + 1):
            lines.append(f"mu {i} {j}: {format_scalar(d.mu(i, j))}")
    return "\n".join(lines) + "\n"
