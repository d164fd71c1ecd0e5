"""Twisted generalized Weyl constructions and the ideal-membership test.

Letters are encoded as nonzero integers: ``+i`` is ``X_i`` and ``-i`` is
``Y_i`` (indices start at 1).  A word is a tuple of letters and an
element of A' is a finite sum of ``r * word`` with ``r`` in the base ring
written on the left.

Membership in the maximal graded ideal I is decided with the Shapovalov
pairing ``F(a, b) = p(a* b)``: a homogeneous ``a`` of degree ``g`` lies in
I exactly when ``F(w, a)`` vanishes for every word ``w`` returned by
:func:`spanning_monomials`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (ContextMismatchError, DegreeError, IndexRangeError,
                     InputError)
from .polyring import (Polynomial, RingCtx, RingMap, format_monomial,
                       format_term, join_terms, substitute, verify_commuting,
                       verify_inverse)
from .scalars import RatFunc, format_scalar, is_zero

LEFT = "left"
RIGHT = "right"
STRATEGIES = (LEFT, RIGHT)


def X(i):
    return (i,)


def Y(i):
    return (-i,)


def word_degree(word, n):
    g = [0] * n
    for a in word:
        if a > 0:
            g[a - 1] += 1
        else:
            g[-a - 1] -= 1
    return tuple(g)


def format_letter(a):
    return f"X({a})" if a > 0 else f"Y({-a})"


def format_word(word):
    if not word:
        return "1"
    parts = []
    k = 0
    while k < len(word):
        run = 1
        while k + run < len(word) and word[k + run] == word[k]:
            run += 1
        parts.append(format_letter(word[k]) + (f"^{run}" if run > 1 else ""))
        k += run
    return "*".join(parts)


def _word_key(word):
    return (len(word), tuple((0 if a > 0 else 1, abs(a)) for a in word))


class TGWCData:
    """Input data ``(R, sigma, t, mu)`` of a twisted generalized Weyl construction.

    ``mu`` maps pairs ``(i, j)`` with ``i != j`` (1-based) to nonzero
    scalars.  Giving one orientation of a pair fills in the other, which
    is the symmetric case the involution needs.  Both orientations may be
    given with different values; such data still validates but every
    operation that needs the involution refuses it.
    """

    def __init__(self, ring: RingCtx, sigma, t, mu=None):
        sigma = list(sigma)
        t = [ring(x) for x in t]
        self.n = len(sigma)
        if self.n < 1:
            raise InputError("need at least one automorphism")
        if len(t) != self.n:
            raise InputError(f"got {len(t)} t-values for {self.n} automorphisms")
        for s in sigma:
            if not isinstance(s, RingMap):
                raise InputError("sigma entries must be RingMap instances")
            if s.ctx != ring:
                raise ContextMismatchError("sigma defined on a different ring")
        self.ring = ring
        self.field = ring.field
        self.sigma = tuple(sigma)
        self.t = tuple(t)
        self._mu = {}
        for key, val in dict(mu or {}).items():
            i, j = sorted(key) if isinstance(key, frozenset) else key
            if not (1 <= i <= self.n and 1 <= j <= self.n) or i == j:
                raise IndexRangeError(f"invalid mu index pair ({i}, {j})")
            val = self.field(val)
            self._mu[(i, j)] = val
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                if i == j or (i, j) in self._mu:
                    continue
                if (j, i) in self._mu:
                    self._mu[(i, j)] = self._mu[(j, i)]
                else:
                    raise InputError(f"missing mu entry for pair ({min(i, j)}, {max(i, j)})")
        self._images = {}
        self._act_memo = {}
        self._word_memo = {s: {} for s in STRATEGIES}

    # -- accessors ---------------------------------------------------------
    def mu(self, i, j):
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise IndexRangeError("mu_ii is undefined")
        return self._mu[(i, j)]

    @property
    def mu_symmetric(self):
        return all(self._mu[(i, j)] == self._mu[(j, i)] for (i, j) in self._mu)

    def mu_items(self):
        """Unordered pairs ``((i, j), value)`` with ``i < j``."""
        return [((i, j), v) for (i, j), v in sorted(self._mu.items()) if i < j]

    def _check_index(self, i):
        if not isinstance(i, int) or not 1 <= i <= self.n:
            raise IndexRangeError(f"index {i} out of range 1..{self.n}")

    def sigma_of(self, i):
        self._check_index(i)
        return self.sigma[i - 1]

    def t_of(self, i):
        self._check_index(i)
        return self.t[i - 1]

    def require_involution(self):
        if not self.mu_symmetric:
            raise InputError("mu is not symmetric, so the anti-involution does not exist")

    # -- the Z^n action ----------------------------------------------------
    def _action_images(self, g):
        imgs = self._images.get(g)
        if imgs is not None:
            return imgs
        if not any(g):
            imgs = tuple(self.ring.gens())
        else:
            k = next(i for i, x in enumerate(g) if x)
            step = 1 if g[k] > 0 else -1
            prev = list(g)
            prev[k] -= step
            base = self._action_images(tuple(prev))
            s = self.sigma[k]
            img_of = s.forward if step > 0 else s.inverse
            imgs = tuple(substitute(img_of, p, self.ring) for p in base)
        self._images[g] = imgs
        return imgs

    def act(self, g, r: Polynomial) -> Polynomial:
        g = tuple(g)
        if not any(g) or r.is_constant():
            return r
        key = (g, r)
        out = self._act_memo.get(key)
        if out is None:
            out = substitute(self._action_images(g), r, self.ring)
            self._act_memo[key] = out
        return out

    # -- element constructors ----------------------------------------------
    def element(self, terms=None):
        return GradedElement(self, terms or {})

    def word(self, word, coeff=1):
        for a in word:
            self._check_index(abs(a))
        return GradedElement(self, {tuple(word): self.ring(coeff)})

    def X(self, i):
        return self.word(X(i))

    def Y(self, i):
        return self.word(Y(i))

    def scalar(self, r):
        return self.word((), r)

    def degree(self, word):
        return word_degree(word, self.n)

    # -- structural equality (of data, not of algebras) --------------------
    def __eq__(self, other):
        return (isinstance(other, TGWCData) and self.ring == other.ring
                and self.sigma == other.sigma and self.t == other.t and self._mu == other._mu)

    def __hash__(self):
        return hash((self.ring, self.sigma, self.t))

    def __repr__(self):
        return f"TGWCData(n={self.n}, ring={self.ring!r})"


class GradedElement:
    """Element of A' as a map ``word -> left coefficient``."""

    __slots__ = ("data", "terms")

    def __init__(self, data: TGWCData, terms):
        self.data = data
        self.terms = {tuple(w): c for w, c in terms.items() if not c.is_zero()}

    def _other(self, other):
        if isinstance(other, GradedElement):
            if other.data is not self.data:
                raise ContextMismatchError("elements of different constructions")
            return other
        if isinstance(other, (int, Fraction, RatFunc, Polynomial)):
            return self.data.scalar(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return GradedElement(self.data, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedElement(self.data, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return multiply(self.data, self, other)

    def __rmul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return multiply(self.data, other, self)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("element exponents must be nonnegative integers")
        out = self.data.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, GradedElement):
            return self.data is other.data and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({self.data.degree(w) for w in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        """The common degree; the zero element has degree ``None``."""
        ds = self.degrees()
        if len(ds) > 1:
            raise DegreeError(f"element is not homogeneous (degrees {ds})")
        return ds[0] if ds else None

    def component(self, g):
        g = tuple(g)
        return GradedElement(self.data, {w: c for w, c in self.terms.items()
                                         if self.data.degree(w) == g})

    def star(self):
        return star(self.data, self)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"GradedElement({str(self)!r})"


def format_element(a: GradedElement):
    pieces = []
    for w in sorted(a.terms, key=_word_key):
        c = a.terms[w]
        wt = format_word(w) if w else ""
        if len(c.terms) == 1:
            (e, v), = c.terms.items()
            mono = format_monomial(c.ctx.names, e)
            mono = "*".join(p for p in (mono, wt) if p)
            pieces.append(format_term(v, mono))
        else:
            pieces.append((1, f"({c})" + (f"*{wt}" if wt else "")))
    return join_terms(pieces)


# --- algebra operations -------------------------------------------------------

def group_action(d: TGWCData, g, r: Polynomial) -> Polynomial:
    """``(sigma_1^g_1 ... sigma_n^g_n)(r)``."""
    g = tuple(g)
    if len(g) != d.n:
        raise DegreeError(f"degree {g} has the wrong length")
    return d.act(g, d.ring(r))


def multiply(d: TGWCData, a: GradedElement, b: GradedElement) -> GradedElement:
    out = {}
    for u, r in a.terms.items():
        du = d.degree(u)
        for v, s in b.terms.items():
            c = r * d.act(du, s)
            w = u + v
            out[w] = out[w] + c if w in out else c
    return GradedElement(d, out)


def star(d: TGWCData, a: GradedElement) -> GradedElement:
    d.require_involution()
    out = {}
    for w, r in a.terms.items():
        neg = tuple(-x for x in d.degree(w))
        ws = tuple(-x for x in reversed(w))
        c = d.act(neg, r)
        out[ws] = out[ws] + c if ws in out else c
    return GradedElement(d, out)


def _swap_factor(d, a, b):
    # adjacent (a, b) -> (b, a); only opposite kinds with distinct indices
    if a > 0:
        return d._mu[(a, -b)]
    return 1 / d._mu[(b, -a)]


def _contract(d, w, p):
    a = w[p]
    i = abs(a)
    e = d.t[i - 1] if a < 0 else d.act(tuple(1 if k == i - 1 else 0 for k in range(d.n)), d.t[i - 1])
    prefix = w[:p]
    return d.act(d.degree(prefix), e), prefix + w[p + 2:]


def _elimination_step(d, word, strategy):
    """Remove one opposite same-index pair from ``word``.

    Returns ``(coeff, shorter_word)`` with ``word = coeff * shorter_word``
    in A', or ``None`` when no index occurs with both kinds.
    """
    w = list(word)
    adj = [p for p in range(len(w) - 1) if w[p] == -w[p + 1]]
    if adj:
        p = adj[0] if strategy == LEFT else adj[-1]
        return _contract(d, tuple(w), p)
    best = None
    last = {}
    for pos, a in enumerate(w):
        prev = last.get(-a)
        if prev is not None and (last.get(a) is None or last[a] < prev):
            gap = pos - prev
            if best is None or gap < best[0] or (gap == best[0] and strategy == RIGHT):
                best = (gap, prev, pos)
        last[a] = pos
    if best is None:
        return None
    _, p, qpos = best
    scalar = Fraction(1)
    while True:
        if qpos == p + 1:
            e, rest = _contract(d, tuple(w), p)
            return e.scale(scalar) if scalar != 1 else e, rest
        kind = w[p] > 0
        left_ok = (w[p + 1] > 0) != kind
        right_ok = (w[qpos - 1] > 0) != (not kind)
        order = (left_ok, right_ok) if strategy == LEFT else (right_ok, left_ok)
        if order[0] or order[1]:
            use_left = (strategy == LEFT and left_ok) or (strategy == RIGHT and not right_ok)
            if use_left:
                scalar = scalar * _swap_factor(d, w[p], w[p + 1])
                w[p], w[p + 1] = w[p + 1], w[p]
                p += 1
            else:
                scalar = scalar * _swap_factor(d, w[qpos - 1], w[qpos])
                w[qpos - 1], w[qpos] = w[qpos], w[qpos - 1]
                qpos -= 1
            continue
        spots = [k for k in range(p + 1, qpos - 1)
                 if (w[k] > 0) == kind and (w[k + 1] > 0) != kind]
        k = spots[0] if strategy == LEFT else spots[-1]
        if w[k] == -w[k + 1]:
            e, rest = _contract(d, tuple(w), k)
            return e.scale(scalar), rest
        scalar = scalar * _swap_factor(d, w[k], w[k + 1])
        w[k], w[k + 1] = w[k + 1], w[k]


def _sort_to_spanning(d, word):
    """Move every Y left of every X; ``word`` has one kind per index."""
    w = list(word)
    scalar = Fraction(1)
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 1):
            if w[k] > 0 and w[k + 1] < 0:
                scalar = scalar * _swap_factor(d, w[k], w[k + 1])
                w[k], w[k + 1] = w[k + 1], w[k]
                changed = True
    return scalar, tuple(w)


def reduce_word(d: TGWCData, word, strategy=LEFT):
    """Rewrite a single word as ``coeff * spanning_word``."""
    if strategy not in STRATEGIES:
        raise InputError(f"unknown strategy {strategy!r}")
    memo = d._word_memo[strategy]
    word = tuple(word)
    hit = memo.get(word)
    if hit is not None:
        return hit
    step = _elimination_step(d, word, strategy)
    if step is None:
        scalar, target = _sort_to_spanning(d, word)
        out = (d.ring.const(scalar), target)
    else:
        coeff, rest = step
        c2, target = reduce_word(d, rest, strategy)
        out = (coeff * c2, target)
    memo[word] = out
    return out


def reduce_to_spanning(d: TGWCData, a: GradedElement, strategy=LEFT) -> GradedElement:
    if not a.is_homogeneous():
        raise DegreeError("reduce_to_spanning needs a homogeneous element")
    out = {}
    for w, r in a.terms.items():
        c, target = reduce_word(d, w, strategy)
        v = r * c
        out[target] = out[target] + v if target in out else v
    return GradedElement(d, out)


def project_to_base(d: TGWCData, a: GradedElement, strategy=LEFT) -> Polynomial:
    """The element of R equal to a degree-zero ``a``."""
    total = d.ring.zero()
    zero = (0,) * d.n
    for w, r in a.terms.items():
        if d.degree(w) != zero:
            raise DegreeError(f"word {format_word(w)} has nonzero degree")
        c, rest = reduce_word(d, w, strategy)
        assert not rest
        total = total + r * c
    return total


def shapovalov(d: TGWCData, a: GradedElement, b: GradedElement, strategy=LEFT) -> Polynomial:
    prod = multiply(d, star(d, a), b)
    return project_to_base(d, prod.component((0,) * d.n), strategy)


def _multiset_permutations(items):
    items = sorted(items)
    n = len(items)
    if n == 0:
        yield ()
        return
    counts = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                yield from rec(prefix)
                prefix.pop()
                counts[k] += 1

    yield from rec([])


def spanning_monomials(d: TGWCData, g):
    g = tuple(g)
    if len(g) != d.n:
        raise DegreeError(f"degree {g} has the wrong length")
    ys = [i + 1 for i, x in enumerate(g) for _ in range(-x) if x < 0]
    xs = [i + 1 for i, x in enumerate(g) for _ in range(x) if x > 0]
    ywords = [tuple(-i for i in p) for p in _multiset_permutations(ys)]
    xwords = list(_multiset_permutations(xs))
    return [yw + xw for yw in ywords for xw in xwords]


@dataclass
class Witness:
    word: tuple
    value: Polynomial


def ideal_witness(d: TGWCData, a: GradedElement, strategy=LEFT) -> Optional[Witness]:
    """First spanning monomial ``w`` with ``F(w, a) != 0``, or ``None``."""
    d.require_involution()
    g = a.degree()
    if g is None:
        return None
    neg = tuple(-x for x in g)
    for w in spanning_monomials(d, g):
        ws = tuple(-x for x in reversed(w))
        total = d.ring.zero()
        for v, r in a.terms.items():
            c, rest = reduce_word(d, ws + v, strategy)
            total = total + d.act(neg, r) * c
        if not total.is_zero():
            return Witness(w, total)
    return None


def is_in_ideal(d: TGWCData, a: GradedElement, strategy=LEFT) -> bool:
    return ideal_witness(d, a, strategy) is None


def equal_in_A(d: TGWCData, a: GradedElement, b: GradedElement) -> bool:
    """Equality in the quotient A = A'/I, checked degree by degree."""
    diff = a - b
    return all(is_in_ideal(d, diff.component(g)) for g in diff.degrees())


def _check_pair(d, i, j):
    d._check_index(i)
    d._check_index(j)
    if i == j:
        raise IndexRangeError("i and j must differ")


def prop33_element(d: TGWCData, i, j, coeffs) -> GradedElement:
    """``sum_k r_k X_i^(m-k) X_j X_i^k``."""
    _check_pair(d, i, j)
    coeffs = [d.ring(c) for c in coeffs]
    m = len(coeffs) - 1
    if m < 1:
        raise InputError("need at least two coefficients")
    terms = {}
    for k, r in enumerate(coeffs):
        terms[(i,) * (m - k) + (j,) + (i,) * k] = r
    return GradedElement(d, terms)


def prop33_check(d: TGWCData, i, j, coeffs) -> bool:
    """Ring-side criterion: ``sum_k mu_ij^k sigma_j^-1(r_k) sigma_i^(m-k)(t_j) == 0``."""
    _check_pair(d, i, j)
    coeffs = [d.ring(c) for c in coeffs]
    m = len(coeffs) - 1
    if m < 1:
        raise InputError("need at least two coefficients")
    return prop33_sum(d, i, j, coeffs).is_zero()


def prop33_sum(d, i, j, coeffs):
    mu = d.mu(i, j)
    ej = [0] * d.n
    ej[j - 1] = -1
    total = d.ring.zero()
    tj = d.t_of(j)
    m = len(coeffs) - 1
    for k, r in enumerate(coeffs):
        gi = [0] * d.n
        gi[i - 1] = m - k
        s = d.act(tuple(ej), r).scale(mu ** k)
        total = total + s * d.act(tuple(gi), tj)
    return total


# --- validation ----------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    pair: Optional[tuple] = None
    difference: Optional[Polynomial] = None
    detail: str = ""
    required: bool = True

    def as_dict(self):
        out = {"name": self.name, "passed": self.passed}
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.difference is not None:
            out["difference"] = str(self.difference)
        if self.detail:
            out["detail"] = self.detail
        if not self.required:
            out["required"] = False
        return out


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.passed for c in self.checks if c.required)

    def failures(self):
        return [c for c in self.checks if c.required and not c.passed]


def validate_tgwc(d: TGWCData) -> ValidationReport:
    rep = ValidationReport()
    for i in range(1, d.n + 1):
        rep.checks.append(Check("t_nonzero", not d.t_of(i).is_zero(), pair=(i,)))
    for (i, j), v in sorted(d._mu.items()):
        if i < j or d._mu[(j, i)] != v:
            rep.checks.append(Check("mu_nonzero", not is_zero(v), pair=(i, j),
                                    detail=format_scalar(v)))
    for i in range(1, d.n + 1):
        rep.checks.append(Check("inverse", verify_inverse(d.sigma_of(i)), pair=(i,)))
    rep.checks.append(Check("commuting", verify_commuting(d.sigma)))
    for i in range(1, d.n + 1):
        for j in range(i + 1, d.n + 1):
            lhs = d.t_of(i) * d.t_of(j)
            rhs = (d.sigma_of(j).inv()(d.t_of(i)) * d.sigma_of(i).inv()(d.t_of(j))).scale(
                d.mu(i, j) * d.mu(j, i))
            diff = lhs - rhs
            rep.checks.append(Check("consistency", diff.is_zero(), pair=(i, j),
                                    difference=None if diff.is_zero() else diff))
    rep.checks.append(Check("mu_symmetric", d.mu_symmetric, required=False,
                            detail="needed for the anti-involution and membership tests"))
    return rep
