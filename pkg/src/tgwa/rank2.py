"""Rank-two presentations: Serre-type rewriting, normal forms, and property checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InputError, UnsupportedShapeError
from .locfin import DEFAULT_CAP, poly_cartan_matrix, serre_element
from .polyring import Polynomial
from .scalars import format_scalar, is_zero
from .tgwc import (GradedElement, TGWCData, format_element, format_word,
                   group_action, is_in_ideal, star)

X1, X2 = 1, 2
# s1 = X2 X1^2 - xi1 X1 X2 X1 - xi2 X1^2 X2, s2 = X2^2 X1 - eta1 X2 X1 X2 - eta2 X1 X2^2
RULE_LHS = ((X2, X1, X1), (X2, X2, X1))
RULE_RHS = (((X1, X2, X1), (X1, X1, X2)), ((X2, X1, X2), (X1, X2, X2)))


def _require_rank2(d):
    if d.n != 2:
        raise InputError("rank-2 machinery needs n = 2")


def inversion_length(word) -> int:
    """Number of positions ``a < b`` with ``word[a] = X_2`` and ``word[b] = X_1``."""
    seen_x2 = 0
    total = 0
    for a in word:
        if a == X2:
            seen_x2 += 1
        elif a == X1:
            total += seen_x2
        else:
            raise InputError("inversion_length takes words in X(1), X(2) only")
    return total


@dataclass
class SerrePair:
    data: TGWCData
    xi: tuple
    eta: tuple

    def __post_init__(self):
        _require_rank2(self.data)
        F = self.data.field
        self.xi = tuple(F(c) for c in self.xi)
        self.eta = tuple(F(c) for c in self.eta)

    @property
    def s1(self):
        d = self.data
        return d.element({(X2, X1, X1): d.ring.one(),
                          (X1, X2, X1): d.ring.const(-self.xi[0]),
                          (X1, X1, X2): d.ring.const(-self.xi[1])})

    @property
    def s2(self):
        d = self.data
        return d.element({(X2, X2, X1): d.ring.one(),
                          (X2, X1, X2): d.ring.const(-self.eta[0]),
                          (X1, X2, X2): d.ring.const(-self.eta[1])})

    def generators(self):
        d = self.data
        return [self.s1, self.s2, star(d, self.s1), star(d, self.s2)]

    def rule_coefficients(self, rule):
        return self.xi if rule == 0 else self.eta

    def rule_element(self, rule):
        return self.s1 if rule == 0 else self.s2


@dataclass
class ReductionStep:
    left: tuple
    rule: int
    right: tuple
    coeff: Polynomial

    def delta(self, sp: SerrePair) -> GradedElement:
        """The ideal element ``coeff * left * s * right`` subtracted by this step."""
        d = sp.data
        return d.scalar(self.coeff) * d.word(self.left) * sp.rule_element(self.rule) * d.word(self.right)


@dataclass
class NormalForm:
    degree: tuple
    beta: list
    log: list = field(default_factory=list)

    def basis_word(self, i):
        g1, g2 = self.degree
        return (X1,) * (g1 - i) + (X2, X1) * i + (X2,) * (g2 - i)

    def as_element(self, d: TGWCData) -> GradedElement:
        return d.element({self.basis_word(i): b for i, b in enumerate(self.beta)})

    def __eq__(self, other):
        return (isinstance(other, NormalForm) and self.degree == other.degree
                and self.beta == other.beta)


def _find_redex(word, leftmost):
    hits = []
    for p in range(len(word) - 2):
        sub = word[p:p + 3]
        for rule, lhs in enumerate(RULE_LHS):
            if sub == lhs:
                hits.append((p, rule))
    if not hits:
        return None
    return hits[0] if leftmost else hits[-1]


def reduce_rank2(sp: SerrePair, a: GradedElement, leftmost=True) -> NormalForm:
    """Rewrite ``a`` with the two Serre-type rules until only normal-form words remain."""
    d = sp.data
    g = a.degree()
    if g is None:
        g = (0, 0)
    if g[0] < 0 or g[1] < 0:
        raise InputError("reduce_rank2 needs nonnegative degree")
    for w in a.terms:
        for letter in w:
            if letter not in (X1, X2):
                raise InputError("reduce_rank2 takes words in X(1), X(2) only")
    work = dict(a.terms)
    log = []
    while True:
        target = None
        # largest inversion length first keeps the work list small
        for w in sorted(work, key=lambda w: (-inversion_length(w), w)):
            hit = _find_redex(w, leftmost)
            if hit is not None:
                target = (w, hit)
                break
        if target is None:
            break
        w, (p, rule) = target
        c = work.pop(w)
        left, right = w[:p], w[p + 3:]
        log.append(ReductionStep(left, rule, right, c))
        for coef, mid in zip(sp.rule_coefficients(rule), RULE_RHS[rule]):
            nw = left + mid + right
            val = c.scale(coef)
            val = work[nw] + val if nw in work else val
            if val.is_zero():
                work.pop(nw, None)
            else:
                work[nw] = val
    g1, g2 = g
    nf = NormalForm((g1, g2), [d.ring.zero()] * (min(g1, g2) + 1), log)
    index = {nf.basis_word(i): i for i in range(min(g1, g2) + 1)}
    for w, c in work.items():
        if w not in index:
            raise InputError(f"irreducible word {format_word(w)} is not of normal-form shape")
        nf.beta[index[w]] = c
    return nf


def check_P1a(d: TGWCData):
    """``sigma_1 sigma_2 (t_1) == lam * t_1`` for a nonzero scalar ``lam``."""
    _require_rank2(d)
    t1 = d.t_of(1)
    img = group_action(d, (1, 1), t1)
    if t1.is_zero() or img.is_zero():
        return False, None
    e, c = t1.sorted_terms()[0]
    lam = img.coefficient(e) / c
    if not is_zero(lam) and img == t1.scale(lam):
        return True, lam
    return False, None


def _affine_row(p: Polynomial):
    n = p.ctx.ngens
    row = [Fraction(0)] * (n + 1)
    for e, c in p.terms.items():
        s = sum(e)
        if s == 0:
            row[n] = c
        elif s == 1:
            row[e.index(1)] = c
        else:
            raise UnsupportedShapeError("check_P1b handles affine-linear t_1 and sigma_1(t_1) only")
    return row


def _rank(rows):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if not is_zero(rows[r][col])), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and not is_zero(rows[r][col]):
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def check_P1b(d: TGWCData) -> bool:
    """Affine-linear case: ``t_1`` is a prime element not associate to ``sigma_1(t_1)``.

    A nonconstant affine-linear polynomial is irreducible, so ``R t_1`` is
    prime.  Two such polynomials are associates exactly when their
    coefficient rows (linear part plus constant) are proportional, so the
    test is a rank computation on a 2 x (m+1) matrix.
    """
    _require_rank2(d)
    t1 = d.t_of(1)
    s1t1 = d.sigma_of(1)(t1)
    r1 = _affine_row(t1)
    r2 = _affine_row(s1t1)
    if all(is_zero(x) for x in r1[:-1]):
        return False
    return _rank([r1, r2]) == 2


def check_P2(d: TGWCData, sp: SerrePair) -> bool:
    _require_rank2(d)
    if any(is_zero(c) for c in sp.xi + sp.eta):
        return False
    return is_in_ideal(d, sp.s1) and is_in_ideal(d, sp.s2)


def serre_pair_from_cartan(d: TGWCData, cap=DEFAULT_CAP) -> SerrePair:
    """Normalize the generalized Serre elements into the ``s_1, s_2`` shape.

    Needs ``deg p_12 = deg p_21 = 2``.
    """
    _require_rank2(d)
    P = poly_cartan_matrix(d, cap)
    e12 = serre_element(d, P, 1, 2)
    e21 = serre_element(d, P, 2, 1)
    if e12.m != 2 or e21.m != 2:
        raise UnsupportedShapeError("need a type A2 polynomial Cartan matrix (deg p_12 = deg p_21 = 2)")
    # e12 = c0 X1^2 X2 + c1 X1 X2 X1 + c2 X2 X1^2, normalized on X2 X1^2
    c0, c1, c2 = e12.coefficients
    xi = (-c1 / c2, -c0 / c2)
    # e21 = c0 X2^2 X1 + c1 X2 X1 X2 + c2 X1 X2^2
    c0, c1, c2 = e21.coefficients
    eta = (-c1 / c0, -c2 / c0)
    return SerrePair(d, xi, eta)


@dataclass
class Relation:
    family: str
    lhs: str
    rhs: str
    verified: bool

    def as_dict(self):
        return {"family": self.family, "relation": f"{self.lhs} = {self.rhs}",
                "verified": self.verified}


@dataclass
class Presentation:
    ok: bool
    properties: dict
    generators: list = field(default_factory=list)
    relations: list = field(default_factory=list)
    serre: Optional[SerrePair] = None
    diagnosis: str = ""


def presentation(d: TGWCData, cap=DEFAULT_CAP) -> Presentation:
    """Generators and relations of the TGWA when (P1a), (P1b), (P2) hold."""
    _require_rank2(d)
    props = {}
    p1a, lam = check_P1a(d)
    props["P1a"] = p1a
    if lam is not None:
        props["P1a_scalar"] = format_scalar(lam)
    try:
        props["P1b"] = check_P1b(d)
    except UnsupportedShapeError as exc:
        props["P1b"] = False
        props["P1b_error"] = str(exc)
    try:
        sp = serre_pair_from_cartan(d, cap)
        props["P2"] = check_P2(d, sp)
    except UnsupportedShapeError as exc:
        sp = None
        props["P2"] = False
        props["P2_error"] = str(exc)
    failed = [k for k in ("P1a", "P1b", "P2") if not props[k]]
    if failed:
        return Presentation(False, props, serre=sp,
                            diagnosis="property " + ", ".join(failed) + " failed; no presentation claimed")
    R = d.ring
    gens = list(R.names) + ["X(1)", "X(2)", "Y(1)", "Y(2)"]
    rels = []
    for i in (1, 2):
        s = d.sigma_of(i)
        for nm, fwd, inv in zip(R.names, s.forward, s.inverse):
            g = R.gen(nm)
            lhs = d.X(i) * d.scalar(g)
            rels.append(Relation("a", f"X({i})*{nm}", format_element(d.scalar(fwd) * d.X(i)),
                                 lhs == d.scalar(fwd) * d.X(i)))
            lhs = d.Y(i) * d.scalar(g)
            rels.append(Relation("a", f"Y({i})*{nm}", format_element(d.scalar(inv) * d.Y(i)),
                                 lhs == d.scalar(inv) * d.Y(i)))
    for i in (1, 2):
        ti = d.t_of(i)
        sti = d.sigma_of(i)(ti)
        rels.append(Relation("b", f"Y({i})*X({i})", str(ti), True))
        rels.append(Relation("b", f"X({i})*Y({i})", str(sti), True))
    for i, j in ((1, 2), (2, 1)):
        rels.append(Relation("c", f"X({i})*Y({j})",
                             format_element(d.scalar(d.ring.const(d.mu(i, j))) * d.Y(j) * d.X(i)), True))
    for name, el in zip(("s1", "s2", "s1*", "s2*"), sp.generators()):
        rels.append(Relation("serre:" + name, format_element(el), "0", is_in_ideal(d, el)))
    ok = all(r.verified for r in rels)
    return Presentation(ok, props, gens, rels, sp,
                        "" if ok else "a relation failed re-verification")
