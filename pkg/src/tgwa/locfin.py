"""Local finiteness, minimal polynomials, polynomial Cartan matrices, Serre elements."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (CapExceededError, InputError, InternalInconsistencyError,
                     NotAGCMError)
from .polyring import Polynomial, RingCtx
from .scalars import is_zero
from .tgwc import (GradedElement, TGWCData, ideal_witness, prop33_check,
                   prop33_element, star)

DEFAULT_CAP = 32


class _Echelon:
    """Incremental exact elimination that remembers each row as a combination of inputs."""

    def __init__(self):
        self.rows = []  # (pivot monomial, vector dict, combination list)
        self.count = 0

    def reduce(self, vec):
        vec = dict(vec)
        combo = [Fraction(0)] * self.count + [Fraction(1)]
        for pivot, row, rc in self.rows:
            c = vec.get(pivot)
            if c is None or is_zero(c):
                continue
            for e, v in row.items():
                nv = vec.get(e, 0) - c * v
                if is_zero(nv):
                    vec.pop(e, None)
                else:
                    vec[e] = nv
            for k, v in enumerate(rc):
                combo[k] = combo[k] - c * v
        return vec, combo

    def add(self, vec):
        """Insert ``vec``; return ``None`` if independent, else the dependency.

        The dependency ``combo`` satisfies ``sum combo[k] * input_k == 0``
        with ``combo[-1] == 1``.
        """
        red, combo = self.reduce(vec)
        if not red:
            return combo
        pivot = max(red)
        lead = red[pivot]
        row = {e: v / lead for e, v in red.items()}
        rc = [v / lead for v in combo]
        self.rows.append((pivot, row, rc))
        self.count += 1
        return None


@dataclass
class SpanBasis:
    i: int
    j: int
    basis: list
    iterates: list
    relation: list  # monic, lowest degree first

    @property
    def dimension(self):
        return len(self.basis)


def _iterates_closure(d, i, j, cap):
    ech = _Echelon()
    s = d.sigma_of(i)
    v = d.t_of(j)
    iterates = []
    while True:
        iterates.append(v)
        dep = ech.add(v.terms)
        if dep is not None:
            return ech, iterates, dep
        if ech.count > cap:
            raise CapExceededError(
                f"V_{i}{j} has dimension > {cap} (not locally finite up to cap)")
        v = s(v)


def vij_closure(d: TGWCData, i, j, cap=DEFAULT_CAP) -> SpanBasis:
    """Span of ``sigma_i^k(t_j)``; forward iteration until the first dependency."""
    if cap < 1:
        raise InputError("cap must be positive")
    ech, iterates, dep = _iterates_closure(d, i, j, cap)
    ctx = d.ring
    basis = [Polynomial(ctx, row) for _, row, _ in ech.rows]
    return SpanBasis(i, j, basis, iterates, list(dep))


def _x_ring(d):
    return RingCtx(["x"], d.field)


def minimal_polynomial(d: TGWCData, i, j, cap=DEFAULT_CAP) -> Polynomial:
    """Monic ``p`` of least degree with ``p(sigma_i)(t_j) == 0``, as a polynomial in x."""
    span = vij_closure(d, i, j, cap)
    xr = _x_ring(d)
    return Polynomial(xr, {(k,): c for k, c in enumerate(span.relation) if not is_zero(c)})


def rank_of_iterates(d: TGWCData, i, j, count):
    """Rank of ``{sigma_i^l(t_j) : 0 <= l < count}``."""
    ech = _Echelon()
    s = d.sigma_of(i)
    v = d.t_of(j)
    rank = 0
    for _ in range(count):
        if ech.add(v.terms) is None:
            rank += 1
        v = s(v)
    return rank


def independence_bound(d: TGWCData, i, j, m) -> bool:
    """Whether ``{X_i^(m-k) X_j X_i^k}_{k=0..m}`` is linearly independent in A."""
    if m < 0:
        raise InputError("m must be nonnegative")
    return rank_of_iterates(d, i, j, m + 1) == m + 1


class PolyCartanMatrix:
    """Matrix of minimal polynomials ``p_ij`` (monic, in one variable x)."""

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        self.n = len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def degree(self, i, j):
        return self[i, j].total_degree()

    def violations(self):
        out = []
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                p = self[i, j]
                if is_zero(p.constant_coeff()):
                    out.append(f"p_{i}{j} has zero constant term")
                if i == j:
                    continue
                if self.degree(i, j) < 1:
                    out.append(f"deg p_{i}{j} < 1")
                if (self.degree(i, j) == 1) != (self.degree(j, i) == 1):
                    out.append(f"deg p_{i}{j} = 1 but deg p_{j}{i} != 1 (or vice versa)")
        return out

    def is_valid(self):
        return not self.violations()

    def rows_as_strings(self):
        return [[str(p) for p in row] for row in self.entries]

    def __repr__(self):
        return f"PolyCartanMatrix({self.rows_as_strings()!r})"


def poly_cartan_matrix(d: TGWCData, cap=DEFAULT_CAP) -> PolyCartanMatrix:
    P = PolyCartanMatrix([[minimal_polynomial(d, i, j, cap) for j in range(1, d.n + 1)]
                          for i in range(1, d.n + 1)])
    bad = P.violations()
    if bad:
        # a valid domain datum always gives a polynomial Cartan matrix
        raise InternalInconsistencyError("polynomial Cartan matrix check failed: " + "; ".join(bad))
    return P


def validate_gcm(C):
    n = len(C)
    for i in range(n):
        if len(C[i]) != n:
            raise NotAGCMError("matrix is not square")
        if C[i][i] != 2:
            raise NotAGCMError(f"diagonal entry ({i + 1},{i + 1}) is not 2")
        for j in range(n):
            if i == j:
                continue
            if C[i][j] > 0:
                raise NotAGCMError(f"entry ({i + 1},{j + 1}) is positive")
            if (C[i][j] == 0) != (C[j][i] == 0):
                raise NotAGCMError(f"zero pattern not symmetric at ({i + 1},{j + 1})")
    return C


def cartan_of(P: PolyCartanMatrix):
    C = [[2 if i == j else 1 - P.degree(i, j) for j in range(1, P.n + 1)]
         for i in range(1, P.n + 1)]
    return validate_gcm(C)


@dataclass
class SerreElement:
    i: int
    j: int
    lambdas: list      # lambda^(0) = 1, ..., lambda^(m)
    coefficients: list  # lambda^(k) * mu_ij^(-k)
    x_form: GradedElement
    y_form: GradedElement

    @property
    def m(self):
        return len(self.coefficients) - 1

    @classmethod
    def from_coefficients(cls, d: TGWCData, i, j, coefficients, lambdas=None):
        coefficients = [d.field(c) for c in coefficients]
        xf = prop33_element(d, i, j, coefficients)
        return cls(i, j, list(lambdas or []), coefficients, xf, star(d, xf))


def serre_element(d: TGWCData, P: PolyCartanMatrix, i, j) -> SerreElement:
    p = P[i, j]
    coeffs = p.univariate_coefficients()
    m = len(coeffs) - 1
    lambdas = [coeffs[m - k] for k in range(m + 1)]
    mu = d.mu(i, j)
    scaled = [lam / mu ** k for k, lam in enumerate(lambdas)]
    return SerreElement.from_coefficients(d, i, j, scaled, lambdas)


def serre_elements(d: TGWCData, P: PolyCartanMatrix):
    return [serre_element(d, P, i, j)
            for i in range(1, d.n + 1) for j in range(1, d.n + 1) if i != j]


@dataclass
class SerreVerdict:
    element: SerreElement
    ring_criterion: bool
    pairing_x: bool
    pairing_y: bool

    @property
    def ok(self):
        return self.ring_criterion and self.pairing_x and self.pairing_y


def check_serre(d: TGWCData, e: SerreElement) -> SerreVerdict:
    crit = prop33_check(d, e.i, e.j, e.coefficients)
    px = ideal_witness(d, e.x_form) is None
    py = ideal_witness(d, e.y_form) is None
    if not (crit == px == py):
        raise InternalInconsistencyError(
            f"routes disagree for ({e.i},{e.j}): ring criterion {crit}, "
            f"X-form pairing {px}, Y-form pairing {py}")
    return SerreVerdict(e, crit, px, py)


def verify_serre(d: TGWCData, e: SerreElement) -> bool:
    return check_serre(d, e).ok
