"""Builders for the named families of TGWC data."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ParameterError
from .locfin import (DEFAULT_CAP, check_serre, independence_bound,
                     poly_cartan_matrix, serre_element, validate_gcm)
from .polyring import Polynomial, RingCtx, RingMap
from .scalars import QQ, QQ_q, RatFunc, format_scalar, is_zero, qbinomial
from .tgwc import TGWCData, validate_tgwc


def build_type_A2_example(field=QQ) -> TGWCData:
    """R = K[H], sigma_1(H) = H+1, sigma_2(H) = H-1, t = (H, H+1), mu_12 = 1."""
    R = RingCtx(["H"], field)
    H = R.gen("H")
    s1 = RingMap(R, [H + 1], [H - 1])
    s2 = RingMap(R, [H - 1], [H + 1])
    return TGWCData(R, [s1, s2], [H, H + 1], {(1, 2): 1})


@dataclass
class QWeylParams:
    """Parameters of the quantized Weyl algebra.

    ``qbar`` holds q_1..q_n; ``lam`` maps ``(i, j)`` with ``i < j`` to
    lambda_ij (lambda_ji is its inverse).
    """

    qbar: list
    lam: dict = field(default_factory=dict)
    field: object = QQ

    @property
    def n(self):
        return len(self.qbar)

    def lam_of(self, i, j):
        if i < j:
            return self.field(self.lam[(i, j)])
        return 1 / self.field(self.lam[(j, i)])

    def involution_holds(self):
        """lambda_ji == q_i * lambda_ij for all i < j."""
        return all(self.lam_of(j, i) == self.field(self.qbar[i - 1]) * self.lam_of(i, j)
                   for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1))


def build_quantized_weyl(p: QWeylParams, require_involution=True) -> TGWCData:
    n = p.n
    F = p.field
    qs = [F(x) for x in p.qbar]
    for i, qi in enumerate(qs, 1):
        if is_zero(qi) or qi == 1:
            raise ParameterError(f"q_{i} must not be 0 or 1")
    lam = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in p.lam:
                raise ParameterError(f"missing lambda_{i}{j}")
            v = F(p.lam[(i, j)])
            if is_zero(v):
                raise ParameterError(f"lambda_{i}{j} must be nonzero")
            lam[(i, j)] = v
    if require_involution and not p.involution_holds():
        raise ParameterError("involution condition lambda_ji = q_i lambda_ij fails")
    R = RingCtx([f"t{i}" for i in range(1, n + 1)], F)
    t = R.gens()
    sigma = []
    for i in range(1, n + 1):
        qi = qs[i - 1]
        fwd, inv = [], []
        for j in range(1, n + 1):
            tj = t[j - 1]
            if j < i:
                fwd.append(tj)
                inv.append(tj)
            elif j > i:
                fwd.append(tj.scale(qi))
                inv.append(tj.scale(1 / qi))
            else:
                tail = R.zero()
                for k in range(1, i):
                    tail = tail + t[k - 1].scale(qs[k - 1] - 1)
                fwd.append(R.one() + tj.scale(qi) + tail)
                inv.append((tj - R.one() - tail).scale(1 / qi))
        sigma.append(RingMap(R, fwd, inv))
    mu = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            mu[(i, j)] = 1 / lam[(i, j)]
            mu[(j, i)] = qs[i - 1] * lam[(i, j)]
    return TGWCData(R, sigma, t, mu)


def qweyl_relations(d: TGWCData, p: QWeylParams):
    """``X_iX_j - q_i lam_ij X_jX_i`` and ``Y_iY_j - lam_ij Y_jY_i`` for i < j."""
    out = []
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            qi = d.field(p.qbar[i - 1])
            lij = p.lam_of(i, j)
            out.append(d.X(i) * d.X(j) - d.ring.const(qi * lij) * d.X(j) * d.X(i))
            out.append(d.Y(i) * d.Y(j) - d.ring.const(lij) * d.Y(j) * d.Y(i))
    return out


@dataclass
class TqmuParams:
    C: list
    q: object = None
    mu: dict = field(default_factory=dict)

    @property
    def n(self):
        return len(self.C)

    def field(self):
        if self.q is None or isinstance(self.q, RatFunc):
            return QQ_q
        for v in self.mu.values():
            if isinstance(v, RatFunc):
                return QQ_q
        return QQ

    def q_value(self):
        F = self.field()
        return F.gen if self.q is None else F(self.q)

    def mu_of(self, i, j):
        key = (min(i, j), max(i, j))
        return self.field()(self.mu.get(key, self.mu.get((key[1], key[0]), 1)))


def generator_name(i, j, k):
    return f"H_{i}_{j}_{k}" if k >= 0 else f"H_{i}_{j}_m{-k}"


def _check_tqmu(p: TqmuParams):
    C = [list(map(int, row)) for row in p.C]
    validate_gcm(C)
    n = len(C)
    for i in range(n):
        for j in range(n):
            if C[i][j] != C[j][i]:
                raise ParameterError("the Cartan matrix must be symmetric")
    qv = p.q_value()
    if is_zero(qv):
        raise ParameterError("q must be nonzero")
    for key in p.mu:
        i, j = key
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise ParameterError(f"invalid mu index pair {key}")
        if (j, i) in p.mu and p.field()(p.mu[(j, i)]) != p.field()(p.mu[key]):
            raise ParameterError("mu must be symmetric")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if is_zero(p.mu_of(i, j)):
                raise ParameterError(f"mu_{i}{j} must be nonzero")
    return C, qv


def build_tqmu(p: TqmuParams) -> TGWCData:
    C, qv = _check_tqmu(p)
    F = p.field()
    n = len(C)
    blocks = []  # (i, j, [k values])
    names = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a = C[i - 1][j - 1]
            ks = list(range(a, -a + 1, 2))
            blocks.append((i, j, ks))
            names.extend(generator_name(i, j, k) for k in ks)
    R = RingCtx(names, F)
    gens = {nm: R.gen(nm) for nm in names}
    fwd = [[R.gen(x) for x in range(R.ngens)] for _ in range(n)]
    inv = [[R.gen(x) for x in range(R.ngens)] for _ in range(n)]
    for i, j, ks in blocks:
        mu = p.mu_of(i, j)
        sj, sj_inv = {}, {}
        for k in ks:
            h = gens[generator_name(i, j, k)]
            lower = gens[generator_name(i, j, k - 2)] if k - 2 >= ks[0] else R.zero()
            c = mu * qv ** k
            sj[k] = h.scale(c) + lower
            prev = sj_inv[k - 2] if k - 2 >= ks[0] else R.zero()
            sj_inv[k] = (h - prev).scale(1 / c)
        for k in ks:
            idx = R.index(generator_name(i, j, k))
            fwd[j - 1][idx] = sj[k]
            inv[j - 1][idx] = sj_inv[k]
            fwd[i - 1][idx] = sj_inv[k].scale(mu ** 2)
            inv[i - 1][idx] = sj[k].scale(1 / mu ** 2)
    sigma = [RingMap(R, fwd[r], inv[r]) for r in range(n)]
    t = []
    for i in range(1, n + 1):
        prod = R.one()
        for j in range(1, n + 1):
            if i < j:
                a = C[i - 1][j - 1]
                prod = prod * gens[generator_name(i, j, -a)]
            elif i > j:
                a = C[j - 1][i - 1]
                prod = prod * sigma[i - 1].inv()(gens[generator_name(j, i, -a)])
        t.append(prod)
    mu = {(i, j): p.mu_of(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return TGWCData(R, sigma, t, mu)


def tqmu_min_poly(p: TqmuParams, i, j) -> Polynomial:
    """The closed-form product (x - mu q^a)(x - mu q^(a+2))...(x - mu q^-a)."""
    F = p.field()
    xr = RingCtx(["x"], F)
    x = xr.gen(0)
    a = int(p.C[i - 1][j - 1])
    qv = p.q_value()
    mu = p.mu_of(i, j)
    out = xr.one()
    for k in range(a, -a + 1, 2):
        out = out * (x - xr.const(mu * qv ** k))
    return out


def tqmu_min_poly_qbinomial(p: TqmuParams, i, j) -> Polynomial:
    """The same polynomial written with q-binomial coefficients."""
    F = p.field()
    xr = RingCtx(["x"], F)
    a = int(p.C[i - 1][j - 1])
    m = 1 - a
    qv = p.q_value()
    mu = p.mu_of(i, j)
    terms = {}
    for k in range(m + 1):
        c = (-1) ** k * mu ** k * qbinomial(m, k, qv)
        if not is_zero(c):
            terms[(m - k,)] = c
    return Polynomial(xr, terms)


def quantum_serre_coefficients(p: TqmuParams, i, j):
    a = int(p.C[i - 1][j - 1])
    m = 1 - a
    qv = p.q_value()
    return [(-1) ** k * qbinomial(m, k, qv) for k in range(m + 1)]


@dataclass
class Theorem53Report:
    params: TqmuParams
    valid: bool = False
    locally_finite: bool = False
    entries: list = field(default_factory=list)
    error: Optional[str] = None

    @property
    def ok(self):
        return self.valid and self.locally_finite and all(e["ok"] for e in self.entries)


def verify_theorem_5_3(p: TqmuParams, cap=DEFAULT_CAP) -> Theorem53Report:
    """Recompute the polynomial Cartan matrix of T_{q,mu}(C) and compare with closed forms.

    Raises :class:`CapExceededError` if some V_ij does not close within ``cap``.
    """
    d = build_tqmu(p)
    rep = Theorem53Report(p)
    rep.valid = validate_tgwc(d).ok
    P = poly_cartan_matrix(d, cap)
    rep.locally_finite = True
    n = p.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            a = int(p.C[i - 1][j - 1])
            pij = P[i, j]
            product = tqmu_min_poly(p, i, j)
            expansion = tqmu_min_poly_qbinomial(p, i, j)
            serre = serre_element(d, P, i, j)
            expected = quantum_serre_coefficients(p, i, j)
            verdict = check_serre(d, serre)
            indep = [independence_bound(d, i, j, m) for m in range(1 - a)]
            at_bound = independence_bound(d, i, j, 1 - a)
            entry = {
                "pair": (i, j),
                "p_ij": str(pij),
                "matches_product": pij == product,
                "matches_qbinomial": pij == expansion,
                "serre_coefficients": [format_scalar(c) for c in serre.coefficients],
                "serre_mu_free": serre.coefficients == expected,
                "serre_in_ideal": verdict.ok,
                "independent_below": all(indep),
                "dependent_at_bound": not at_bound,
            }
            entry["ok"] = all(v for k, v in entry.items()
                              if k not in ("pair", "p_ij", "serre_coefficients"))
            rep.entries.append(entry)
    return rep

