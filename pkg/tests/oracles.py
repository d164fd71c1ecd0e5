"""Independent reference computations built on sympy.

None of these helpers call back into the package's arithmetic; values
cross the boundary only as strings.
"""

import sympy as sp

q = sp.Symbol("q")
x = sp.Symbol("x")


def to_sympy(obj, names=()):
    """Convert a printed scalar or polynomial into a sympy expression."""
    text = str(obj).replace("^", "**")
    local = {n: sp.Symbol(n) for n in names}
    local["q"] = q
    return sp.sympify(text, locals=local)


def same(a, b):
    return sp.simplify(sp.together(a - b)) == 0


def qbinomial_product(m):
    """Coefficients of (x + q^(-m+1)) (x + q^(-m+3)) ... (x + q^(m-1)), lowest first."""
    prod = sp.Integer(1)
    for j in range(m):
        prod *= x + q ** (-m + 1 + 2 * j)
    poly = sp.Poly(sp.expand(prod), x)
    return [sp.expand(poly.coeff_monomial(x ** k)) for k in range(m + 1)]


def gaussian_binomial(m, k):
    """sympy's q-analogue in the q^2 convention, recentred: [m k]_q = q^(-k(m-k)) * binom_{q^2}."""
    v = sp.Symbol("v")
    num = sp.Integer(1)
    den = sp.Integer(1)
    for r in range(k):
        num *= 1 - v ** (m - r)
        den *= 1 - v ** (r + 1)
    g = sp.cancel(num / den).subs(v, q ** 2)
    return sp.expand(sp.cancel(g * q ** (-k * (m - k))))


def apply_map(images, expr, names):
    """Simultaneous substitution of generator images."""
    syms = [sp.Symbol(n) for n in names]
    return sp.expand(expr.subs(dict(zip(syms, images)), simultaneous=True))


def minimal_polynomial(images, t, names, limit=12):
    """Least monic p with p(sigma)(t) = 0, by nullspaces of growing iterate matrices."""
    syms = [sp.Symbol(n) for n in names]
    iterates = [sp.expand(t)]
    for m in range(1, limit + 1):
        iterates.append(apply_map(images, iterates[-1], names))
        polys = [sp.Poly(e, *syms) if syms else sp.Poly(e, x) for e in iterates]
        monos = sorted({mono for p in polys for mono in p.monoms()})
        M = sp.Matrix([[p.coeff_monomial(mono) if syms else p.coeff_monomial(1)
                        for p in polys] for mono in monos])
        null = M.nullspace()
        if null:
            v = null[0]
            v = v / v[m]
            return sp.expand(sum(sp.cancel(v[k]) * x ** k for k in range(m + 1)))
    raise AssertionError("no dependence found")


def sigma_images(d, i):
    names = d.ring.names
    return [to_sympy(p, names) for p in d.sigma_of(i).forward]
