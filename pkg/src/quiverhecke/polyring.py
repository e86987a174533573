"""
Exact sparse multivariate polynomials and Demazure operators.

P_n = Z[X_1, ..., X_n] with the symmetric group permuting the X block;
an optional tail of named parameter variables (z_1, ..., or q, t, ...)
is carried along untouched by the group action.  Coefficients are exact
(int, promoted to Fraction on demand).  Each X variable sits in degree
2, parameters declare their own degrees.

The Demazure operator is d_i(P) = (P - s_i(P)) / (X_{i+1} - X_i); the
divisions here are exact by antisymmetry and are checked by assertion.
"""

from __future__ import annotations

from fractions import Fraction

from .coxeter import Permutation
from .laurent import Laurent, geometric_truncated, series_product


class MPoly:
    """Sparse polynomial in X_1..X_nx plus parameters, exact coefficients."""

    __slots__ = ("nx", "params", "terms")

    def __init__(self, nx, params=(), terms=None):
        self.nx = nx
        self.params = tuple(params)
        self.terms = {}
        if terms:
            width = nx + len(self.params)
            for exps, c in terms.items():
                assert len(exps) == width
                if c != 0:
                    self.terms[tuple(exps)] = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nx, params=()):
        return MPoly(nx, params)

    @staticmethod
    def const(c, nx, params=()):
        p = MPoly(nx, params)
        if c != 0:
            p.terms[(0,) * (nx + len(p.params))] = c
        return p

    @staticmethod
    def one(nx, params=()):
        return MPoly.const(1, nx, params)

    @staticmethod
    def x(i, nx, params=()):
        """The variable X_i (1-indexed)."""
        assert 1 <= i <= nx
        exps = [0] * (nx + len(params))
        exps[i - 1] = 1
        return MPoly(nx, params, {tuple(exps): 1})

    @staticmethod
    def param(name, nx, params):
        params = tuple(params)
        exps = [0] * (nx + len(params))
        exps[nx + params.index(name)] = 1
        return MPoly(nx, params, {tuple(exps): 1})

    def _like(self, terms):
        p = MPoly(self.nx, self.params)
        p.terms = terms
        return p

    def copy(self):
        return self._like(dict(self.terms))

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other, self.nx, self.params)
        if not isinstance(other, MPoly):
            return NotImplemented
        return (self.nx, self.params, self.terms) == (other.nx, other.params, other.terms)

    def __hash__(self):
        return hash((self.nx, self.params, frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        assert self.nx == other.nx and self.params == other.params

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other, self.nx, self.params)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other, self.nx, self.params)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MPoly.zero(self.nx, self.params)
            return self._like({e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        assert k >= 0
        out = MPoly.one(self.nx, self.params)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ----------------------------------------------------

    def degree(self, param_degrees=None):
        """Total degree with deg X_i = 2; parameter degrees default to 0.

        Returns the max over terms; -1 for the zero polynomial.
        """
        if not self.terms:
            return -1
        pdeg = tuple((param_degrees or {}).get(name, 0) for name in self.params)
        best = None
        for e in self.terms:
            d = 2 * sum(e[: self.nx]) + sum(a * b for a, b in zip(e[self.nx:], pdeg))
            best = d if best is None else max(best, d)
        return best

    def x_degree(self):
        """Max total degree in the X block alone (1 per power)."""
        if not self.terms:
            return -1
        return max(sum(e[: self.nx]) for e in self.terms)

    def coefficients_in_x(self, i):
        """Decompose as a polynomial in X_i: {k: coefficient poly with X_i^0}."""
        out = {}
        for e, c in self.terms.items():
            k = e[i - 1]
            e0 = e[: i - 1] + (0,) + e[i:]
            d = out.setdefault(k, {})
            d[e0] = d.get(e0, 0) + c
        return {k: self._like({e: c for e, c in d.items() if c != 0}) for k, d in out.items()}

    def substitute_x(self, i, value):
        """Substitute the polynomial `value` for X_i."""
        out = MPoly.zero(self.nx, self.params)
        for k, coeff in self.coefficients_in_x(i).items():
            out = out + coeff * value ** k
        return out

    def evaluate(self, x_values, param_values=()):
        """Full evaluation at numeric points."""
        vals = tuple(x_values) + tuple(param_values)
        assert len(vals) == self.nx + len(self.params)
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def map_coefficients(self, fn):
        out = {}
        for e, c in self.terms.items():
            c2 = fn(c)
            if c2 != 0:
                out[e] = c2
        return self._like(out)

    # -- group action and Demazure operators --------------------------

    def act(self, w: Permutation):
        """Apply a permutation to the X block: X_i -> X_{w(i)}."""
        assert w.n <= self.nx
        out = {}
        for e, c in self.terms.items():
            xs = list(e[: self.nx])
            new = list(xs)
            for i in range(w.n):
                new[w.images[i] - 1] = xs[i]
            out[tuple(new) + e[self.nx:]] = c
        return self._like(out)

    def act_simple(self, i):
        """Swap X_i and X_{i+1}."""
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i - 1], e2[i] = e2[i], e2[i - 1]
            out[tuple(e2)] = c
        return self._like(out)

    def demazure(self, i):
        """d_i(P) = (P - s_i(P)) / (X_{i+1} - X_i), exact."""
        assert 1 <= i < self.nx
        diff = self - self.act_simple(i)
        return _divide_by_x_difference(diff, i + 1, i)

    def demazure_word(self, word):
        """Compose Demazure operators along a word: d_{i_1} o ... o d_{i_r}."""
        out = self
        for i in reversed(word):
            out = out.demazure(i)
        return out

    def demazure_perm(self, w: Permutation):
        """d_w along the canonical reduced word of w."""
        return self.demazure_word(w.canonical_word())

    def is_symmetric(self):
        return all(self.act_simple(i) == self for i in range(1, self.nx))

    # -- display ------------------------------------------------------

    def sorted_terms(self):
        """Graded-lexicographic term order (total degree, then exponents)."""
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(item[0]), item[0]),
            reverse=True,
        )

    def var_names(self):
        return tuple(f"X{i}" for i in range(1, self.nx + 1)) + self.params

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.var_names()
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out


def _divide_by_x_difference(p: MPoly, a: int, b: int) -> MPoly:
    """Exact division of p by (X_a - X_b); asserts zero remainder."""
    if p.is_zero():
        return p
    coeffs = p.coefficients_in_x(a)
    d = max(coeffs)
    xb = MPoly.x(b, p.nx, p.params)
    quot_coeffs = {}
    carry = MPoly.zero(p.nx, p.params)  # quotient coefficient one degree up
    for k in range(d, 0, -1):
        q = coeffs.get(k, MPoly.zero(p.nx, p.params)) + xb * carry
        quot_coeffs[k - 1] = q
        carry = q
    remainder = coeffs.get(0, MPoly.zero(p.nx, p.params)) + xb * carry
    assert remainder.is_zero(), "division by (X_a - X_b) is not exact"
    xa = MPoly.x(a, p.nx, p.params)
    out = MPoly.zero(p.nx, p.params)
    for k, q in quot_coeffs.items():
        out = out + q * xa ** k
    return out


def divide_exact_by_x_difference(p: MPoly, a: int, b: int) -> MPoly:
    return _divide_by_x_difference(p, a, b)


def try_divide_by_x_difference(p: MPoly, a: int, b: int):
    """Quotient p / (X_a - X_b) if the division is exact, else None."""
    if p.is_zero():
        return p
    coeffs = p.coefficients_in_x(a)
    d = max(coeffs)
    xb = MPoly.x(b, p.nx, p.params)
    quot_coeffs = {}
    carry = MPoly.zero(p.nx, p.params)
    for k in range(d, 0, -1):
        q = coeffs.get(k, MPoly.zero(p.nx, p.params)) + xb * carry
        quot_coeffs[k - 1] = q
        carry = q
    remainder = coeffs.get(0, MPoly.zero(p.nx, p.params)) + xb * carry
    if not remainder.is_zero():
        return None
    xa = MPoly.x(a, p.nx, p.params)
    out = MPoly.zero(p.nx, p.params)
    for k, q in quot_coeffs.items():
        out = out + q * xa ** k
    return out


def staircase_monomial(n, params=()):
    """X_2 * X_3^2 * ... * X_n^{n-1}."""
    exps = [0] * (n + len(params))
    for i in range(2, n + 1):
        exps[i - 1] = i - 1
    return MPoly(n, params, {tuple(exps): 1})


def schubert_basis_element(w: Permutation, n: int) -> MPoly:
    """d_w applied to the staircase monomial."""
    return staircase_monomial(n).demazure_perm(w)


def schubert_coordinates(p: MPoly, n: int):
    """Write p = sum_w Q_w * b_w with Q_w symmetric, b_w the Schubert basis.

    Coordinates are extracted triangularly: running through w by
    increasing length, Q_w = d_{w0 w^{-1}} applied to the residual.
    Asserts that each coordinate is symmetric and the residual vanishes.
    """
    w0 = Permutation.longest(n)
    residual = p
    coords = {}
    for w in sorted(Permutation.all(n), key=lambda u: (u.length(), u.images)):
        q = residual.demazure_perm(w0 * w.inverse())
        assert q.is_symmetric()
        if not q.is_zero():
            coords[w] = q
            residual = residual - q * schubert_basis_element(w, n)
    assert residual.is_zero()
    return coords


def grdim_polynomial_ring(n: int, cutoff: int) -> Laurent:
    """Graded dimension of P_n up to q-degree cutoff (deg X = 2): 1/(1-q)^n.

    Powers are in q; deg X_i = 2 means X_i contributes q^1 here because
    graded dimensions are usually quoted in q = v^2.  We keep v-powers:
    the returned series is in v with X_i contributing v^2.
    """
    return series_product(
        (geometric_truncated(2, cutoff) for _ in range(n)), cutoff
    )


def grdim_symmetric_ring(n: int, cutoff: int) -> Laurent:
    """Graded dimension of P_n^{S_n}: prod_i 1/(1-q^i), in v-powers (q = v^2)."""
    return series_product(
        (geometric_truncated(2 * i, cutoff) for i in range(1, n + 1)), cutoff
    )


def count_monomials_by_degree(n: int, cutoff: int) -> Laurent:
    """Enumerative oracle for grdim P_n: count monomials, v-degree 2*|a|."""
    counts = {}

    def rec(var, total):
        if var == n:
            counts[2 * total] = counts.get(2 * total, 0) + 1
            return
        k = 0
        while 2 * (total + k) <= cutoff:
            rec(var + 1, total + k)
            k += 1

    rec(0, 0)
    return Laurent(counts)


def elementary_symmetric(r: int, nx: int, params=()) -> MPoly:
    """e_r(X_1, ..., X_nx)."""
    import itertools

    out = MPoly.zero(nx, params)
    for combo in itertools.combinations(range(1, nx + 1), r):
        exps = [0] * (nx + len(params))
        for i in combo:
            exps[i - 1] = 1
        out = out + MPoly(nx, params, {tuple(exps): 1})
    return out
