"""
The nil affine Hecke algebra on n strands.

Generators T_1, ..., T_{n-1} and X_1, ..., X_n with T_i^2 = 0, the braid
and distant commutation relations, and the straightening rules
T_i X_{i+1} - X_i T_i = 1 and T_i X_i - X_{i+1} T_i = -1.  Elements are
kept in the normal form sum_w P_w * T_w with polynomials on the left;
the T_w are indexed by permutations via their canonical reduced words,
and T_v T_w = T_{vw} when lengths add, 0 otherwise.

The grading puts deg X_i = 2 and deg T_i = -2.

The faithful polynomial representation sends T_i to the Demazure
operator d_i and X_i to multiplication.
"""

from __future__ import annotations

from .coxeter import Permutation
from .polyring import MPoly, staircase_monomial


class NilHeckeElement:
    """sum_w P_w T_w; terms maps Permutation -> MPoly."""

    __slots__ = ("n", "params", "terms")

    def __init__(self, n, terms=None, params=()):
        self.n = n
        self.params = tuple(params)
        self.terms = {}
        if terms:
            for w, p in terms.items():
                assert w.n == n and p.nx == n and p.params == self.params
                if not p.is_zero():
                    self.terms[w] = p

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(n, params=()):
        return NilHeckeElement(n, params=params)

    @staticmethod
    def one(n, params=()):
        return NilHeckeElement(
            n, {Permutation.identity(n): MPoly.one(n, params)}, params
        )

    @staticmethod
    def from_poly(p: MPoly, n=None, params=None):
        n = p.nx if n is None else n
        params = p.params if params is None else params
        return NilHeckeElement(n, {Permutation.identity(n): p}, params)

    @staticmethod
    def t(i, n, params=()):
        """The generator T_i."""
        return NilHeckeElement(
            n, {Permutation.simple(i, n): MPoly.one(n, params)}, params
        )

    @staticmethod
    def t_word(word, n, params=()):
        """T along a word; zero if the word is not reduced."""
        out = NilHeckeElement.one(n, params)
        for i in word:
            out = out * NilHeckeElement.t(i, n, params)
        return out

    @staticmethod
    def t_perm(w: Permutation, params=()):
        return NilHeckeElement(w.n, {w: MPoly.one(w.n, params)}, params)

    @staticmethod
    def x(i, n, params=()):
        return NilHeckeElement.from_poly(MPoly.x(i, n, params))

    # -- basics -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = NilHeckeElement.from_poly(
                MPoly.const(other, self.n, self.params)
            )
        if not isinstance(other, NilHeckeElement):
            return NotImplemented
        return (self.n, self.params, self.terms) == (other.n, other.params, other.terms)

    def __hash__(self):
        return hash((self.n, self.params, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = NilHeckeElement.from_poly(
                MPoly.const(other, self.n, self.params)
            )
        assert self.n == other.n and self.params == other.params
        out = dict(self.terms)
        for w, p in other.terms.items():
            s = out.get(w, MPoly.zero(self.n, self.params)) + p
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return NilHeckeElement(self.n, out, self.params)

    __radd__ = __add__

    def __neg__(self):
        return NilHeckeElement(
            self.n, {w: -p for w, p in self.terms.items()}, self.params
        )

    def __sub__(self, other):
        if isinstance(other, int):
            other = NilHeckeElement.from_poly(
                MPoly.const(other, self.n, self.params)
            )
        return self + (-other)

    def scale(self, c):
        return NilHeckeElement(
            self.n, {w: p * c for w, p in self.terms.items()}, self.params
        )

    # -- multiplication -----------------------------------------------

    def _lmul_t(self, i):
        """Left multiply by T_i: T_i * P T_w = s_i(P) T_i T_w + d_i(P) T_w."""
        out = NilHeckeElement.zero(self.n, self.params)
        si = Permutation.simple(i, self.n)
        for w, p in self.terms.items():
            siw = si * w
            if siw.length() == w.length() + 1:
                out = out + NilHeckeElement(self.n, {siw: p.act_simple(i)}, self.params)
            d = p.demazure(i)
            if not d.is_zero():
                out = out + NilHeckeElement(self.n, {w: d}, self.params)
        return out

    def _lmul_poly(self, p: MPoly):
        return NilHeckeElement(
            self.n, {w: p * q for w, q in self.terms.items()}, self.params
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        assert self.n == other.n and self.params == other.params
        out = NilHeckeElement.zero(self.n, self.params)
        for w, p in self.terms.items():
            # (P T_w) * other: apply T letters of w from the right inward
            acc = other
            for i in reversed(w.canonical_word()):
                acc = acc._lmul_t(i)
            out = out + acc._lmul_poly(p)
        return out

    __rmul__ = scale

    # -- polynomial representation ------------------------------------

    def apply_to_polynomial(self, q: MPoly) -> MPoly:
        """Faithful representation: sum_w P_w * d_w(q)."""
        out = MPoly.zero(self.n, self.params)
        for w, p in self.terms.items():
            out = out + p * q.demazure_perm(w)
        return out

    # -- grading ------------------------------------------------------

    def degrees(self):
        """Set of homogeneous degrees present; deg(P T_w) = deg P - 2 l(w)."""
        degs = set()
        for w, p in self.terms.items():
            shift = -2 * w.length()
            for e in p.terms:
                degs.add(2 * sum(e[: p.nx]) + shift)
        return degs

    # -- linear maps on the algebra ------------------------------------

    def is_finite_part(self):
        """True if all coefficients are constants (nil Coxeter span of the T_w)."""
        return all(
            set(p.terms) <= {(0,) * (self.n + len(self.params))}
            for p in self.terms.values()
        )

    def sigma(self) -> "NilHeckeElement":
        """Nakayama automorphism of the finite part: T_i -> T_{n-i},
        so T_w -> T_{w0 w w0}."""
        assert self.is_finite_part()
        n = self.n
        w0 = Permutation.longest(n)
        return NilHeckeElement(
            n, {w0 * w * w0: p for w, p in self.terms.items()}, self.params
        )

    def gamma(self) -> "NilHeckeElement":
        """Algebra automorphism: X_i -> X_{n-i+1}, T_i -> -T_{n-i}."""
        n = self.n
        w0 = Permutation.longest(n)
        out = NilHeckeElement.zero(n, self.params)
        for w, p in self.terms.items():
            wp = w0 * w * w0
            sign = -1 if w.length() % 2 else 1
            out = out + NilHeckeElement(
                n, {wp: p.act(w0) * sign}, self.params
            )
        return out

    def trace_t0(self):
        """Frobenius form on the finite part: the coefficient of T_{w0},
        as an integer.  Satisfies t0(ab) = t0(sigma(b) a)."""
        assert self.is_finite_part()
        w0 = Permutation.longest(self.n)
        p = self.terms.get(w0)
        if p is None:
            return 0
        return p.terms.get((0,) * (self.n + len(self.params)), 0)

    def trace_t(self) -> MPoly:
        """t(sum P_w T_w) = d_{w0}(P_{w0}): a symmetric polynomial."""
        w0 = Permutation.longest(self.n)
        p = self.terms.get(w0, MPoly.zero(self.n, self.params))
        return p.demazure_perm(w0)

    def trace_tprime(self) -> MPoly:
        """t'(a) = t(a * [w0]), with [w0] the group element of the longest word."""
        return (self * group_element(Permutation.longest(self.n), self.params)).trace_t()

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda u: (u.length(), u.images)):
            word = w.canonical_word()
            label = "T[" + ",".join(map(str, word)) + "]" if word else "1"
            parts.append(f"({self.terms[w]}) {label}")
        return " + ".join(parts)


def group_element(w: Permutation, params=()) -> NilHeckeElement:
    """The image of w under s_i -> (X_i - X_{i+1}) T_i + 1, expanded along
    the canonical reduced word of w."""
    n = w.n
    out = NilHeckeElement.one(n, params)
    for i in w.canonical_word():
        factor = NilHeckeElement.from_poly(
            MPoly.x(i, n, params) - MPoly.x(i + 1, n, params)
        ) * NilHeckeElement.t(i, n, params) + NilHeckeElement.one(n, params)
        out = out * factor
    return out


def idempotent_b(n: int, params=()) -> NilHeckeElement:
    """b_n = T_{w0} X_2 X_3^2 ... X_n^{n-1}; satisfies b_n^2 = b_n."""
    w0 = Permutation.longest(n)
    return NilHeckeElement.t_perm(w0, params) * NilHeckeElement.from_poly(
        staircase_monomial(n, params)
    )


def gram_matrix_tprime(elements):
    """Matrix of t'(a * b) over a list of nil Hecke elements."""
    return [[(a * b).trace_tprime() for b in elements] for a in elements]


def frobenius_gram_determinant(n: int):
    """Determinant of the t'-Gram matrix on the basis
    {Schubert_u * T_w : u, w in S_n}, exactly.

    Each basis element is homogeneous of a single degree d_i, the
    degrees sum to zero, and every nonzero Gram entry is homogeneous of
    x-degree (d_i + d_j)/2; these facts are asserted.  The determinant
    is then homogeneous of degree zero, hence a constant, so a single
    integer evaluation computes it.  A value of +-1 certifies that the
    symmetrizing form is nondegenerate with unit discriminant.
    """
    from fractions import Fraction

    from .polyring import schubert_basis_element

    order = sorted(Permutation.all(n), key=lambda w: (w.length(), w.images))
    basis = []
    for u in order:
        bu = NilHeckeElement.from_poly(schubert_basis_element(u, n))
        for w in order:
            basis.append(bu * NilHeckeElement.t_perm(w))
    degs = []
    for el in basis:
        d = el.degrees()
        assert len(d) == 1
        degs.append(next(iter(d)))
    assert sum(degs) == 0
    point = [k + 2 for k in range(n)]
    mat = []
    for i, a in enumerate(basis):
        row = []
        for j, b in enumerate(basis):
            p = (a * b).trace_tprime()
            if not p.is_zero():
                xdegs = {sum(e) for e in p.terms}
                assert xdegs == {(degs[i] + degs[j]) // 2}
            row.append(Fraction(p.evaluate(point)))
        mat.append(row)
    size = len(mat)
    det = Fraction(1)
    for i in range(size):
        pivot = next((r for r in range(i, size) if mat[r][i]), None)
        if pivot is None:
            return 0
        if pivot != i:
            mat[i], mat[pivot] = mat[pivot], mat[i]
            det = -det
        det *= mat[i][i]
        inv = 1 / mat[i][i]
        for r in range(i + 1, size):
            f = mat[r][i] * inv
            if f:
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[i])]
    assert det.denominator == 1
    return int(det)
