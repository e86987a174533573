"""
Laurent polynomials in one variable with exact coefficients.

Used for graded dimensions (variable v = q^{1/2}, with deg X = 2 so that
polynomial degrees land on even powers of v) and for the twisted Hall
algebra, whose structure constants live in Z[v, v^{-1}].
"""

from __future__ import annotations

from fractions import Fraction


class Laurent:
    """A Laurent polynomial sum_k c_k * t^k, stored as {k: c_k}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for k, c in coeffs.items():
                if c != 0:
                    self.coeffs[k] = c

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def gen(power: int = 1) -> "Laurent":
        """The monomial t^power."""
        return Laurent({power: 1})

    @staticmethod
    def const(c) -> "Laurent":
        return Laurent({0: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "Laurent":
        if isinstance(other, int):
            other = Laurent.const(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, 0) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        res = Laurent()
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other) -> "Laurent":
        if isinstance(other, int):
            other = Laurent.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Laurent":
        return Laurent.const(other) - self

    def __mul__(self, other) -> "Laurent":
        if isinstance(other, (int, Fraction)):
            return Laurent({k: c * other for k, c in self.coeffs.items()})
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        res = Laurent()
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        assert n >= 0
        out = Laurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def substitute(self, value):
        """Evaluate at t = value (value must be invertible if negative powers occur)."""
        total = 0
        for k, c in self.coeffs.items():
            if k >= 0:
                total += c * value ** k
            else:
                total += c * Fraction(1, 1) / value ** (-k)
        return total

    def invert_variable(self) -> "Laurent":
        """t -> t^{-1}."""
        return Laurent({-k: c for k, c in self.coeffs.items()})

    def truncate(self, max_power: int) -> "Laurent":
        """Drop all terms of power > max_power."""
        return Laurent({k: c for k, c in self.coeffs.items() if k <= max_power})

    def min_power(self) -> int:
        assert self.coeffs
        return min(self.coeffs)

    def max_power(self) -> int:
        assert self.coeffs
        return max(self.coeffs)

    def str_in(self, var: str) -> str:
        """Canonical rendering with the given variable name, powers ascending."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            if k == 0:
                term = str(c)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if c == 1:
                    term = mono
                elif c == -1:
                    term = "-" + mono
                else:
                    term = f"{c}*{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __repr__(self) -> str:
        return self.str_in("t")


def geometric_truncated(power_step: int, cutoff: int) -> Laurent:
    """1 + t^s + t^{2s} + ... up to powers <= cutoff (the series 1/(1 - t^s))."""
    assert power_step > 0
    return Laurent({k: 1 for k in range(0, cutoff + 1, power_step)})


def series_product(factors, cutoff: int) -> Laurent:
    """Product of Laurent series truncated at the given power cutoff."""
    out = Laurent.one()
    for f in factors:
        out = (out * f).truncate(cutoff)
    return out
