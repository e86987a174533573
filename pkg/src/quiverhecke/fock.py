"""
Level-one Fock space combinatorics for affine sl_p.

Basis: partitions, written as weakly decreasing tuples of positive
integers.  The box in row r, column c (both 1-indexed) has residue
(c - r) mod p.  The operator f_i adds, and e_i removes, one box of
residue i (summing over all ways); d counts the boxes of residue 0.

The weight of a partition is recorded through its residue content
c_j = #{boxes of residue j}; the pairing of Lambda_0 - sum_j c_j alpha_j
with alpha_i^vee is delta_{i,0} - sum_j c_j a_{ij}, where a is the
affine Cartan matrix of type A_{p-1}^{(1)} (with the p = 2 convention
a_{01} = a_{10} = -2).
"""

from __future__ import annotations

import itertools


def check_partition(parts) -> tuple:
    parts = tuple(parts)
    assert all(isinstance(a, int) and a > 0 for a in parts)
    assert all(parts[k] >= parts[k + 1] for k in range(len(parts) - 1))
    return parts


def partition_size(parts) -> int:
    return sum(parts)


def all_partitions(n: int):
    """All partitions of n, deterministic order (largest first parts first)."""

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def transpose(parts) -> tuple:
    parts = check_partition(parts)
    if not parts:
        return ()
    return tuple(
        sum(1 for a in parts if a >= c) for c in range(1, parts[0] + 1)
    )


def residue(row: int, col: int, p: int) -> int:
    """Residue of the box in (row, col), 1-indexed: (col - row) mod p."""
    return (col - row) % p


def addable_boxes(parts, p: int):
    """All (row, col, residue) where a box may be added."""
    parts = check_partition(parts)
    out = []
    for r in range(1, len(parts) + 2):
        row_len = parts[r - 1] if r <= len(parts) else 0
        prev_len = parts[r - 2] if r >= 2 else None
        if prev_len is None or row_len < prev_len:
            c = row_len + 1
            out.append((r, c, residue(r, c, p)))
    return out


def removable_boxes(parts, p: int):
    """All (row, col, residue) where a box may be removed."""
    parts = check_partition(parts)
    out = []
    for r in range(1, len(parts) + 1):
        row_len = parts[r - 1]
        next_len = parts[r] if r < len(parts) else 0
        if row_len > next_len:
            out.append((r, row_len, residue(r, row_len, p)))
    return out


def add_box(parts, row: int) -> tuple:
    parts = list(parts)
    if row == len(parts) + 1:
        parts.append(1)
    else:
        parts[row - 1] += 1
    return check_partition(parts)


def remove_box(parts, row: int) -> tuple:
    parts = list(parts)
    parts[row - 1] -= 1
    if parts[row - 1] == 0:
        parts.pop(row - 1)
    return check_partition(parts)


def residue_content(parts, p: int) -> tuple:
    """c_j = number of boxes of residue j, as a tuple of length p."""
    parts = check_partition(parts)
    counts = [0] * p
    for r, row_len in enumerate(parts, start=1):
        for c in range(1, row_len + 1):
            counts[residue(r, c, p)] += 1
    return tuple(counts)


class FockVector:
    """Finite Z-linear combination of partitions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for parts, c in coeffs.items():
                if c != 0:
                    self.coeffs[check_partition(parts)] = c

    @staticmethod
    def basis(parts) -> "FockVector":
        return FockVector({check_partition(parts): 1})

    @staticmethod
    def zero() -> "FockVector":
        return FockVector()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self.coeffs == other.coeffs

    def __add__(self, other) -> "FockVector":
        out = dict(self.coeffs)
        for parts, c in other.coeffs.items():
            s = out.get(parts, 0) + c
            if s == 0:
                out.pop(parts, None)
            else:
                out[parts] = s
        v = FockVector()
        v.coeffs = out
        return v

    def __neg__(self) -> "FockVector":
        return FockVector({parts: -c for parts, c in self.coeffs.items()})

    def __sub__(self, other) -> "FockVector":
        return self + (-other)

    def scale(self, c) -> "FockVector":
        return FockVector({parts: c * a for parts, a in self.coeffs.items()})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items())
        return " + ".join(f"{c}*{list(p)}" for p, c in items)


def f_op(i: int, p: int, v: FockVector) -> FockVector:
    """Add one box of residue i in all possible ways."""
    out = FockVector.zero()
    for parts, c in v.coeffs.items():
        for r, _, res in addable_boxes(parts, p):
            if res == i % p:
                out = out + FockVector({add_box(parts, r): c})
    return out


def e_op(i: int, p: int, v: FockVector) -> FockVector:
    """Remove one box of residue i in all possible ways."""
    out = FockVector.zero()
    for parts, c in v.coeffs.items():
        for r, _, res in removable_boxes(parts, p):
            if res == i % p:
                out = out + FockVector({remove_box(parts, r): c})
    return out


def d_op(p: int, v: FockVector) -> FockVector:
    """d(lambda) = N_0(lambda) * lambda, N_0 = number of residue-0 boxes."""
    out = FockVector.zero()
    for parts, c in v.coeffs.items():
        n0 = residue_content(parts, p)[0]
        out = out + FockVector({parts: c * n0})
    return out


def affine_cartan(p: int):
    """Cartan matrix of type A_{p-1}^{(1)}, indices 0..p-1.

    For p = 1 (a single vertex with a loop) the convention a_{00} = 0 is
    used; p = 2 has off-diagonal entries -2.
    """
    assert p >= 1
    if p == 1:
        return ((0,),)
    if p == 2:
        return ((2, -2), (-2, 2))
    mat = []
    for i in range(p):
        row = []
        for j in range(p):
            if i == j:
                row.append(2)
            elif (j - i) % p in (1, p - 1):
                row.append(-1)
            else:
                row.append(0)
        mat.append(tuple(row))
    return tuple(mat)


def weight_pairing(parts, i: int, p: int) -> int:
    """<Lambda_0 - sum_j c_j alpha_j, alpha_i^vee> for the given partition."""
    c = residue_content(parts, p)
    a = affine_cartan(p)
    return (1 if i % p == 0 else 0) - sum(c[j] * a[i % p][j] for j in range(p))


def operator_matrix(op_letter: str, i: int, p: int, size: int):
    """Matrix of f_i (or e_i) from partitions of `size` to the adjacent layer.

    Returns (rows, cols, matrix) with rows indexing the target layer and
    cols the source layer, both in the deterministic all_partitions order.
    """
    cols = list(all_partitions(size))
    target = size + 1 if op_letter == "f" else size - 1
    rows = list(all_partitions(target)) if target >= 0 else []
    mat = [[0] * len(cols) for _ in rows]
    for jc, parts in enumerate(cols):
        v = FockVector.basis(parts)
        image = f_op(i, p, v) if op_letter == "f" else e_op(i, p, v)
        for out_parts, c in image.coeffs.items():
            mat[rows.index(out_parts)][jc] = c
    return rows, cols, mat
