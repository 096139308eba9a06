"""Plain-integer helpers for prime-field hot loops.

The generic FieldElement machinery is convenient but slow; exhaustive
searches over F_p (automorphism enumeration, isomorphism backtracking,
Grassmannian orbit scans) run on int tuples mod p instead and convert
at the boundaries.
"""

from __future__ import annotations

from .algebra import Algebra
from .fields import PrimeField


def fp_rref(rows, p):
    """(rref rows as int tuples, rank, pivot columns) for rows mod p."""
    m = [list(r) for r in rows]
    if not m:
        return [], 0, []
    cols = len(m[0])
    rank = 0
    pivots = []
    for col in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return [tuple(r) for r in m[:rank]], rank, pivots


def fp_reduce(vec, basis_rows, p):
    """Residual of vec after reduction against rref basis_rows."""
    v = list(vec)
    for row in basis_rows:
        piv = next(j for j, x in enumerate(row) if x)
        if v[piv]:
            f = v[piv]
            v = [(a - f * b) % p for a, b in zip(v, row)]
    return tuple(v)


def fp_member(vec, basis_rows, p):
    return not any(fp_reduce(vec, basis_rows, p))


class FpAlgebra:
    """Int-tuple view of an Algebra over F_p."""

    def __init__(self, A: Algebra):
        if not isinstance(A.field, PrimeField):
            raise ValueError("FpAlgebra needs a prime field")
        self.p = A.field.p
        self.dim = A.dim
        self.algebra = A
        self.table = tuple(
            tuple(tuple(c.data for c in row) for row in plane)
            for plane in A.table
        )
        sq_rows = [plane_row for plane in self.table for plane_row in plane]
        self.square_rref, self.square_dim, _ = fp_rref(
            [r for r in sq_rows if any(r)], self.p)

    def multiply(self, x, y):
        p = self.p
        n = self.dim
        out = [0] * n
        for i in range(n):
            xi = x[i]
            if not xi:
                continue
            ti = self.table[i]
            for j in range(n):
                yj = y[j]
                if not yj:
                    continue
                c = xi * yj
                row = ti[j]
                for k in range(n):
                    if row[k]:
                        out[k] = (out[k] + c * row[k]) % p
        return tuple(out)

    def all_vectors(self):
        from itertools import product
        return [v for v in product(range(self.p), repeat=self.dim)
                if any(v)]
