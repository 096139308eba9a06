"""Finite-dimensional algebras by structure constants.

An Algebra is a bilinear product on field^n given by a tensor c[i][j][k]
with e_i e_j = sum_k c[i][j][k] e_k (0-based internally; the JSON format
and printed tables are 1-based).  Identity checks run on basis triples
only, which suffices by multilinearity.
"""

from __future__ import annotations

import json

from .fields import Field, field_from_tag, field_tag
from .linalg import Matrix, SingularMatrix, Subspace


class NotAnIdeal(Exception):
    pass


class Algebra:
    __slots__ = ("field", "dim", "table", "_cache")

    def __init__(self, field: Field, dim: int, table):
        """table: nested n x n x n of scalars, or a dict {(i,j,k): c} 0-based."""
        self.field = field
        self.dim = dim
        z = field.zero()
        if isinstance(table, dict):
            t = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
            for (i, j, k), c in table.items():
                t[i][j][k] = field(c)
            self.table = tuple(tuple(tuple(r) for r in p) for p in t)
        else:
            self.table = tuple(
                tuple(tuple(field(c) for c in row) for row in plane)
                for plane in table
            )

    # ------------------------------------------------------------------
    # multiplication

    def basis_product(self, i: int, j: int):
        return self.table[i][j]

    def multiply(self, x, y):
        """Bilinear extension: x, y coefficient vectors of length dim."""
        z = self.field.zero()
        out = [z] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                coef = xi * yj
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[k] = out[k] + coef * c
        return tuple(out)

    def basis_vector(self, i: int):
        z, o = self.field.zero(), self.field.one()
        return tuple(o if k == i else z for k in range(self.dim))

    # ------------------------------------------------------------------
    # identities

    def is_right_commutative(self):
        """(xy)z = (xz)y on all basis triples; witness (i,j,k) on failure."""
        for i in range(self.dim):
            ei = self.basis_vector(i)
            for j in range(self.dim):
                for k in range(j + 1, self.dim):
                    lhs = self.multiply(self.multiply(ei, self.basis_vector(j)),
                                        self.basis_vector(k))
                    rhs = self.multiply(self.multiply(ei, self.basis_vector(k)),
                                        self.basis_vector(j))
                    if lhs != rhs:
                        return False, (i, j, k)
        return True, None

    def is_left_symmetric(self):
        """(xy)z - x(yz) = (yx)z - y(xz) on basis triples."""
        for i in range(self.dim):
            ei = self.basis_vector(i)
            for j in range(i + 1, self.dim):
                ej = self.basis_vector(j)
                for k in range(self.dim):
                    ek = self.basis_vector(k)
                    lhs = _vsub(self.multiply(self.multiply(ei, ej), ek),
                                self.multiply(ei, self.multiply(ej, ek)))
                    rhs = _vsub(self.multiply(self.multiply(ej, ei), ek),
                                self.multiply(ej, self.multiply(ei, ek)))
                    if lhs != rhs:
                        return False, (i, j, k)
        return True, None

    def is_novikov(self):
        ok, _ = self.is_right_commutative()
        if not ok:
            return False
        ok, _ = self.is_left_symmetric()
        return ok

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.table[i][j] != self.table[j][i]:
                    return False
        return True

    def is_associative(self):
        for i in range(self.dim):
            ei = self.basis_vector(i)
            for j in range(self.dim):
                ej = self.basis_vector(j)
                for k in range(self.dim):
                    ek = self.basis_vector(k)
                    if self.multiply(self.multiply(ei, ej), ek) != \
                       self.multiply(ei, self.multiply(ej, ek)):
                        return False
        return True

    # ------------------------------------------------------------------
    # subspace machinery

    def product_space(self, S: Subspace, T: Subspace) -> Subspace:
        vecs = [self.multiply(u, v) for u in S.basis for v in T.basis]
        return Subspace(self.field, self.dim, vecs)

    def square(self) -> Subspace:
        full = Subspace.full(self.field, self.dim)
        return self.product_space(full, full)

    def power_filtration(self):
        """[A^1, A^2, ...] down to 0 or stabilization.

        Non-associative convention: A^{m} = sum_{i+j=m} A^i A^j.
        """
        powers = [Subspace.full(self.field, self.dim)]
        while True:
            m = len(powers) + 1
            nxt = Subspace(self.field, self.dim)
            for i in range(1, m):
                nxt = nxt + self.product_space(powers[i - 1], powers[m - i - 1])
            powers.append(nxt)
            if nxt.dim == 0 or nxt == powers[-2]:
                return powers

    def nilpotency_index(self):
        """First k with A^k = 0, or None if the filtration stabilizes nonzero."""
        powers = self.power_filtration()
        return len(powers) if powers[-1].dim == 0 else None

    def is_two_step(self):
        """All triple products vanish under both bracketings (xyz = 0)."""
        sq = self.square()
        full = Subspace.full(self.field, self.dim)
        return (self.product_space(sq, full).dim == 0
                and self.product_space(full, sq).dim == 0)

    def _mult_operator_rows(self, left: bool):
        # rows of the stacked operator x -> (x e_j)_j (left=True) or (e_j x)_j
        rows = []
        for j in range(self.dim):
            for k in range(self.dim):
                if left:
                    rows.append([self.table[i][j][k] for i in range(self.dim)])
                else:
                    rows.append([self.table[j][i][k] for i in range(self.dim)])
        return rows

    def left_annihilator(self) -> Subspace:
        """{x : x A = 0}."""
        return Matrix(self.field, self._mult_operator_rows(True)).kernel()

    def right_annihilator(self) -> Subspace:
        """{x : A x = 0}."""
        return Matrix(self.field, self._mult_operator_rows(False)).kernel()

    def annihilator(self) -> Subspace:
        rows = self._mult_operator_rows(True) + self._mult_operator_rows(False)
        return Matrix(self.field, rows).kernel()

    def is_split(self):
        """True iff Ann(A) is not contained in A^2 (an annihilator
        component splits off)."""
        return not self.square().contains(self.annihilator())

    def min_generators(self):
        return self.dim - self.square().dim

    def commutator_space(self) -> Subspace:
        vecs = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vecs.append(_vsub(self.table[i][j], self.table[j][i]))
        return Subspace(self.field, self.dim, vecs)

    def is_ideal(self, I: Subspace) -> bool:
        full = Subspace.full(self.field, self.dim)
        return I.contains(self.product_space(I, full)) and \
            I.contains(self.product_space(full, I))

    def quotient(self, I: Subspace) -> "Algebra":
        """A / I on the lexicographically-first coordinate complement."""
        if not self.is_ideal(I):
            raise NotAnIdeal("quotient by a non-ideal")
        comp = I.coordinate_complement()
        reps = list(comp.basis)
        m = len(reps)
        # projection to the complement modulo I, in the reps coordinates
        stack = Matrix(self.field, [list(v) for v in reps] +
                       [list(v) for v in I.basis]).transpose()
        table = {}
        for a in range(m):
            for b in range(m):
                prod = self.multiply(reps[a], reps[b])
                coeff = stack.solve(prod)
                for k in range(m):
                    if coeff[k]:
                        table[(a, b, k)] = coeff[k]
        return Algebra(self.field, m, table)

    def change_basis(self, P: Matrix) -> "Algebra":
        """Same product expressed in the basis f_i = sum_j P[j][i] e_j
        (columns of P are the new basis vectors)."""
        if not P.is_invertible():
            raise SingularMatrix("basis change by a singular matrix")
        Pinv = P.inverse()
        table = {}
        for i in range(self.dim):
            fi = P.col(i)
            for j in range(self.dim):
                prod = self.multiply(fi, P.col(j))
                coeff = Pinv.apply(prod)
                for k in range(self.dim):
                    if coeff[k]:
                        table[(i, j, k)] = coeff[k]
        return Algebra(self.field, self.dim, table)

    # ------------------------------------------------------------------
    # serialization

    def to_json(self):
        triples = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    c = self.table[i][j][k]
                    if c:
                        triples.append({"i": i + 1, "j": j + 1, "k": k + 1,
                                        "c": repr(c)})
        return {"dim": self.dim, "field": field_tag(self.field),
                "table": triples}

    @staticmethod
    def from_json(doc, field: Field | None = None) -> "Algebra":
        f = field if field is not None else field_from_tag(doc["field"])
        table = {}
        for t in doc["table"]:
            table[(t["i"] - 1, t["j"] - 1, t["k"] - 1)] = f.parse(str(t["c"])) \
                if isinstance(t["c"], str) else f(t["c"])
        return Algebra(f, doc["dim"], table)

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.field == other.field
                and self.dim == other.dim and self.table == other.table)

    def __hash__(self):
        return hash((self.field, self.dim, self.table))

    def __repr__(self):
        prods = []
        for i in range(self.dim):
            for j in range(self.dim):
                terms = [(c, k) for k, c in enumerate(self.table[i][j]) if c]
                if terms:
                    s = "+".join(f"{repr(c)}*e{k + 1}" for c, k in terms)
                    prods.append(f"e{i + 1}e{j + 1}={s}")
        return f"Algebra(dim {self.dim}: " + ", ".join(prods) + ")"


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))
