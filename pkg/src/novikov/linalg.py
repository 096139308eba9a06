"""Dense exact linear algebra over any of the supported fields.

Matrices are immutable row-major tuples of FieldElement.  Subspaces are
stored by their unique RREF basis, so equal subspaces compare equal
structurally.  Plain Gaussian elimination with the first nonzero pivot
in column order; exact fields make this correct and deterministic.
"""

from __future__ import annotations

from .fields import Field, FieldElement


class DimensionMismatch(Exception):
    pass


class SingularMatrix(Exception):
    pass


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries):
        self.field = field
        self.entries = tuple(tuple(field(x) for x in row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged rows")

    @staticmethod
    def zero(field, rows, cols):
        z = field.zero()
        return Matrix(field, [[z] * cols for _ in range(rows)])

    @staticmethod
    def identity(field, n):
        z, o = field.zero(), field.one()
        return Matrix(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def transpose(self):
        return Matrix(self.field, [self.col(j) for j in range(self.cols)])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.cols} vs {other.rows}")
            ot = other.transpose()
            return Matrix(self.field, [
                [_dot(r, c, self.field) for c in ot.entries] for r in self.entries
            ])
        try:
            c = self.field(other)
        except Exception:
            return NotImplemented
        return Matrix(self.field, [[a * c for a in row]
                                   for row in self.entries])

    def __rmul__(self, other):
        return self.__mul__(other)

    def apply(self, vec):
        """Matrix-vector product (vec as a sequence of scalars)."""
        if len(vec) != self.cols:
            raise DimensionMismatch(f"{self.cols} vs {len(vec)}")
        return tuple(_dot(r, vec, self.field) for r in self.entries)

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("shape")
        return Matrix(self.field, [
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.entries, other.entries)
        ])

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("shape")
        return Matrix(self.field, [
            [a - b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.entries, other.entries)
        ])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(repr(x) for x in row) for row in self.entries)
        return f"Matrix[{body}]"

    def rref(self):
        """(reduced row echelon form, rank)."""
        m = [list(row) for row in self.entries]
        rank = 0
        pivots = []
        for col in range(self.cols):
            pivot = next((r for r in range(rank, self.rows) if m[r][col]), None)
            if pivot is None:
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            inv = self.field.one() / m[rank][col]
            m[rank] = [x * inv for x in m[rank]]
            for r in range(self.rows):
                if r != rank and m[r][col]:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
            pivots.append(col)
            rank += 1
            if rank == self.rows:
                break
        return Matrix(self.field, m) if m else self, rank

    def rank(self):
        return self.rref()[1]

    def pivot_columns(self):
        red, rank = self.rref()
        pivots = []
        for r in range(rank):
            pivots.append(next(j for j in range(red.cols) if red[r, j]))
        return pivots

    def kernel(self) -> "Subspace":
        """Right null space {v : M v = 0}."""
        red, rank = self.rref()
        pivots = self.pivot_columns()
        free = [j for j in range(self.cols) if j not in pivots]
        z, o = self.field.zero(), self.field.one()
        basis = []
        for f in free:
            v = [z] * self.cols
            v[f] = o
            for r, p in enumerate(pivots):
                v[p] = -red[r, f]
            basis.append(v)
        return Subspace(self.field, self.cols, basis)

    def row_space(self) -> "Subspace":
        return Subspace(self.field, self.cols, self.entries)

    def solve(self, rhs):
        """One solution x of M x = rhs, or None if inconsistent."""
        if len(rhs) != self.rows:
            raise DimensionMismatch("rhs length")
        aug = Matrix(self.field, [
            list(self.entries[i]) + [rhs[i]] for i in range(self.rows)
        ])
        red, rank = aug.rref()
        z = self.field.zero()
        x = [z] * self.cols
        for r in range(rank):
            piv = next(j for j in range(aug.cols) if red[r, j])
            if piv == self.cols:
                return None  # 0 = 1 row
            x[piv] = red[r, self.cols]
        return tuple(x)

    def inverse(self):
        if self.rows != self.cols:
            raise SingularMatrix("not square")
        n = self.rows
        aug = Matrix(self.field, [
            list(self.entries[i]) + list(Matrix.identity(self.field, n).entries[i])
            for i in range(n)
        ])
        red, rank = aug.rref()
        if rank < n or red.pivot_columns()[:n] != list(range(n)):
            raise SingularMatrix("singular")
        return Matrix(self.field, [red.entries[i][n:] for i in range(n)])

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows


def _dot(a, b, field):
    acc = field.zero()
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


class Subspace:
    """A subspace of field^ambient, stored by its canonical RREF basis."""

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field: Field, ambient: int, vectors=()):
        self.field = field
        self.ambient = ambient
        if vectors:
            m = Matrix(field, vectors)
            if m.cols != ambient:
                raise DimensionMismatch(f"ambient {ambient} vs {m.cols}")
            red, rank = m.rref()
            self.basis = red.entries[:rank]
        else:
            self.basis = ()

    @staticmethod
    def full(field, ambient):
        return Subspace(field, ambient, Matrix.identity(field, ambient).entries)

    @property
    def dim(self):
        return len(self.basis)

    def member(self, vec) -> bool:
        if len(vec) != self.ambient:
            raise DimensionMismatch("vector length")
        vec = [self.field(x) for x in vec]
        for row in self.basis:
            piv = next(j for j in range(self.ambient) if row[j])
            if vec[piv]:
                f = vec[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
        return not any(vec)

    def contains(self, other: "Subspace") -> bool:
        return all(self.member(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        # Zassenhaus-free: ker of stacked coordinates w.r.t. combined span.
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace(self.field, self.ambient)
        # solve a*B1 = b*B2: kernel of [B1^T | -B2^T] gives coefficients
        cols = []
        for v in self.basis:
            cols.append(list(v))
        for v in other.basis:
            cols.append([-x for x in v])
        m = Matrix(self.field, cols).transpose()  # ambient x (d1+d2)
        vecs = []
        for coeff in m.kernel().basis:
            a = coeff[: len(self.basis)]
            vec = [self.field.zero()] * self.ambient
            for c, bvec in zip(a, self.basis):
                vec = [u + c * w for u, w in zip(vec, bvec)]
            vecs.append(vec)
        return Subspace(self.field, self.ambient, vecs)

    def quotient_basis(self, sub: "Subspace"):
        """Coset representatives completing `sub` inside self (self >= sub)."""
        self._check(sub)
        reps = []
        acc = Subspace(self.field, self.ambient, sub.basis)
        for v in self.basis:
            if not acc.member(v):
                reps.append(v)
                acc = acc + Subspace(self.field, self.ambient, [v])
        return reps

    def coordinate_complement(self):
        """Lexicographically-first coordinate complement of self."""
        pivots = set()
        for row in self.basis:
            pivots.add(next(j for j in range(self.ambient) if row[j]))
        z, o = self.field.zero(), self.field.one()
        vecs = []
        for j in range(self.ambient):
            if j not in pivots:
                v = [z] * self.ambient
                v[j] = o
                vecs.append(v)
        return Subspace(self.field, self.ambient, vecs)

    def _check(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise DimensionMismatch("ambient/field mismatch")

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient})"
