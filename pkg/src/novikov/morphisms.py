"""Homomorphisms, automorphisms, derivations and isomorphism search.

The isomorphism engine backtracks over images of a minimal generating
set only; all other basis vectors are words (iterated products) in the
generators, so their images are forced.  Partial assignments are pruned
by checking every product relation as soon as all words it mentions
have images.

Over F_p the generator-image candidate set is exhaustive, so a failed
search is a proof of non-isomorphism (the hot loop runs on plain int
tuples).  Over Q the candidates are height-bounded vectors enumerated
sparsest-first; a failed search is only a negative heuristic and is
reported as such.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product as iproduct

from ._fp import FpAlgebra, fp_member, fp_rref
from .algebra import Algebra
from .cohomology import Cocycle
from .fields import PrimeField
from .linalg import Matrix, Subspace


class NotAutomorphism(Exception):
    pass


class BudgetExceeded(Exception):
    pass


def is_homomorphism(A: Algebra, B: Algebra, phi: Matrix):
    """phi(e_i e_j) = phi(e_i) phi(e_j) on all basis pairs.
    Returns (True, None) or (False, (i, j))."""
    if phi.rows != B.dim or phi.cols != A.dim:
        raise ValueError("map shape does not match the algebras")
    cols = [phi.col(i) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = phi.apply(A.table[i][j])
            rhs = B.multiply(cols[i], cols[j])
            if lhs != rhs:
                return False, (i, j)
    return True, None


def is_isomorphism(A: Algebra, B: Algebra, phi: Matrix) -> bool:
    return A.dim == B.dim and phi.is_invertible() and \
        is_homomorphism(A, B, phi)[0]


def act_on_cocycle(A: Algebra, phi: Matrix, theta: Cocycle) -> Cocycle:
    """(phi theta)(x, y) = theta(phi x, phi y); coordinates phi^T M phi."""
    if not is_isomorphism(A, A, phi):
        raise NotAutomorphism("the map is not an automorphism of the base")
    pt = phi.transpose()
    return Cocycle(A, [pt * m * phi for m in theta.components],
                   check=theta.checked)


def derivation_algebra(A: Algebra):
    """(Subspace of n^2-flattened derivation matrices, its dimension).
    D(xy) = D(x)y + xD(y); kernel of the induced linear system."""
    n = A.dim
    f = A.field
    z = f.zero()
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row = [z] * (n * n)
                for l in range(n):
                    c = A.table[i][j][l]
                    if c:
                        row[m * n + l] = row[m * n + l] + c
                for k in range(n):
                    c = A.table[k][j][m]
                    if c:
                        row[k * n + i] = row[k * n + i] - c
                    c = A.table[i][k][m]
                    if c:
                        row[k * n + j] = row[k * n + j] - c
                if any(row):
                    rows.append(row)
    if not rows:
        return Subspace.full(f, n * n), n * n
    ker = Matrix(f, rows).kernel()
    return ker, ker.dim


# ----------------------------------------------------------------------
# word bases

class WordBasis:
    """A basis of A made of minimal generators and products of earlier
    basis elements, with a per-level schedule for the backtracking
    search.

    words[t] is ("gen", g) or ("prod", a, b) meaning words[a]*words[b].
    word_level[t] = highest generator index a word involves; a word has
    an image once generators 0..word_level[t] are assigned.  The
    relation (a, b) — "product of words a and b expands with the stored
    coordinates" — is scheduled at the first level where a, b and every
    word in the expansion are available.
    """

    def __init__(self, A: Algebra):
        self.algebra = A
        comp = A.square().coordinate_complement()
        gens = list(comp.basis)
        self.n_generators = len(gens)
        words = [("gen", g) for g in range(len(gens))]
        vectors = list(gens)
        level = list(range(len(gens)))
        span = Subspace(A.field, A.dim, vectors)
        grew = True
        while span.dim < A.dim and grew:
            grew = False
            size = len(vectors)
            for a in range(size):
                for b in range(size):
                    v = A.multiply(vectors[a], vectors[b])
                    if any(v) and not span.member(v):
                        words.append(("prod", a, b))
                        vectors.append(v)
                        level.append(max(level[a], level[b]))
                        span = span + Subspace(A.field, A.dim, [v])
                        grew = True
                        if span.dim == A.dim:
                            break
                if span.dim == A.dim:
                    break
        if span.dim < A.dim:
            raise ValueError("generators do not generate (non-nilpotent?)")
        self.words = words
        self.vectors = vectors
        self.word_level = level
        self.matrix = Matrix(A.field, vectors).transpose()  # cols = words
        self.inverse = self.matrix.inverse()
        n = A.dim
        # schedule: per level, the words that become available and the
        # relations that become fully checkable
        self.new_words = [[t for t in range(n) if level[t] == lv]
                          for lv in range(self.n_generators)]
        self.relations = [[] for _ in range(self.n_generators)]
        for a in range(n):
            for b in range(n):
                prod = A.multiply(vectors[a], vectors[b])
                coords = self.inverse.apply(prod)
                needed = [t for t, c in enumerate(coords) if c]
                lv = max([level[a], level[b]] + [level[t] for t in needed])
                self.relations[lv].append((a, b, tuple(coords)))


class _QOps:
    """Generic-field vector operations for the search."""

    def __init__(self, B: Algebra):
        self.B = B
        self.field = B.field
        self.sq = B.square()

    def multiply(self, x, y):
        return self.B.multiply(x, y)

    def not_in_square(self, v):
        return not self.sq.member(v)

    def independent(self, rows):
        return Matrix(self.field, rows).rank() == len(rows)

    def combine(self, coords, vectors):
        out = [self.field.zero()] * self.B.dim
        for c, v in zip(coords, vectors):
            if c:
                out = [u + c * w for u, w in zip(out, v)]
        return tuple(out)

    def convert_coords(self, coords):
        return coords

    def to_field_vec(self, v):
        return v


class _FpOps:
    """Int-tuple operations mod p for the exhaustive search."""

    def __init__(self, B: Algebra):
        self.fast = FpAlgebra(B)
        self.p = self.fast.p
        self.B = B

    def multiply(self, x, y):
        return self.fast.multiply(x, y)

    def not_in_square(self, v):
        return not fp_member(v, self.fast.square_rref, self.p)

    def independent(self, rows):
        return fp_rref(rows, self.p)[1] == len(rows)

    def combine(self, coords, vectors):
        p = self.p
        out = [0] * self.fast.dim
        for c, v in zip(coords, vectors):
            if c:
                out = [(u + c * w) % p for u, w in zip(out, v)]
        return tuple(out)

    def convert_coords(self, coords):
        return tuple(c.data for c in coords)

    def to_field_vec(self, v):
        f = self.B.field
        return tuple(f(x) for x in v)


def _candidate_vectors_fp(ops: _FpOps):
    return [v for v in ops.fast.all_vectors() if ops.not_in_square(v)]


def _candidate_vectors_q(ops: _QOps, height: int):
    """Height-bounded rational vectors, sparsest-first then by height:
    supports of size 1..3, entries p/q with |p|, q <= height."""
    vals = []
    seen = set()
    for num in range(1, height + 1):
        for den in range(1, height + 1):
            fr = Fraction(num, den)
            for s in (fr, -fr):
                if s not in seen:
                    seen.add(s)
                    vals.append(s)
    vals.sort(key=lambda v: (abs(v.numerator) + v.denominator, abs(v)))
    f = ops.field
    z = f.zero()
    dim = ops.B.dim
    out = []
    for support_size in (1, 2, 3):
        for supp in combinations(range(dim), support_size):
            for coeffs in iproduct(vals, repeat=support_size):
                v = [z] * dim
                for pos, c in zip(supp, coeffs):
                    v[pos] = f(c)
                v = tuple(v)
                if ops.not_in_square(v):
                    out.append(v)
    return out


def _search(A: Algebra, B: Algebra, budget, height, find_all):
    """Backtracking core shared by iso_search and enumerate_aut_fp.

    Returns a list of witnesses (all of them when find_all, else at most
    one)."""
    wb = WordBasis(A)
    g = wb.n_generators
    exhaustive = isinstance(A.field, PrimeField)
    ops = _FpOps(B) if exhaustive else _QOps(B)
    pool = _candidate_vectors_fp(ops) if exhaustive \
        else _candidate_vectors_q(ops, height)
    relations = [[(a, b, ops.convert_coords(coords))
                  for a, b, coords in lvl] for lvl in wb.relations]
    counter = [0]
    results = []
    n = A.dim
    images = [None] * n

    def extend(level):
        for cand in pool:
            counter[0] += 1
            if counter[0] > budget:
                raise BudgetExceeded(f"search budget {budget} exhausted")
            ok = True
            for t in wb.new_words[level]:
                w = wb.words[t]
                images[t] = cand if w[0] == "gen" else \
                    ops.multiply(images[w[1]], images[w[2]])
            for a, b, coords in relations[level]:
                lhs = ops.multiply(images[a], images[b])
                rhs = ops.combine(coords, images)
                if tuple(lhs) != tuple(rhs):
                    ok = False
                    break
            if ok:
                avail = [images[t] for t in range(n)
                         if wb.word_level[t] <= level]
                ok = ops.independent(avail)
            if ok:
                if level + 1 == g:
                    # the scheduled relations cover every word-basis pair
                    # and independence was checked, so phi is already an
                    # isomorphism; re-verify only on the heuristic path
                    img = Matrix(A.field,
                                 [ops.to_field_vec(images[t])
                                  for t in range(n)]).transpose()
                    phi = img * wb.inverse
                    if exhaustive or is_isomorphism(A, B, phi):
                        results.append(phi)
                        if not find_all:
                            return True
                else:
                    if extend(level + 1):
                        return True
        return False

    extend(0)
    return results


def iso_search(A: Algebra, B: Algebra, budget: int = 5_000_000,
               height: int = 3):
    """An isomorphism A -> B, or None.

    Over F_p the generator-image pool is exhaustive: None is a proof of
    non-isomorphism (BudgetExceeded is raised if the budget runs out
    first).  Over Q the pool is height-bounded and None only means
    "not found within the heuristic pool".
    """
    if A.dim != B.dim or A.field != B.field:
        return None
    if (A.square().dim != B.square().dim
            or A.annihilator().dim != B.annihilator().dim
            or A.nilpotency_index() != B.nilpotency_index()):
        return None
    if A.table == B.table:
        return Matrix.identity(A.field, A.dim)
    found = _search(A, B, budget, height, find_all=False)
    return found[0] if found else None


def enumerate_aut_fp(A: Algebra, budget: int = 50_000_000):
    """The full automorphism group of A over F_p, by exhaustive
    generator-image backtracking."""
    if not isinstance(A.field, PrimeField):
        raise ValueError("exhaustive enumeration needs a prime field")
    return _search(A, A, budget, 0, find_all=True)
