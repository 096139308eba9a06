"""Central extensions A_theta and the inverse construction.

central_extension(A, theta) adjoins s central basis vectors and adds
theta's values to the product: (x + u)(y + v) = xy + theta(x, y) with
the new summand annihilating everything.

reconstruct(B) inverts this: for B with Ann(B) != 0 it produces the
quotient algebra on the lexicographically-first coordinate complement of
Ann(B) together with the cocycle recording the annihilator part of the
products, so that central_extension(reconstruct(B)) is B up to the
induced basis change.
"""

from __future__ import annotations

from .algebra import Algebra
from .cohomology import Cocycle, classes_independent, cocycle_space, flatten
from .linalg import Matrix, Subspace


class ZeroAnnihilator(Exception):
    pass


def central_extension(A: Algebra, theta: Cocycle) -> Algebra:
    n, s = A.dim, theta.s
    table = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c = A.table[i][j][k]
                if c:
                    table[(i, j, k)] = c
            for t, m in enumerate(theta.components):
                if m[i, j]:
                    table[(i, j, n + t)] = m[i, j]
    return Algebra(A.field, n + s, table)


def extension_is_novikov_iff(A: Algebra, theta: Cocycle):
    """(is_novikov(A_theta), theta in Z^2) — equal for Novikov A."""
    ext = central_extension(A, theta)
    zspace = cocycle_space(A)
    in_z2 = all(zspace.member(flatten(m)) for m in theta.components)
    return ext.is_novikov(), in_z2


def extension_annihilator_law(A: Algebra, theta: Cocycle):
    """Check Ann(A_theta) = (Ann(theta) ∩ Ann(A)) ⊕ V; returns
    (holds, computed Ann(A_theta))."""
    n, s = A.dim, theta.s
    ext = central_extension(A, theta)
    ann_ext = ext.annihilator()
    core = theta.annihilator().intersect(A.annihilator())
    f = A.field
    z, o = f.zero(), f.one()
    expected_vecs = [list(v) + [z] * s for v in core.basis]
    for t in range(s):
        v = [z] * (n + s)
        v[n + t] = o
        expected_vecs.append(v)
    expected = Subspace(f, n + s, expected_vecs)
    return ann_ext == expected, ann_ext


def extension_is_split(A: Algebra, theta: Cocycle) -> bool:
    """A_theta is split iff the component classes are linearly dependent
    in H^2 (includes any component being a coboundary)."""
    singles = [Cocycle(A, [m], check=False) for m in theta.components]
    return not classes_independent(A, singles)


def reconstruct(B: Algebra):
    """(A, theta) with central_extension(A, theta) = B after moving
    Ann(B) to the trailing coordinates.  Requires Ann(B) != 0."""
    ann = B.annihilator()
    m = ann.dim
    if m == 0:
        raise ZeroAnnihilator("no central subspace to strip")
    comp = ann.coordinate_complement()
    reps = list(comp.basis)
    n = len(reps)
    # coordinates: products decompose as (complement part) + (ann part)
    stack = Matrix(B.field, [list(v) for v in reps] +
                   [list(v) for v in ann.basis]).transpose()
    table = {}
    theta_comps = [[[B.field.zero()] * n for _ in range(n)] for _ in range(m)]
    for a in range(n):
        for b in range(n):
            prod = B.multiply(reps[a], reps[b])
            coeff = stack.solve(prod)
            for k in range(n):
                if coeff[k]:
                    table[(a, b, k)] = coeff[k]
            for t in range(m):
                theta_comps[t][a][b] = coeff[n + t]
    base = Algebra(B.field, n, table)
    theta = Cocycle(base, theta_comps, check=False)
    return base, theta


def reconstruction_basis_change(B: Algebra) -> Matrix:
    """The basis change aligning B with central_extension(*reconstruct(B)):
    columns are the complement representatives followed by Ann(B) basis."""
    ann = B.annihilator()
    comp = ann.coordinate_complement()
    cols = list(comp.basis) + list(ann.basis)
    return Matrix(B.field, cols).transpose()
