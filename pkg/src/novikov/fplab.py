"""Finite-field classification lab.

Runs the full extension procedure over a prime field, where everything
is finite and exhaustively checkable: enumerate H^2, enumerate the
Grassmannian of s-dimensional subspaces of H^2 in canonical reduced
row-echelon form, act with the (fully enumerated) automorphism group on
H^2 coordinates, collect orbits with a union-find, keep the admissible
ones, build one extension per orbit and deduplicate by exhaustive
isomorphism search.

Orbit counts over F_p are p-specific and are never claimed to equal
characteristic-zero counts; the value of a run is the bidirectional
cross-check against specializations of the catalog, with specialization
failures (denominators divisible by p, square roots that do not exist
in F_p) listed rather than silently dropped.
"""

from __future__ import annotations

from itertools import product as iproduct

from ._fp import fp_rref
from .algebra import Algebra
from .catalog import Catalog, CatalogEntry, _exclusion_holds
from .cohomology import Cocycle, coboundary_space, flatten, h2_basis, in_Ts
from .exprs import Expr, ExprError, SqrtNotInField
from .extensions import central_extension
from .fields import DivisionByZero, PrimeField
from .invariants import fingerprint
from .linalg import Matrix
from .morphisms import enumerate_aut_fp, iso_search


def grassmannian_points(dim: int, s: int, p: int):
    """All s-dimensional subspaces of F_p^dim, one canonical reduced
    row-echelon basis each, as tuples of s coordinate tuples."""
    if not 0 < s <= dim:
        return []
    points = []
    from itertools import combinations
    for pivots in combinations(range(dim), s):
        # free positions: row r, columns right of its pivot that are
        # not pivots of later rows
        free = []
        for r in range(s):
            for c in range(pivots[r] + 1, dim):
                if c not in pivots:
                    free.append((r, c))
        for vals in iproduct(range(p), repeat=len(free)):
            rows = [[0] * dim for _ in range(s)]
            for r in range(s):
                rows[r][pivots[r]] = 1
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            points.append(tuple(tuple(r) for r in rows))
    return points


def _canonical(rows, p):
    rref, rank, _ = fp_rref([list(r) for r in rows], p)
    if rank != len(rows):
        raise ValueError("rows not independent")
    return tuple(tuple(r) for r in rref)


class _UnionFind:
    def __init__(self, keys):
        self.parent = {k: k for k in keys}

    def find(self, k):
        while self.parent[k] != k:
            self.parent[k] = self.parent[self.parent[k]]
            k = self.parent[k]
        return k

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def roots(self):
        return sorted({self.find(k) for k in self.parent})


def induced_h2_matrices(A: Algebra, reps, auts):
    """For each automorphism, the d x d integer matrix of its action on
    H^2 coordinates in the basis `reps` (single-component cocycles)."""
    f = A.field
    cob = list(coboundary_space(A).basis)
    mats = [r.components[0] for r in reps]
    cols = [list(flatten(m)) for m in mats] + [list(v) for v in cob]
    stack = Matrix(f, cols).transpose()
    d = len(reps)
    out = []
    for phi in auts:
        pt = phi.transpose()
        columns = []
        for m in mats:
            sol = stack.solve(list(flatten(pt * m * phi)))
            if sol is None:
                raise RuntimeError("automorphism left the cocycle space")
            columns.append([c.data for c in sol[:d]])
        # columns[i] = coordinates of the image of basis class i
        out.append([[columns[j][i] for j in range(d)] for i in range(d)])
    return out


def run_procedure_fp(A: Algebra, s: int, budget: int = 50_000_000):
    """Pairwise non-isomorphic admissible central extensions of A by
    F_p^s, one per automorphism orbit.  See run_procedure_fp_report for
    the full accounting."""
    return run_procedure_fp_report(A, s, budget)["classes"]


def run_procedure_fp_report(A: Algebra, s: int, budget: int = 50_000_000):
    if not isinstance(A.field, PrimeField):
        raise ValueError("the exhaustive procedure needs a prime field")
    if A.dim > 4:
        raise ValueError("dimension at most 4")
    if A.field.p not in (2, 3, 5):
        raise ValueError("p must be 2, 3 or 5")
    if s not in (1, 2):
        raise ValueError("s must be 1 or 2")
    p = A.field.p
    f = A.field
    reps, d = h2_basis(A)
    mats = [r.components[0] for r in reps]
    auts = enumerate_aut_fp(A, budget=budget)
    actions = induced_h2_matrices(A, reps, auts)

    points = [_canonical(pt, p) for pt in grassmannian_points(d, s, p)]
    uf = _UnionFind(points)
    for pt in points:
        for M in actions:
            image = [tuple(sum(M[i][j] * row[j] for j in range(d)) % p
                           for i in range(d)) for row in pt]
            uf.union(pt, _canonical(image, p))

    def cocycle_at(pt):
        comps = []
        for row in pt:
            m = Matrix.zero(f, A.dim, A.dim)
            for c, nab in zip(row, mats):
                if c:
                    m = m + nab * f(c)
            comps.append(m)
        return Cocycle(A, comps, check=False)

    admissible = []
    for root in uf.roots():
        theta = cocycle_at(root)
        if in_Ts(A, [theta]):
            admissible.append((root, theta))

    built = [(root, central_extension(A, theta))
             for root, theta in admissible]

    # deduplicate: fingerprint screen, then exhaustive search
    groups = {}
    for root, B in built:
        groups.setdefault(fingerprint(B), []).append((root, B))
    classes = []
    merged = 0
    for members in groups.values():
        kept = []
        for root, B in members:
            if any(iso_search(B, C, budget=budget) is not None
                   for _, C in kept):
                merged += 1
                continue
            kept.append((root, B))
        classes.extend(kept)
    classes.sort(key=lambda rb: rb[0])
    return {
        "p": p,
        "s": s,
        "h2_dim": d,
        "aut_order": len(auts),
        "points": len(points),
        "orbits": len(uf.roots()),
        "admissible_orbits": len(admissible),
        "merged": merged,
        "class_points": [root for root, _ in classes],
        "classes": [B for _, B in classes],
    }


# ----------------------------------------------------------------------
# catalog specialization over F_p and the bidirectional cross-check

def specialized_tables_fp(catalog: Catalog, field: PrimeField, dim: int):
    """All printed base tables of the given dimension, at every
    parameter value over F_p that passes the recorded constraints.
    Returns ([(name, Algebra)], [(name, reason)] skips)."""
    out, skips = [], []
    for key, rec in sorted(catalog.bases.items()):
        if rec.dim != dim:
            continue
        for combo in iproduct(range(field.p), repeat=len(rec.params)):
            env = {name: field(v) for name, v in zip(rec.params, combo)}
            name = key if not combo else f"{key}{list(combo)}"
            try:
                if not all(_exclusion_holds(x, field, env)
                           for x in rec.param_exclusions):
                    continue
                out.append((name, rec.algebra(field, env)))
            except (SqrtNotInField, DivisionByZero, ExprError) as e:
                skips.append((name, str(e)))
    return out, skips


def specialized_entries_fp(catalog: Catalog, field: PrimeField, labels):
    """Catalog entries at every parameter tuple over F_p.  Constraint
    violations are silently excluded; evaluation failures (division by
    p, missing square roots) are listed as skips."""
    out, skips = [], []
    for label in labels:
        entry = catalog.entry(label)
        for combo in iproduct(range(field.p), repeat=len(entry.params)):
            name = label if not entry.params else f"{label}{list(combo)}"
            try:
                env = entry.sample_env(field, combo)
                excluded = False
                for x in entry.exclusions:
                    if not _exclusion_holds(x, field, env):
                        excluded = True
                        break
                if not excluded:
                    benv = entry.base_env(field, env)
                    for x in entry.base.param_exclusions:
                        if not _exclusion_holds(x, field, benv):
                            excluded = True
                            break
                if excluded:
                    continue
                for comp in entry.cocycle_raw:
                    for expr in comp.values():
                        Expr(expr).evaluate(field, env)
                A, theta = entry.specialize(field, combo)
            except (SqrtNotInField, DivisionByZero, ExprError) as e:
                skips.append((name, str(e)))
                continue
            out.append((name, central_extension(A, theta)))
    return out, skips


def qualifies_as_extension(P: Algebra, A: Algebra, s: int,
                           budget: int = 50_000_000) -> bool:
    """Is P (up to isomorphism) an admissible extension of A by a
    central s-dimensional kernel?  Requires: Novikov, Ann(P) of
    dimension exactly s inside the square, and P/Ann(P) isomorphic
    to A (exhaustive over F_p)."""
    if P.dim != A.dim + s or not P.is_novikov():
        return False
    ann = P.annihilator()
    if ann.dim != s or not P.square().contains(ann):
        return False
    return iso_search(P.quotient(ann), A, budget=budget) is not None


def crosscheck(classes, pool, budget: int = 50_000_000):
    """Bidirectional matching between pipeline classes and a pool of
    named algebras over F_p.  Matching is exhaustive, so leftovers on
    either side are proofs of absence.

    Returns {"matches", "unmatched_classes", "unmatched_pool"} where
    matches maps class index -> sorted pool names isomorphic to it.
    """
    fps_pool = [(name, fingerprint(B), B) for name, B in pool]
    matches = {}
    matched_names = set()
    unmatched_classes = []
    for idx, C in enumerate(classes):
        fc = fingerprint(C)
        hits = []
        for name, fb, B in fps_pool:
            if fb == fc and iso_search(C, B, budget=budget) is not None:
                hits.append(name)
                matched_names.add(name)
        if hits:
            matches[idx] = sorted(hits)
        else:
            unmatched_classes.append(idx)
    unmatched_pool = [name for name, _ in pool if name not in matched_names]
    return {
        "matches": matches,
        "unmatched_classes": unmatched_classes,
        "unmatched_pool": unmatched_pool,
    }
