"""Homomorphisms, automorphisms, the H^2 action, isomorphism search."""

import random
from fractions import Fraction

import pytest

from novikov.algebra import Algebra
from novikov.catalog import _evaluate
from novikov.cohomology import Cocycle
from novikov.fields import QQ, PrimeField
from novikov.linalg import Matrix
from novikov.morphisms import (BudgetExceeded, NotAutomorphism,
                               act_on_cocycle, derivation_algebra,
                               enumerate_aut_fp, is_homomorphism,
                               is_isomorphism, iso_search)

F2, F5 = PrimeField(2), PrimeField(5)

A = Algebra(QQ, 3, {(0, 0, 1): QQ(1)})   # e1e1 = e2


def test_homomorphism_check():
    ok, wit = is_homomorphism(A, A, Matrix.identity(QQ, 3))
    assert ok and wit is None
    # x -> 2x is not multiplicative here (square scales by 4)
    ok, wit = is_homomorphism(A, A, Matrix.identity(QQ, 3) * QQ(2))
    assert not ok and wit == (0, 0)
    with pytest.raises(ValueError):
        is_homomorphism(A, A, Matrix.identity(QQ, 2))


def test_isomorphism_check():
    # e1 -> e1, e2 -> e2, e3 -> e2 + e3 is an automorphism
    phi = Matrix(QQ, [[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    assert is_isomorphism(A, A, phi)
    assert not is_isomorphism(A, A, Matrix.zero(QQ, 3, 3))


def test_act_on_cocycle_is_congruence():
    phi = Matrix(QQ, [[2, 0, 0], [0, 4, 0], [0, 0, 1]])
    assert is_isomorphism(A, A, phi)
    m = Matrix(QQ, [[0, 0, 1], [0, 0, 0], [0, 0, 0]])  # Delta_13
    theta = Cocycle(A, [m], check=False)
    out = act_on_cocycle(A, phi, theta)
    assert out.components[0] == phi.transpose() * m * phi
    with pytest.raises(NotAutomorphism):
        act_on_cocycle(A, Matrix.identity(QQ, 3) * QQ(2), theta)


def test_act_on_cocycle_group_action():
    rng = random.Random(3)
    m = Matrix(QQ, [[0, 1, 0], [0, 0, 0], [1, 0, 0]])
    theta = Cocycle(A, [m], check=False)
    def random_aut():
        # for e1e1 = e2 the automorphisms are exactly
        # e1 -> a e1 + b e2 + c e3, e2 -> a^2 e2, e3 -> e e2 + f e3
        a = rng.choice([1, -1, 2, -2, 3])
        b, c, e = (rng.randint(-2, 2) for _ in range(3))
        f = rng.choice([1, -1, 2])
        phi = Matrix(QQ, [[a, 0, 0], [b, a * a, e], [c, 0, f]])
        assert is_isomorphism(A, A, phi)
        return phi
    for _ in range(5):
        phi, psi = random_aut(), random_aut()
        lhs = act_on_cocycle(A, phi * psi, theta)
        rhs = act_on_cocycle(A, psi, act_on_cocycle(A, phi, theta))
        assert lhs.components == rhs.components


def test_derivation_algebra():
    # for the zero product every endomorphism is a derivation
    zero = Algebra(QQ, 2, {})
    _, d = derivation_algebra(zero)
    assert d == 4
    _, d = derivation_algebra(A)
    sub, _ = derivation_algebra(A)
    # each basis element satisfies the Leibniz rule
    for v in sub.basis:
        D = Matrix(QQ, [[v[i * 3 + j] for j in range(3)] for i in range(3)])
        for i in range(3):
            for j in range(3):
                x, y = A.basis_vector(i), A.basis_vector(j)
                left = D.apply(A.multiply(x, y))
                right = tuple(
                    a + b for a, b in zip(A.multiply(D.apply(x), y),
                                          A.multiply(x, D.apply(y))))
                assert left == right


def test_iso_search_finds_basis_change():
    rng = random.Random(5)
    B5 = Algebra(F5, 3, {(0, 0, 1): F5(1), (0, 1, 2): F5(1)})
    while True:
        P = Matrix(F5, [[F5(rng.randrange(5)) for _ in range(3)]
                        for _ in range(3)])
        if P.is_invertible():
            break
    C = B5.change_basis(P)
    w = iso_search(B5, C)
    assert w is not None and is_isomorphism(B5, C, w)


def test_iso_search_proves_distinct_over_fp():
    X = Algebra(F5, 2, {(0, 0, 1): F5(1)})
    Y = Algebra(F5, 2, {})
    assert iso_search(X, Y) is None


def test_iso_search_over_q():
    X = Algebra(QQ, 2, {(0, 0, 1): QQ(1)})
    Y = Algebra(QQ, 2, {(0, 0, 1): QQ(4)})     # rescale e1 by 1/2
    w = iso_search(X, Y, height=3)
    assert w is not None and is_isomorphism(X, Y, w)


def test_budget_exceeded():
    X = Algebra(F5, 4, {(0, 0, 1): F5(1), (2, 2, 3): F5(1)})
    P = Matrix(F5, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]])
    Y = X.change_basis(P)      # e3e3 = 4 e4: same algebra, new table
    assert X.table != Y.table
    with pytest.raises(BudgetExceeded):
        iso_search(X, Y, budget=1)


def test_enumerate_aut_fp():
    # zero product on F_2^2: Aut = GL(2, F_2), order 6
    zero = Algebra(F2, 2, {})
    auts = enumerate_aut_fp(zero)
    assert len(auts) == 6
    assert len({a.entries for a in auts}) == 6
    for a in auts:
        assert is_isomorphism(zero, zero, a)
    with pytest.raises(ValueError):
        enumerate_aut_fp(Algebra(QQ, 1, {}))


def test_recorded_automorphism_shapes(cat):
    """Every stored parameterized automorphism shape really is an
    automorphism wherever its determinant is nonzero."""
    rng = random.Random(11)
    for key, rec in sorted(cat.bases.items()):
        if rec.aut_shape is None or rec.params:
            continue
        A0 = rec.algebra(QQ, {})
        done = 0
        while done < 5:
            env = {p: QQ(Fraction(rng.randint(-3, 3)))
                   for p in rec.aut_params}
            if not _evaluate(rec.aut_det, QQ, env):
                continue
            phi = rec.automorphism(QQ, env)
            assert is_isomorphism(A0, A0, phi), (key, env)
            done += 1
