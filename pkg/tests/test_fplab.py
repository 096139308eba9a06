"""Finite-field pipeline: Grassmannian enumeration, orbits, cross-check."""

import pytest

from novikov.algebra import Algebra
from novikov.fields import PrimeField, QQ
from novikov.fplab import (crosscheck, grassmannian_points,
                           qualifies_as_extension, run_procedure_fp,
                           run_procedure_fp_report, specialized_entries_fp,
                           specialized_tables_fp)
from novikov.morphisms import iso_search

F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)


def gaussian_binomial(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("dim,s,p", [
    (2, 1, 2), (3, 1, 3), (2, 2, 3), (4, 2, 3), (5, 1, 2), (3, 2, 5),
])
def test_grassmannian_point_counts(dim, s, p):
    pts = grassmannian_points(dim, s, p)
    assert len(pts) == gaussian_binomial(dim, s, p)
    assert len(set(pts)) == len(pts)
    for pt in pts:
        assert len(pt) == s and all(len(row) == dim for row in pt)


def test_grassmannian_degenerate_cases():
    assert grassmannian_points(3, 0, 2) == []
    assert grassmannian_points(2, 3, 2) == []


def test_run_procedure_one_dimensional_base():
    # the 1-dimensional zero algebra has a single admissible class:
    # the extension e1e1 = e2
    A = Algebra(F3, 1, {})
    classes = run_procedure_fp(A, 1)
    assert len(classes) == 1
    B = classes[0]
    assert B.dim == 2 and B.table[0][0][1] == F3(1)


def test_run_procedure_report_invariants():
    A = Algebra(F2, 2, {})
    rep = run_procedure_fp_report(A, 1)
    assert rep["p"] == 2 and rep["s"] == 1
    assert rep["h2_dim"] == 4
    assert rep["points"] == gaussian_binomial(4, 1, 2)
    assert rep["orbits"] <= rep["points"]
    assert len(rep["classes"]) <= rep["admissible_orbits"]
    assert len(rep["class_points"]) == len(rep["classes"])
    for i, B in enumerate(rep["classes"]):
        assert B.is_novikov()
        assert B.annihilator().dim == 1
        assert B.square().contains(B.annihilator())
        for C in rep["classes"][i + 1:]:
            assert iso_search(B, C) is None


def test_run_procedure_preconditions():
    with pytest.raises(ValueError):
        run_procedure_fp(Algebra(QQ, 2, {}), 1)
    with pytest.raises(ValueError):
        run_procedure_fp(Algebra(PrimeField(7), 2, {}), 1)
    with pytest.raises(ValueError):
        run_procedure_fp(Algebra(F2, 2, {}), 3)


def test_specialized_tables(cat):
    out, skips = specialized_tables_fp(cat, F3, 3)
    assert not skips
    names = [n for n, _ in out]
    assert len(names) == len(set(names))
    assert any(n.startswith("N3s_01") for n in names)
    for _, A in out:
        assert A.dim == 3


def test_specialized_entries_and_skips(cat):
    out, skips = specialized_entries_fp(cat, F2, ["N_001", "N_011"])
    assert [n for n, _ in out if n == "N_001"] == ["N_001"]
    assert all(n.startswith("N_011") for n, _ in skips)
    for _, B in out:
        assert B.dim == 5


def test_qualifies_as_extension():
    A = Algebra(F3, 1, {})
    good = Algebra(F3, 2, {(0, 0, 1): F3(1)})
    assert qualifies_as_extension(good, A, 1)
    # wrong dimension
    assert not qualifies_as_extension(good, Algebra(F3, 2, {}), 1)
    # split: annihilator not inside the square
    assert not qualifies_as_extension(Algebra(F3, 2, {}), A, 1)


def test_crosscheck_exhaustive_matching():
    A = Algebra(F3, 2, {(0, 0, 1): F3(1)})
    B = Algebra(F3, 2, {(0, 0, 1): F3(2)})    # isomorphic by scaling
    C = Algebra(F3, 2, {})
    rep = crosscheck([A, C], [("same", B), ("zero", C)])
    assert rep["matches"] == {0: ["same"], 1: ["zero"]}
    assert not rep["unmatched_classes"] and not rep["unmatched_pool"]
    rep = crosscheck([A], [("zero", C)])
    assert rep["unmatched_classes"] == [0]
    assert rep["unmatched_pool"] == ["zero"]
