import random
from fractions import Fraction

from walledbrauer.linalg import (
    BasisIndex,
    Echelon,
    GradedSpace,
    RationalMatrix,
    kernel_of_rows,
    nullspace,
    quotient_basis,
    rank,
)


def test_rank_basics():
    assert rank(RationalMatrix.identity(3)) == 3
    assert rank(RationalMatrix.zero(4, 5)) == 0
    m = RationalMatrix.from_rows([[1, 2], [2, 4]])
    assert rank(m) == 1


def test_nullspace_basics():
    assert nullspace(RationalMatrix.identity(3)).cols == 0
    m = RationalMatrix.from_rows([[1, 1]])
    ns = nullspace(m)
    assert ns.cols == 1
    v = {r: ns.get(r, 0) for r in range(2)}
    assert m.apply(v) == {}


def _random_matrix(rng, rows, cols, density=0.4):
    m = RationalMatrix.zero(rows, cols)
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                m.set(r, c, Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
    return m


def test_rank_nullity_and_transpose_random():
    rng = random.Random(0)
    for _ in range(25):
        m = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 8))
        r = rank(m)
        assert r == rank(m.transpose())
        ns = nullspace(m)
        assert r + ns.cols == m.cols
        prod = m.matmul(ns)
        assert all(not row for row in prod.data)


def test_quotient_basis():
    q = quotient_basis(4, RationalMatrix.zero(0, 4))
    assert q.dim == 4 and q.representatives == [0, 1, 2, 3]

    q = quotient_basis(3, RationalMatrix.identity(3))
    assert q.dim == 0

    rel = RationalMatrix.from_rows([[1, -1, 0, 0]], cols=4)
    q = quotient_basis(4, rel)
    assert q.dim == 3
    assert q.reduce({0: 1}) == q.reduce({1: 1})


def test_quotient_reduce_kills_relations():
    rng = random.Random(1)
    rel = _random_matrix(rng, 4, 6)
    q = quotient_basis(6, rel)
    for row in rel.data:
        assert q.reduce(dict(row)) == {}


def test_kernel_of_rows():
    rows = [{0: 1}, {0: 1}, {1: 1}]
    ker = kernel_of_rows(rows)
    assert len(ker) == 1
    assert ker[0] in ({0: 1, 1: -1}, {0: -1, 1: 1})


def test_echelon_deterministic():
    rows = [{0: Fraction(2), 1: Fraction(4)}, {1: Fraction(1), 2: Fraction(1)}]
    e1, e2 = Echelon(), Echelon()
    for r in rows:
        e1.add(dict(r))
        e2.add(dict(r))
    assert e1.pivots == e2.pivots


def test_matrix_dump_triples():
    m = RationalMatrix.from_rows([[Fraction(1, 2), 0], [0, 3]])
    text = m.dump_triples()
    assert text.splitlines()[0] == "2 2"
    assert "0 0 1/2" in text and "1 1 3" in text


def test_graded_space_and_basis_index():
    g = GradedSpace()
    g.add(2, ["a", "b"])
    g.add(0, ["u"])
    g.add(3, [])
    assert g.dim(2) == 2 and g.dim(0) == 1 and g.dim(3) == 0
    assert g.degrees() == [0, 2]

    bi = BasisIndex(["x", "y"])
    assert bi["x"] == 0 and bi["y"] == 1
    assert bi.add("z") == 2 and bi.add("x") == 0
    assert len(bi) == 3 and "y" in bi
