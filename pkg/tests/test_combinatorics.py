import itertools
import math
import random

from walledbrauer.combinatorics import (
    Bipartition,
    FiniteSetPair,
    LabeledPartition,
    SignedPermutation,
    UNLABELED,
    enumerate_bipartitions,
    enumerate_labeled_partitions,
    enumerate_matchings,
    matching_text,
    permutation_sign,
)


def test_matchings_counts():
    assert len(enumerate_matchings(FiniteSetPair(("a", "b"), ("x", "y")))) == 2
    assert enumerate_matchings(FiniteSetPair(("a",), ("x", "y"))) == []
    assert len(enumerate_matchings(FiniteSetPair(("a", "b", "c"), ("x", "y", "z")))) == 6


def test_matchings_factorial_law():
    for k in range(5):
        S = FiniteSetPair.ints(k, k)
        assert len(enumerate_matchings(S)) == math.factorial(k)


def test_matching_text():
    m = enumerate_matchings(FiniteSetPair(("a", "b"), ("x", "y")))[0]
    assert matching_text(m) == "[(a→x),(b→y)]"


def test_permutation_signs():
    dom = ("a", "b", "c")
    assert permutation_sign(SignedPermutation(dom, dom, ("a", "b", "c"))) == 1
    assert permutation_sign(SignedPermutation(dom, dom, ("b", "a", "c"))) == -1
    assert permutation_sign(SignedPermutation(dom, dom, ("b", "c", "a"))) == 1


def test_labeled_partition_counts():
    S = FiniteSetPair.ints(2, 1)
    assert len(enumerate_labeled_partitions(S)) == 3
    strict = enumerate_labeled_partitions(S, strict=True)
    assert len(strict) == 1
    assert strict[0].text() == "{1,2;1}"
    S42 = FiniteSetPair.ints(4, 2)
    assert len(enumerate_labeled_partitions(S42, strict=True)) == 6


def test_labeled_partition_invariants():
    S = FiniteSetPair.ints(3, 1)
    parts = enumerate_labeled_partitions(S)
    assert len(parts) == 10
    for p in parts:
        assert len(p.parts) >= len(S.s2)
        assert p.degree == 2
    assert all(p.is_strict() for p in enumerate_labeled_partitions(S, strict=True))
    strict = set(p.text() for p in enumerate_labeled_partitions(S, strict=True))
    loose = set(p.text() for p in parts)
    assert strict <= loose


def test_enumeration_is_stable():
    S = FiniteSetPair.ints(4, 2)
    a = [p.text() for p in enumerate_labeled_partitions(S)]
    b = [p.text() for p in enumerate_labeled_partitions(S)]
    assert a == b


def test_partition_text_unlabeled_dot():
    S = FiniteSetPair.ints(2, 1)
    texts = {p.text() for p in enumerate_labeled_partitions(S)}
    assert "{1;1|2;·}" in texts and "{1;·|2;1}" in texts


def test_kan_shadow_count_identity():
    # non-strict count equals sum over balanced I of matchings x strict counts
    for (p, q) in [(2, 1), (3, 1), (3, 2), (4, 2)]:
        S = FiniteSetPair.ints(p, q)
        total = 0
        for r in range(p + 1):
            for I1 in itertools.combinations(S.s1, r):
                for r2 in range(q + 1):
                    for I2 in itertools.combinations(S.s2, r2):
                        rest1 = tuple(a for a in S.s1 if a not in I1)
                        rest2 = tuple(b for b in S.s2 if b not in I2)
                        if len(rest1) != len(rest2):
                            continue
                        m = math.factorial(len(rest1))
                        s = len(enumerate_labeled_partitions(FiniteSetPair(I1, I2), strict=True))
                        total += m * s
        assert total == len(enumerate_labeled_partitions(S))


def test_bipartitions():
    assert [(b.lam, b.mu) for b in enumerate_bipartitions(1, 0)] == [((1,), ())]
    assert len(enumerate_bipartitions(2, 1)) == 2
    assert len(enumerate_bipartitions(2, 2)) == 4
    b = Bipartition((2, 1), (1,))
    assert b.weights == (3, 1) and b.length == 3
