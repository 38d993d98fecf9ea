import random
from fractions import Fraction

import pytest

from walledbrauer.brauer import (
    WalledDiagram,
    compose,
    factor_into_generators,
    is_downward,
    random_diagram,
    tensor,
)
from walledbrauer.combinatorics import FiniteSetPair


EMPTY = FiniteSetPair((), ())


def omega_strand():
    """The insertion diagram ∅ -> ({a}, {x})."""
    return WalledDiagram.insertion(EMPTY, "a", "x")


def lambda_strand():
    """The contraction diagram ({a}, {x}) -> ∅."""
    return WalledDiagram.contraction(FiniteSetPair(("a",), ("x",)), "a", "x")


def test_loop_gives_charge():
    d = compose(lambda_strand(), omega_strand(), charge=7)
    assert d.source == EMPTY and d.target == EMPTY
    assert d.coefficient == 7


def test_identity_composition_neutral():
    S = FiniteSetPair(("a", "b"), ("x",))
    rng = random.Random(1)
    f = random_diagram(rng, S, FiniteSetPair(("c",), ()))
    assert compose(f, WalledDiagram.identity(S), charge=5) == f
    assert compose(WalledDiagram.identity(f.target), f, charge=5) == f


def test_two_disjoint_loop_pairs_square_charge():
    two_omega = tensor(omega_strand(), omega_strand())
    # trace-diagram oracle: count connected components of the union graph
    # directly by composing the corresponding two-pair contraction
    T = two_omega.target
    contract_all = WalledDiagram(T, EMPTY, (), (), tuple(zip(T.s1, T.s2)), ())
    d = compose(contract_all, two_omega, charge=3)
    assert d.coefficient == 9 and d.source == EMPTY and d.target == EMPTY


def test_tensor_unit_and_identities():
    f = omega_strand()
    assert tensor(f, WalledDiagram.identity(EMPTY)) == f
    S = FiniteSetPair(("a",), ())
    T = FiniteSetPair(("c",), ("y",))
    t = tensor(WalledDiagram.identity(S), WalledDiagram.identity(T))
    assert t == WalledDiagram.identity(S.disjoint_union(T))


def test_tensor_two_omegas_is_two_pair_insertion():
    t = tensor(omega_strand(), omega_strand())
    assert t.source == EMPTY
    assert len(t.caps) == 2 and t.coefficient == 1
    assert len(t.target.s1) == 2 and len(t.target.s2) == 2


def test_tensor_relabels_on_collision():
    f = omega_strand()
    t = tensor(f, f)
    assert t.relabeled  # the second copy was renamed
    assert len(set(t.target.s1)) == 2


def test_is_downward():
    assert is_downward(lambda_strand())
    assert not is_downward(omega_strand())
    assert is_downward(WalledDiagram.identity(FiniteSetPair(("a",), ("x",))))


def test_downward_composition_never_sees_charge():
    rng = random.Random(7)
    for _ in range(50):
        p1, q1 = rng.randint(0, 3), rng.randint(0, 3)
        drop1 = rng.randint(0, min(p1, q1))
        S = FiniteSetPair(tuple(f"s{i}" for i in range(p1)), tuple(f"u{i}" for i in range(q1)))
        T = FiniteSetPair(tuple(f"t{i}" for i in range(p1 - drop1)), tuple(f"v{i}" for i in range(q1 - drop1)))
        drop2 = rng.randint(0, min(len(T.s1), len(T.s2)))
        U = FiniteSetPair(tuple(f"w{i}" for i in range(len(T.s1) - drop2)), tuple(f"z{i}" for i in range(len(T.s2) - drop2)))
        f = _random_downward(rng, S, T)
        g = _random_downward(rng, T, U)
        a = compose(g, f, charge=11)
        b = compose(g, f, charge=13)
        assert a == b  # no loops, hence charge-free


def _random_downward(rng, S, T):
    # choose which source atoms die in cups, biject the rest
    k = len(S.s1) - len(T.s1)
    cups1 = rng.sample(list(S.s1), k)
    cups2 = rng.sample(list(S.s2), k)
    rng.shuffle(cups2)
    rest1 = [a for a in S.s1 if a not in cups1]
    rest2 = [b for b in S.s2 if b not in cups2]
    img1 = list(T.s1)
    img2 = list(T.s2)
    rng.shuffle(img1)
    rng.shuffle(img2)
    return WalledDiagram(S, T, tuple(zip(rest1, img1)), tuple(zip(rest2, img2)),
                         tuple(zip(cups1, cups2)), ())


def _random_object(rng, maxp=2, prefix=""):
    p = rng.randint(0, maxp)
    q = rng.randint(0, maxp)
    return FiniteSetPair(tuple(f"{prefix}a{i}" for i in range(p)),
                         tuple(f"{prefix}b{i}" for i in range(q)))


def _composable_triple(rng):
    while True:
        S = _random_object(rng, 2, "s")
        T = _random_object(rng, 2, "t")
        U = _random_object(rng, 2, "u")
        V = _random_object(rng, 2, "v")
        if (len(S.s1) + len(T.s2) == len(T.s1) + len(S.s2)
                and len(T.s1) + len(U.s2) == len(U.s1) + len(T.s2)
                and len(U.s1) + len(V.s2) == len(V.s1) + len(U.s2)):
            return S, T, U, V


def test_associativity_random():
    rng = random.Random(42)
    for _ in range(100):
        S, T, U, V = _composable_triple(rng)
        f = random_diagram(rng, S, T)
        g = random_diagram(rng, T, U)
        h = random_diagram(rng, U, V)
        assert compose(h, compose(g, f, 5), 5) == compose(compose(h, g, 5), f, 5)


def test_monoidal_interchange():
    rng = random.Random(3)
    for _ in range(40):
        S, T, U, _ = _composable_triple(rng)
        S2, T2, U2, _ = _composable_triple(rng)
        f = random_diagram(rng, S, T)
        fp = random_diagram(rng, T, U)
        g = random_diagram(rng, S2, T2)
        gp = random_diagram(rng, T2, U2)
        lhs = compose(tensor(fp, gp), tensor(f, g), 5)
        rhs = tensor(compose(fp, f, 5), compose(gp, g, 5))
        assert lhs == rhs


def test_factorization_identity_is_empty_word():
    S = FiniteSetPair(("a", "b"), ("x",))
    w = factor_into_generators(WalledDiagram.identity(S))
    assert w.letters == ()
    assert w.recompose(5, source=S) == WalledDiagram.identity(S)


def test_factorization_two_insertions():
    d = tensor(omega_strand(), omega_strand())
    w = factor_into_generators(d)
    kinds = [("ins" if l.caps else "con" if l.cups else "bij") for l in w.letters]
    assert kinds.count("ins") == 2
    assert w.recompose(9) == d


def test_factorization_mixed_diagram_recomposes():
    # one through-strand, one contraction, one insertion -> 3-letter word
    S = FiniteSetPair(("a", "b"), ("x",))
    T = FiniteSetPair(("c", "d"), ("y",))
    d = WalledDiagram(S, T, (("a", "c"),), (), (("b", "x"),), (("d", "y"),))
    w = factor_into_generators(d)
    kinds = [("ins" if l.caps else "con" if l.cups else "bij") for l in w.letters]
    assert kinds == ["con", "bij", "ins"]
    assert w.recompose(4) == d


def test_invalid_diagram_rejected():
    S = FiniteSetPair(("a", "b"), ("x",))
    T = FiniteSetPair(("c",), ("y", "z"))
    with pytest.raises(ValueError):
        WalledDiagram(S, T, (("a", "c"), ("b", "c")), (), (), (("c", "y"),))


def test_factorization_random_roundtrip():
    rng = random.Random(17)
    count = 0
    while count < 60:
        S = _random_object(rng, 3, "s")
        T = _random_object(rng, 3, "t")
        if len(S.s1) + len(T.s2) != len(T.s1) + len(S.s2):
            continue
        count += 1
        d = random_diagram(rng, S, T)
        w = factor_into_generators(d)
        got = w.recompose(7, source=S)
        assert got == d
        for letter in w.letters:
            assert ((not letter.cups and not letter.caps)
                    or (len(letter.cups) == 1 and not letter.caps)
                    or (len(letter.caps) == 1 and not letter.cups))
