"""Foundational finite combinatorics.

Everything downstream is built on four kinds of objects: ordered pairs of
finite label sets, perfect bipartite matchings between them, partitions of
the first set whose blocks are (partially) labeled by the second set, and
bipartitions of integers.  Atoms are opaque hashable values; their position
in the defining tuple is the total order used for every sign convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

UNLABELED = None  # distinguished "zero" label of an unlabeled block


def perm_sign(perm):
    """Sign of a permutation given as a tuple/list of images of 0..k-1."""
    n = len(perm)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sort_sign(values):
    """Sign of the permutation that stably sorts ``values``; 0 on repeats."""
    order = sorted(range(len(values)), key=lambda i: (values[i], i))
    for a, b in zip(order, order[1:]):
        if values[a] == values[b]:
            return 0
    return perm_sign(order)


@dataclass(frozen=True)
class FiniteSetPair:
    """An ordered pair of totally ordered finite label sets."""

    s1: tuple
    s2: tuple

    def __post_init__(self):
        object.__setattr__(self, "s1", tuple(self.s1))
        object.__setattr__(self, "s2", tuple(self.s2))
        if len(set(self.s1)) != len(self.s1):
            raise ValueError("atoms in s1 must be pairwise distinct")
        if len(set(self.s2)) != len(self.s2):
            raise ValueError("atoms in s2 must be pairwise distinct")

    @classmethod
    def ints(cls, p, q):
        """The skeleton object ([p], [q])."""
        return cls(tuple(range(1, p + 1)), tuple(range(1, q + 1)))

    @property
    def size(self):
        return len(self.s1) + len(self.s2)

    def position1(self, a):
        return self.s1.index(a)

    def position2(self, b):
        return self.s2.index(b)

    def disjoint_union(self, other):
        return FiniteSetPair(self.s1 + other.s1, self.s2 + other.s2)

    def remove(self, a=None, b=None):
        s1 = tuple(x for x in self.s1 if x != a) if a is not None else self.s1
        s2 = tuple(x for x in self.s2 if x != b) if b is not None else self.s2
        return FiniteSetPair(s1, s2)

    def __repr__(self):
        return f"({','.join(map(str, self.s1))}|{','.join(map(str, self.s2))})"


@dataclass(frozen=True)
class BipartiteMatching:
    """A partition of side1 ⊔ side2 into ordered pairs (a in side1, b in side2)."""

    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(tuple(p) for p in self.pairs)))

    @classmethod
    def of(cls, side1, side2, pairs):
        m = cls(tuple(pairs))
        first = [a for a, _ in m.pairs]
        second = [b for _, b in m.pairs]
        if sorted(first) != sorted(side1) or len(set(first)) != len(first):
            raise ValueError("matching does not cover side1 exactly once")
        if sorted(second) != sorted(side2) or len(set(second)) != len(second):
            raise ValueError("matching does not cover side2 exactly once")
        return m

    def image(self, a):
        for x, y in self.pairs:
            if x == a:
                return y
        raise KeyError(a)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def enumerate_matchings(S: FiniteSetPair):
    """All perfect bipartite matchings of S; empty unless |s1| = |s2|."""
    if len(S.s1) != len(S.s2):
        return []
    out = []
    for images in itertools.permutations(S.s2):
        out.append(BipartiteMatching(tuple(zip(S.s1, images))))
    return out


@dataclass(frozen=True)
class SignedPermutation:
    """A bijection between two equal-size ordered sets, with its sign."""

    domain: tuple
    codomain: tuple
    images: tuple  # images[i] is where domain[i] goes

    def __post_init__(self):
        if len(self.domain) != len(self.codomain) or len(self.images) != len(self.domain):
            raise ValueError("size mismatch")
        if sorted(self.images) != sorted(self.codomain):
            raise ValueError("images must enumerate the codomain")

    @property
    def sign(self):
        positions = tuple(self.codomain.index(x) for x in self.images)
        return perm_sign(positions)

    def __call__(self, a):
        return self.images[self.domain.index(a)]


def permutation_sign(p: SignedPermutation):
    return p.sign


@dataclass(frozen=True)
class LabeledPartition:
    """A partition of S.s1 with blocks labeled bijectively by S.s2.

    Unlabeled blocks carry the distinguished label ``UNLABELED``.  Canonical
    form: block elements sorted by position in s1, blocks sorted by their
    minimal element's position.
    """

    S: FiniteSetPair
    parts: tuple  # tuple of (block tuple, label)

    def __post_init__(self):
        pos = {a: i for i, a in enumerate(self.S.s1)}
        norm = []
        for block, label in self.parts:
            block = tuple(sorted(block, key=pos.__getitem__))
            if not block:
                raise ValueError("empty block")
            norm.append((block, label))
        norm.sort(key=lambda bl: pos[bl[0][0]])
        object.__setattr__(self, "parts", tuple(norm))
        covered = [a for block, _ in self.parts for a in block]
        if sorted(covered, key=pos.__getitem__) != list(self.S.s1) or len(set(covered)) != len(covered):
            raise ValueError("blocks must partition s1")
        labels = [l for _, l in self.parts if l is not UNLABELED]
        if sorted(map(self.S.position2, labels)) != list(range(len(self.S.s2))):
            raise ValueError("every label of s2 must occur exactly once")

    @property
    def degree(self):
        return len(self.S.s1) - len(self.S.s2)

    def is_strict(self):
        """No labeled block of size one."""
        return all(l is UNLABELED or len(b) >= 2 for b, l in self.parts)

    def label_of(self, a):
        for block, label in self.parts:
            if a in block:
                return label
        raise KeyError(a)

    def block_with_label(self, label):
        for block, l in self.parts:
            if l == label:
                return block
        raise KeyError(label)

    def block_of(self, a):
        for block, label in self.parts:
            if a in block:
                return block
        raise KeyError(a)

    def text(self):
        """Text form: blocks separated by '|', label after ';', '·' if none."""
        chunks = []
        for block, label in self.parts:
            lab = "·" if label is UNLABELED else str(label)
            chunks.append(f"{','.join(map(str, block))};{lab}")
        return "{" + "|".join(chunks) + "}"

    def __repr__(self):
        return self.text()


def matching_text(m: BipartiteMatching):
    return "[" + ",".join(f"({a}→{b})" for a, b in m.pairs) + "]"


def _set_partitions(items):
    """All set partitions of ``items`` in a canonical recursive order."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]
        yield [[first]] + sub


def enumerate_labeled_partitions(S: FiniteSetPair, strict=False):
    """All labeled partitions of S (strict: labeled blocks have size >= 2)."""
    q = len(S.s2)
    out = []
    for blocks in _set_partitions(S.s1):
        if len(blocks) < q:
            continue
        for chosen in itertools.permutations(range(len(blocks)), q):
            if strict and any(len(blocks[i]) < 2 for i in chosen):
                continue
            parts = []
            for i, block in enumerate(blocks):
                if i in chosen:
                    parts.append((tuple(block), S.s2[chosen.index(i)]))
                else:
                    parts.append((tuple(block), UNLABELED))
            out.append(LabeledPartition(S, tuple(parts)))
    out.sort(key=lambda p: p.text())
    return out


@dataclass(frozen=True)
class Bipartition:
    """A pair of integer partitions (lambda, mu)."""

    lam: tuple
    mu: tuple

    def __post_init__(self):
        for part in (self.lam, self.mu):
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)) or any(x <= 0 for x in part):
                raise ValueError("partitions must be weakly decreasing and positive")

    @property
    def weights(self):
        return (sum(self.lam), sum(self.mu))

    @property
    def length(self):
        return len(self.lam) + len(self.mu)


def integer_partitions(k, maxpart=None):
    """Partitions of k in decreasing lexicographic order."""
    if maxpart is None:
        maxpart = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, maxpart), 0, -1):
        for rest in integer_partitions(k - first, first):
            yield (first,) + rest


def enumerate_bipartitions(p, q):
    """All bipartitions (lambda, mu) with |lambda| = p, |mu| = q."""
    return [Bipartition(lam, mu)
            for lam in integer_partitions(p)
            for mu in integer_partitions(q)]


def rational(x):
    """Coerce to an exact Fraction (no floats admitted)."""
    if isinstance(x, float):
        raise TypeError("floating point is not allowed in this engine")
    return Fraction(x)
