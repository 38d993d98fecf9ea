"""The walled Brauer category and its downward subcategory.

A morphism S -> T is a scalar-weighted perfect matching of the pair
(S1 ⊔ T2, T1 ⊔ S2).  We store it as the equivalent quadruple
(through1, through2, cups, caps):

* through1: pairs (s1 atom, t1 atom) crossing the wall on the left side,
* through2: pairs (s2 atom, t2 atom) on the right side,
* cups:     pairs (s1 atom, s2 atom) matched inside the source,
* caps:     pairs (t1 atom, t2 atom) matched inside the target.

Composition concatenates diagrams; every closed component removed
multiplies the coefficient by the charge.  The charge is a parameter of
composition (not of the diagram), so one diagram library serves every
charge and the charge-independent downward subcategory.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import BipartiteMatching, FiniteSetPair


@dataclass(frozen=True)
class WalledDiagram:
    source: FiniteSetPair
    target: FiniteSetPair
    through1: tuple  # (s1, t1) pairs
    through2: tuple  # (s2, t2) pairs
    cups: tuple      # (s1, s2) pairs
    caps: tuple      # (t1, t2) pairs
    coefficient: Fraction = Fraction(1)
    relabeled: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "through1", tuple(sorted(self.through1, key=lambda p: self.source.position1(p[0]))))
        object.__setattr__(self, "through2", tuple(sorted(self.through2, key=lambda p: self.source.position2(p[0]))))
        object.__setattr__(self, "cups", tuple(sorted(self.cups, key=lambda p: self.source.position1(p[0]))))
        object.__setattr__(self, "caps", tuple(sorted(self.caps, key=lambda p: self.target.position1(p[0]))))
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        s1 = [a for a, _ in self.through1] + [a for a, _ in self.cups]
        s2 = [a for a, _ in self.through2] + [b for _, b in self.cups]
        t1 = [b for _, b in self.through1] + [a for a, _ in self.caps]
        t2 = [b for _, b in self.through2] + [b for _, b in self.caps]
        if set(s1) != set(self.source.s1) or len(s1) != len(self.source.s1) \
                or set(s2) != set(self.source.s2) or len(s2) != len(self.source.s2):
            raise ValueError("matching must cover the source exactly once")
        if set(t1) != set(self.target.s1) or len(t1) != len(self.target.s1) \
                or set(t2) != set(self.target.s2) or len(t2) != len(self.target.s2):
            raise ValueError("matching must cover the target exactly once")

    @property
    def matching(self):
        """The underlying matching of (S1 ⊔ T2, T1 ⊔ S2), endpoints tagged."""
        pairs = [(("s1", a), ("t1", b)) for a, b in self.through1]
        pairs += [(("t2", b), ("s2", a)) for a, b in self.through2]
        pairs += [(("s1", a), ("s2", b)) for a, b in self.cups]
        pairs += [(("t2", b), ("t1", a)) for a, b in self.caps]
        return BipartiteMatching(tuple(pairs))

    # -- constructors ------------------------------------------------

    @classmethod
    def identity(cls, S: FiniteSetPair):
        return cls(S, S, tuple((a, a) for a in S.s1), tuple((b, b) for b in S.s2), (), ())

    @classmethod
    def bijection(cls, S, T, f, g):
        """(f, g, ∅, ∅) for bijections f: S1 -> T1 and g: S2 -> T2."""
        return cls(S, T, tuple((a, f[a]) for a in S.s1), tuple((b, g[b]) for b in S.s2), (), ())

    @classmethod
    def insertion(cls, S: FiniteSetPair, x, y):
        """(id, id, ∅, (x, y)): S -> (S1 ⊔ {x}, S2 ⊔ {y}), new atoms appended."""
        T = FiniteSetPair(S.s1 + (x,), S.s2 + (y,))
        return cls(S, T, tuple((a, a) for a in S.s1), tuple((b, b) for b in S.s2), (), ((x, y),))

    @classmethod
    def contraction(cls, S: FiniteSetPair, x, y):
        """(id, id, (x, y), ∅): S -> (S1 \\ {x}, S2 \\ {y})."""
        T = S.remove(x, y)
        return cls(S, T, tuple((a, a) for a in T.s1), tuple((b, b) for b in T.s2), ((x, y),), ())

    def is_identity(self):
        return (self.source == self.target and not self.cups and not self.caps
                and all(a == b for a, b in self.through1)
                and all(a == b for a, b in self.through2)
                and self.coefficient == 1)

    def scaled(self, c):
        return WalledDiagram(self.source, self.target, self.through1, self.through2,
                             self.cups, self.caps, self.coefficient * Fraction(c))

    def text(self):
        src = f"S=({','.join(map(str, self.source.s1))}|{','.join(map(str, self.source.s2))})"
        tgt = f"T=({','.join(map(str, self.target.s1))}|{','.join(map(str, self.target.s2))})"
        pairs = [f"({a}→{b})" for (_, a), (_, b) in ((p[0], p[1]) for p in self.matching.pairs)]
        return f"{src}; {tgt}; m=[{','.join(pairs)}]; coeff={self.coefficient}"


def is_downward(f: WalledDiagram):
    """True iff no matched pair lies inside the target (no insertions)."""
    return not f.caps


def compose(g: WalledDiagram, f: WalledDiagram, charge):
    """g ∘ f with closed loops removed at the cost of one charge factor each."""
    if f.target != g.source:
        raise ValueError("object mismatch: f.target != g.source")
    # adjacency on middle nodes; f-edges and g-edges alternate along paths
    f_edge = {}
    for a, b in f.through1:
        f_edge[("t1", b)] = ("s1", a)
    for a, b in f.through2:
        f_edge[("t2", b)] = ("s2", a)
    for a, b in f.caps:
        f_edge[("t1", a)] = ("t2", b)
        f_edge[("t2", b)] = ("t1", a)
    g_edge = {}
    for a, b in g.through1:
        g_edge[("t1", a)] = ("u1", b)
    for a, b in g.through2:
        g_edge[("t2", a)] = ("u2", b)
    for a, b in g.cups:
        g_edge[("t1", a)] = ("t2", b)
        g_edge[("t2", b)] = ("t1", a)

    visited = set()

    def trace(start, first_layer):
        node, layer = start, first_layer
        while True:
            node = layer[node]
            if node[0] in ("s1", "s2", "u1", "u2"):
                return node
            visited.add(node)
            layer = g_edge if layer is f_edge else f_edge

    results = {}
    for a in f.source.s1:
        if any(x == a for x, _ in f.cups):
            results[("s1", a)] = ("s2", next(y for x, y in f.cups if x == a))
            continue
        t = next(b for s, b in f.through1 if s == a)
        visited.add(("t1", t))
        results[("s1", a)] = trace(("t1", t), g_edge)
    for b in g.target.s2:
        if any(y == b for _, y in g.caps):
            results[("u2", b)] = ("u1", next(x for x, y in g.caps if y == b))
            continue
        t = next(s for s, u in g.through2 if u == b)
        visited.add(("t2", t))
        results[("u2", b)] = trace(("t2", t), f_edge)

    middle = [("t1", a) for a in f.target.s1] + [("t2", b) for b in f.target.s2]
    loops = 0
    for node in middle:
        if node in visited:
            continue
        loops += 1
        cur, layer = node, f_edge
        while True:
            visited.add(cur)
            nxt = layer[cur]
            if nxt == node:
                break
            cur, layer = nxt, (g_edge if layer is f_edge else f_edge)

    through1, through2, cups, caps = [], [], [], []
    for (kind, a), (ekind, e) in results.items():
        if kind == "s1" and ekind == "u1":
            through1.append((a, e))
        elif kind == "s1" and ekind == "s2":
            cups.append((a, e))
        elif kind == "u2" and ekind == "s2":
            through2.append((e, a))
        elif kind == "u2" and ekind == "u1":
            caps.append((e, a))
        else:  # pragma: no cover - the four cases above are exhaustive
            raise AssertionError("impossible strand")

    coeff = f.coefficient * g.coefficient * Fraction(charge) ** loops
    return WalledDiagram(f.source, g.target, tuple(through1), tuple(through2),
                         tuple(cups), tuple(caps), coeff)


def _fresh_atom(a, taken):
    cand = a
    while cand in taken:
        cand = (cand, "′") if not isinstance(cand, tuple) else cand + ("′",)
    return cand


def tensor(f: WalledDiagram, g: WalledDiagram):
    """Horizontal product; colliding atoms of g are relabeled (and recorded)."""
    taken1 = set(f.source.s1) | set(f.target.s1)
    taken2 = set(f.source.s2) | set(f.target.s2)
    map1, map2 = {}, {}
    for a in dict.fromkeys(g.source.s1 + g.target.s1):
        map1[a] = _fresh_atom(a, taken1) if a in taken1 else a
        taken1.add(map1[a])
    for b in dict.fromkeys(g.source.s2 + g.target.s2):
        map2[b] = _fresh_atom(b, taken2) if b in taken2 else b
        taken2.add(map2[b])
    relabeled = tuple((a, map1[a]) for a in map1 if map1[a] != a) + \
        tuple((b, map2[b]) for b in map2 if map2[b] != b)
    src = FiniteSetPair(f.source.s1 + tuple(map1[a] for a in g.source.s1),
                        f.source.s2 + tuple(map2[b] for b in g.source.s2))
    tgt = FiniteSetPair(f.target.s1 + tuple(map1[a] for a in g.target.s1),
                        f.target.s2 + tuple(map2[b] for b in g.target.s2))
    return WalledDiagram(
        src, tgt,
        f.through1 + tuple((map1[a], map1[b]) for a, b in g.through1),
        f.through2 + tuple((map2[a], map2[b]) for a, b in g.through2),
        f.cups + tuple((map1[a], map2[b]) for a, b in g.cups),
        f.caps + tuple((map1[a], map2[b]) for a, b in g.caps),
        f.coefficient * g.coefficient,
        relabeled,
    )


@dataclass(frozen=True)
class DiagramGeneratorWord:
    """A composable word of bijections, single insertions, single contractions."""

    letters: tuple  # applied left to right: letters[0] first

    def __post_init__(self):
        for a, b in zip(self.letters, self.letters[1:]):
            if a.target != b.source:
                raise ValueError("adjacent letters do not compose")

    def recompose(self, charge, source=None):
        if not self.letters:
            if source is None:
                raise ValueError("empty word needs an object to recompose at")
            return WalledDiagram.identity(source)
        out = self.letters[0]
        for letter in self.letters[1:]:
            out = compose(letter, out, charge)
        return out


def factor_into_generators(f: WalledDiagram):
    """Write f (coefficient 1) as contractions, then a bijection, then insertions."""
    if f.coefficient != 1:
        raise ValueError("factorization is defined for coefficient-1 diagrams")
    letters = []
    obj = f.source
    for x, y in f.cups:
        letters.append(WalledDiagram.contraction(obj, x, y))
        obj = letters[-1].target
    mid_t1 = tuple(b for _, b in sorted(f.through1, key=lambda p: obj.position1(p[0])))
    mid_t2 = tuple(b for _, b in sorted(f.through2, key=lambda p: obj.position2(p[0])))
    fmap = {a: b for a, b in f.through1}
    gmap = {a: b for a, b in f.through2}
    letters.append(WalledDiagram.bijection(obj, FiniteSetPair(mid_t1, mid_t2), fmap, gmap))
    obj = letters[-1].target
    for x, y in f.caps:
        letters.append(WalledDiagram.insertion(obj, x, y))
        obj = letters[-1].target
    if obj.s1 != f.target.s1 or obj.s2 != f.target.s2:
        # atom order may differ; finish with the order-fixing bijection
        letters.append(WalledDiagram.bijection(obj, f.target, {a: a for a in obj.s1}, {b: b for b in obj.s2}))
    if letters and all(l.is_identity() for l in letters) and f.is_identity():
        return DiagramGeneratorWord(())
    return DiagramGeneratorWord(tuple(letters))


def random_diagram(rng: random.Random, S: FiniteSetPair, T: FiniteSetPair):
    """A uniformly random basis diagram S -> T (sides must balance)."""
    side1 = [("s1", a) for a in S.s1] + [("t2", b) for b in T.s2]
    side2 = [("t1", a) for a in T.s1] + [("s2", b) for b in S.s2]
    if len(side1) != len(side2):
        raise ValueError("no diagrams between these objects")
    rng.shuffle(side2)
    through1, through2, cups, caps = [], [], [], []
    for (k1, a), (k2, b) in zip(side1, side2):
        if k1 == "s1" and k2 == "t1":
            through1.append((a, b))
        elif k1 == "s1" and k2 == "s2":
            cups.append((a, b))
        elif k1 == "t2" and k2 == "t1":
            caps.append((b, a))
        else:
            through2.append((b, a))
    return WalledDiagram(S, T, tuple(through1), tuple(through2), tuple(cups), tuple(caps))


def random_object(rng: random.Random, max_side=3, atoms=None):
    p = rng.randint(0, max_side)
    q = rng.randint(0, max_side)
    return FiniteSetPair(tuple(f"a{i}" for i in range(p)), tuple(f"b{i}" for i in range(q)))
