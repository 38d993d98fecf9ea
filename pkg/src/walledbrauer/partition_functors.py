"""The labeled-partition functors and their determinant twist.

P(S) has the labeled partitions of S as basis, concentrated in degree
|S1| - |S2|; P'(S) is spanned by the strict ones (no labeled singleton
block).  A walled diagram acts through its generator factorization:
bijections permute, an insertion (x, y) adds the labeled singleton (x; y),
and a contraction (x, y) fires one of three cases:

* (a) the block is exactly {x} with label y: drop it, multiply by n;
* (b) x's block is labeled y but bigger: the block loses x and its label;
* (c) otherwise merge (block of x minus x) into the block labeled y,
  keeping the label of x's block.

det(S) is the product of the two sign representations; its generators are
kept as explicit wedge words so that insertion/contraction signs are
positional rather than conventional.  The scalar n enters only in case
(a), so a symbolic-n mode (integer polynomial coefficients) is available
for stable-range statements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import (UNLABELED, FiniteSetPair, LabeledPartition,
                            enumerate_labeled_partitions, enumerate_matchings,
                            perm_sign)
from .brauer import WalledDiagram, factor_into_generators


class IntPoly:
    """Integer polynomials in one variable n; serialized as [c0, c1, ...]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, k):
        return cls((k,))

    @classmethod
    def var(cls):
        return cls((0, 1))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = other if isinstance(other, IntPoly) else IntPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple((self.coeffs[i] if i < len(self.coeffs) else 0)
                             + (other.coeffs[i] if i < len(other.coeffs) else 0)
                             for i in range(n)))

    def __mul__(self, other):
        other = other if isinstance(other, IntPoly) else IntPoly.const(other)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-a for a in self.coeffs))

    def __eq__(self, other):
        other = other if isinstance(other, IntPoly) else IntPoly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def eval(self, n):
        out = 0
        for a in reversed(self.coeffs):
            out = out * n + a
        return out

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


SYMBOLIC = object()  # sentinel: act with polynomial coefficients in n


def _one(n):
    return IntPoly.const(1) if n is SYMBOLIC else Fraction(1)


def _charge(n):
    return IntPoly.var() if n is SYMBOLIC else Fraction(n)


@dataclass(frozen=True)
class DetGenerator:
    """sign * (wedge of s1 atoms in word1 order) (x) (wedge of s2 atoms)."""

    S: FiniteSetPair
    word1: tuple
    word2: tuple
    sign: int = 1

    def __post_init__(self):
        if sorted(self.word1, key=self.S.position1) != list(self.S.s1):
            raise ValueError("word1 must be a permutation of s1")
        if sorted(self.word2, key=self.S.position2) != list(self.S.s2):
            raise ValueError("word2 must be a permutation of s2")

    @classmethod
    def volume(cls, S):
        return cls(S, S.s1, S.s2, 1)

    def normalized_sign(self):
        """Sign relative to the canonical volume generator of S."""
        s1 = perm_sign(tuple(self.S.position1(a) for a in self.word1))
        s2 = perm_sign(tuple(self.S.position2(b) for b in self.word2))
        return self.sign * s1 * s2


class PartitionVector:
    """A formal rational combination of labeled partitions over a fixed S."""

    def __init__(self, S: FiniteSetPair, terms=None):
        self.S = S
        self.terms = {}
        for part, coeff in (terms or {}).items():
            self._add(part, coeff)

    def _add(self, part: LabeledPartition, coeff):
        if part.S != self.S:
            raise ValueError("all terms must live over the same object")
        new = self.terms.get(part, 0) + coeff
        if new:
            self.terms[part] = new
        else:
            self.terms.pop(part, None)

    @classmethod
    def basis(cls, part: LabeledPartition, coeff=Fraction(1)):
        return cls(part.S, {part: coeff})

    def __add__(self, other):
        out = PartitionVector(self.S, dict(self.terms))
        for part, c in other.terms.items():
            out._add(part, c)
        return out

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        return PartitionVector(self.S, {p: v * c for p, v in self.terms.items()})

    def __eq__(self, other):
        return self.S == other.S and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{p.text()}" for p, c in sorted(self.terms.items(), key=lambda t: t[0].text()))


def _relabel_partition(part: LabeledPartition, T: FiniteSetPair, fmap, gmap):
    parts = tuple((tuple(fmap[a] for a in block),
                   UNLABELED if label is UNLABELED else gmap[label])
                  for block, label in part.parts)
    return LabeledPartition(T, parts)


def _contract_partition(part: LabeledPartition, x, y, T: FiniteSetPair, n):
    blk_x = part.block_of(x)
    lab_x = part.label_of(x)
    coeff = _one(n)
    if lab_x == y:
        if len(blk_x) == 1:
            coeff = _charge(n)  # case (a): drop {x};y and multiply by n
            parts = tuple(bl for bl in part.parts if bl[0] != blk_x)
        else:  # case (b): strip x, forget the label
            parts = tuple((tuple(a for a in bl[0] if a != x), UNLABELED) if bl[0] == blk_x else bl
                          for bl in part.parts)
    else:  # case (c): merge x's remaining block into the y-labeled block
        blk_y = part.block_with_label(y)
        merged = tuple(a for a in blk_x if a != x) + blk_y
        parts = tuple(bl for bl in part.parts if bl[0] not in (blk_x, blk_y))
        parts += ((merged, lab_x),)
    return LabeledPartition(T, parts), coeff


def apply_P(m: WalledDiagram, v: PartitionVector, n):
    """Action of a walled diagram on P; n may be SYMBOLIC."""
    if v.S != m.source:
        raise ValueError("object mismatch")
    dcoeff = m.coefficient
    if dcoeff != 1:
        m = m.scaled(Fraction(1) / dcoeff)
    word = factor_into_generators(m)
    out = v
    for letter in word.letters:
        nxt = PartitionVector(letter.target)
        for part, coeff in out.terms.items():
            if letter.cups:
                (x, y), = letter.cups
                newpart, factor = _contract_partition(part, x, y, letter.target, n)
                nxt._add(newpart, coeff * factor)
            elif letter.caps:
                (x, y), = letter.caps
                newpart = LabeledPartition(letter.target, part.parts + (((x,), y),))
                nxt._add(newpart, coeff)
            else:
                fmap = dict(letter.through1)
                gmap = dict(letter.through2)
                nxt._add(_relabel_partition(part, letter.target, fmap, gmap), coeff)
        out = nxt
    if out.S != m.target:
        raise AssertionError("generator word did not land on the target")
    if dcoeff != 1:
        if n is SYMBOLIC:
            if dcoeff.denominator != 1:
                raise ValueError("symbolic mode needs integer diagram coefficients")
            out = out.scaled(IntPoly.const(dcoeff.numerator))
        else:
            out = out.scaled(dcoeff)
    return out


def apply_det(m: WalledDiagram, g: DetGenerator):
    """Action of a walled diagram on det(S); contraction inverts insertion."""
    if g.S != m.source:
        raise ValueError("object mismatch")
    if m.coefficient != 1:
        raise ValueError("det acts on basis diagrams; scale separately")
    word = factor_into_generators(m)
    out = g
    for letter in word.letters:
        if letter.cups:
            (x, y), = letter.cups
            w1 = list(out.word1)
            i = w1.index(x)
            sign = (-1) ** (len(w1) - 1 - i)
            w1.pop(i)
            w2 = list(out.word2)
            j = w2.index(y)
            sign *= (-1) ** (len(w2) - 1 - j)
            w2.pop(j)
            out = DetGenerator(letter.target, tuple(w1), tuple(w2), out.sign * sign)
        elif letter.caps:
            (x, y), = letter.caps
            out = DetGenerator(letter.target, out.word1 + (x,), out.word2 + (y,), out.sign)
        else:
            fmap = dict(letter.through1)
            gmap = dict(letter.through2)
            out = DetGenerator(letter.target,
                               tuple(fmap[a] for a in out.word1),
                               tuple(gmap[b] for b in out.word2), out.sign)
    return out


@dataclass(frozen=True)
class StandardShape:
    """(lambda, k) of a labeled partition plus a realizing pair of bijections."""

    lam: tuple       # weakly decreasing part sizes
    k: tuple         # 1 for labeled parts, 0 otherwise, aligned with lam
    f: tuple         # f[i] = standard position (1-based) of S.s1[i]
    g: tuple         # g[j] = standard position (1-based) of S.s2[j]
    sign: int


def standardize(part: LabeledPartition):
    """The standard shape of a labeled partition.

    Parts are sorted by decreasing size with labeled parts first among equal
    sizes; the sign is that of (f, g) on det.  Prop-4.4 style cancellations
    make the sign independent of how ties between identical shapes are
    broken, which ``tests`` verify by enumerating all valid choices.
    """
    S = part.S
    keyed = sorted(
        part.parts,
        key=lambda bl: (-len(bl[0]), 0 if bl[1] is not UNLABELED else 1,
                        min(S.position1(a) for a in bl[0])),
    )
    lam = tuple(len(b) for b, _ in keyed)
    k = tuple(1 if l is not UNLABELED else 0 for _, l in keyed)
    f = {}
    g = {}
    pos = 1
    labpos = 1
    for block, label in keyed:
        for a in sorted(block, key=S.position1):
            f[a] = pos
            pos += 1
        if label is not UNLABELED:
            g[label] = labpos
            labpos += 1
    fperm = tuple(f[a] - 1 for a in S.s1)
    gperm = tuple(g[b] - 1 for b in S.s2)
    sign = perm_sign(fperm) * perm_sign(gperm)
    return StandardShape(lam, k, tuple(f[a] for a in S.s1), tuple(g[b] for b in S.s2), sign)


def day_product(u: PartitionVector, v: PartitionVector,
                det_u: DetGenerator = None, det_v: DetGenerator = None):
    """Monoidal product on P (x) det over the disjoint union object.

    Partitions and wedge words concatenate; the Koszul factor
    (-1)^(|S2 of u| * |T1 of v|) makes the product a commutative monoid
    structure for the graded symmetry (and is what validates the wheeled
    three-term relation downstream).
    """
    S, T = u.S, v.S
    if set(S.s1) & set(T.s1) or set(S.s2) & set(T.s2):
        raise ValueError("atom collision: objects must be disjoint")
    ST = S.disjoint_union(T)
    koszul = (-1) ** (len(S.s2) * len(T.s1))
    out = PartitionVector(ST)
    for pu, cu in u.terms.items():
        for pv, cv in v.terms.items():
            part = LabeledPartition(ST, pu.parts + pv.parts)
            out._add(part, cu * cv * koszul)
    if det_u is None and det_v is None:
        return out
    det = DetGenerator(ST, det_u.word1 + det_v.word1, det_u.word2 + det_v.word2,
                       det_u.sign * det_v.sign)
    return out, det


def kan_decompose(S: FiniteSetPair):
    """The Kan-extension basis of P(S): matchings on S\\I times strict partitions on I.

    Returns (summands, bijection) where summands is a list of
    (I, matchings, strict partitions) and bijection maps each
    (I, matching, strict partition) to its labeled partition in P(S).
    """
    summands = []
    bijection = {}
    s1, s2 = S.s1, S.s2
    for r in range(len(s1) + 1):
        for I1 in itertools.combinations(s1, r):
            for r2 in range(len(s2) + 1):
                for I2 in itertools.combinations(s2, r2):
                    rest = FiniteSetPair(tuple(a for a in s1 if a not in I1),
                                         tuple(b for b in s2 if b not in I2))
                    if len(rest.s1) != len(rest.s2):
                        continue
                    I = FiniteSetPair(I1, I2)
                    matchings = enumerate_matchings(rest)
                    stricts = enumerate_labeled_partitions(I, strict=True)
                    if not matchings or not stricts:
                        continue
                    summands.append((I, matchings, stricts))
                    for m in matchings:
                        for sp in stricts:
                            full = sp.parts + tuple(((a,), b) for a, b in m.pairs)
                            bijection[(I, m, sp)] = LabeledPartition(S, full)
    return summands, bijection


def dim_P(S: FiniteSetPair, strict=False):
    return len(enumerate_labeled_partitions(S, strict=strict))


# ---------------------------------------------------------------------------
# The wheeled model: classes of single labeled/unlabeled blocks in P (x) det.
# ---------------------------------------------------------------------------


class ModelElement:
    """An element of P(S) (x) det(S) with the volume folded into coefficients."""

    def __init__(self, S, terms=None):
        self.S = S
        self.terms = dict(terms or {})

    @classmethod
    def from_partition(cls, part, coeff=Fraction(1)):
        return cls(part.S, {part: coeff})

    def apply(self, m: WalledDiagram, n):
        vol = DetGenerator.volume(self.S)
        det = apply_det(m.scaled(Fraction(1) / m.coefficient) if m.coefficient != 1 else m, vol)
        dsign = det.normalized_sign()
        out = ModelElement(m.target)
        for part, coeff in self.terms.items():
            moved = apply_P(m, PartitionVector.basis(part), n)
            for p2, c2 in moved.terms.items():
                cur = out.terms.get(p2, 0) + coeff * c2 * dsign
                if cur:
                    out.terms[p2] = cur
                else:
                    out.terms.pop(p2, None)
        return out

    def day(self, other):
        prod = ModelElement(self.S.disjoint_union(other.S))
        koszul = (-1) ** (len(self.S.s2) * len(other.S.s1))
        for pu, cu in self.terms.items():
            for pv, cv in other.terms.items():
                part = LabeledPartition(prod.S, pu.parts + pv.parts)
                cur = prod.terms.get(part, 0) + cu * cv * koszul
                if cur:
                    prod.terms[part] = cur
                else:
                    prod.terms.pop(part, None)
        return prod

    def scaled(self, c):
        return ModelElement(self.S, {p: v * c for p, v in self.terms.items()})

    def __add__(self, other):
        out = ModelElement(self.S, dict(self.terms))
        for p, c in other.terms.items():
            cur = out.terms.get(p, 0) + c
            if cur:
                out.terms[p] = cur
            else:
                out.terms.pop(p, None)
        return out

    def __sub__(self, other):
        return self + other.scaled(-1)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return self.S == other.S and self.terms == other.terms


def model_h(p, i, offset1=0, offset2=0):
    """The model class of the generating operation of biarity (p, i), i in {0, 1}.

    A single block {offset1+1, ..., offset1+p}, labeled by offset2+1 when
    i = 1 and unlabeled otherwise, with coefficient +1 (canonical volume).
    """
    s1 = tuple(range(offset1 + 1, offset1 + p + 1))
    s2 = (offset2 + 1,) if i else ()
    S = FiniteSetPair(s1, s2)
    part = LabeledPartition(S, ((s1, s2[0] if i else UNLABELED),))
    return ModelElement.from_partition(part)


def model_contract(elem: ModelElement, x, y, n):
    """Contraction xi_{x,y} in the model: the diagram (id, id, (x, y), ∅)."""
    return elem.apply(WalledDiagram.contraction(elem.S, x, y), n)


def relabel_model(elem: ModelElement, S2: FiniteSetPair):
    """Transport along the order-preserving bijection onto S2 (positionally)."""
    S = elem.S
    m = WalledDiagram.bijection(S, S2, dict(zip(S.s1, S2.s1)), dict(zip(S.s2, S2.s2)))
    return elem.apply(m, 0)


def vertical_compose(a: ModelElement, b: ModelElement, n):
    """a ∘ b via horizontal product then iterated contraction (wheeled PROP)."""
    q = len(a.S.s2)
    if q != len(b.S.s1):
        raise ValueError("biarity mismatch")
    shift1 = max((x for x in a.S.s1), default=0)
    shift2 = max((x for x in a.S.s2), default=0)
    bshift = relabel_model(b, FiniteSetPair(tuple(x + shift1 for x in b.S.s1),
                                            tuple(x + shift2 for x in b.S.s2)))
    out = a.day(bshift)
    for j in range(q):
        out = model_contract(out, shift1 + j + 1, j + 1, n)
    return out


def wheeled_model_check(p: int, n: int = SYMBOLIC):
    """Verify the wheeled-PROP identities inside the model, up to biarity (p, 1).

    Checks, with exact coefficients (symbolic in n by default):

    * antisymmetry: the slot transposition acts by -1 on the (2,1) class;
    * the three-term relation (1 (x) mu) ∘ mu + (mu (x) 1) ∘ mu = 0;
    * last-slot contraction: xi_{p',1}(h_{p',1}) = h_{p'-1,0} exactly, and
      the first-slot form xi_{1,1}(h_{p',1}) = (-1)^(p'-1) h_{p'-1,0};
    * xi_{1,1} on the (1,1) class gives the scalar n;
    * merge contraction: xi_{p''+1,1}(h_{p'',1} h_{p',1}) = h_{p''+p'-1,1}
      and xi_{p''+1,1}(h_{p'',1} h_{p',0}) = -h_{p''+p'-1,0} (the uniform
      det-bookkeeping sign of the unlabeled case).

    Returns a report dict with a list of (name, ok) and overall success.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    checks = []

    h21 = model_h(2, 1)
    tau = WalledDiagram.bijection(h21.S, h21.S, {1: 2, 2: 1}, {1: 1})
    checks.append(("antisymmetry_2_1", h21.apply(tau, n) == h21.scaled(-1)))

    one = model_h(1, 1)
    lhs = vertical_compose(one.day(relabel_model(h21, FiniteSetPair((2, 3), (2,)))), h21, n)
    rhs = vertical_compose(h21.day(relabel_model(one, FiniteSetPair((3,), (2,)))), h21, n)
    checks.append(("three_term_relation", (lhs + rhs).is_zero()))

    contr11 = model_contract(model_h(1, 1), 1, 1, n)
    empty = FiniteSetPair((), ())
    scalar_n = ModelElement.from_partition(LabeledPartition(empty, ()), _charge(n))
    checks.append(("xi11_on_identity_is_n", contr11 == scalar_n))

    for pp in range(2, p + 1):
        got = model_contract(model_h(pp, 1), pp, 1, n)
        want = ModelElement.from_partition(
            LabeledPartition(FiniteSetPair(tuple(range(1, pp)), ()),
                             ((tuple(range(1, pp)), UNLABELED),)))
        checks.append((f"xi_last_h_{pp}_1", got == want))
        got_first = model_contract(model_h(pp, 1), 1, 1, n)
        want_first = relabel_model(want, FiniteSetPair(tuple(range(2, pp + 1)), ())).scaled((-1) ** (pp - 1))
        checks.append((f"xi_first_h_{pp}_1", got_first == want_first))

    for pa in range(2, p + 1):
        for pb in range(1, p + 1):
            for i in (0, 1):
                if pb == 1 and i == 0:
                    continue  # h_{1,0} is not a block class (labeled singleton is)
                a = model_h(pa, 1)
                b = model_h(pb, i, offset1=pa, offset2=1)
                prod = a.day(b)
                got = model_contract(prod, pa + 1, 1, n)
                merged_atoms = tuple(range(1, pa + 1)) + tuple(range(pa + 2, pa + pb + 1))
                Sm = FiniteSetPair(merged_atoms, (2,) if i else ())
                want = ModelElement.from_partition(
                    LabeledPartition(Sm, ((merged_atoms, 2 if i else UNLABELED),)),
                    _one(n) if i else -_one(n))
                checks.append((f"xi_merge_h_{pa}_1_h_{pb}_{i}", got == want))

    return {"p": p, "checks": checks, "ok": all(ok for _, ok in checks),
            "violations": [name for name, ok in checks if not ok]}
