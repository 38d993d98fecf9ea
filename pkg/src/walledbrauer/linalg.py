"""Exact rational linear algebra.

Everything is over Q with fraction-free style elimination: rows are scaled
to primitive integer vectors after every update, so no floating point and
no uncontrolled denominator growth.  Pivoting is deterministic (first
nonzero in column order, then row order), which keeps every derived basis
reproducible between runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


def _primitive(row):
    """Scale a sparse {col: Fraction} row to a primitive integer row."""
    if not row:
        return {}
    denom = 1
    for v in row.values():
        denom = denom * v.denominator // math.gcd(denom, v.denominator)
    g = 0
    for v in row.values():
        g = math.gcd(g, abs(v.numerator * (denom // v.denominator)))
    out = {}
    for c, v in row.items():
        out[c] = v.numerator * (denom // v.denominator) // g
    return out


class Echelon:
    """Incremental reduced row echelon form over Q with sparse integer rows.

    Columns may be arbitrary hashable labels ordered by ``colkey`` (default:
    the label itself).  Supports rank queries, reduction of vectors modulo
    the row space, and kernel extraction relative to a column universe.
    """

    def __init__(self, colkey=None):
        self.pivots = {}  # pivot col -> primitive integer row dict
        self.colkey = colkey or (lambda c: c)

    @property
    def rank(self):
        return len(self.pivots)

    def _leading(self, row):
        return min(row, key=self.colkey)

    def reduce(self, row):
        """Reduce a sparse row modulo the row space; returns a Fraction row."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        for c in sorted(row, key=self.colkey):
            if c not in row or not row[c]:
                continue
            piv = self.pivots.get(c)
            if piv is None:
                continue
            factor = row[c] / piv[c]
            for pc, pv in piv.items():
                new = row.get(pc, Fraction(0)) - factor * pv
                if new:
                    row[pc] = new
                else:
                    row.pop(pc, None)
        return row

    def add(self, row):
        """Insert a row; returns its pivot column or None if dependent."""
        red = self.reduce(row)
        if not red:
            return None
        lead = self._leading(red)
        newrow = _primitive(red)
        # back-eliminate the new pivot from existing rows (full RREF)
        for pc, prow in list(self.pivots.items()):
            if lead in prow:
                a, b = prow[lead], newrow[lead]
                g = math.gcd(a, b)
                merged = {}
                for c in set(prow) | set(newrow):
                    v = prow.get(c, 0) * (b // g) - newrow.get(c, 0) * (a // g)
                    if v:
                        merged[c] = v
                self.pivots[pc] = _primitive({c: Fraction(v) for c, v in merged.items()})
        self.pivots[lead] = newrow
        return lead

    def contains(self, row):
        return not self.reduce(row)

    def free_columns(self, universe):
        return [c for c in universe if c not in self.pivots]


def kernel_of_rows(rows, colkey=None):
    """Kernel of the map e_i -> rows[i], as primitive coefficient dicts.

    Forward elimination with a companion identity block: whenever a row
    reduces to zero, its companion is a kernel vector of the row family.
    """
    colkey = colkey or (lambda c: c)
    pivots = {}  # col -> (primitive row, companion)
    kernel = []
    for i, raw in enumerate(rows):
        row = {c: Fraction(v) for c, v in raw.items() if v}
        comp = {i: Fraction(1)}
        while row:
            lead = min(row, key=colkey)
            hit = pivots.get(lead)
            if hit is None:
                break
            prow, pcomp = hit
            factor = row[lead] / prow[lead]
            for c, v in prow.items():
                new = row.get(c, Fraction(0)) - factor * v
                if new:
                    row[c] = new
                else:
                    row.pop(c, None)
            for c, v in pcomp.items():
                new = comp.get(c, Fraction(0)) - factor * v
                if new:
                    comp[c] = new
                else:
                    comp.pop(c, None)
        if row:
            pivots[min(row, key=colkey)] = (row, comp)
        else:
            kernel.append(_primitive(comp))
    return kernel


@dataclass
class RationalMatrix:
    """A rows x cols matrix of exact rationals, stored as sparse rows."""

    rows: int
    cols: int
    data: list  # list of {col: Fraction}

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [dict() for _ in range(rows)])

    @classmethod
    def from_rows(cls, rows_of_entries, cols=None):
        data = []
        width = cols or 0
        for r in rows_of_entries:
            if isinstance(r, dict):
                row = {c: Fraction(v) for c, v in r.items() if v}
                if row:
                    width = max(width, max(row) + 1)
            else:
                row = {c: Fraction(v) for c, v in enumerate(r) if v}
                width = max(width, len(r))
            data.append(row)
        return cls(len(data), cols if cols is not None else width, data)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: Fraction(1)} for i in range(n)])

    def set(self, r, c, value):
        v = Fraction(value)
        if v:
            self.data[r][c] = v
        else:
            self.data[r].pop(c, None)

    def get(self, r, c):
        return self.data[r].get(c, Fraction(0))

    @property
    def density(self):
        total = self.rows * self.cols
        return Fraction(sum(len(r) for r in self.data), total) if total else Fraction(0)

    def transpose(self):
        out = RationalMatrix.zero(self.cols, self.rows)
        for r, row in enumerate(self.data):
            for c, v in row.items():
                out.data[c][r] = v
        return out

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = RationalMatrix.zero(self.rows, other.cols)
        for r, row in enumerate(self.data):
            acc = {}
            for k, v in row.items():
                for c, w in other.data[k].items():
                    acc[c] = acc.get(c, Fraction(0)) + v * w
            out.data[r] = {c: v for c, v in acc.items() if v}
        return out

    def apply(self, vec):
        """Matrix times a sparse column vector {index: value}."""
        out = {}
        for r, row in enumerate(self.data):
            s = Fraction(0)
            for c, v in row.items():
                if c in vec:
                    s += v * Fraction(vec[c])
            if s:
                out[r] = s
        return out

    def __eq__(self, other):
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            {c: v for c, v in a.items() if v} == {c: v for c, v in b.items() if v}
            for a, b in zip(self.data, other.data)
        )

    def dump_triples(self):
        """Matrix-market style dump: 'row col value' with exact rationals."""
        lines = [f"{self.rows} {self.cols}"]
        for r, row in enumerate(self.data):
            for c in sorted(row):
                lines.append(f"{r} {c} {row[c]}")
        return "\n".join(lines)


def rank(m: RationalMatrix):
    ech = Echelon()
    for row in m.data:
        ech.add(row)
    return ech.rank


def nullspace(m: RationalMatrix):
    """Basis matrix of ker(m); columns are kernel vectors, m * basis = 0."""
    ech = Echelon()
    for row in m.data:
        ech.add(row)
    free = ech.free_columns(range(m.cols))
    vectors = []
    for f in free:
        vec = {f: Fraction(1)}
        for pc, prow in ech.pivots.items():
            if f in prow:
                vec[pc] = -Fraction(prow[f], prow[pc])
        vectors.append(vec)
    out = RationalMatrix.zero(m.cols, len(vectors))
    for j, vec in enumerate(vectors):
        for i, v in vec.items():
            out.data[i][j] = v
    return out


@dataclass
class Quotient:
    """A quotient of Q^dim by the row space of a relation matrix."""

    space_dim: int
    representatives: list  # free column indices, in order
    _ech: Echelon

    @property
    def dim(self):
        return len(self.representatives)

    def reduce(self, vec):
        """Coordinates of a vector's class in the representative basis."""
        red = self._ech.reduce({c: Fraction(v) for c, v in (vec.items() if isinstance(vec, dict) else enumerate(vec)) if v})
        return {c: v for c, v in red.items() if v}


def quotient_basis(space_dim, relations: RationalMatrix):
    """Quotient of Q^space_dim by the span of the rows of ``relations``."""
    if relations.cols > space_dim:
        raise ValueError("relations live in a larger space")
    ech = Echelon()
    for row in relations.data:
        ech.add(row)
    reps = ech.free_columns(range(space_dim))
    return Quotient(space_dim, reps, ech)


@dataclass
class GradedSpace:
    """Per-degree dimensions with explicit basis labels; zero degrees omitted."""

    pieces: dict = field(default_factory=dict)  # degree -> list of labels

    def add(self, degree, labels):
        if labels:
            self.pieces.setdefault(degree, []).extend(labels)

    def dim(self, degree):
        return len(self.pieces.get(degree, []))

    def degrees(self):
        return sorted(self.pieces)


class BasisIndex:
    """A stable bijection between structured labels and column indices."""

    def __init__(self, labels=()):
        self.labels = []
        self.index = {}
        for l in labels:
            self.add(l)

    def add(self, label):
        if label in self.index:
            return self.index[label]
        self.index[label] = len(self.labels)
        self.labels.append(label)
        return self.index[label]

    def __getitem__(self, label):
        return self.index[label]

    def __contains__(self, label):
        return label in self.index

    def __len__(self):
        return len(self.labels)
