"""Explicit decompositions of the determinant tensor.

Every generator returns a :class:`Decomposition`: an ordered list of
decomposable terms ``coeff * v_1 (x) ... (x) v_n`` whose sum is meant to be
det_n.  Nothing here checks that claim; see :mod:`detdecomp.verify`.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterator, List, Mapping, Tuple

from .errors import FieldMismatch, IndexOutOfRange, OrderMismatch
from .fields import QQ, Field, Scalar
from .tensor import permutation_sign

PairIndex = Tuple[Tuple[int, int], ...]


class Provenance(enum.Enum):
    LEIBNIZ = "leibniz"
    DERKSEN3 = "derksen3"
    DET4 = "det4"
    EVEN_GENERAL = "even_general"
    LAPLACE_LIFT = "laplace_lift"
    FILE = "file"


@dataclass(frozen=True)
class LinearVector:
    """Sparse covector sum(c_i e_i), stored as sorted ``(i, c_i)`` pairs."""

    coeffs: Tuple[Tuple[int, Scalar], ...]

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, Scalar], field: Field = QQ) -> "LinearVector":
        acc: Dict[int, Scalar] = {}
        for i, c in coeffs.items():
            acc[i] = field.add(acc.get(i, field.zero), field(c))
        return cls(tuple(sorted((i, c) for i, c in acc.items() if not field.is_zero(c))))

    @classmethod
    def basis(cls, i: int, field: Field = QQ) -> "LinearVector":
        return cls(((i, field.one),))

    @classmethod
    def pair(cls, i: int, j: int, sign: int, field: Field = QQ) -> "LinearVector":
        """``e_i + e_j`` (sign=+1) or ``e_i - e_j`` (sign=-1)."""
        return cls.from_dict({i: 1, j: sign}, field)

    def items(self):
        return self.coeffs

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.coeffs)

    def as_dict(self) -> Dict[int, Scalar]:
        return dict(self.coeffs)

    def relabel(self, mapping: Mapping[int, int]) -> "LinearVector":
        return LinearVector(tuple(sorted((mapping[i], c) for i, c in self.coeffs)))

    def __len__(self):
        return len(self.coeffs)

    def __str__(self):
        parts = []
        for i, c in self.coeffs:
            if c == 1:
                parts.append(f"+e{i}")
            elif c == -1:
                parts.append(f"-e{i}")
            else:
                parts.append(f"{c}*e{i}")
        return "(" + " ".join(parts) + ")"


@dataclass(frozen=True)
class DecomposableTerm:
    coeff: Scalar
    factors: Tuple[LinearVector, ...]

    def __str__(self):
        return f"{self.coeff} " + " (x) ".join(str(f) for f in self.factors)


@dataclass
class Decomposition:
    """A list of decomposable terms claimed to sum to det_n over ``field``.

    ``provenance`` is informational and is ignored by ``==``.
    """

    order_n: int
    field: Field
    terms: List[DecomposableTerm]
    provenance: Provenance = dc_field(default=Provenance.FILE, compare=False)
    # provenance tag read from a file header, kept so re-export is byte-identical
    declared_provenance: str = dc_field(default="", compare=False)

    def __post_init__(self):
        F = self.field
        n = self.order_n
        for t in self.terms:
            if len(t.factors) != n:
                raise OrderMismatch(f"term has {len(t.factors)} factors, expected {n}")
            if F.is_zero(t.coeff):
                raise ValueError("decomposable term with zero coefficient")
            for f in t.factors:
                if any(not 1 <= i <= n for i in f.support):
                    raise IndexOutOfRange(f"basis index out of range 1..{n} in {f}")

    def __len__(self):
        return len(self.terms)

    @property
    def term_count(self) -> int:
        return len(self.terms)

    @property
    def provenance_tag(self) -> str:
        if self.provenance is Provenance.FILE and self.declared_provenance:
            return self.declared_provenance
        return self.provenance.value

    def __add__(self, other: "Decomposition") -> "Decomposition":
        if self.order_n != other.order_n or self.field != other.field:
            raise OrderMismatch("cannot concatenate decompositions of different order/field")
        return Decomposition(self.order_n, self.field, self.terms + other.terms, Provenance.FILE)


def _term(field: Field, coeff, factors) -> DecomposableTerm:
    return DecomposableTerm(field(coeff), tuple(factors))


# -- Leibniz ---------------------------------------------------------------

def leibniz(n: int, field: Field = QQ) -> Decomposition:
    """n! terms sgn(s) e_s(1) (x) ... (x) e_s(n), permutations in lex order."""
    if n < 1:
        raise ValueError("n must be positive")
    field.check(allow_char_two=True)
    basis = [LinearVector.basis(i, field) for i in range(1, n + 1)]
    terms = [
        _term(field, permutation_sign(p), (basis[i - 1] for i in p))
        for p in itertools.permutations(range(1, n + 1))
    ]
    return Decomposition(n, field, terms, Provenance.LEIBNIZ)


# -- hardcoded small formulas ----------------------------------------------

# Derksen's det_3: 1/2 * sum of five products, the third carrying an extra 2.
# Each row: (coefficient before the 1/2, factors as {index: coeff}).
_DERKSEN3 = [
    (1, [{3: 1, 2: 1}, {1: 1, 2: -1}, {1: 1, 2: 1}]),
    (1, [{1: 1, 2: 1}, {2: 1, 3: -1}, {2: 1, 3: 1}]),
    (2, [{2: 1}, {3: 1, 1: -1}, {3: 1, 1: 1}]),
    (1, [{3: 1, 2: -1}, {2: 1, 1: 1}, {2: 1, 1: -1}]),
    (1, [{1: 1, 2: -1}, {3: 1, 2: 1}, {3: 1, 2: -1}]),
]

# The 12-term det_4, transcribed row by row (sign, then four pair factors
# written as (i, j, +1/-1) meaning e_i +/- e_j).  Deliberately independent of
# even_general so that comparing the two is a real check.
_DET4 = [
    (+1, [(1, 2, -1), (3, 4, -1), (3, 4, +1), (1, 2, +1)]),
    (-1, [(1, 3, -1), (2, 4, -1), (2, 4, +1), (1, 3, +1)]),
    (+1, [(1, 4, -1), (2, 3, -1), (2, 3, +1), (1, 4, +1)]),
    (+1, [(2, 3, -1), (1, 4, -1), (1, 4, +1), (2, 3, +1)]),
    (-1, [(2, 4, -1), (1, 3, -1), (1, 3, +1), (2, 4, +1)]),
    (+1, [(3, 4, -1), (1, 2, -1), (1, 2, +1), (3, 4, +1)]),
    (+1, [(1, 2, +1), (3, 4, +1), (3, 4, -1), (1, 2, -1)]),
    (-1, [(1, 3, +1), (2, 4, +1), (2, 4, -1), (1, 3, -1)]),
    (+1, [(1, 4, +1), (2, 3, +1), (2, 3, -1), (1, 4, -1)]),
    (+1, [(2, 3, +1), (1, 4, +1), (1, 4, -1), (2, 3, -1)]),
    (-1, [(2, 4, +1), (1, 3, +1), (1, 3, -1), (2, 4, -1)]),
    (+1, [(3, 4, +1), (1, 2, +1), (1, 2, -1), (3, 4, -1)]),
]


def derksen3(field: Field = QQ) -> Decomposition:
    half = field.half()
    terms = [
        _term(field, field.mul(half, field(c)),
              (LinearVector.from_dict(f, field) for f in factors))
        for c, factors in _DERKSEN3
    ]
    return Decomposition(3, field, terms, Provenance.DERKSEN3)


def det4(field: Field = QQ) -> Decomposition:
    half = field.half()
    terms = [
        _term(field, field.mul(half, field(s)),
              (LinearVector.pair(i, j, sg, field) for i, j, sg in factors))
        for s, factors in _DET4
    ]
    return Decomposition(4, field, terms, Provenance.DET4)


# -- the even-n formula ----------------------------------------------------

def _pair_indices(remaining: Tuple[int, ...]) -> Iterator[PairIndex]:
    if not remaining:
        yield ()
        return
    for a, i in enumerate(remaining):
        for b in range(a + 1, len(remaining)):
            j = remaining[b]
            rest = remaining[:a] + remaining[a + 1:b] + remaining[b + 1:]
            for tail in _pair_indices(rest):
                yield ((i, j),) + tail


def enumerate_pair_indices(k: int) -> List[PairIndex]:
    """All ordered sequences of k disjoint pairs i < j covering 1..2k.

    Lexicographic in the flattened tuple; there are (2k)!/2^k of them.
    """
    if k < 1:
        raise ValueError("k must be positive")
    return list(_pair_indices(tuple(range(1, 2 * k + 1))))


def flatten(pairs: PairIndex) -> Tuple[int, ...]:
    return tuple(x for p in pairs for x in p)


def even_general(k: int, field: Field = QQ) -> Decomposition:
    """Decomposition of det_{2k} with (2k)!/2^(k-1) terms.

    For each pair index with sign S, a "minus-block" term
    ``S/2 (e_i1-e_j1)...(e_ik-e_jk)(e_ik+e_jk)...(e_i1+e_j1)`` and a
    "plus-block" term with the blocks swapped and coefficient ``(-1)^k S/2``.
    All minus-block terms come first, then the plus-block terms, each in
    pair-index order.
    """
    half = field.half()
    minus_terms, plus_terms = [], []
    twist = 1 if k % 2 == 0 else -1
    for pairs in enumerate_pair_indices(k):
        s = permutation_sign(flatten(pairs))
        diffs = [LinearVector.pair(i, j, -1, field) for i, j in pairs]
        sums = [LinearVector.pair(i, j, +1, field) for i, j in pairs]
        minus_terms.append(_term(field, field.mul(half, field(s)), diffs + sums[::-1]))
        plus_terms.append(_term(field, field.mul(half, field(s * twist)), sums + diffs[::-1]))
    return Decomposition(2 * k, field, minus_terms + plus_terms, Provenance.EVEN_GENERAL)


# -- odd n via cofactor expansion ------------------------------------------

def laplace_lift(d: Decomposition, field: Field = None) -> Decomposition:
    """det_n from a det_(n-1) decomposition by expanding along slot 1.

    Term (i, t) has first factor e_i, coefficient (-1)^(i+1) coeff(t), and
    t's factors relabelled by the increasing map 1..n-1 -> [n] minus {i}.
    """
    if field is None:
        field = d.field
    elif field != d.field:
        raise FieldMismatch(f"decomposition is over {d.field}, asked for {field}")
    n = d.order_n + 1
    terms = []
    for i in range(1, n + 1):
        mapping = {j: (j if j < i else j + 1) for j in range(1, n)}
        e_i = LinearVector.basis(i, field)
        sgn = field(1 if i % 2 == 1 else -1)
        for t in d.terms:
            terms.append(DecomposableTerm(
                field.mul(sgn, t.coeff),
                (e_i,) + tuple(f.relabel(mapping) for f in t.factors),
            ))
    return Decomposition(n, field, terms, Provenance.LAPLACE_LIFT)


def best_known(n: int, field: Field = QQ) -> Decomposition:
    """Shortest decomposition available here: n!/2^floor((n-2)/2) terms for n >= 2.

    Odd n costs n times the even case below it.
    """
    if n < 1:
        raise ValueError("n must be positive")
    field.check()
    if n == 1:
        return leibniz(1, field)
    if n % 2 == 0:
        return even_general(n // 2, field)
    return laplace_lift(best_known(n - 1, field))


def rank_bound(n: int) -> int:
    """C_n = n! / 2^floor((n-2)/2), the term count of :func:`best_known`."""
    if n < 2:
        raise ValueError("C_n is defined for n >= 2")
    return math.factorial(n) // 2 ** ((n - 2) // 2)


FORMULAS = ("leibniz", "derksen3", "det4", "even", "best")


def generate(formula: str, n: int, field: Field = QQ) -> Decomposition:
    """Dispatch by formula name (the CLI's ``--formula`` values)."""
    if formula == "leibniz":
        return leibniz(n, field)
    if formula == "derksen3":
        if n != 3:
            raise ValueError("derksen3 requires n = 3")
        return derksen3(field)
    if formula == "det4":
        if n != 4:
            raise ValueError("det4 requires n = 4")
        return det4(field)
    if formula == "even":
        if n % 2:
            raise ValueError("even requires an even n")
        return even_general(n // 2, field)
    if formula == "best":
        return best_known(n, field)
    raise ValueError(f"unknown formula {formula!r}")
