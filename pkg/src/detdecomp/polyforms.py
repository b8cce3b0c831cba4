"""Chow (product) and Waring (power sum) forms of a decomposition.

Variables are ``x[i,j]`` with i the basis index and j the tensor slot
(column); monomials are exponent vectors over the n*n variables in
row-major order, so ``x[i,j]`` sits at position ``(i-1)*n + (j-1)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple

from .errors import CharTooSmall
from .fields import QQ, Field, Scalar
from .formulas import Decomposition
from .tensor import SparseTensor, permutation_sign

Var = Tuple[int, int]
Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class LinearForm:
    """sum c * x[i,j], as sorted ``((i, j), c)`` pairs with c != 0."""

    coeffs: Tuple[Tuple[Var, Scalar], ...]

    @classmethod
    def from_dict(cls, coeffs: Mapping[Var, Scalar], field: Field) -> "LinearForm":
        return cls(tuple(sorted((v, c) for v, c in coeffs.items() if not field.is_zero(c))))

    def as_dict(self) -> Dict[Var, Scalar]:
        return dict(self.coeffs)

    @property
    def columns(self):
        return {j for (_, j), _ in self.coeffs}


@dataclass
class ChowDecomposition:
    order_n: int
    field: Field
    terms: List[Tuple[Scalar, Tuple[LinearForm, ...]]]


@dataclass
class WaringDecomposition:
    """sum coeff * form^power; ``power`` is always the order n."""

    order_n: int
    field: Field
    summands: List[Tuple[Scalar, LinearForm, int]]


class Polynomial:
    """Sparse homogeneous-or-not polynomial in the n*n variables x[i,j]."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: Field = QQ, terms=None):
        self.n = n
        self.field = field
        self.terms: Dict[Monomial, Scalar] = {}
        for mono, c in (terms or {}).items():
            self.add(mono, c)

    def add(self, mono: Monomial, c: Scalar) -> None:
        F = self.field
        v = F.add(self.terms.get(mono, F.zero), c)
        if F.is_zero(v):
            self.terms.pop(mono, None)
        else:
            self.terms[mono] = v

    def var_index(self, i: int, j: int) -> int:
        return (i - 1) * self.n + (j - 1)

    def monomial(self, variables: Iterable[Var]) -> Monomial:
        exps = [0] * (self.n * self.n)
        for i, j in variables:
            exps[self.var_index(i, j)] += 1
        return tuple(exps)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def degrees(self):
        return {sum(m) for m in self.terms}

    def __str__(self):
        F = self.field
        if not self.terms:
            return "0"
        out = []
        for mono in sorted(self.terms, reverse=True):
            vars_ = []
            for pos, e in enumerate(mono):
                if e:
                    i, j = divmod(pos, self.n)
                    vars_.append(f"x[{i + 1},{j + 1}]" + (f"^{e}" if e > 1 else ""))
            out.append(f"{F.format(self.terms[mono])}*" + "*".join(vars_))
        return " + ".join(out)


def to_chow(d: Decomposition) -> ChowDecomposition:
    """Slot-s factor sum(c_i e_i) becomes the linear form sum(c_i x[i,s])."""
    F = d.field
    terms = []
    for t in d.terms:
        forms = tuple(
            LinearForm.from_dict({(i, s): c for i, c in f.coeffs}, F)
            for s, f in enumerate(t.factors, start=1)
        )
        terms.append((t.coeff, forms))
    return ChowDecomposition(d.order_n, F, terms)


def expand_poly(c: ChowDecomposition) -> Polynomial:
    """Distribute every product of linear forms into the monomial basis."""
    F = c.field
    p = Polynomial(c.order_n, F)
    for coeff, forms in c.terms:
        for choice in itertools.product(*(f.coeffs for f in forms)):
            v = coeff
            for _, a in choice:
                v = F.mul(v, a)
            p.add(p.monomial(var for var, _ in choice), v)
    return p


def tensor_to_poly(t: SparseTensor) -> Polynomial:
    """Entry at (a_1..a_n) contributes that scalar times x[a_1,1]...x[a_n,n]."""
    p = Polynomial(t.order_n, t.field)
    for idx, c in t.items():
        p.add(p.monomial((a, s) for s, a in enumerate(idx, start=1)), c)
    return p


def determinant_polynomial(n: int, field: Field = QQ) -> Polynomial:
    """sum over permutations s of sgn(s) prod_i x[i, s(i)]."""
    p = Polynomial(n, field)
    for perm in itertools.permutations(range(1, n + 1)):
        p.add(p.monomial((i, perm[i - 1]) for i in range(1, n + 1)), field(permutation_sign(perm)))
    return p


def poly_equal_det(p: Polynomial, n: int) -> bool:
    return p.n == n and p == determinant_polynomial(n, p.field)


def _check_waring_field(field: Field, n: int) -> None:
    if field.characteristic and field.characteristic <= n:
        raise CharTooSmall(
            f"n! is not invertible over {field.tag} for n={n}; need char 0 or char > n")


def chow_to_waring(c: ChowDecomposition) -> WaringDecomposition:
    """Polarize each product of d linear forms into 2^(d-1) d-th powers.

    l_1 ... l_d = 1/(2^(d-1) d!) * sum over eps in {+-1}^(d-1) of
                  (prod eps) (l_1 + eps_2 l_2 + ... + eps_d l_d)^d
    """
    F = c.field
    d = c.order_n
    _check_waring_field(F, d)
    scale = F.inv(F(2 ** (d - 1) * math.factorial(d)))
    summands = []
    for coeff, forms in c.terms:
        base = F.mul(coeff, scale)
        for eps in itertools.product((1, -1), repeat=d - 1):
            combo: Dict[Var, Scalar] = {}
            for e, form in zip((1,) + eps, forms):
                for var, a in form.coeffs:
                    combo[var] = F.add(combo.get(var, F.zero), F.mul(F(e), a))
            lin = LinearForm.from_dict(combo, F)
            if not lin.coeffs:
                continue
            sign = math.prod(eps)
            summands.append((F.mul(base, F(sign)), lin, d))
    return WaringDecomposition(d, F, summands)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def expand_power(form: LinearForm, power: int, n: int, field: Field) -> Polynomial:
    """Multinomial expansion of form**power."""
    p = Polynomial(n, field)
    items = form.coeffs
    fact = math.factorial
    for ks in _compositions(power, len(items)):
        multinom = fact(power)
        for k in ks:
            multinom //= fact(k)
        v = field(multinom)
        exps = [0] * (n * n)
        for ((i, j), a), k in zip(items, ks):
            if k:
                v = field.mul(v, field(a) ** k if field.is_rational else pow(a, k, field.modulus))
                exps[p.var_index(i, j)] += k
        p.add(tuple(exps), v)
    return p


def expand_waring(w: WaringDecomposition) -> Polynomial:
    F = w.field
    total = Polynomial(w.order_n, F)
    for coeff, form, power in w.summands:
        for mono, v in expand_power(form, power, w.order_n, F).terms.items():
            total.add(mono, F.mul(coeff, v))
    return total


# -- text export -----------------------------------------------------------

def _format_form(form: LinearForm, field: Field) -> str:
    parts = []
    for (i, j), c in form.coeffs:
        unit = field.is_unit_sign(c)
        if unit == 1:
            parts.append(f"+x[{i},{j}]")
        elif unit == -1:
            parts.append(f"-x[{i},{j}]")
        else:
            parts.append(f"{field.format(c)}*x[{i},{j}]")
    return "(" + " ".join(parts) + ")"


def format_chow(c: ChowDecomposition) -> str:
    """One product per line: ``coeff * (form) * (form) * ...``."""
    F = c.field
    lines = [
        " * ".join([F.format(coeff)] + [_format_form(f, F) for f in forms])
        for coeff, forms in c.terms
    ]
    return "".join(ln + "\n" for ln in lines)


def format_waring(w: WaringDecomposition) -> str:
    """One power per line: ``coeff * (form)^power``."""
    F = w.field
    return "".join(
        f"{F.format(coeff)} * {_format_form(form, F)}^{power}\n"
        for coeff, form, power in w.summands
    )
