"""Evaluate determinants through a decomposition, with an elimination oracle.

Factor ``s`` of a term acts on column ``s`` of the matrix:
``<sum c_i e_i, col_s(A)> = sum c_i A[i, s]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import FieldMismatch, OrderMismatch, ParseError
from .fields import QQ, Field, Scalar
from .formulas import Decomposition

RANDOM_ENTRY_RANGE = (-9, 9)


@dataclass(frozen=True)
class Matrix:
    """Square matrix with 0-based storage; ``A[i, j]`` is 1-based."""

    field: Field
    rows: Tuple[Tuple[Scalar, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ) -> "Matrix":
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        return cls(field, rows)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], field)

    @property
    def order_n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(r[j - 1] for r in self.rows)

    def with_column(self, j: int, values: Sequence[Scalar]) -> "Matrix":
        rows = [list(r) for r in self.rows]
        for i, v in enumerate(values):
            rows[i][j - 1] = self.field(v)
        return Matrix(self.field, tuple(tuple(r) for r in rows))

    def swap_columns(self, a: int, b: int) -> "Matrix":
        ca, cb = self.column(a), self.column(b)
        return self.with_column(a, cb).with_column(b, ca)


def random_matrix(n: int, field: Field = QQ, rng: random.Random = None) -> Matrix:
    """Integer entries uniform in [-9, 9], coerced into ``field``."""
    rng = rng or random.Random(0)
    lo, hi = RANDOM_ENTRY_RANGE
    return Matrix.from_rows([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)], field)


def read_matrix(text: str, field: Field = QQ) -> Matrix:
    """First line ``n``, then n lines of n whitespace-separated scalars."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix file", 1)
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"expected matrix order, got {lines[0]!r}", 1) from None
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} matrix rows, got {len(lines) - 1}")
    rows = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != n:
            raise ParseError(f"expected {n} entries, got {len(parts)}", lineno)
        try:
            rows.append([field.parse(p) for p in parts])
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return Matrix.from_rows(rows, field)


def write_matrix(A: Matrix) -> str:
    F = A.field
    lines = [str(A.order_n)] + [" ".join(F.format(x) for x in r) for r in A.rows]
    return "\n".join(lines) + "\n"


def _evaluate(d: Decomposition, A: Matrix) -> Tuple[Scalar, int]:
    # returns (value, number of scalar*scalar products actually performed)
    if d.order_n != A.order_n:
        raise OrderMismatch(f"decomposition order {d.order_n} vs matrix order {A.order_n}")
    if d.field != A.field:
        raise FieldMismatch(f"decomposition over {d.field}, matrix over {A.field}")
    F = A.field
    cols = [A.column(s) for s in range(1, A.order_n + 1)]
    total = F.zero
    mults = 0
    for t in d.terms:
        value = None
        for s, f in enumerate(t.factors):
            col = cols[s]
            inner = F.zero
            for i, c in f.coeffs:
                unit = F.is_unit_sign(c)
                if unit == 1:
                    inner = F.add(inner, col[i - 1])
                elif unit == -1:
                    inner = F.sub(inner, col[i - 1])
                else:
                    inner = F.add(inner, F.mul(c, col[i - 1]))
                    mults += 1
            if value is None:
                value = inner
            else:
                value = F.mul(value, inner)
                mults += 1
        unit = F.is_unit_sign(t.coeff)
        if unit == 1:
            total = F.add(total, value)
        elif unit == -1:
            total = F.sub(total, value)
        else:
            total = F.add(total, F.mul(t.coeff, value))
            mults += 1
    return total, mults


def eval_decomposition(d: Decomposition, A: Matrix) -> Scalar:
    """sum over terms of coeff * prod_s <factor_s, column_s(A)>."""
    return _evaluate(d, A)[0]


def eval_count_mults(d: Decomposition, n: int = None) -> int:
    """Scalar multiplications :func:`eval_decomposition` performs on ``d``.

    Counting rule (additions are free, multiplying by +1 or -1 is free):
    one per non-unit factor coefficient, n - 1 per term to combine the
    factor values, and one per non-unit term coefficient.
    """
    if n is not None and n != d.order_n:
        raise OrderMismatch(f"decomposition order {d.order_n} vs n={n}")
    F = d.field
    count = 0
    for t in d.terms:
        for f in t.factors:
            count += sum(1 for _, c in f.coeffs if not F.is_unit_sign(c))
        count += len(t.factors) - 1
        if not F.is_unit_sign(t.coeff):
            count += 1
    return count


def det_oracle(A: Matrix) -> Scalar:
    """Determinant by exact Gaussian elimination, pivoting on the first nonzero entry."""
    F = A.field
    n = A.order_n
    m = [list(r) for r in A.rows]
    det = F.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if not F.is_zero(m[r][col])), None)
        if pivot is None:
            return F.zero
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = F.neg(det)
        p = m[col][col]
        det = F.mul(det, p)
        p_inv = F.inv(p)
        for r in range(col + 1, n):
            if F.is_zero(m[r][col]):
                continue
            factor = F.mul(m[r][col], p_inv)
            m[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(m[r], m[col])]
    return det
