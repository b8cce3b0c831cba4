"""Expansion of decompositions into coordinate tensors and exact certification."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence

from .errors import CapExceeded
from .fields import Field, Scalar
from .formulas import DecomposableTerm, Decomposition, leibniz, rank_bound
from .tensor import MultiIndex, SparseTensor, first_difference, tensor_equal

BELL_CAP = 25


def _expand_terms(order_n: int, field: Field, terms: Sequence[DecomposableTerm]) -> SparseTensor:
    out = SparseTensor(order_n, field)
    acc = out._accumulate
    mul = field.mul
    for t in terms:
        # prefix products: {partial multi-index: running coefficient}
        partial = [((), t.coeff)]
        for f in t.factors:
            partial = [(idx + (i,), mul(v, c)) for idx, v in partial for i, c in f.coeffs]
        for idx, v in partial:
            acc(idx, v)
    return out


def _expand_chunk(args):
    order_n, field, terms = args
    return _expand_terms(order_n, field, terms).to_dict()


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("DETDECOMP_JOBS", "1")))
    except ValueError:
        return 1


def expand(d: Decomposition, jobs: Optional[int] = None) -> SparseTensor:
    """Multilinear expansion of ``d`` with exact cancellation.

    With ``jobs > 1`` the term list is split into contiguous chunks that are
    expanded in worker processes and merged in chunk order; exact arithmetic
    makes the result independent of the split.
    """
    jobs = default_jobs() if jobs is None else max(1, jobs)
    terms = d.terms
    if jobs == 1 or len(terms) < 64:
        return _expand_terms(d.order_n, d.field, terms)
    size = -(-len(terms) // jobs)
    chunks = [(d.order_n, d.field, terms[i:i + size]) for i in range(0, len(terms), size)]
    out = SparseTensor(d.order_n, d.field)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_expand_chunk, chunks):
            for idx, c in part.items():
                out._accumulate(idx, c)
    return out


def leibniz_tensor(n: int, field: Field) -> SparseTensor:
    return _expand_terms(n, field, leibniz(n, field).terms)


class Mismatch(NamedTuple):
    index: MultiIndex
    expected: Scalar
    found: Scalar


@dataclass(frozen=True)
class VerificationReport:
    order_n: int
    field: Field
    term_count: int
    is_exact_match: bool
    mismatch_witness: Optional[Mismatch] = None

    def __post_init__(self):
        if self.is_exact_match and self.mismatch_witness is not None:
            raise ValueError("a matching report cannot carry a witness")

    def summary(self) -> str:
        F = self.field
        line = (f"n={self.order_n} field={F.tag} terms={self.term_count} "
                f"match={'true' if self.is_exact_match else 'false'}")
        if self.mismatch_witness is not None:
            w = self.mismatch_witness
            idx = ",".join(map(str, w.index))
            line += f" witness=({idx}) expected={F.format(w.expected)} found={F.format(w.found)}"
        return line


def verify(d: Decomposition, jobs: Optional[int] = None) -> VerificationReport:
    """Compare expand(d) with the Leibniz tensor of the same order and field."""
    found = expand(d, jobs)
    expected = leibniz_tensor(d.order_n, d.field)
    if tensor_equal(found, expected):
        return VerificationReport(d.order_n, d.field, len(d.terms), True)
    idx, exp_val, found_val = first_difference(expected, found)
    return VerificationReport(d.order_n, d.field, len(d.terms), False,
                              Mismatch(idx, exp_val, found_val))


def bell_number(n: int, cap: int = BELL_CAP) -> int:
    """B_n from the Bell triangle."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise CapExceeded(f"bell_number({n}) exceeds cap {cap}")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


class BoundRow(NamedTuple):
    n: int
    bell: int
    bound: int
    marked: bool


def rank_bound_table(max_n: int, cap: int = BELL_CAP) -> List[BoundRow]:
    """Rows (n, B_n, C_n, C_n <= B_n) for n = 2..max_n."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    rows = []
    for n in range(2, max_n + 1):
        b, c = bell_number(n, cap), rank_bound(n)
        rows.append(BoundRow(n, b, c, c <= b))
    return rows
