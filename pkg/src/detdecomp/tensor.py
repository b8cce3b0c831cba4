"""Sparse exact tensors, multi-indices and permutation signs.

Multi-indices are 1-based tuples. A :class:`SparseTensor` never stores a
zero entry, so two tensors are equal exactly when their entry maps agree.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Sequence, Tuple

from .errors import FieldMismatch, IndexOutOfRange, InvalidPermutation, OrderMismatch
from .fields import QQ, Field, Scalar

MultiIndex = Tuple[int, ...]


def count_inversions(seq: Sequence[int]) -> int:
    """Number of pairs i < j with seq[i] > seq[j], by mergesort."""

    def sort(xs):
        if len(xs) <= 1:
            return xs, 0
        mid = len(xs) // 2
        left, a = sort(xs[:mid])
        right, b = sort(xs[mid:])
        merged = []
        inv = a + b
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                inv += len(left) - i
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, inv

    return sort(list(seq))[1]


def check_permutation(images: Sequence[int]) -> None:
    n = len(images)
    if sorted(images) != list(range(1, n + 1)):
        raise InvalidPermutation(f"{tuple(images)} is not a permutation of 1..{n}")


def permutation_sign(images: Sequence[int]) -> int:
    """Sign (+1/-1) of the permutation with bottom row ``images``."""
    check_permutation(images)
    return -1 if count_inversions(images) % 2 else 1


def sign(images: Sequence[int], field: Field = QQ) -> Scalar:
    return field(permutation_sign(images))


def compose(p: Sequence[int], q: Sequence[int]) -> Tuple[int, ...]:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[x - 1] for x in q)


class SparseTensor:
    """Exact map from length-``order_n`` multi-indices to nonzero scalars.

    Built incrementally with :meth:`add_term` (which mutates in place and
    returns ``self``); treat it as frozen once construction is finished.
    """

    __slots__ = ("order_n", "field", "_entries")

    def __init__(self, order_n: int, field: Field = QQ, entries=None):
        if order_n < 1:
            raise OrderMismatch(f"order must be positive, got {order_n}")
        self.order_n = order_n
        self.field = field
        self._entries: Dict[MultiIndex, Scalar] = {}
        if entries:
            for idx, c in dict(entries).items():
                self.add_term(idx, c)

    def _check_index(self, idx: MultiIndex) -> None:
        n = self.order_n
        if len(idx) != n or any(not 1 <= i <= n for i in idx):
            raise IndexOutOfRange(f"multi-index {idx} invalid for order {n}")

    def add_term(self, idx: Iterable[int], c: Scalar) -> "SparseTensor":
        idx = tuple(idx)
        self._check_index(idx)
        self._accumulate(idx, self.field(c))
        return self

    def _accumulate(self, idx: MultiIndex, c: Scalar) -> None:
        # unchecked fast path used by expansions
        F = self.field
        entries = self._entries
        v = F.add(entries[idx], c) if idx in entries else c
        if F.is_zero(v):
            entries.pop(idx, None)
        else:
            entries[idx] = v

    def merge(self, other: "SparseTensor") -> "SparseTensor":
        _check_compatible(self, other)
        for idx, c in other._entries.items():
            self._accumulate(idx, c)
        return self

    def __getitem__(self, idx) -> Scalar:
        return self._entries.get(tuple(idx), self.field.zero)

    def __contains__(self, idx) -> bool:
        return tuple(idx) in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def items(self) -> Iterator[Tuple[MultiIndex, Scalar]]:
        """Entries in lexicographic multi-index order."""
        for idx in sorted(self._entries):
            yield idx, self._entries[idx]

    def to_dict(self) -> Dict[MultiIndex, Scalar]:
        return dict(self._entries)

    def __eq__(self, other):
        if not isinstance(other, SparseTensor):
            return NotImplemented
        return (self.order_n == other.order_n and self.field == other.field
                and self._entries == other._entries)

    __hash__ = None

    def __repr__(self):
        return f"SparseTensor(order_n={self.order_n}, field={self.field}, nnz={len(self)})"


def _check_compatible(a: SparseTensor, b: SparseTensor) -> None:
    if a.order_n != b.order_n:
        raise OrderMismatch(f"orders differ: {a.order_n} vs {b.order_n}")
    if a.field != b.field:
        raise FieldMismatch(f"fields differ: {a.field} vs {b.field}")


def tensor_add_term(t: SparseTensor, idx: Iterable[int], c: Scalar) -> SparseTensor:
    return t.add_term(idx, c)


def tensor_equal(a: SparseTensor, b: SparseTensor) -> bool:
    _check_compatible(a, b)
    return a._entries == b._entries


def first_difference(a: SparseTensor, b: SparseTensor):
    """Lexicographically smallest index where ``a`` and ``b`` differ, or None.

    Returns ``(idx, a[idx], b[idx])``.
    """
    _check_compatible(a, b)
    diff = [idx for idx in a._entries.keys() | b._entries.keys()
            if a[idx] != b[idx]]
    if not diff:
        return None
    idx = min(diff)
    return idx, a[idx], b[idx]
