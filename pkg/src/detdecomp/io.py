"""The ``detdecomp`` v1 text format.

::

    detdecomp 1 n=4 field=Q terms=12 provenance=det4
    1/2 | +e1 -e2 | +e3 -e4 | +e3 +e4 | +e1 +e2
    ...

UTF-8, LF line endings, no trailing whitespace.  Writing the same
decomposition always yields the same bytes.
"""

from __future__ import annotations

import re
from typing import Union

from .errors import CountMismatch, DetDecompError, ParseError
from .fields import Field
from .formulas import DecomposableTerm, Decomposition, LinearVector, Provenance

MAGIC = "detdecomp"
VERSION = "1"

_HEADER_RE = re.compile(
    r"^detdecomp (\d+) n=(\d+) field=(\S+) terms=(\d+) provenance=(\S+)$")
_ENTRY_RE = re.compile(r"^([+-]?)(?:(\d+(?:/\d+)?)\*)?e(\d+)$")


def _format_factor(f: LinearVector, field: Field) -> str:
    parts = []
    for i, c in f.coeffs:
        unit = field.is_unit_sign(c)
        if unit == 1:
            parts.append(f"+e{i}")
        elif unit == -1:
            parts.append(f"-e{i}")
        else:
            parts.append(f"{field.format(c)}*e{i}")
    return " ".join(parts)


def write_decomposition(d: Decomposition) -> bytes:
    F = d.field
    lines = [f"{MAGIC} {VERSION} n={d.order_n} field={F.tag} "
             f"terms={len(d.terms)} provenance={d.provenance_tag}"]
    for t in d.terms:
        lines.append(" | ".join([F.format(t.coeff)] + [_format_factor(f, F) for f in t.factors]))
    return "".join(ln + "\n" for ln in lines).encode("utf-8")


def _parse_factor(text: str, field: Field, lineno: int) -> LinearVector:
    coeffs = {}
    tokens = text.split()
    if not tokens:
        raise ParseError("empty factor", lineno)
    for tok in tokens:
        m = _ENTRY_RE.match(tok)
        if not m:
            raise ParseError(f"bad factor entry {tok!r}", lineno)
        sign, scalar, idx = m.groups()
        c = field.parse(scalar) if scalar else field.one
        if sign == "-":
            c = field.neg(c)
        i = int(idx)
        if i in coeffs:
            raise ParseError(f"basis e{i} repeated in one factor", lineno)
        coeffs[i] = c
    return LinearVector.from_dict(coeffs, field)


def read_decomposition(data: Union[bytes, str]) -> Decomposition:
    """Parse a v1 stream. The result has provenance ``File``."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty stream", 1)
    m = _HEADER_RE.match(lines[0])
    if not m:
        raise ParseError(f"bad header {lines[0]!r}", 1)
    version, n, field_tag, declared, prov = m.groups()
    if version != VERSION:
        raise ParseError(f"unsupported format version {version}", 1)
    n, declared = int(n), int(declared)
    field = Field.from_tag(field_tag)
    field.check()
    body = lines[1:]
    if len(body) != declared:
        raise CountMismatch(f"header declares {declared} terms, body has {len(body)}", 1)
    terms = []
    for lineno, line in enumerate(body, start=2):
        cols = line.split(" | ")
        if len(cols) != n + 1:
            raise ParseError(f"expected coefficient and {n} factors, got {len(cols) - 1} factors",
                             lineno)
        try:
            coeff = field.parse(cols[0])
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        if field.is_zero(coeff):
            raise ParseError("zero coefficient", lineno)
        factors = tuple(_parse_factor(c, field, lineno) for c in cols[1:])
        terms.append(DecomposableTerm(coeff, factors))
    try:
        return Decomposition(n, field, terms, Provenance.FILE, declared_provenance=prov)
    except DetDecompError as exc:
        raise ParseError(str(exc)) from None
