"""Read and write the .alg text format for structure-constant tables.

Grammar (one statement per line, `#` starts a comment, blank lines are
ignored, whitespace inside a line is free):

    algebra NAME
    dim INT
    params NAME+            (optional)
    basis NAME+
    [NAME,NAME] = EXPR      (zero or more; unlisted products are zero)

EXPR is `0` or terms joined by `+` and `-`. A term is an optional rational
coefficient (INT or INT/INT) and an optional monomial (param factors
`name` or `name^INT`), each followed by `*`, then a basis symbol:
`2*e`, `x0`, `l*x0`, `-1/2*a*b^2*x1`. Scalar expressions (used for
constraint output) are the same minus the trailing basis symbol.

A change-of-basis document uses the same header with `change` in place of
`algebra`, followed by `new NAME = EXPR` lines giving new basis vectors in
old coordinates; unlisted names default to identity rows.

Headers appear in the order shown; anything else is rejected with a
positioned error. Files are UTF-8, newline-terminated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .core import AlgebraTable, Element, Matrix, format_element, zero_element
from .errors import DimensionMismatchError, ParseError
from .scalars import ONE, ZERO, Poly, mono_mul

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RATIONAL_RE = re.compile(r"\d+(?:/\d+)?\Z")
_POWER_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?\Z")
_PRODUCT_RE = re.compile(r"\[([^],]+),([^],]+)\]=(.+)\Z")
_NEW_RE = re.compile(r"new\s+(\S+?)\s*=\s*(.+)\Z")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _split_terms(expr: str, lineno: int) -> list[tuple[int, str]]:
    """Split a whitespace-free expression into (sign, body) chunks."""
    out: list[tuple[int, str]] = []
    sign = 1
    body = ""
    for ch in expr:
        if ch in "+-":
            if body:
                out.append((sign, body))
                body = ""
                sign = 1
            if ch == "-":
                sign = -sign
        else:
            body += ch
    if body:
        out.append((sign, body))
    elif sign != 1 or not out:
        raise ParseError(lineno, f"malformed expression {expr!r}")
    return out


def _parse_term(
    body: str,
    sign: int,
    params: tuple[str, ...],
    lineno: int,
    basis: tuple[str, ...] | None,
) -> tuple[Poly, str | None]:
    """One term -> (scalar, basis symbol). basis None parses a bare scalar."""
    factors = body.split("*")
    if any(not f for f in factors):
        raise ParseError(lineno, f"malformed term {body!r}")
    symbol: str | None = None
    if basis is not None:
        symbol = factors[-1]
        if symbol not in basis:
            raise ParseError(lineno, f"term {body!r} must end in a basis symbol")
        factors = factors[:-1]
    coeff = Fraction(sign)
    mono: tuple[tuple[str, int], ...] = ()
    for pos, factor in enumerate(factors):
        if _RATIONAL_RE.match(factor):
            if pos != 0:
                raise ParseError(lineno, f"coefficient must lead the term in {body!r}")
            num, _, den = factor.partition("/")
            if den and int(den) == 0:
                raise ParseError(lineno, f"zero denominator in {body!r}")
            coeff *= Fraction(int(num), int(den) if den else 1)
            continue
        m = _POWER_RE.match(factor)
        if not m or m.group(1) not in params:
            raise ParseError(lineno, f"unknown symbol {factor!r}")
        exp = int(m.group(2)) if m.group(2) else 1
        if exp == 0:
            continue
        mono = mono_mul(mono, ((m.group(1), exp),))
    return Poly({mono: coeff}) if coeff else ZERO, symbol


def parse_scalar(text: str, params: tuple[str, ...], lineno: int = 1) -> Poly:
    """Parse a scalar expression such as `l - 1/2*a*l`."""
    expr = re.sub(r"\s+", "", text)
    if not expr:
        raise ParseError(lineno, "empty scalar expression")
    if expr == "0":
        return ZERO
    total = ZERO
    for sign, body in _split_terms(expr, lineno):
        poly, _ = _parse_term(body, sign, params, lineno, basis=None)
        total = total + poly
    return total


def _parse_element(
    text: str, params: tuple[str, ...], basis: tuple[str, ...], lineno: int
) -> Element:
    expr = re.sub(r"\s+", "", text)
    if not expr:
        raise ParseError(lineno, "empty expression")
    if expr == "0":
        return zero_element(len(basis))
    coords = [ZERO] * len(basis)
    index = {b: i for i, b in enumerate(basis)}
    for sign, body in _split_terms(expr, lineno):
        poly, symbol = _parse_term(body, sign, params, lineno, basis=basis)
        coords[index[symbol]] = coords[index[symbol]] + poly
    return Element(tuple(coords))


def _parse_names(rest: list[str], what: str, lineno: int) -> tuple[str, ...]:
    if not rest:
        raise ParseError(lineno, f"{what} line lists no names")
    for name in rest:
        if not _NAME_RE.match(name):
            raise ParseError(lineno, f"invalid {what} name {name!r}")
    if len(set(rest)) != len(rest):
        raise ParseError(lineno, f"duplicate {what} name")
    return tuple(rest)


@dataclass(frozen=True)
class _Header:
    name: str
    dim: int
    params: tuple[str, ...]
    basis: tuple[str, ...]


def _parse_header(lines: list[tuple[int, str]], kind: str) -> tuple[_Header, list[tuple[int, str]]]:
    it = iter(lines)

    def next_line(expect: str) -> tuple[int, list[str]]:
        for lineno, line in it:
            return lineno, line.split()
        raise ParseError(lines[-1][0] if lines else 1, f"missing {expect} line")

    lineno, fields = next_line(kind)
    if len(fields) != 2 or fields[0] != kind:
        raise ParseError(lineno, f"expected `{kind} NAME`")
    name = fields[1]

    lineno, fields = next_line("dim")
    if len(fields) != 2 or fields[0] != "dim" or not fields[1].isdigit() or int(fields[1]) < 1:
        raise ParseError(lineno, "expected `dim INT` with a positive integer")
    dim = int(fields[1])

    lineno, fields = next_line("basis")
    params: tuple[str, ...] = ()
    if fields and fields[0] == "params":
        params = _parse_names(fields[1:], "parameter", lineno)
        lineno, fields = next_line("basis")
    if not fields or fields[0] != "basis":
        raise ParseError(lineno, "expected `basis NAME+`")
    basis = _parse_names(fields[1:], "basis", lineno)
    if len(basis) != dim:
        raise ParseError(lineno, f"dim {dim} but {len(basis)} basis symbols")
    clash = set(params) & set(basis)
    if clash:
        raise ParseError(lineno, f"parameters clash with basis symbols: {sorted(clash)}")
    return _Header(name, dim, params, basis), list(it)


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if line:
            out.append((lineno, line))
    return out


def parse_algebra(text: str) -> AlgebraTable:
    """Parse an .alg document into a table."""
    header, body = _parse_header(_content_lines(text), "algebra")
    index = {b: i for i, b in enumerate(header.basis)}
    rows: list[list[Element]] = [
        [zero_element(header.dim)] * header.dim for _ in range(header.dim)
    ]
    seen: set[tuple[str, str]] = set()
    for lineno, line in body:
        squeezed = re.sub(r"\s+", "", line)
        m = _PRODUCT_RE.match(squeezed)
        if not m:
            raise ParseError(lineno, f"expected `[NAME,NAME] = EXPR`, got {line!r}")
        left, right, expr = m.group(1), m.group(2), m.group(3)
        for symbol in (left, right):
            if symbol not in index:
                raise ParseError(lineno, f"unknown basis symbol {symbol!r}")
        if (left, right) in seen:
            raise ParseError(lineno, f"duplicate product [{left},{right}]")
        seen.add((left, right))
        rows[index[left]][index[right]] = _parse_element(expr, header.params, header.basis, lineno)
    return AlgebraTable(
        header.name, header.dim, header.params, header.basis, tuple(tuple(r) for r in rows)
    )


def serialize_algebra(t: AlgebraTable) -> str:
    """Canonical .alg text: header, then nonzero products in basis order."""
    lines = [f"algebra {t.name}", f"dim {t.dim}"]
    if t.params:
        lines.append("params " + " ".join(t.params))
    lines.append("basis " + " ".join(t.basis))
    for i in range(t.dim):
        for j in range(t.dim):
            entry = t.table[i][j]
            if not entry.is_zero():
                lines.append(f"[{t.basis[i]},{t.basis[j]}] = {format_element(entry, t.basis)}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ChangeDocument:
    """A parsed change-of-basis file: new basis rows in old coordinates."""

    name: str
    dim: int
    params: tuple[str, ...]
    basis: tuple[str, ...]
    assignments: dict[str, Element]

    def matrix(self) -> Matrix:
        """Rows of the change: assignment row if given, identity otherwise."""
        rows = []
        for i, symbol in enumerate(self.basis):
            if symbol in self.assignments:
                rows.append(self.assignments[symbol].coords)
            else:
                rows.append(tuple(ONE if j == i else ZERO for j in range(self.dim)))
        return tuple(rows)

    def matrix_for(self, t: AlgebraTable) -> Matrix:
        if self.basis != t.basis:
            raise DimensionMismatchError(
                f"change document basis {list(self.basis)} does not match table basis {list(t.basis)}"
            )
        return self.matrix()


def parse_change(text: str) -> ChangeDocument:
    """Parse a change-of-basis document (`change` header plus `new` lines)."""
    header, body = _parse_header(_content_lines(text), "change")
    assignments: dict[str, Element] = {}
    for lineno, line in body:
        m = _NEW_RE.match(line)
        if not m:
            raise ParseError(lineno, f"expected `new NAME = EXPR`, got {line!r}")
        symbol, expr = m.group(1), m.group(2)
        if symbol not in header.basis:
            raise ParseError(lineno, f"unknown basis symbol {symbol!r}")
        if symbol in assignments:
            raise ParseError(lineno, f"duplicate `new {symbol}` line")
        assignments[symbol] = _parse_element(expr, header.params, header.basis, lineno)
    return ChangeDocument(header.name, header.dim, header.params, header.basis, assignments)
