"""Structure-constant tables, bracket arithmetic and exact linear algebra.

A finite-dimensional algebra is a table of products [b_i, b_j], each an
Element (coordinate vector of Poly scalars over the basis). The bracket is
the bilinear extension of the table. The residual

    r(x, y, z) = [x, [y, z]] - [[x, y], z] + [[x, z], y]

vanishes for all basis triples exactly when the table satisfies the
(right) Leibniz identity; a Lie table additionally has [x, y] = -[y, x].

Right multiplication operators R_a(v) = [v, a] are kept as matrices acting
on coordinate columns (apply = M.v, composition = matrix product), so the
identity reads R_[y,z] = R_z.R_y - R_y.R_z. For the canonical sl2 action
this gives H = F.E - E.F, H.E - E.H = 2E and H.F - F.H = -2F.

Linear algebra is exact over Fraction: subspaces are reduced row echelon
forms, ideals are closed by fixed-point iteration (rank is monotone and
bounded by the dimension, so this terminates).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DimensionMismatchError,
    MissingParameterError,
    NotAnIdealError,
    ParametricError,
)
from .scalars import ONE, ZERO, Poly, as_poly, format_term, _join_terms

Coeffish = Union[Poly, Fraction, int]
Matrix = tuple[tuple[Poly, ...], ...]

PASS = "PASS"
FAIL = "FAIL"

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class Element:
    """A vector in the algebra, held as Poly coordinates over the basis."""

    coords: tuple[Poly, ...]

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c)

    def is_constant(self) -> bool:
        return all(c.is_constant() for c in self.coords)

    def constant_coords(self) -> tuple[Fraction, ...]:
        return tuple(c.constant_value() for c in self.coords)

    def _check(self, other: "Element") -> None:
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError(
                f"element dimensions differ: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(tuple(-a for a in self.coords))

    def __rmul__(self, scalar: Coeffish) -> "Element":
        s = as_poly(scalar)
        return Element(tuple(s * a for a in self.coords))

    __mul__ = __rmul__


def zero_element(dim: int) -> Element:
    return Element((ZERO,) * dim)


def element_from(coords: Sequence[Coeffish]) -> Element:
    return Element(tuple(as_poly(c) for c in coords))


def format_element(el: Element, basis: Sequence[str]) -> str:
    """Canonical text for an element: coordinate-major, terms ascending."""
    parts: list[tuple[int, str]] = []
    for i, poly in enumerate(el.coords):
        for mono, coeff in poly.sorted_terms():
            parts.append(format_term(coeff, mono, basis[i]))
    return _join_terms(parts)


# ---------------------------------------------------------------------------
# exact row reduction


def rref(rows: Iterable[Sequence[Fraction]], ambient: int) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form over Fraction. Returns (rows, pivot columns)."""
    mat = [list(r) for r in rows if any(r)]
    out: list[list[Fraction]] = []
    pivots: list[int] = []
    for col in range(ambient):
        pivot_at = None
        for idx, r in enumerate(mat):
            if r[col]:
                pivot_at = idx
                break
        if pivot_at is None:
            continue
        pivot_row = mat.pop(pivot_at)
        inv = _F1 / pivot_row[col]
        pivot_row = [c * inv for c in pivot_row]
        for rows_list in (out, mat):
            for r in rows_list:
                c = r[col]
                if c:
                    for k in range(ambient):
                        r[k] -= c * pivot_row[k]
        mat = [r for r in mat if any(r)]
        out.append(pivot_row)
        pivots.append(col)
    return tuple(tuple(r) for r in out), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^ambient in reduced row echelon form."""

    ambient: int
    rows: tuple[tuple[Fraction, ...], ...]
    pivots: tuple[int, ...]

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, (), ())

    @staticmethod
    def full(ambient: int) -> "Subspace":
        rows = tuple(
            tuple(_F1 if i == j else _F0 for j in range(ambient)) for i in range(ambient)
        )
        return Subspace(ambient, rows, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, coords: Sequence[Fraction]) -> tuple[Fraction, ...]:
        v = list(coords)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for k in range(self.ambient):
                    v[k] -= c * row[k]
        return tuple(v)

    def contains(self, coords: Sequence[Fraction]) -> bool:
        return not any(self.reduce(coords))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def as_elements(self) -> tuple[Element, ...]:
        return tuple(element_from(r) for r in self.rows)

    def complement_indices(self) -> tuple[int, ...]:
        used = set(self.pivots)
        return tuple(i for i in range(self.ambient) if i not in used)


def _constant_coords(v: Union[Element, Sequence[Fraction]]) -> Sequence[Fraction]:
    if isinstance(v, Element):
        if not v.is_constant():
            raise ParametricError("span requires constant coordinates")
        return v.constant_coords()
    return v


def span(vectors: Iterable[Union[Element, Sequence[Fraction]]], ambient: int | None = None) -> Subspace:
    """Row space of the given vectors as a canonical Subspace."""
    rows = [_constant_coords(v) for v in vectors]
    if ambient is None:
        if not rows:
            raise DimensionMismatchError("span of no vectors needs an explicit ambient dimension")
        ambient = len(rows[0])
    for r in rows:
        if len(r) != ambient:
            raise DimensionMismatchError(f"vector of length {len(r)} in ambient dimension {ambient}")
    reduced, pivots = rref(rows, ambient)
    return Subspace(ambient, reduced, pivots)


# ---------------------------------------------------------------------------
# matrices of scalars


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_from_rows(rows: Sequence[Sequence[Coeffish]]) -> Matrix:
    return tuple(tuple(as_poly(c) for c in row) for row in rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, mid, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ZERO
            for k in range(mid):
                aik = a[i][k]
                bkj = b[k][j]
                if aik and bkj:
                    acc = acc + aik * bkj
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: Coeffish, a: Matrix) -> Matrix:
    s = as_poly(c)
    return tuple(tuple(s * x for x in row) for row in a)


def mat_apply(m: Matrix, v: Sequence[Coeffish]) -> tuple[Poly, ...]:
    """Apply to a coordinate column: out[i] = sum_j m[i][j] v[j]."""
    vv = [as_poly(c) for c in v]
    out = []
    for row in m:
        acc = ZERO
        for c, x in zip(row, vv):
            if c and x:
                acc = acc + c * x
        out.append(acc)
    return tuple(out)


def mat_is_zero(a: Matrix) -> bool:
    return not any(any(row) for row in a)


def mat_trace(a: Matrix) -> Poly:
    acc = ZERO
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def mat_constant(a: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    try:
        return tuple(tuple(c.constant_value() for c in row) for row in a)
    except Exception as exc:
        raise ParametricError(f"matrix entry is not constant: {exc}") from exc


def det_and_adjugate(m: Matrix) -> tuple[Poly, Matrix]:
    """Determinant and adjugate via Faddeev-LeVerrier.

    Division-free apart from division by integers, so polynomial entries
    stay polynomial. adj(M).M = det(M).I holds exactly.
    """
    n = len(m)
    if n == 0:
        return ONE, ()
    b = mat_identity(n)
    last_b = b
    c = ONE
    for k in range(1, n + 1):
        mb = mat_mul(m, b)
        c = mat_trace(mb) * Fraction(-1, k)
        last_b = b
        b = mat_add(mb, mat_scale(c, mat_identity(n)))
    det = c if n % 2 == 0 else -c
    adj = last_b if (n - 1) % 2 == 0 else mat_scale(-1, last_b)
    return det, adj


def submodule_closure(ops: Sequence[Matrix], seed: Element) -> Subspace:
    """Smallest subspace containing seed and stable under all operators."""
    ambient = seed.dim
    const_ops = [mat_constant(op) for op in ops]
    current = span([seed], ambient)
    while True:
        vectors: list[Sequence[Fraction]] = list(current.rows)
        for op in const_ops:
            for row in current.rows:
                image = tuple(
                    sum((op[i][j] * row[j] for j in range(ambient)), _F0) for i in range(ambient)
                )
                vectors.append(image)
        nxt = span(vectors, ambient)
        if nxt.dim == current.dim:
            return current
        current = nxt


# ---------------------------------------------------------------------------
# verdicts and invariant profiles


@dataclass(frozen=True)
class Verdict:
    """Outcome of a PASS/FAIL check, with a witness when it fails."""

    status: str
    witness: tuple[str, ...] | None = None
    residual: Element | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass(frozen=True)
class InvariantProfile:
    """Basis-independent dimensions used to tell tables apart."""

    dim: int
    derived_dim: int
    derived_series: tuple[int, ...]
    lower_central_series: tuple[int, ...]
    left_center_dim: int
    right_center_dim: int
    squares_ideal_dim: int

    def as_dict(self) -> dict[str, object]:
        return {
            "dim": self.dim,
            "derived_dim": self.derived_dim,
            "derived_series": self.derived_series,
            "lower_central_series": self.lower_central_series,
            "left_center_dim": self.left_center_dim,
            "right_center_dim": self.right_center_dim,
            "squares_ideal_dim": self.squares_ideal_dim,
        }


@dataclass(frozen=True)
class QuotientMap:
    """Coordinate projection onto the quotient by an ideal.

    Kept coordinates are the non-pivot columns of the ideal's echelon form;
    an element is projected by reducing against the ideal rows and reading
    off the kept coordinates.
    """

    ideal: Subspace
    kept: tuple[int, ...]

    def __call__(self, el: Element) -> Element:
        coords = list(el.coords)
        for row, p in zip(self.ideal.rows, self.ideal.pivots):
            c = coords[p]
            if c:
                for k in range(self.ideal.ambient):
                    if row[k]:
                        coords[k] = coords[k] - c * row[k]
        return Element(tuple(coords[i] for i in self.kept))

    @property
    def matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        rows = []
        for i in self.kept:
            unit = [_F0] * self.ideal.ambient
            unit[i] = _F1
            reduced = self.ideal.reduce(unit)
            rows.append(tuple(reduced[j] for j in range(self.ideal.ambient)))
        return tuple(rows)


# ---------------------------------------------------------------------------
# the table itself


@dataclass(frozen=True)
class AlgebraTable:
    """A structure-constant table over named basis symbols.

    table[i][j] is the product [b_i, b_j]. Equality compares dimension,
    parameters, basis names and every product; the display name is ignored.
    """

    name: str = field(compare=False)
    dim: int
    params: tuple[str, ...]
    basis: tuple[str, ...]
    table: tuple[tuple[Element, ...], ...]

    def __post_init__(self):
        if self.dim != len(self.basis):
            raise DimensionMismatchError(f"dim {self.dim} but {len(self.basis)} basis symbols")
        if len(set(self.basis)) != len(self.basis):
            raise DimensionMismatchError("duplicate basis symbols")
        if len(set(self.params)) != len(self.params):
            raise DimensionMismatchError("duplicate parameter names")
        clash = set(self.params) & set(self.basis)
        if clash:
            raise DimensionMismatchError(f"parameters clash with basis symbols: {sorted(clash)}")
        allowed = set(self.params)
        if len(self.table) != self.dim:
            raise DimensionMismatchError("table has wrong number of rows")
        for row in self.table:
            if len(row) != self.dim:
                raise DimensionMismatchError("table has wrong number of columns")
            for entry in row:
                if entry.dim != self.dim:
                    raise DimensionMismatchError("table entry has wrong dimension")
                for poly in entry.coords:
                    extra = poly.parameters() - allowed
                    if extra:
                        raise DimensionMismatchError(
                            f"undeclared parameters in table entry: {sorted(extra)}"
                        )

    @classmethod
    def from_products(
        cls,
        name: str,
        basis: Sequence[str],
        products: Mapping[tuple[str, str], Mapping[str, Coeffish]],
        params: Sequence[str] = (),
    ) -> "AlgebraTable":
        """Build a table from a sparse product dictionary; the rest is zero."""
        basis = tuple(basis)
        index = {b: i for i, b in enumerate(basis)}
        dim = len(basis)
        rows: list[list[Element]] = [[zero_element(dim)] * dim for _ in range(dim)]
        for (left, right), coords in products.items():
            for symbol in (left, right):
                if symbol not in index:
                    raise DimensionMismatchError(f"unknown basis symbol {symbol!r} in a product key")
            vec = [ZERO] * dim
            for symbol, coeff in coords.items():
                if symbol not in index:
                    raise DimensionMismatchError(
                        f"unknown basis symbol {symbol!r} in [{left},{right}]"
                    )
                vec[index[symbol]] = vec[index[symbol]] + as_poly(coeff)
            rows[index[left]][index[right]] = Element(tuple(vec))
        return cls(name, dim, tuple(params), basis, tuple(tuple(r) for r in rows))

    # -- element plumbing ---------------------------------------------------

    def index(self, symbol: str) -> int:
        try:
            return self.basis.index(symbol)
        except ValueError:
            raise DimensionMismatchError(f"unknown basis symbol {symbol!r}") from None

    def basis_element(self, which: Union[int, str]) -> Element:
        i = which if isinstance(which, int) else self.index(which)
        return Element(tuple(ONE if j == i else ZERO for j in range(self.dim)))

    def element(self, coords: Mapping[str, Coeffish]) -> Element:
        vec = [ZERO] * self.dim
        for symbol, coeff in coords.items():
            vec[self.index(symbol)] = vec[self.index(symbol)] + as_poly(coeff)
        return Element(tuple(vec))

    def zero(self) -> Element:
        return zero_element(self.dim)

    def entry(self, i: int, j: int) -> Element:
        return self.table[i][j]

    def format_element(self, el: Element) -> str:
        return format_element(el, self.basis)

    def is_parametric(self) -> bool:
        return any(
            not poly.is_constant() for row in self.table for entry in row for poly in entry.coords
        )

    def evaluate(self, assignment: Mapping[str, Fraction | int]) -> "AlgebraTable":
        """Substitute every parameter, producing a constant table."""
        for p in self.params:
            if p not in assignment:
                raise MissingParameterError(f"no value for parameter {p}")
        new_rows = tuple(
            tuple(
                Element(tuple(Poly.const(poly.evaluate(assignment)) for poly in entry.coords))
                for entry in row
            )
            for row in self.table
        )
        return AlgebraTable(self.name, self.dim, (), self.basis, new_rows)

    # -- bracket and residuals ----------------------------------------------

    def bracket(self, u: Element, v: Element) -> Element:
        """Bilinear extension of the table to arbitrary elements."""
        if u.dim != self.dim or v.dim != self.dim:
            raise DimensionMismatchError("element dimension does not match the table")
        acc = [ZERO] * self.dim
        for i, cu in enumerate(u.coords):
            if not cu:
                continue
            for j, cv in enumerate(v.coords):
                if not cv:
                    continue
                entry = self.table[i][j]
                scale = cu * cv
                for k, ck in enumerate(entry.coords):
                    if ck:
                        acc[k] = acc[k] + scale * ck
        return Element(tuple(acc))

    def _bracket_basis_left(self, i: int, w: Element) -> Element:
        """[b_i, w] for an element w."""
        acc = [ZERO] * self.dim
        for l, c in enumerate(w.coords):
            if not c:
                continue
            entry = self.table[i][l]
            for k, ck in enumerate(entry.coords):
                if ck:
                    acc[k] = acc[k] + c * ck
        return Element(tuple(acc))

    def _bracket_basis_right(self, w: Element, j: int) -> Element:
        """[w, b_j] for an element w."""
        acc = [ZERO] * self.dim
        for l, c in enumerate(w.coords):
            if not c:
                continue
            entry = self.table[l][j]
            for k, ck in enumerate(entry.coords):
                if ck:
                    acc[k] = acc[k] + c * ck
        return Element(tuple(acc))

    def residual(self, i: int, j: int, k: int) -> Element:
        """r(b_i, b_j, b_k) = [b_i,[b_j,b_k]] - [[b_i,b_j],b_k] + [[b_i,b_k],b_j]."""
        t1 = self._bracket_basis_left(i, self.table[j][k])
        t2 = self._bracket_basis_right(self.table[i][j], k)
        t3 = self._bracket_basis_right(self.table[i][k], j)
        return t1 - t2 + t3

    def _sparse_constant(self) -> list[list[list[tuple[int, Fraction]]]]:
        if self.is_parametric():
            raise ParametricError(
                "table has parametric entries; use constraint extraction "
                "(extract_constraints / the constraints command) instead"
            )
        return [
            [
                [(k, c.constant_value()) for k, c in enumerate(entry.coords) if c]
                for entry in row
            ]
            for row in self.table
        ]

    def check_leibniz(self) -> Verdict:
        """PASS iff every residual over basis triples vanishes. Constants only."""
        rows = self._sparse_constant()
        dim = self.dim
        for i in range(dim):
            row_i = rows[i]
            for j in range(dim):
                ij = row_i[j]
                row_j = rows[j]
                for k in range(dim):
                    jk = row_j[k]
                    ik = row_i[k]
                    if not jk and not ij and not ik:
                        continue
                    acc: dict[int, Fraction] = {}
                    for l, c in jk:
                        for m, d in row_i[l]:
                            acc[m] = acc.get(m, _F0) + c * d
                    for l, c in ij:
                        for m, d in rows[l][k]:
                            acc[m] = acc.get(m, _F0) - c * d
                    for l, c in ik:
                        for m, d in rows[l][j]:
                            acc[m] = acc.get(m, _F0) + c * d
                    if any(acc.values()):
                        return Verdict(
                            FAIL,
                            witness=(self.basis[i], self.basis[j], self.basis[k]),
                            residual=self.residual(i, j, k),
                            detail="Leibniz identity fails",
                        )
        return Verdict(PASS)

    def check_lie(self) -> Verdict:
        """PASS iff the table is antisymmetric and satisfies Jacobi."""
        rows = self._sparse_constant()
        dim = self.dim
        for i in range(dim):
            for j in range(i, dim):
                acc: dict[int, Fraction] = {}
                for k, c in rows[i][j]:
                    acc[k] = acc.get(k, _F0) + c
                for k, c in rows[j][i]:
                    acc[k] = acc.get(k, _F0) + c
                if any(acc.values()):
                    el = self.table[i][j] + self.table[j][i]
                    return Verdict(
                        FAIL,
                        witness=(self.basis[i], self.basis[j]),
                        residual=el,
                        detail="antisymmetry fails",
                    )
        # Jacobi: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
        for i in range(dim):
            for j in range(dim):
                ij = rows[i][j]
                for k in range(dim):
                    jk = rows[j][k]
                    ki = rows[k][i]
                    if not ij and not jk and not ki:
                        continue
                    acc = {}
                    for l, c in ij:
                        for m, d in rows[l][k]:
                            acc[m] = acc.get(m, _F0) + c * d
                    for l, c in jk:
                        for m, d in rows[l][i]:
                            acc[m] = acc.get(m, _F0) + c * d
                    for l, c in ki:
                        for m, d in rows[l][j]:
                            acc[m] = acc.get(m, _F0) + c * d
                    if any(acc.values()):
                        jac = (
                            self._bracket_basis_right(self.table[i][j], k)
                            + self._bracket_basis_right(self.table[j][k], i)
                            + self._bracket_basis_right(self.table[k][i], j)
                        )
                        return Verdict(
                            FAIL,
                            witness=(self.basis[i], self.basis[j], self.basis[k]),
                            residual=jac,
                            detail="Jacobi identity fails",
                        )
        return Verdict(PASS)

    # -- operators, ideals, quotients ----------------------------------------

    def right_mult_matrix(self, a: Element) -> Matrix:
        """Matrix of v -> [v, a] on coordinate columns; column j is [b_j, a]."""
        images = [self.bracket(self.basis_element(j), a) for j in range(self.dim)]
        return tuple(
            tuple(images[j].coords[i] for j in range(self.dim)) for i in range(self.dim)
        )

    def product_span(self, left: Subspace, right: Subspace) -> Subspace:
        """span{ [u, v] : u in left, v in right }, computed on echelon rows."""
        vectors = []
        for u in left.as_elements():
            for v in right.as_elements():
                vectors.append(self.bracket(u, v))
        return span(vectors, self.dim)

    def ideal_closure(self, seed: Subspace) -> Subspace:
        """Smallest two-sided ideal containing the seed subspace."""
        if seed.ambient != self.dim:
            raise DimensionMismatchError("seed lives in the wrong ambient dimension")
        current = seed
        while True:
            vectors: list[Union[Element, Sequence[Fraction]]] = list(current.rows)
            for el in current.as_elements():
                for j in range(self.dim):
                    vectors.append(self._bracket_basis_right(el, j))
                    vectors.append(self._bracket_basis_left(j, el))
            nxt = span(vectors, self.dim)
            if nxt.dim == current.dim:
                return current
            current = nxt

    def squares_ideal(self) -> Subspace:
        """Ideal generated by all squares, seeded with the polarized products."""
        seed = []
        for i in range(self.dim):
            seed.append(self.table[i][i])
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                seed.append(self.table[i][j] + self.table[j][i])
        return self.ideal_closure(span(seed, self.dim))

    def verify_ideal(self, sub: Subspace) -> None:
        """Raise NotAnIdealError naming a violating product if sub is not an ideal."""
        for el in sub.as_elements():
            for j in range(self.dim):
                right = self._bracket_basis_right(el, j)
                if not sub.contains(right.constant_coords()):
                    raise NotAnIdealError(
                        f"[{self.format_element(el)}, {self.basis[j]}] leaves the subspace"
                    )
                left = self._bracket_basis_left(j, el)
                if not sub.contains(left.constant_coords()):
                    raise NotAnIdealError(
                        f"[{self.basis[j]}, {self.format_element(el)}] leaves the subspace"
                    )

    def quotient_by(self, sub: Subspace) -> tuple["AlgebraTable", QuotientMap]:
        """Quotient table on the non-pivot coordinates, plus the projection."""
        if self.is_parametric():
            raise ParametricError("quotient requires a constant table")
        if sub.ambient != self.dim:
            raise DimensionMismatchError("subspace lives in the wrong ambient dimension")
        self.verify_ideal(sub)
        kept = sub.complement_indices()
        proj = QuotientMap(sub, kept)
        new_basis = tuple(self.basis[i] for i in kept)
        new_dim = len(kept)
        rows = []
        for p in kept:
            row = []
            for q in kept:
                row.append(proj(self.table[p][q]))
            rows.append(tuple(row))
        quotient = AlgebraTable(f"{self.name}_mod_I", new_dim, (), new_basis, tuple(rows))
        return quotient, proj

    # -- invariants -----------------------------------------------------------

    def _center_dim(self, side: str) -> int:
        """dim{ z : [z, L] = 0 } (left) or dim{ z : [L, z] = 0 } (right)."""
        rows = self._sparse_constant()
        # constraint rows in the unknowns z_0..z_{dim-1}: for each companion
        # b_j and each output coordinate k, sum_i z_i coeff_k([b_i, b_j]) = 0
        constraints: list[list[Fraction]] = []
        for j in range(self.dim):
            per_coord: dict[int, list[Fraction]] = {}
            for i in range(self.dim):
                entry = rows[i][j] if side == "left" else rows[j][i]
                for k, c in entry:
                    per_coord.setdefault(k, [_F0] * self.dim)[i] = c
            constraints.extend(per_coord.values())
        reduced, _ = rref(constraints, self.dim)
        return self.dim - len(reduced)

    def invariant_profile(self) -> InvariantProfile:
        """Derived and lower central series dims, centers, squares ideal."""
        full = Subspace.full(self.dim)
        derived = [self.dim]
        current = full
        while True:
            nxt = self.product_span(current, current)
            if nxt.dim == current.dim:
                break
            derived.append(nxt.dim)
            current = nxt
        lower = [self.dim]
        current = full
        while True:
            nxt = self.product_span(current, full)
            if nxt.dim == current.dim:
                break
            lower.append(nxt.dim)
            current = nxt
        derived_dim = derived[1] if len(derived) > 1 else derived[0]
        return InvariantProfile(
            dim=self.dim,
            derived_dim=derived_dim,
            derived_series=tuple(derived),
            lower_central_series=tuple(lower),
            left_center_dim=self._center_dim("left"),
            right_center_dim=self._center_dim("right"),
            squares_ideal_dim=self.squares_ideal().dim,
        )

    def __str__(self) -> str:
        kind = "parametric" if self.params else "constant"
        return f"<AlgebraTable {self.name}: dim {self.dim}, {kind}>"
