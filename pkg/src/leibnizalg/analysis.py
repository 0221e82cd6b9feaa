"""Constraint extraction, basis changes and isomorphism checking.

extract_constraints turns a parametric table into the finite set of
polynomial conditions equivalent to the Leibniz identity: every nonzero
residual coordinate over basis triples, reduced to a primitive normalized
representative. A rational assignment satisfies the set exactly when the
evaluated table passes check_leibniz.

A BasisChange holds the new basis as rows in old coordinates. Parametric
rows are allowed only while the determinant stays a nonzero rational
constant (unipotent changes and the like); then the inverse is the
adjugate over that constant and every transformed entry stays polynomial.
Products transform by w = [c_p, c_q] in old coordinates followed by
coords_new = w . C^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .core import (
    AlgebraTable,
    Element,
    FAIL,
    InvariantProfile,
    Matrix,
    PASS,
    Verdict,
    det_and_adjugate,
    mat_from_rows,
    mat_identity,
    mat_mul,
)
from .errors import BasisChangeError, DimensionMismatchError, ParametricError
from .scalars import Poly, as_poly, normalize_primitive, poly_sort_key

DISTINGUISHED = "DISTINGUISHED"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class ConstraintSet:
    """A set of primitive normalized polynomials with set semantics."""

    polys: frozenset[Poly]

    @classmethod
    def of(cls, items: Iterable[Poly]) -> "ConstraintSet":
        return cls(frozenset(items))

    def __len__(self) -> int:
        return len(self.polys)

    def __contains__(self, p: Poly) -> bool:
        return p in self.polys

    def __iter__(self) -> Iterator[Poly]:
        return iter(sorted(self.polys, key=poly_sort_key))

    def violated_at(self, assignment: Mapping[str, Fraction | int]) -> Poly | None:
        """First member (in canonical order) that does not vanish, if any."""
        for p in self:
            if p.evaluate(assignment) != 0:
                return p
        return None

    def satisfied_by(self, assignment: Mapping[str, Fraction | int]) -> bool:
        return self.violated_at(assignment) is None


def extract_constraints(t: AlgebraTable) -> ConstraintSet:
    """Polynomial conditions equivalent to the Leibniz identity for t."""
    found: set[Poly] = set()
    for i in range(t.dim):
        for j in range(t.dim):
            for k in range(t.dim):
                residual = t.residual(i, j, k)
                for poly in residual.coords:
                    if poly:
                        found.add(normalize_primitive(poly))
    return ConstraintSet.of(found)


@dataclass(frozen=True)
class BasisChange:
    """New basis in old coordinates, one row per new basis vector."""

    rows: Matrix

    @classmethod
    def identity(cls, dim: int) -> "BasisChange":
        return cls(mat_identity(dim))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Union[Poly, Fraction, int]]]) -> "BasisChange":
        return cls(mat_from_rows(rows))

    @classmethod
    def from_assignments(
        cls, t: AlgebraTable, assignments: Mapping[str, Union[Element, Mapping[str, object]]]
    ) -> "BasisChange":
        """Identity rows except the named ones, given over t's basis symbols."""
        rows = [list(row) for row in mat_identity(t.dim)]
        for symbol, value in assignments.items():
            el = value if isinstance(value, Element) else t.element(value)
            rows[t.index(symbol)] = list(el.coords)
        return cls(tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def parameters(self) -> set[str]:
        names: set[str] = set()
        for row in self.rows:
            for poly in row:
                names |= poly.parameters()
        return names

    def then(self, second: "BasisChange") -> "BasisChange":
        """The change `self followed by second`, as one matrix."""
        if self.dim != second.dim:
            raise DimensionMismatchError("cannot compose changes of different dimension")
        return BasisChange(mat_mul(second.rows, self.rows))

    def inverse_matrix(self) -> Matrix:
        """C^-1 = adj(C)/det(C); requires a nonzero rational constant det."""
        det, adj = det_and_adjugate(self.rows)
        if not det.is_constant():
            raise BasisChangeError(
                f"determinant {det} is not constant; only constant-determinant "
                "changes are invertible here"
            )
        value = det.constant_value()
        if value == 0:
            raise BasisChangeError("change of basis is singular (determinant 0)")
        inv = Fraction(1) / value
        return tuple(tuple(inv * entry for entry in row) for row in adj)


def apply_basis_change(t: AlgebraTable, change: BasisChange) -> AlgebraTable:
    """The same algebra written on the new basis rows.

    new_table[p][q] = [c_p, c_q] computed in t, re-expressed through the
    inverse change. Basis symbols keep their names; they now denote the
    new vectors.
    """
    if change.dim != t.dim:
        raise DimensionMismatchError(
            f"change has dimension {change.dim}, table has {t.dim}"
        )
    inv = change.inverse_matrix()
    extra = sorted(change.parameters() - set(t.params))
    params = t.params + tuple(extra)
    new_rows = []
    for p in range(t.dim):
        row = []
        cp = Element(change.rows[p])
        for q in range(t.dim):
            w = t.bracket(cp, Element(change.rows[q]))
            coords = []
            for r in range(t.dim):
                acc = None
                for i, wi in enumerate(w.coords):
                    if wi and inv[i][r]:
                        term = wi * inv[i][r]
                        acc = term if acc is None else acc + term
                coords.append(acc if acc is not None else as_poly(0))
            row.append(Element(tuple(coords)))
        new_rows.append(tuple(row))
    return AlgebraTable(t.name, t.dim, params, t.basis, tuple(new_rows))


def verify_isomorphism(t1: AlgebraTable, t2: AlgebraTable, change: BasisChange) -> Verdict:
    """PASS iff rewriting t1 through the change reproduces t2 exactly."""
    if t1.dim != t2.dim:
        raise DimensionMismatchError(
            f"tables have different dimensions: {t1.dim} vs {t2.dim}"
        )
    if t1.is_parametric() or t2.is_parametric():
        raise ParametricError("isomorphism checking needs constant tables")
    moved = apply_basis_change(t1, change)
    if t2.basis != moved.basis:
        raise DimensionMismatchError(
            f"basis symbols differ: {list(moved.basis)} vs {list(t2.basis)}"
        )
    for i in range(t1.dim):
        for j in range(t1.dim):
            if moved.table[i][j] != t2.table[i][j]:
                got = moved.format_element(moved.table[i][j])
                want = t2.format_element(t2.table[i][j])
                return Verdict(
                    FAIL,
                    witness=(moved.basis[i], moved.basis[j]),
                    residual=moved.table[i][j] - t2.table[i][j],
                    detail=f"[{moved.basis[i]},{moved.basis[j]}] maps to {got}, expected {want}",
                )
    return Verdict(PASS)


@dataclass(frozen=True)
class ProfileReport:
    """Outcome of comparing two invariant profiles."""

    status: str
    left: InvariantProfile
    right: InvariantProfile
    separating: tuple[str, ...]

    @property
    def distinguished(self) -> bool:
        return self.status == DISTINGUISHED


def compare_profiles(t1: AlgebraTable, t2: AlgebraTable) -> ProfileReport:
    """DISTINGUISHED when any computed invariant differs, else INCONCLUSIVE.

    INCONCLUSIVE never claims the tables are isomorphic; it only says the
    computed invariants cannot tell them apart.
    """
    p1 = t1.invariant_profile()
    p2 = t2.invariant_profile()
    d1, d2 = p1.as_dict(), p2.as_dict()
    separating = tuple(k for k in d1 if d1[k] != d2[k])
    status = DISTINGUISHED if separating else INCONCLUSIVE
    return ProfileReport(status, p1, p2, separating)
