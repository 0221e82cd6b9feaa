"""Constructors for the tables the package studies.

All tables share the basis spelling and conventions fixed in core:

* sl2 on (e, h, f): [e,h]=2e, [h,f]=2f, [e,f]=h and the negatives.
* r2 on (y1, y2): [y1,y2]=y1, [y2,y1]=-y1.
* The weight-m module on (x0..xm) acted on from the right:
  [x_k,h]=(m-2k)x_k, [x_k,f]=x_{k+1}, [x_k,e]=-k(m+1-k)x_{k-1}.

make_module_extension(m, a) is the (m+6)-dimensional algebra whose squares
ideal is the weight-m module and whose quotient is sl2 + r2, with y2 acting
on the module by the scalar a. Note the degenerate corner: at m=0 with a=0
the module action vanishes entirely, every square is zero and the table is
a plain Lie algebra, so its squares ideal is 0 rather than the module line.

make_L_family(l, mu, a) is the eight-dimensional three-parameter family
over the weight-2 module; it exists exactly when l*(1-a) = 0, and the
constructor enforces that. make_L_prefamily() is its four-parameter
ancestor with the removable b-products still present.

make_generic_family builds the symbolic ansatz used for constraint
extraction: every product not pinned by the conventions above carries free
coefficients named a_<left>_<right>_<j>.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .core import AlgebraTable, Matrix, mat_from_rows, mat_mul, mat_sub
from .errors import AdmissibilityError, DimensionMismatchError, ParametricError
from .scalars import Poly

Rat = Union[Fraction, int]

SL2_BASIS = ("e", "h", "f")

_SL2_PRODUCTS: dict[tuple[str, str], dict[str, int]] = {
    ("e", "h"): {"e": 2},
    ("h", "f"): {"f": 2},
    ("e", "f"): {"h": 1},
    ("h", "e"): {"e": -2},
    ("f", "h"): {"f": -2},
    ("f", "e"): {"h": -1},
}


def make_sl2() -> AlgebraTable:
    """The split three-dimensional simple Lie algebra on (e, h, f)."""
    return AlgebraTable.from_products("sl2", SL2_BASIS, _SL2_PRODUCTS)


def make_r2() -> AlgebraTable:
    """The two-dimensional solvable Lie algebra on (y1, y2)."""
    return AlgebraTable.from_products(
        "r2", ("y1", "y2"), {("y1", "y2"): {"y1": 1}, ("y2", "y1"): {"y1": -1}}
    )


def make_abelian(dim: int, prefix: str = "z") -> AlgebraTable:
    """An abelian algebra with all products zero."""
    return AlgebraTable.from_products(f"abelian{dim}", tuple(f"{prefix}{i}" for i in range(dim)), {})


def module_basis(m: int) -> tuple[str, ...]:
    return tuple(f"x{k}" for k in range(m + 1))


def make_sl2_module(m: int) -> tuple[tuple[str, ...], Matrix, Matrix, Matrix]:
    """The irreducible weight-m right module for sl2.

    Returns (basis names, E, F, H): matrices of right multiplication by
    e, f and h on coordinate columns of (x0..xm). They satisfy
    H = F.E - E.F, H.E - E.H = 2E and H.F - F.H = -2F.
    """
    if m < 0:
        raise AdmissibilityError("module weight must be a nonnegative integer")
    n = m + 1
    e_rows = [[0] * n for _ in range(n)]
    f_rows = [[0] * n for _ in range(n)]
    h_rows = [[0] * n for _ in range(n)]
    for k in range(n):
        h_rows[k][k] = m - 2 * k
        if k < m:
            f_rows[k + 1][k] = 1
        if k > 0:
            e_rows[k - 1][k] = -k * (m + 1 - k)
    return module_basis(m), mat_from_rows(e_rows), mat_from_rows(f_rows), mat_from_rows(h_rows)


def _module_products(m: int) -> dict[tuple[str, str], dict[str, Rat]]:
    """Sparse right-action products of sl2 on the weight-m module block."""
    out: dict[tuple[str, str], dict[str, Rat]] = {}
    for k in range(m + 1):
        if m - 2 * k:
            out[(f"x{k}", "h")] = {f"x{k}": m - 2 * k}
        if k < m:
            out[(f"x{k}", "f")] = {f"x{k + 1}": 1}
        if k > 0:
            out[(f"x{k}", "e")] = {f"x{k - 1}": -k * (m + 1 - k)}
    return out


def make_dzhumadildaev(
    g: AlgebraTable, module: Sequence[str], action: Mapping[str, Matrix]
) -> AlgebraTable:
    """Adjoin a right module to a Lie algebra as a zero-square block.

    Products: [g, g'] from the Lie table, [m, g_i] = action[g_i] applied to
    m, and [g, m] = [m, m'] = 0. The result is a Leibniz algebra whenever
    the action matrices represent right multiplication compatibly with the
    Lie products, which is validated here:
    R_[gi,gj] = R_gj . R_gi - R_gi . R_gj.
    """
    if g.is_parametric():
        raise ParametricError("the Lie factor must be a constant table")
    verdict = g.check_lie()
    if not verdict.passed:
        raise AdmissibilityError(
            f"the first factor is not a Lie table ({verdict.detail} at {verdict.witness})"
        )
    module = tuple(module)
    if set(module) & set(g.basis):
        raise DimensionMismatchError("module basis names clash with the Lie basis")
    if set(action) != set(g.basis):
        raise DimensionMismatchError("action must give one matrix per Lie basis symbol")
    mdim = len(module)
    for mat in action.values():
        if len(mat) != mdim or any(len(row) != mdim for row in mat):
            raise DimensionMismatchError("action matrix has the wrong shape")
    for i, gi in enumerate(g.basis):
        for j, gj in enumerate(g.basis):
            expected = mat_sub(mat_mul(action[gj], action[gi]), mat_mul(action[gi], action[gj]))
            combo = None
            for c, gc in zip(g.table[i][j].coords, g.basis):
                if c:
                    scaled = tuple(tuple(c * x for x in row) for row in action[gc])
                    combo = scaled if combo is None else tuple(
                        tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(combo, scaled)
                    )
            if combo is None:
                combo = tuple((Poly.const(0),) * mdim for _ in range(mdim))
            if any(any(a - b for a, b in zip(ra, rb)) for ra, rb in zip(combo, expected)):
                raise AdmissibilityError(
                    f"action matrices are not a right module: fails at [{gi},{gj}]"
                )
    basis = g.basis + module
    products: dict[tuple[str, str], dict[str, Poly]] = {}
    for i, gi in enumerate(g.basis):
        for j, gj in enumerate(g.basis):
            entry = g.table[i][j]
            if not entry.is_zero():
                products[(gi, gj)] = {
                    gc: c for gc, c in zip(g.basis, entry.coords) if c
                }
    for j, gj in enumerate(g.basis):
        mat = action[gj]
        for col, msym in enumerate(module):
            coords = {module[row]: mat[row][col] for row in range(mdim) if mat[row][col]}
            if coords:
                products[(msym, gj)] = coords
    return AlgebraTable.from_products(f"{g.name}_plus_module", basis, products)


def make_direct_sum(a: AlgebraTable, b: AlgebraTable) -> AlgebraTable:
    """Block-diagonal sum; clashing basis names on the right get `_2`."""
    if a.is_parametric() or b.is_parametric():
        raise ParametricError("direct sums are built from constant tables")
    rename = {}
    taken = set(a.basis)
    for name in b.basis:
        new = name
        while new in taken:
            new = new + "_2"
        rename[name] = new
        taken.add(new)
    basis = a.basis + tuple(rename[n] for n in b.basis)
    products: dict[tuple[str, str], dict[str, Poly]] = {}
    for i, bi in enumerate(a.basis):
        for j, bj in enumerate(a.basis):
            entry = a.table[i][j]
            if not entry.is_zero():
                products[(bi, bj)] = {a.basis[k]: c for k, c in enumerate(entry.coords) if c}
    for i, bi in enumerate(b.basis):
        for j, bj in enumerate(b.basis):
            entry = b.table[i][j]
            if not entry.is_zero():
                products[(rename[bi], rename[bj])] = {
                    rename[b.basis[k]]: c for k, c in enumerate(entry.coords) if c
                }
    return AlgebraTable.from_products(f"{a.name}_plus_{b.name}", basis, products)


# ---------------------------------------------------------------------------
# the (m+6)-dimensional families over sl2 + r2


def _family_basis(m: int) -> tuple[str, ...]:
    return SL2_BASIS + module_basis(m) + ("y1", "y2")


def make_module_extension(m: int, a: Rat = 0) -> AlgebraTable:
    """The canonical (m+6)-dim family: sl2 + r2 with the weight-m module as
    zero-square block and y2 acting on it by the scalar a."""
    if m < 0:
        raise AdmissibilityError("module weight must be a nonnegative integer")
    a = Fraction(a)
    products: dict[tuple[str, str], dict[str, Rat]] = {}
    products.update(_SL2_PRODUCTS)
    products.update(_module_products(m))
    products[("y1", "y2")] = {"y1": 1}
    products[("y2", "y1")] = {"y1": -1}
    if a:
        for k in range(m + 1):
            products[(f"x{k}", "y2")] = {f"x{k}": a}
    name = f"module_ext_m{m}_a{str(a).replace('/', 'd')}"
    return AlgebraTable.from_products(name, _family_basis(m), products)


@dataclass(frozen=True)
class FamilySpec:
    """Shape of a generic symbolic family over the weight-m module.

    include_sl2_R_products frees the products [e|f|h, y_i];
    include_sl2_defects adds module-valued defect terms to the six
    canonical sl2 products. Free coefficients are named with param_format.
    """

    m: int
    include_sl2_R_products: bool = False
    include_sl2_defects: bool = False
    param_format: str = "a_{left}_{right}_{j}"

    def param(self, left: str, right: str, j: int) -> str:
        return self.param_format.format(left=left, right=right, j=j)


def make_generic_family(spec: FamilySpec) -> AlgebraTable:
    """The symbolic ansatz over sl2 + module + (y1, y2).

    Fixed products: sl2, the module action, [y1,y2] = y1 + free module
    part, [y2,y1] = -y1. Free module-valued products: [y_i, e|f|h],
    [x_k, y_i], [y_1,y_1], [y_2,y_2], plus the optional flag blocks.
    Evaluating every parameter at 0 gives make_module_extension(m, 0).
    """
    m = spec.m
    if m < 0:
        raise AdmissibilityError("module weight must be a nonnegative integer")
    xs = module_basis(m)
    params: list[str] = []
    products: dict[tuple[str, str], dict[str, object]] = {}

    def free_module_part(left: str, right: str) -> dict[str, Poly]:
        coords = {}
        for j in range(m + 1):
            name = spec.param(left, right, j)
            params.append(name)
            coords[xs[j]] = Poly.param(name)
        return coords

    for (left, right), coords in _SL2_PRODUCTS.items():
        products[(left, right)] = dict(coords)
    products.update(_module_products(m))
    for yi in ("y1", "y2"):
        for g in ("e", "f", "h"):
            products[(yi, g)] = free_module_part(yi, g)
    for xk in xs:
        for yi in ("y1", "y2"):
            products[(xk, yi)] = free_module_part(xk, yi)
    y1y2 = free_module_part("y1", "y2")
    y1y2["y1"] = Poly.const(1)
    products[("y1", "y2")] = y1y2
    products[("y2", "y1")] = {"y1": Poly.const(-1)}
    products[("y1", "y1")] = free_module_part("y1", "y1")
    products[("y2", "y2")] = free_module_part("y2", "y2")
    if spec.include_sl2_R_products:
        for g in ("e", "f", "h"):
            for yi in ("y1", "y2"):
                products[(g, yi)] = free_module_part(g, yi)
    if spec.include_sl2_defects:
        for (left, right), coords in _SL2_PRODUCTS.items():
            defect = free_module_part(left, right)
            merged: dict[str, object] = dict(coords)
            merged.update(defect)
            products[(left, right)] = merged
    flags = ""
    if spec.include_sl2_R_products:
        flags += "_slr"
    if spec.include_sl2_defects:
        flags += "_defects"
    return AlgebraTable.from_products(
        f"generic_m{m}{flags}", _family_basis(m), products, params=tuple(params)
    )


def make_L_prefamily() -> AlgebraTable:
    """The eight-dimensional four-parameter family over the weight-2 module.

    Parameters (l, mu, a, b). The b-products are removable by the change
    y2 -> y2 + (b/2) x2; the family satisfies the Leibniz identity exactly
    on the locus l*(1-a) = 0.
    """
    l, mu, a, b = (Poly.param(n) for n in ("l", "mu", "a", "b"))
    half = Fraction(1, 2)
    products: dict[tuple[str, str], dict[str, object]] = {}
    products.update(_SL2_PRODUCTS)
    products.update(_module_products(2))
    products[("e", "y1")] = {"x0": l}
    products[("f", "y1")] = {"x2": half * l}
    products[("h", "y1")] = {"x1": l}
    products[("e", "y2")] = {"x0": mu}
    products[("f", "y2")] = {"x2": half * mu}
    products[("h", "y2")] = {"x1": mu}
    products[("y1", "y2")] = {"y1": 1}
    products[("y2", "y1")] = {"y1": -1}
    products[("y2", "y2")] = {"x2": -half * a * b}
    for k in range(3):
        products[(f"x{k}", "y2")] = {f"x{k}": a}
    products[("y2", "e")] = {"x1": b}
    products[("y2", "h")] = {"x2": b}
    return AlgebraTable.from_products(
        "L_prefamily", _family_basis(2), products, params=("l", "mu", "a", "b")
    )


def make_L_family(l: Rat, mu: Rat, a: Rat) -> AlgebraTable:
    """L(l, mu, a): the prefamily at b = 0 with concrete rational parameters.

    Admissible exactly when l*(1-a) = 0; otherwise the Leibniz identity
    fails (the residual at (e, y1, y2) is (l - l*a) x0) and the constructor
    refuses to build the table.
    """
    l, mu, a = Fraction(l), Fraction(mu), Fraction(a)
    if l * (1 - a) != 0:
        raise AdmissibilityError(
            f"L(l, mu, a) requires l*(1-a) = 0; got l={l}, a={a}"
        )
    half = Fraction(1, 2)
    products: dict[tuple[str, str], dict[str, Rat]] = {}
    products.update(_SL2_PRODUCTS)
    products.update(_module_products(2))
    if l:
        products[("e", "y1")] = {"x0": l}
        products[("f", "y1")] = {"x2": half * l}
        products[("h", "y1")] = {"x1": l}
    if mu:
        products[("e", "y2")] = {"x0": mu}
        products[("f", "y2")] = {"x2": half * mu}
        products[("h", "y2")] = {"x1": mu}
    products[("y1", "y2")] = {"y1": 1}
    products[("y2", "y1")] = {"y1": -1}
    if a:
        for k in range(3):
            products[(f"x{k}", "y2")] = {f"x{k}": a}
    name = "L_" + "_".join(str(v).replace("/", "d") for v in (l, mu, a))
    return AlgebraTable.from_products(name, _family_basis(2), products)
