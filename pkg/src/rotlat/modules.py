"""Rank-n Z-submodules of the ring of integers.

Membership, index, ideal closure and principal-module comparison are all
decided by exact integer linear algebra on a cached Hermite normal form, so
the ideal / non-ideal certificates carry no floating-point doubt.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import field, intlinalg
from .errors import ParamsMismatch, SingularBasis, ZeroGenerator
from .field import CycloParams, FieldElement


@dataclass(frozen=True)
class ZSubmodule:
    """A full-rank Z-submodule given by basis rows over the ring basis."""

    params: CycloParams
    basis: tuple[tuple[int, ...], ...]

    @cached_property
    def hnf(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(r) for r in intlinalg.hermite_normal_form([list(r) for r in self.basis]))

    @cached_property
    def index(self) -> int:
        out = 1
        for i, row in enumerate(self.hnf):
            out *= row[i]
        return out

    def rows(self) -> intlinalg.Rows:
        return [list(r) for r in self.basis]

    def element(self, coeffs) -> FieldElement:
        """The module element with the given integer coordinates over the basis."""
        n = self.params.n
        out = [0] * n
        for c, row in zip(coeffs, self.basis):
            if c:
                for j in range(n):
                    out[j] += c * row[j]
        return FieldElement(self.params, tuple(out))


def module_from_rows(params: CycloParams, rows) -> ZSubmodule:
    """Store a basis verbatim (no reduction); reject singular input."""
    mat = [list(map(int, r)) for r in rows]
    if len(mat) != params.n or any(len(r) != params.n for r in mat):
        raise SingularBasis(f"basis must be a {params.n}x{params.n} integer matrix")
    if intlinalg.bareiss_determinant(mat) == 0:
        raise SingularBasis("basis rows are linearly dependent")
    return ZSubmodule(params, tuple(tuple(r) for r in mat))


def ring_module(params: CycloParams) -> ZSubmodule:
    """O_K itself, with the standard basis."""
    return ZSubmodule(params, tuple(tuple(r) for r in intlinalg.identity_rows(params.n)))


def principal_module(params: CycloParams, g: FieldElement) -> ZSubmodule:
    """The module g * O_K with basis {g * b : b ring basis vector}."""
    if g.is_zero():
        raise ZeroGenerator("principal module of the zero element")
    rows = [list(field.mul_by_basis(g, i).coeffs) for i in range(params.n)]
    return module_from_rows(params, rows)


def contains(module: ZSubmodule, x: FieldElement) -> bool:
    """True iff x is an integer combination of the module basis."""
    if module.params != x.params:
        raise ParamsMismatch("element and module live in different fields")
    return intlinalg.solve_against_hnf([list(r) for r in module.hnf], list(x.coeffs)) is not None


def index_in_ring(module: ZSubmodule) -> int:
    """|O_K / M| = |det(basis)|."""
    return module.index


def is_ideal(module: ZSubmodule) -> bool:
    """Closure of the module under multiplication by every ring basis vector."""
    params = module.params
    products = []
    for i in range(params.n):
        for row in module.basis:
            products.append(list(field.mul_by_basis(FieldElement(params, row), i).coeffs))
    mask = intlinalg.membership_mask([list(r) for r in module.hnf], products)
    return all(mask)


def modules_equal(a: ZSubmodule, b: ZSubmodule) -> bool:
    if a.params != b.params:
        raise ParamsMismatch("modules live in different fields")
    return a.hnf == b.hnf


def equals_principal(module: ZSubmodule, g: FieldElement) -> bool:
    """True iff the module is exactly g * O_K (canonical HNF comparison)."""
    if g.is_zero():
        raise ZeroGenerator("comparison against the zero generator")
    if module.params != g.params:
        raise ParamsMismatch("generator and module live in different fields")
    return modules_equal(module, principal_module(module.params, g))
