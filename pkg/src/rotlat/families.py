"""The five lattice families, the D_n reference data and congruence witnesses.

Families (parameter r for two-power conductors, prime p otherwise):

* d-pow2-a : alpha = 4 + e_1 - 2 e_2 - e_3, I = O_K,            c = 2^(r-1)
* d-pow2-b : alpha = 2 + e_1, I = <-e_1, e_2, ..., -e_(n-1), v>, c = 2^(r-1)
             with v = -2 e_0 + 2 e_1 - 2 e_2 + ... - 2 e_(n-2) + e_(n-1)
* d-prime  : alpha = 2 - e_1, I = <e_1, ..., e_(n-1), -e_1 - 2 e_2 - ... - 2 e_n>, c = p
* z-pow2   : alpha = 2 + e_1, I = O_K (alternating-sum basis),   c = 2^(r-1)
* z-prime  : alpha = 2 - e_1, I = O_K (tail-sum basis),          c = p

Every checkerboard (D) family comes with an explicit integer witness W with
W (B B^t) W^t = G, where B is the standard D_n basis below; both Z families
have exact Gram equal to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import field, intlinalg
from .embedding import RotatedLattice, TwistedForm, build_lattice
from .errors import BadParam, UnsupportedConductor
from .field import CycloParams, FieldElement, FieldKind, cyclo_pair, make_params, one
from .modules import ZSubmodule, module_from_rows, ring_module


class Family(str, Enum):
    D_POW2_A = "d-pow2-a"
    D_POW2_B = "d-pow2-b"
    D_PRIME = "d-prime"
    Z_POW2 = "z-pow2"
    Z_PRIME = "z-prime"

    @property
    def kind(self) -> FieldKind:
        if self in (Family.D_POW2_A, Family.D_POW2_B, Family.Z_POW2):
            return FieldKind.TWO_POWER
        return FieldKind.PRIME

    @property
    def is_checkerboard(self) -> bool:
        return self in (Family.D_POW2_A, Family.D_POW2_B, Family.D_PRIME)


@dataclass(frozen=True)
class DnReference:
    """Standard D_n data: basis rows, Gram, determinant 4, min norm sqrt(2)."""

    n: int
    basis: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]


def dn_reference(n: int) -> DnReference:
    """Standard D_n basis {(-1,-1,0,...), (1,-1,0,...), (0,1,-1,...), ...}."""
    if n < 2:
        raise BadParam("D_n needs n >= 2")
    rows = []
    r0 = [0] * n
    r0[0] = -1
    r0[1] = -1
    rows.append(r0)
    r1 = [0] * n
    r1[0] = 1
    r1[1] = -1
    rows.append(r1)
    for i in range(2, n):
        r = [0] * n
        r[i - 1] = 1
        r[i] = -1
        rows.append(r)
    gram = intlinalg.matmul_int(rows, intlinalg.transpose_rows(rows))
    return DnReference(n, tuple(tuple(r) for r in rows), tuple(tuple(r) for r in gram))


def _params_for(family: Family, param: int) -> CycloParams:
    try:
        if family.kind is FieldKind.TWO_POWER:
            if param < 4:
                raise BadParam(f"two-power families need r >= 4, got {param}")
            return make_params(2**param)
        if param < 7:
            raise BadParam(f"prime families need p >= 7, got {param}")
        return make_params(param)
    except UnsupportedConductor as exc:
        raise BadParam(str(exc)) from exc


def _alpha(family: Family, params: CycloParams) -> FieldElement:
    if family is Family.D_POW2_A:
        return 4 * one(params) + cyclo_pair(params, 1) - 2 * cyclo_pair(params, 2) - cyclo_pair(params, 3)
    if family in (Family.D_POW2_B, Family.Z_POW2):
        return 2 * one(params) + cyclo_pair(params, 1)
    return 2 * one(params) - cyclo_pair(params, 1)


def _pow2_b_module_rows(n: int) -> intlinalg.Rows:
    rows = []
    for i in range(1, n):
        r = [0] * n
        r[i] = (-1) ** i
        rows.append(r)
    last = [0] * n
    last[0] = -2
    for i in range(1, n - 1):
        last[i] = 2 * (-1) ** (i + 1)
    last[n - 1] = 1
    rows.append(last)
    return rows


def _prime_module_rows(n: int) -> intlinalg.Rows:
    rows = []
    for i in range(n - 1):
        r = [0] * n
        r[i] = 1
        rows.append(r)
    last = [-2] * n
    last[0] = -1
    rows.append(last)
    return rows


def _pow2_unit_basis_rows(n: int) -> intlinalg.Rows:
    """Alternating partial sums x_i = e_0 - e_1 + ... +- e_(n-1-i); Gram = I."""
    rows = []
    for i in range(n):
        r = [0] * n
        for j in range(n - i):
            r[j] = (-1) ** j
        rows.append(r)
    return rows


def _prime_unit_basis_rows(n: int) -> intlinalg.Rows:
    """Tail sums x_i = e_i + e_(i+1) + ... + e_n; Gram = I."""
    return [[1 if j >= i else 0 for j in range(n)] for i in range(n)]


def _pow2_a_witness_rows(n: int) -> intlinalg.Rows:
    """The sparse +-1 change of basis for the first construction's Gram."""
    rows = []
    r0 = [0] * n
    r0[n - 1] = -1
    rows.append(r0)
    r1 = [0] * n
    r1[n - 2] = 1
    rows.append(r1)
    for i in range(2, n - 1):
        r = [0] * n
        sign = (-1) ** (i + 1)
        r[n - 1 - i] = sign
        r[n + 1 - i] = -sign
        rows.append(r)
    last = [0] * n
    last[0] = 1
    last[1] = -1
    last[2] = -1
    rows.append(last)
    return rows


def _express_over_pow2_units(row: list[int]) -> list[int]:
    """Coordinates of a ring element over the alternating-sum basis."""
    n = len(row)
    # e_0 = x_(n-1); e_k = (-1)^k (x_(n-1-k) - x_(n-k)) for k >= 1
    out = [0] * n
    out[n - 1] += row[0]
    for k in range(1, n):
        c = row[k]
        if c:
            s = (-1) ** k
            out[n - 1 - k] += s * c
            out[n - k] -= s * c
    return out


def _express_over_prime_units(row: list[int]) -> list[int]:
    n = len(row)
    # e_j = x_j - x_(j+1) (with x_(n+1) = 0), 1-indexed
    out = [0] * n
    for j in range(n):
        c = row[j]
        if c:
            out[j] += c
            if j + 1 < n:
                out[j + 1] -= c
    return out


def _express_over_dn(row: list[int]) -> list[int]:
    """Coordinates over the standard D_n basis; requires an even entry sum."""
    n = len(row)
    y = [0] * n
    if n == 2:
        rhs = -(row[0] + row[1])
    else:
        y[n - 1] = -row[n - 1]
        for j in range(n - 2, 1, -1):
            y[j] = y[j + 1] - row[j]
        rhs = y[2] - row[0] - row[1]
    if rhs % 2:
        raise ValueError("vector is outside D_n (odd coordinate sum)")
    y[0] = rhs // 2
    y[1] = row[0] + y[0]
    return y


def congruence_witness(lattice: RotatedLattice) -> intlinalg.Rows:
    """Integer unimodular W with W (B B^t) W^t equal to the exact Gram.

    For the first two-power construction this is the explicit sparse matrix
    from its equivalence argument; for the sublattice constructions it is
    computed by expressing the module basis over an orthonormal-Gram basis
    and then over the standard D_n rows.  The identity is verified exactly
    before returning.
    """
    fam = Family(lattice.family)
    n = lattice.n
    if not fam.is_checkerboard:
        raise BadParam(f"{fam.value} is not a checkerboard family")
    if fam is Family.D_POW2_A:
        w = _pow2_a_witness_rows(n)
    else:
        express = _express_over_pow2_units if fam is Family.D_POW2_B else _express_over_prime_units
        w = [_express_over_dn(express(list(row))) for row in lattice.module.basis]
    ref = dn_reference(n)
    check = intlinalg.matmul_int(intlinalg.matmul_int(w, [list(r) for r in ref.gram]), intlinalg.transpose_rows(w))
    if not intlinalg.rows_equal(check, lattice.gram_rows()):
        raise AssertionError("congruence witness failed the exact Gram identity")
    return w


@lru_cache(maxsize=None)
def construct(family: Family | str, param: int) -> RotatedLattice:
    """Build one family instance; results are cached and immutable."""
    fam = Family(family)
    params = _params_for(fam, param)
    alpha = _alpha(fam, params)
    n = params.n
    c = 2 ** (param - 1) if fam.kind is FieldKind.TWO_POWER else param

    if fam is Family.D_POW2_A:
        module = ring_module(params)
        gen = one(params)
    elif fam is Family.D_POW2_B:
        module = module_from_rows(params, _pow2_b_module_rows(n))
        gen = field.basis_element(params, 1)
    elif fam is Family.D_PRIME:
        module = module_from_rows(params, _prime_module_rows(n))
        gen = None
    elif fam is Family.Z_POW2:
        module = module_from_rows(params, _pow2_unit_basis_rows(n))
        gen = one(params)
    else:
        module = module_from_rows(params, _prime_unit_basis_rows(n))
        gen = one(params)

    return build_lattice(module, TwistedForm(alpha, c), family=fam.value, principal_generator=gen)


def proof_transform(family: Family | str, param: int) -> intlinalg.Rows:
    """The explicit unimodular matrix behind each family's equivalence proof.

    D families: the Gram-congruence witness W (W B B^t W^t = exact Gram).
    Z families: the basis change from the ring basis to the orthonormal-Gram
    basis (upper-triangular all-ones for primes, alternating sums for 2^r).
    """
    fam = Family(family)
    lattice = construct(fam, param)
    if fam.is_checkerboard:
        return congruence_witness(lattice)
    rows = _pow2_unit_basis_rows(lattice.n) if fam is Family.Z_POW2 else _prime_unit_basis_rows(lattice.n)
    assert intlinalg.is_unimodular(rows)
    return rows
