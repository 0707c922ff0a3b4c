"""Exact arithmetic in K = Q(z + 1/z), z a primitive m-th root of unity.

Two conductor shapes are supported at desk scale:

* m = 2^r with 4 <= r <= 9.  Degree n = 2^(r-2), ring basis
  {e_0 = 1, e_1, ..., e_(n-1)} with e_i = z^i + z^-i.
* m = p an odd prime, 7 <= p <= 31.  Degree n = (p-1)/2, ring basis
  {e_1, ..., e_n}.

Elements are immutable integer coordinate vectors over the ring basis, so
every product, trace and norm below is exact.  Real embeddings are the only
floating-point surface and exist as a cross-check / generator-matrix backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from . import intlinalg
from .errors import ParamsMismatch, UnsupportedConductor, ZeroElement

MAX_TWO_POWER_R = 9
MAX_PRIME = 31


class FieldKind(Enum):
    TWO_POWER = "two-power"
    PRIME = "prime"


@dataclass(frozen=True)
class CycloParams:
    """Conductor data: everything else is derived from (kind, m, n)."""

    kind: FieldKind
    m: int
    n: int

    @property
    def r(self) -> int:
        assert self.kind is FieldKind.TWO_POWER
        return self.m.bit_length() - 1

    @property
    def p(self) -> int:
        assert self.kind is FieldKind.PRIME
        return self.m

    @property
    def half(self) -> int:
        # index at which z^k + z^-k folds to -2 (two-power case)
        return self.m // 2


def _is_odd_prime(m: int) -> bool:
    if m < 3 or m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def make_params(m: int) -> CycloParams:
    """Validate a conductor and populate the field parameters."""
    if m >= 16 and m & (m - 1) == 0:
        r = m.bit_length() - 1
        if r > MAX_TWO_POWER_R:
            raise UnsupportedConductor(f"2^{r} exceeds the supported desk scale (r <= {MAX_TWO_POWER_R})")
        return CycloParams(FieldKind.TWO_POWER, m, 2 ** (r - 2))
    if _is_odd_prime(m) and m >= 7:
        if m > MAX_PRIME:
            raise UnsupportedConductor(f"prime conductor {m} exceeds the supported desk scale (p <= {MAX_PRIME})")
        return CycloParams(FieldKind.PRIME, m, (m - 1) // 2)
    raise UnsupportedConductor(f"conductor {m} is not 2^r (r >= 4) or an odd prime >= 7")


@dataclass(frozen=True)
class FieldElement:
    """Integer coordinates over the ring basis of O_K."""

    params: CycloParams
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.params.n:
            raise ValueError("coefficient vector length must equal the field degree")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "FieldElement"):
        if self.params != other.params:
            raise ParamsMismatch("elements of different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.params, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.params, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.params, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement(self.params, tuple(other * a for a in self.coeffs))
        if isinstance(other, FieldElement):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"FieldElement(m={self.params.m}, coeffs={list(self.coeffs)})"


def from_coeffs(params: CycloParams, coeffs) -> FieldElement:
    return FieldElement(params, tuple(int(c) for c in coeffs))


def zero(params: CycloParams) -> FieldElement:
    return FieldElement(params, (0,) * params.n)


def one(params: CycloParams) -> FieldElement:
    """The ring identity.  In the prime basis 1 = -(e_1 + ... + e_n)."""
    if params.kind is FieldKind.TWO_POWER:
        return FieldElement(params, (1,) + (0,) * (params.n - 1))
    return FieldElement(params, (-1,) * params.n)


def basis_element(params: CycloParams, i: int) -> FieldElement:
    """The i-th stored basis vector (two-power: e_i with e_0 = 1; prime: e_(i+1))."""
    if not 0 <= i < params.n:
        raise ValueError(f"basis index {i} out of range")
    c = [0] * params.n
    c[i] = 1
    return FieldElement(params, tuple(c))


def _fold_accumulate(params: CycloParams, coeffs: list[int], k: int, weight: int):
    """Add weight * (z^k + z^-k) to a coefficient accumulator."""
    k %= params.m
    k = min(k, params.m - k)
    if params.kind is FieldKind.TWO_POWER:
        quarter = params.n
        half = params.half
        if k == 0:
            coeffs[0] += 2 * weight
        elif k == half:
            coeffs[0] -= 2 * weight
        elif k == quarter:
            pass  # z^quarter = i, so the pair sums to zero
        elif k > quarter:
            coeffs[half - k] -= weight
        else:
            coeffs[k] += weight
    else:
        if k == 0:
            # z^0 + z^0 = 2 = -2 (e_1 + ... + e_n)
            for j in range(params.n):
                coeffs[j] -= 2 * weight
        else:
            coeffs[k - 1] += weight


def cyclo_pair(params: CycloParams, k: int) -> FieldElement:
    """The element z^k + z^-k, folded onto the ring basis (k = 0 gives 2)."""
    c = [0] * params.n
    _fold_accumulate(params, c, k, 1)
    return FieldElement(params, tuple(c))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """Exact product in O_K via e_i e_j = (z^(i+j) + z^-(i+j)) + (z^(i-j) + z^-(i-j))."""
    a._check(b)
    params = a.params
    n = params.n
    out = [0] * n
    if params.kind is FieldKind.TWO_POWER:
        for i, ca in enumerate(a.coeffs):
            if not ca:
                continue
            for j, cb in enumerate(b.coeffs):
                if not cb:
                    continue
                w = ca * cb
                if i == 0 or j == 0:
                    # e_0 = 1, so the product is the other factor's basis vector
                    idx = i + j
                    if idx == 0:
                        out[0] += w
                    else:
                        out[idx] += w
                else:
                    _fold_accumulate(params, out, i + j, w)
                    _fold_accumulate(params, out, abs(i - j), w)
    else:
        for i, ca in enumerate(a.coeffs):
            if not ca:
                continue
            for j, cb in enumerate(b.coeffs):
                if not cb:
                    continue
                w = ca * cb
                _fold_accumulate(params, out, (i + 1) + (j + 1), w)
                _fold_accumulate(params, out, abs(i - j), w)
    return FieldElement(params, tuple(out))


def mul_by_basis(x: FieldElement, i: int) -> FieldElement:
    """Product of x with the i-th stored basis vector, in O(n)."""
    params = x.params
    n = params.n
    if params.kind is FieldKind.TWO_POWER and i == 0:
        return x
    out = [0] * n
    k = i if params.kind is FieldKind.TWO_POWER else i + 1
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        jj = j if params.kind is FieldKind.TWO_POWER else j + 1
        if params.kind is FieldKind.TWO_POWER and j == 0:
            out[k] += c
            continue
        _fold_accumulate(params, out, k + jj, c)
        _fold_accumulate(params, out, abs(k - jj), c)
    return FieldElement(params, tuple(out))


def trace_of_pair(params: CycloParams, k: int) -> int:
    """Tr(z^k + z^-k).  Two-power: 2n / -2n / 0 by k mod m; prime: 2n or -1.

    In the prime case z^k + z^-k is a single basis vector for k != 0, and the
    signed multiples {+-ik mod p} sweep every nonzero residue once, so the
    trace is the full sum of nontrivial p-th roots of unity.
    """
    k %= params.m
    if params.kind is FieldKind.TWO_POWER:
        if k == 0:
            return 2 * params.n
        if k == params.half:
            return -2 * params.n
        return 0
    return 2 * params.n if k == 0 else -1


def trace(x: FieldElement) -> int:
    """Exact Tr_{K|Q}(x) by linearity over the basis traces."""
    params = x.params
    if params.kind is FieldKind.TWO_POWER:
        # Tr(e_0) = n, Tr(e_i) = 0 for i >= 1
        return params.n * x.coeffs[0]
    # Tr(e_j) = -1 for every prime-basis vector
    return -sum(x.coeffs)


def multiplication_matrix(x: FieldElement) -> intlinalg.Rows:
    """Integer matrix of y -> x*y over the ring basis (columns are images)."""
    n = x.params.n
    cols = [mul_by_basis(x, i).coeffs for i in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def norm(x: FieldElement) -> int:
    """Exact N_{K|Q}(x) as the determinant of the multiplication matrix."""
    if x.is_zero():
        raise ZeroElement("norm of the zero element")
    if x == one(x.params):
        return 1
    return intlinalg.bareiss_determinant(multiplication_matrix(x))


def discriminant(params: CycloParams) -> int:
    """Field discriminant: 2^((r-1)2^(r-2)-1) or p^((p-3)/2)."""
    if params.kind is FieldKind.TWO_POWER:
        r = params.r
        return 2 ** ((r - 1) * 2 ** (r - 2) - 1)
    p = params.p
    return p ** ((p - 3) // 2)


def conjugacy_indices(params: CycloParams) -> tuple[int, ...]:
    """Canonical index set {k_i} of the real embeddings, ascending."""
    if params.kind is FieldKind.TWO_POWER:
        return tuple(range(1, params.half, 2))
    return tuple(range(1, params.n + 1))


@lru_cache(maxsize=None)
def _embedding_matrix(params: CycloParams) -> np.ndarray:
    """N[j][i] = sigma_i(basis_j): substitute e_j -> 2 cos(2 pi k_i j / m)."""
    n = params.n
    ks = conjugacy_indices(params)
    mat = np.empty((n, n), dtype=np.float64)
    for j in range(n):
        jj = j if params.kind is FieldKind.TWO_POWER else j + 1
        for i, k in enumerate(ks):
            if params.kind is FieldKind.TWO_POWER and j == 0:
                mat[j, i] = 1.0
            else:
                mat[j, i] = 2.0 * math.cos(2.0 * math.pi * k * jj / params.m)
    mat.setflags(write=False)
    return mat


def embedding_matrix(params: CycloParams) -> np.ndarray:
    return _embedding_matrix(params)


def conjugates(x: FieldElement) -> np.ndarray:
    """The real embeddings (sigma_1(x), ..., sigma_n(x)) in canonical order."""
    return np.asarray(x.coeffs, dtype=np.float64) @ _embedding_matrix(x.params)


def conjugate_product(x: FieldElement) -> float:
    """Floating product of the conjugates; cross-check oracle for norm()."""
    return float(np.prod(conjugates(x)))
