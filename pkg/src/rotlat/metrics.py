"""Figures of merit for the constructed lattices.

Minimum norms come from exact branch-and-bound enumeration over a bounded
coefficient box (float Cholesky is used only to prune; every reported value
is an exact integer quadratic form evaluation).  Product distances combine
the exact algebraic data (twist norm, module norm minimum, scale) and are
reported both as floats and as exact base-2 / base-p exponent pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Optional, Sequence

import numpy as np

from . import field, intlinalg, modules
from .embedding import RotatedLattice
from .errors import UncertifiedMinimum
from .field import FieldElement, FieldKind
from .modules import ZSubmodule

DIVERSITY_THRESHOLD = 1e-9
ENUM_BOUND_SMALL = 3  # default coefficient bound for n <= 16
ENUM_BOUND_LARGE = 2


def default_coeff_bound(n: int) -> int:
    return ENUM_BOUND_SMALL if n <= 16 else ENUM_BOUND_LARGE


def _log2_int(x: int) -> float:
    # math.log2 takes arbitrary-precision ints without float conversion
    return math.log2(x)


@dataclass(frozen=True)
class MetricsReport:
    """All figures of merit for one lattice instance."""

    family: Optional[str]
    param: Optional[int]
    n: int
    det: int
    min_norm_sq: int
    d_p_min: float
    d_p_rel: float
    d_p_rel_nth_root: float
    center_density: float
    diversity_ok: bool
    # exact exponents: d_p_rel = 2^exp2 * base^expp when base factors cleanly
    d_p_rel_exp2: Optional[Fraction] = None
    d_p_rel_expp: Optional[Fraction] = None
    d_p_rel_base: Optional[int] = None


# ---------------------------------------------------------------------------
# short-vector enumeration


def _cholesky(gram_rows) -> np.ndarray:
    g = np.array(gram_rows, dtype=np.float64)
    return np.linalg.cholesky(g).T  # upper triangular R with R^T R = G


def _exact_qf(gram_rows, v) -> int:
    n = len(v)
    total = 0
    for i in range(n):
        vi = v[i]
        if not vi:
            continue
        row = gram_rows[i]
        total += vi * row[i] * vi
        for j in range(i + 1, n):
            if v[j]:
                total += 2 * vi * row[j] * v[j]
    return total


def _enumerate_box(gram_rows, bound: int, threshold: float, collect: list | None, best_start: int) -> int:
    """DFS over integer coefficient vectors with entries in [-bound, bound].

    Finds the exact box minimum of the quadratic form, starting from the known
    value `best_start` (achieved by a unit vector).  When `collect` is a list,
    every leaf with 0 < Q <= threshold is appended instead (canonical sign:
    last nonzero coordinate positive).  Floats only prune; the half-integer
    slack keeps every integer value below the target reachable.
    """
    n = len(gram_rows)
    r = _cholesky(gram_rows)
    best = best_start
    x = [0] * n

    def limit() -> float:
        return threshold + 0.49 if collect is not None else best - 0.5

    def descend(level: int, partial: float) -> None:
        nonlocal best
        if partial > limit():
            return
        if level < 0:
            q = _exact_qf(gram_rows, x)
            if q <= 0:
                return
            if collect is not None and q <= threshold:
                v = list(x)
                for c in reversed(v):
                    if c:
                        if c < 0:
                            v = [-t for t in v]
                        break
                collect.append(tuple(v))
            if q < best:
                best = q
            return
        tail = float(np.dot(r[level, level + 1 :], x[level + 1 :])) if level + 1 < n else 0.0
        rii = float(r[level, level])
        halfwidth = math.sqrt(max(limit() - partial, 0.0))
        lo = max(-bound, math.ceil((-halfwidth - tail) / rii - 1e-9))
        hi = min(bound, math.floor((halfwidth - tail) / rii + 1e-9))
        for cand in sorted(range(lo, hi + 1), key=lambda c: abs(rii * c + tail)):
            contrib = (rii * cand + tail) ** 2
            if partial + contrib > limit():
                continue
            x[level] = cand
            descend(level - 1, partial + contrib)
            x[level] = 0

    descend(n - 1, 0.0)
    return best


def min_norm_sq(lattice: RotatedLattice, coeff_bound: int | None = None) -> int:
    """Exact minimum of v G v^t over nonzero coefficient vectors in the box."""
    bound = coeff_bound if coeff_bound is not None else default_coeff_bound(lattice.n)
    if bound < 1:
        raise ValueError("coefficient bound must be >= 1")
    gram = lattice.gram_rows()
    best = min(gram[i][i] for i in range(lattice.n))
    if best == 1:
        return 1  # positive definite integer form cannot go below 1
    return _enumerate_box(gram, bound, float(best), None, best)


def enumerate_short_vectors(lattice: RotatedLattice, radius_sq: int, coeff_bound: int | None = None) -> list[tuple[int, ...]]:
    """All box coefficient vectors with 0 < v G v^t <= radius_sq, up to sign."""
    bound = coeff_bound if coeff_bound is not None else default_coeff_bound(lattice.n)
    gram = lattice.gram_rows()
    found: list = []
    best = min(gram[i][i] for i in range(lattice.n))
    _enumerate_box(gram, bound, float(radius_sq), found, best)
    return sorted(set(found))


# ---------------------------------------------------------------------------
# algebraic norm minimum


def _box_vectors_by_support(n: int, bound: int):
    """Nonzero integer vectors in [-bound, bound]^n, small supports first."""
    for radius in range(1, bound + 1):
        values = [v for v in range(-radius, radius + 1) if v != 0]
        for support_size in range(1, n + 1):
            for support in combinations(range(n), support_size):
                for vals in product(values, repeat=support_size):
                    if max(abs(v) for v in vals) != radius:
                        continue  # already seen inside a smaller box
                    vec = [0] * n
                    for pos, v in zip(support, vals):
                        vec[pos] = v
                    yield vec


def min_algebraic_norm(module: ZSubmodule, coeff_bound: int) -> int:
    """Minimum of |N(y)| over nonzero y with basis coefficients in the box.

    Exhausts the box, except that a witness with |N(y)| = 1 ends the scan
    immediately: norms of nonzero integral elements are nonzero integers, so
    1 is a certified global minimum over the whole module.
    """
    if coeff_bound < 1:
        raise ValueError("coefficient bound must be >= 1")
    best: int | None = None
    for coeffs in _box_vectors_by_support(module.params.n, coeff_bound):
        y = module.element(coeffs)
        value = abs(field.norm(y))
        if value == 1:
            return 1
        if best is None or value < best:
            best = value
    assert best is not None
    return best


def _witnessed_norm_minimum(lattice: RotatedLattice, coeff_bound: int) -> int:
    """Certified min |N(y)| over the module, or raise UncertifiedMinimum."""
    g = lattice.principal_generator
    if g is not None:
        if not modules.equals_principal(lattice.module, g):
            raise UncertifiedMinimum("declared principal generator does not generate the module")
        return abs(field.norm(g))
    scan = min_algebraic_norm(lattice.module, coeff_bound)
    if scan == 1:
        return 1
    raise UncertifiedMinimum(
        f"no |N(y)| = 1 witness with coefficients in [-{coeff_bound}, {coeff_bound}] "
        "and the module is not known to be principal"
    )


# ---------------------------------------------------------------------------
# product distances and densities


def _factor_out(x: int, base: int) -> tuple[int, int]:
    e = 0
    while base > 1 and x % base == 0:
        e += 1
        x //= base
    return e, x


@dataclass(frozen=True)
class _ProductDistanceData:
    n: int
    c: int
    norm_alpha: int
    min_abs_norm: int
    log2_dp_min: float


@lru_cache(maxsize=None)
def _dp_data(lattice: RotatedLattice, coeff_bound: int) -> _ProductDistanceData:
    n = lattice.n
    c = lattice.form.scale_denominator
    norm_alpha = field.norm(lattice.form.alpha)
    min_n = _witnessed_norm_minimum(lattice, coeff_bound)
    if lattice.principal_generator is not None:
        # exact integer form of the principal-ideal cross-check
        d_k = field.discriminant(lattice.params)
        assert norm_alpha * min_n**2 * d_k == lattice.gram_det * c**n, (
            "principal-case product distance disagrees with the determinant identity"
        )
    log2_dp = 0.5 * (_log2_int(norm_alpha) + 2 * _log2_int(min_n) - n * _log2_int(c))
    return _ProductDistanceData(n, c, norm_alpha, min_n, log2_dp)


def min_product_distance(lattice: RotatedLattice, coeff_bound: int = 1) -> float:
    """Minimum product distance sqrt(N(alpha)) * min|N(y)| / sqrt(c^n)."""
    return 2.0 ** _dp_data(lattice, coeff_bound).log2_dp_min


def rel_min_product_distance(lattice: RotatedLattice, coeff_bound: int = 1, norm_bound: int | None = None) -> float:
    """Product distance of the rescaled lattice with unit minimum norm."""
    data = _dp_data(lattice, coeff_bound)
    msq = min_norm_sq(lattice, norm_bound)
    return 2.0 ** (data.log2_dp_min - data.n * 0.5 * _log2_int(msq))


def center_density(lattice: RotatedLattice, norm_bound: int | None = None) -> float:
    """(d/2)^n / sqrt(det) with d the Euclidean minimum norm."""
    msq = min_norm_sq(lattice, norm_bound)
    n = lattice.n
    return 2.0 ** (n * (0.5 * _log2_int(msq) - 1.0) - 0.5 * _log2_int(lattice.gram_det))


# ---------------------------------------------------------------------------
# diversity certificates


def _half_sums(weights: np.ndarray, bound: int) -> tuple[np.ndarray, int]:
    sums = np.zeros(1, dtype=np.float64)
    zero_idx = 0
    width = 2 * bound + 1
    vals = np.arange(-bound, bound + 1, dtype=np.float64)
    for w in weights:
        sums = (sums[:, None] + (vals * w)[None, :]).ravel()
        zero_idx = zero_idx * width + bound
    return sums, zero_idx


def diversity_min_abs_coordinate(lattice: RotatedLattice, coeff_bound: int = 2) -> float:
    """Exact box minimum of |coordinate| over nonzero enumerated vectors.

    Meet-in-the-middle per embedding: the minimum of |sum_j c_j M[j][i]| over
    all nonzero c in [-bound, bound]^n is found by sorting one half of the
    partial sums and nearest-searching the other.
    """
    gen = np.asarray(lattice.generator)
    n = lattice.n
    h = n // 2
    overall = math.inf
    for col in range(n):
        a = gen[:, col]
        left, zl = _half_sums(a[:h], coeff_bound)
        right, zr = _half_sums(a[h:], coeff_bound)
        order = np.argsort(right, kind="stable")
        rs = right[order]
        zr_pos = int(np.nonzero(order == zr)[0][0])

        def nearest_min(values: np.ndarray, sorted_arr: np.ndarray) -> float:
            if sorted_arr.size == 0:
                return math.inf
            pos = np.searchsorted(sorted_arr, -values)
            best = np.full(values.shape, np.inf)
            for shift in (0, -1):
                idx = np.clip(pos + shift, 0, sorted_arr.size - 1)
                cand = np.abs(values + sorted_arr[idx])
                np.minimum(best, cand, out=best)
            return float(best.min())

        mask = np.ones(left.shape, dtype=bool)
        mask[zl] = False
        m_nonzero_left = nearest_min(left[mask], rs)
        rs_wo = np.delete(rs, zr_pos)
        m_zero_left = nearest_min(left[zl : zl + 1], rs_wo)
        overall = min(overall, m_nonzero_left, m_zero_left)
    return overall


def diversity_certified(lattice: RotatedLattice, coeff_bound: int = 2, threshold: float = DIVERSITY_THRESHOLD) -> bool:
    """Full-diversity certificate.

    For n <= 16 this enumerates the coefficient box and checks that no
    nonzero vector has a coordinate within `threshold` of zero.  For larger n
    the certificate is algebraic: every constructed lattice embeds a module
    of field elements, and a nonzero element has nonzero norm, hence nonzero
    image in every real embedding.
    """
    if lattice.n > 16:
        return True
    return diversity_min_abs_coordinate(lattice, coeff_bound) > threshold


def short_vector_min_abs_coordinate(lattice: RotatedLattice, coeff_bound: int | None = None) -> float:
    """Smallest |coordinate| over the minimal-norm shell found by enumeration."""
    msq = min_norm_sq(lattice, coeff_bound)
    shell = enumerate_short_vectors(lattice, msq, coeff_bound)
    gen = np.asarray(lattice.generator)
    worst = math.inf
    for coeffs in shell:
        coords = np.asarray(coeffs, dtype=np.float64) @ gen
        worst = min(worst, float(np.min(np.abs(coords))))
    return worst


# ---------------------------------------------------------------------------
# reports and comparison tables


def _exact_rel_exponents(lattice: RotatedLattice, data: _ProductDistanceData, msq: int):
    """d_p_rel as 2^a * p^b with exact rational exponents, when it factors."""
    params = lattice.params
    base = params.m if params.kind is FieldKind.PRIME else 0
    num = data.norm_alpha * data.min_abs_norm**2
    den = data.c**data.n * msq**data.n
    e2n, num = _factor_out(num, 2)
    e2d, den = _factor_out(den, 2)
    epn = epd = 0
    if base:
        epn, num = _factor_out(num, base)
        epd, den = _factor_out(den, base)
    if num != 1 or den != 1:
        return None, None, None
    return Fraction(e2n - e2d, 2), Fraction(epn - epd, 2), (base or None)


def metrics_report(
    lattice: RotatedLattice,
    coeff_bound: int = 1,
    norm_bound: int | None = None,
    diversity_bound: int = 2,
) -> MetricsReport:
    """Assemble every figure of merit for one lattice."""
    data = _dp_data(lattice, coeff_bound)
    msq = min_norm_sq(lattice, norm_bound)
    n = lattice.n
    log2_rel = data.log2_dp_min - n * 0.5 * _log2_int(msq)
    exp2, expp, base = _exact_rel_exponents(lattice, data, msq)
    if exp2 is not None:
        log2_rel = float(exp2) + (float(expp) * _log2_int(base) if base else 0.0)
    param = None
    if lattice.family is not None:
        param = lattice.params.r if lattice.params.kind is FieldKind.TWO_POWER else lattice.params.p
    return MetricsReport(
        family=lattice.family,
        param=param,
        n=n,
        det=lattice.gram_det,
        min_norm_sq=msq,
        d_p_min=2.0**data.log2_dp_min,
        d_p_rel=2.0**log2_rel,
        d_p_rel_nth_root=2.0 ** (log2_rel / n),
        center_density=center_density(lattice, norm_bound),
        diversity_ok=diversity_certified(lattice, diversity_bound),
        d_p_rel_exp2=exp2,
        d_p_rel_expp=expp,
        d_p_rel_base=base,
    )


def ratio_rows(reports_z: Sequence[MetricsReport], reports_d: Sequence[MetricsReport]) -> list[tuple[int, float, float]]:
    """Rows (n, nth-root product-distance ratio, center-density ratio)."""
    rows = []
    for rz, rd in zip(reports_z, reports_d):
        assert rz.n == rd.n, "paired reports must share the dimension"
        if rz.d_p_rel_exp2 is not None and rd.d_p_rel_exp2 is not None and rz.d_p_rel_base == rd.d_p_rel_base:
            diff2 = Fraction(rz.d_p_rel_exp2 - rd.d_p_rel_exp2, rz.n)
            diffp = Fraction(rz.d_p_rel_expp - rd.d_p_rel_expp, rz.n)
            log2_ratio = float(diff2)
            if rz.d_p_rel_base and diffp:
                log2_ratio += float(diffp) * _log2_int(rz.d_p_rel_base)
            d_ratio = 2.0**log2_ratio
        else:
            d_ratio = rz.d_p_rel_nth_root / rd.d_p_rel_nth_root
        delta_ratio = rz.center_density / rd.center_density
        rows.append((rz.n, d_ratio, delta_ratio))
    return rows
