"""Twisted real embeddings and their lattices.

A twist element alpha (totally positive) and a scale denominator c turn a
rank-n submodule I into the lattice (1/sqrt(c)) * sigma_alpha(I).  The exact
integer Gram matrix G_ij = Tr(alpha w_i w_j) / c is the source of truth; the
floating generator matrix is derived output for downstream consumers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import field, intlinalg
from .errors import NonIntegralGram, NotTotallyPositive
from .field import CycloParams, FieldElement, FieldKind
from .modules import ZSubmodule

TOTAL_POSITIVITY_MARGIN = 1e-9
GRAM_GENERATOR_TOL = 1e-8


@dataclass(frozen=True)
class TwistedForm:
    """Twist element and scale: the lattice is (1/sqrt(c)) sigma_alpha(I)."""

    alpha: FieldElement
    scale_denominator: int

    def __post_init__(self):
        if self.scale_denominator < 1:
            raise ValueError("scale denominator must be a positive integer")


@dataclass(frozen=True, eq=False)
class RotatedLattice:
    """A constructed lattice instance with exact Gram and real generator."""

    params: CycloParams
    module: ZSubmodule
    form: TwistedForm
    generator: np.ndarray
    gram: tuple[tuple[int, ...], ...]
    gram_det: int
    family: Optional[str] = None
    principal_generator: Optional[FieldElement] = None

    @property
    def n(self) -> int:
        return self.params.n

    def gram_rows(self) -> intlinalg.Rows:
        return [list(r) for r in self.gram]


def check_totally_positive(alpha: FieldElement, margin: float = TOTAL_POSITIVITY_MARGIN) -> bool:
    """All real embeddings strictly positive (with a numeric safety margin)."""
    if alpha.is_zero():
        return False
    return bool(np.all(field.conjugates(alpha) > margin))


def trace_form_matrix(params: CycloParams, alpha: FieldElement) -> intlinalg.Rows:
    """T[a][b] = Tr(alpha * basis_a * basis_b), exactly, in O(n^2).

    Uses Tr(alpha (z^k + z^-k)) tables: each basis product folds into at most
    two such pairs, so no full element multiplications are needed.
    """
    n = params.n
    two_power = params.kind is FieldKind.TWO_POWER
    # s[k] = Tr(alpha * (z^k + z^-k)) for k = 0..m
    s = []
    for k in range(params.m + 1):
        acc = 0
        for c, coeff in enumerate(alpha.coeffs):
            if not coeff:
                continue
            if two_power and c == 0:
                acc += coeff * field.trace_of_pair(params, k)
            else:
                cc = c if two_power else c + 1
                acc += coeff * (field.trace_of_pair(params, cc + k) + field.trace_of_pair(params, cc - k))
        s.append(acc)

    t = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            if two_power:
                if a == 0 and b == 0:
                    v = s[0] // 2  # Tr(alpha * 1), and s[0] = Tr(2 alpha)
                elif a == 0:
                    v = s[b]
                else:
                    v = s[a + b] + s[abs(a - b)]
            else:
                v = s[(a + 1) + (b + 1)] + s[abs(a - b)]
            t[a][b] = v
            t[b][a] = v
    return t


def exact_gram(module: ZSubmodule, form: TwistedForm) -> intlinalg.Rows:
    """G = W T W^t / c with T the trace form of alpha; exact integers.

    Raises NonIntegralGram when c does not divide every entry, which signals
    that the scaled lattice is not an integer lattice.
    """
    t = trace_form_matrix(module.params, form.alpha)
    w = module.rows()
    g_scaled = intlinalg.matmul_int(intlinalg.matmul_int(w, t), intlinalg.transpose_rows(w))
    c = form.scale_denominator
    g = []
    for row in g_scaled:
        out = []
        for x in row:
            q, r = divmod(x, c)
            if r:
                raise NonIntegralGram(f"Tr(alpha w_i w_j) = {x} is not divisible by the scale {c}")
            out.append(q)
        g.append(out)
    return g


def generator_matrix(module: ZSubmodule, form: TwistedForm) -> np.ndarray:
    """Row i = (1/sqrt(c)) * (sqrt(sigma_k(alpha)) * sigma_k(w_i))_k."""
    if not check_totally_positive(form.alpha):
        raise NotTotallyPositive("twist element has a non-positive embedding")
    params = module.params
    emb = field.embedding_matrix(params)
    w = np.array(module.rows(), dtype=np.float64)
    sigma_w = w @ emb  # row i, column k = sigma_k(w_i)
    alpha_conj = field.conjugates(form.alpha)
    scale = np.sqrt(alpha_conj) / np.sqrt(float(form.scale_denominator))
    gen = sigma_w * scale[None, :]
    gen.setflags(write=False)
    return gen


def build_lattice(
    module: ZSubmodule,
    form: TwistedForm,
    family: str | None = None,
    principal_generator: FieldElement | None = None,
) -> RotatedLattice:
    """Assemble a lattice and check its construction invariants.

    Checks: integrality, symmetry, positive definiteness (exact leading
    minors), and agreement of the exact Gram with the floating generator.
    """
    gram = exact_gram(module, form)
    n = module.params.n
    for i in range(n):
        for j in range(i):
            assert gram[i][j] == gram[j][i], "trace form must be symmetric"
    minors = intlinalg.leading_principal_minors(gram)
    if minors is None or any(m <= 0 for m in minors):
        raise NotTotallyPositive("Gram matrix is not positive definite")
    gen = generator_matrix(module, form)
    approx = gen @ gen.T
    err = float(np.max(np.abs(approx - np.array(gram, dtype=np.float64))))
    if err > GRAM_GENERATOR_TOL:
        raise AssertionError(f"generator/Gram mismatch {err:.3e} exceeds {GRAM_GENERATOR_TOL}")
    return RotatedLattice(
        params=module.params,
        module=module,
        form=form,
        generator=gen,
        gram=tuple(tuple(r) for r in gram),
        gram_det=minors[-1],
        family=family,
        principal_generator=principal_generator,
    )
