"""Rotated D_n and Z^n lattices from real cyclotomic subfields."""

from .errors import (
    BadParam,
    NonIntegralGram,
    NotTotallyPositive,
    ParamsMismatch,
    RotlatError,
    SingularBasis,
    UncertifiedMinimum,
    UnsupportedConductor,
    ZeroElement,
    ZeroGenerator,
)
from .field import (
    CycloParams,
    FieldElement,
    FieldKind,
    basis_element,
    conjugates,
    cyclo_pair,
    discriminant,
    from_coeffs,
    make_params,
    mul,
    norm,
    one,
    trace,
)
from .modules import (
    ZSubmodule,
    contains,
    equals_principal,
    index_in_ring,
    is_ideal,
    module_from_rows,
    principal_module,
    ring_module,
)
from .embedding import (
    RotatedLattice,
    TwistedForm,
    check_totally_positive,
    exact_gram,
    generator_matrix,
    trace_form_matrix,
)
from .families import DnReference, Family, congruence_witness, construct, dn_reference, proof_transform

__version__ = "0.1.0"

__all__ = [
    "BadParam",
    "CycloParams",
    "DnReference",
    "Family",
    "FieldElement",
    "FieldKind",
    "NonIntegralGram",
    "NotTotallyPositive",
    "ParamsMismatch",
    "RotatedLattice",
    "RotlatError",
    "SingularBasis",
    "TwistedForm",
    "UncertifiedMinimum",
    "UnsupportedConductor",
    "ZSubmodule",
    "ZeroElement",
    "ZeroGenerator",
    "basis_element",
    "check_totally_positive",
    "congruence_witness",
    "conjugates",
    "construct",
    "contains",
    "cyclo_pair",
    "discriminant",
    "dn_reference",
    "equals_principal",
    "exact_gram",
    "from_coeffs",
    "generator_matrix",
    "index_in_ring",
    "is_ideal",
    "make_params",
    "module_from_rows",
    "mul",
    "norm",
    "one",
    "principal_module",
    "ring_module",
    "trace",
    "trace_form_matrix",
    "__version__",
]
