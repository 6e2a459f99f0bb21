"""Entanglement-assisted quantum codes from constacyclic codes of length (q^2+1)/5."""

from .code import (
    ConstacyclicCode,
    DistanceCertificate,
    bch_bound,
    build_code,
    distance_certificate,
    generator_matrix,
    hermitian_dual_defining_set,
    parity_check_matrix,
)
from .cosets import (
    CodeFrame,
    Coset,
    DefiningSetDecomposition,
    consecutive_run,
    coset_of,
    decompose,
    dual_containing,
    make_frame,
    neg_q_image,
    omega,
    partition,
)
from .derive import (
    EaqeccParams,
    Family,
    FamilySpec,
    derive_eaqecc,
    ea_singleton_check,
    family_instance,
    maximal_family_instance,
    validate_family,
)
from .field import FieldCtx, Felt, frobenius, make_field, minimal_polynomial, root_of_unity

__version__ = "0.1.0"
