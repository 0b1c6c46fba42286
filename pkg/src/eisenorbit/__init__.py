"""Orbit representatives of Gamma_inf(3) \\ Gamma(3) over the Eisenstein integers."""

from .decompose import (
    CellTag,
    DiagonalUnit,
    LeftDecomposition,
    RightDecomposition,
    UnipotentMod3,
    classify_cell,
    decompose_left,
    decompose_right,
    left_cell,
    recompose,
)
from .eisenstein import (
    OMEGA,
    UNITS,
    EisensteinInt,
    extended_gcd,
    gcd,
    mod3,
    norm,
    parse,
    residue_mod,
    unit_normalize,
)
from .gamma import (
    InternalConsistencyError,
    InvalidTupleError,
    InvariantTuple,
    NotInGamma3Error,
    check_conditions,
    in_gamma3,
    in_gamma_inf3,
    invariants,
    random_gamma3,
    same_orbit,
)
from .matrices import Mat2, Mat3, NotUnimodularError, iota, lambda2, phi1, phi2, upsilon1
from .represent import CaseTag, case_of, representative
from .steinberg import YMatrix, is_y_matrix, reduce_pair, y_membership

__version__ = "0.1.0"
