"""crquat: exact classification of linear CR, co-CR and compatible
quaternionic structures on subspaces of H^k."""

from .analysis import (
    CRDecomposition,
    CRQInput,
    Decision,
    FQuaternionicCert,
    SplittingType,
    cocr_images_triple_test,
    cocr_input,
    cr_input,
    decompose_cr,
    dualize,
    e_lower,
    e_upper,
    enumerate_splitting_types,
    f_detect,
    filtration_w1,
    filtration_w2,
    full_witness,
    induced_f_structure,
    is_cocr_quaternionic,
    is_cr_quaternionic,
    splitting_type_cocr,
    splitting_type_cr,
)
from .catalog import named_example
from .errors import ContractError, DocumentError, InternalCheckError, WitnessBudgetError
from .gaussian import GaussRat, Rat
from .maps import (
    SemidirectData,
    Twist,
    direct_sum_cocr,
    is_direct,
    lift_cocr_map,
    lift_cr_map,
    lift_f_map,
    semidirect,
)
from .matrix import QI, QQ, Mat
from .model import antipode, complexify, dual_structure, eigenframe, j_from_zeta, left_mult_matrix
from .polymatrix import LinearPencil, PolyMat, ProjMat, full_rank_everywhere, smith_form
from .polynomial import Poly, poly_gcd
from .quaternion import Quat
from .subspace import Subspace
from .twistor import TwistorPoint

__version__ = "0.1.0"
