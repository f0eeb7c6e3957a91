"""Exact exterior square, symmetric square and Rankin-Selberg Euler factors
for representations of GL_m given by Zelevinsky segments."""

from .errors import (
    LFactorError,
    LinkedParts,
    NoDualData,
    NotDivisible,
    NotGeneralPosition,
    NotGeneric,
    OddDimension,
    OutOfRange,
    ParseError,
    RegistryFormatError,
    UnknownLabel,
    ValidationError,
)
from .scalar import (
    ONE,
    EulerFactor,
    GammaClass,
    Scalar,
    ef_divide,
    ef_lcm,
    ef_product,
    ef_shift,
    gamma_mul,
    gamma_normalize,
    gamma_reflect,
    scalar_mul,
)
from .registry import (
    CuspidalDatum,
    Dual,
    Registry,
    load_registry,
    loads_registry,
    rs_pair_roots,
    std_registry,
    validate,
)
from .segments import (
    TRIVIAL,
    VANISHED,
    Constituent,
    Representation,
    Segment,
    central_char,
    derivative_constituents,
    derivative_segment,
    dual_representation,
    dual_segment,
    is_generic,
    langlands_sort,
    linked,
)
from .lfun import (
    GeneralPositionReport,
    check_general_position,
    gamma_ext,
    gamma_ext_parts,
    l_cusp_ext,
    l_cusp_rs,
    l_cusp_sym,
    l_ex_constituent,
    l_ex_segment,
    l_ext_via_derivatives,
    l_rep_ext,
    l_rep_rs,
    l_rep_sym,
    l_seg_ext,
    l_seg_rs,
    l_seg_sym,
)
from .galois import FormalParam, galois_ext, galois_sym, langlands_agree
from .dsl import parse_repr, render_repr

__version__ = "0.1.0"
