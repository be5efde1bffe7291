"""Exact symmetric polynomials, exterior powers of Q[x] and divided differences
via determinants in the elementary symmetric polynomials."""

from .det import (
    HCoeffs,
    MonomialUnit,
    PolyMatrix,
    SigmaShift,
    build_matrix,
    det,
    formal_sigma,
    wedge_row_det,
)
from .divdiff import (
    DividedDifference,
    divdiff_alternant,
    divdiff_at_nodes,
    divdiff_determinant,
    divdiff_recursive,
)
from .errors import (
    ArityError,
    DegreeExceeded,
    ExponentOverflow,
    NonSquare,
    NotAntisymmetric,
    NotDivisible,
    NotMonic,
    NotSymmetric,
    ParseError,
    SymWedgeError,
    UnknownVariable,
)
from .exterior import (
    WedgeElement,
    WedgeExpansion,
    atr_embed,
    decompose_rank1,
    expand_wedge,
    from_antisym,
    ts_action,
    wedge_of,
)
from .fundamental import bialternant_to_sigma, express_in_elementary, norm_resultant, verify_bialternant
from .ring import Poly, coeff_of_y, exact_divide, parse, per_var_degree, substitute
from .sym import (
    Permutation,
    SigmaExpr,
    act,
    alternant_expand,
    atr,
    is_antisymmetric,
    is_symmetric,
    sgn_chi,
    sigma_p,
    sigma_poly,
    to_conventional_e,
    vandermonde,
)

__version__ = "0.1.0"
