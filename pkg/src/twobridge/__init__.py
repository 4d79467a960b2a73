"""Alexander polynomials of 2-bridge knots and links from lattice walks.

Three independent routes are provided and cross-checked: walks on the
integers / square lattice, the closed-form sign-sequence sums, and Fox
free differential calculus on the two-generator link group presentation.
"""

from .errors import (
    DomainError,
    GcdError,
    KindError,
    ParamError,
    ParityError,
    RangeError,
    TwoBridgeError,
    ZeroPolynomial,
)
from .fraction import (
    Kind,
    SignSequence,
    TwoBridgeParam,
    epsilon,
    epsilon_sequence,
    epsilon_sequence_with_zero,
    mirror_normalize,
    new_param,
    shifted_sign_sequence,
    valid_params,
)
from .formulas import linking_degree, minkus_poly, two_variable_poly
from .fox import alexander_via_fox, verify_identities
from .laurent import (
    LaurentPoly1,
    LaurentPoly2,
    UnitNormalForm,
    coefficient_profile,
    eq_up_to_units,
    is_trapezoidal,
    normalize,
)
from .polystr import format_poly, parse_poly
from .walks import (
    poly_from_1d_crossings,
    poly_from_1d_visits,
    poly_from_2d_visits,
    walk_1d_hartley,
    walk_1d_minkus,
    walk_2d,
)

__version__ = "0.1.0"
