"""Ultimate signs of second-order holonomic sequences.

The main entry points are :func:`classify` for the type of a coefficient
pair, :func:`ultimate_sign` for the partial algorithm and
:func:`critical_slopes` for bracketing the lines of unstable initial values.
"""

from .cfrac import SlopeBracket, SlopeReport, cfrac_probe, critical_slopes, refine_bracket
from .classify import (
    BOTTOM,
    RecurrenceType,
    Tag,
    classify,
    possible_signs,
    stability_precheck,
    theta_lookup,
    unstable_example,
)
from .errors import *  # noqa: F401,F403
from .numerics import RatInterval, log_bounds, q_bounds
from .parse import Session, format_ratfunc, parse_pair, parse_ratfunc, parse_scalar
from .poly import Poly
from .ratfunc import RatFunc, X, degree_theta, eventual_integer_sign
from .recurrence import (
    INFINITY,
    HolonomicInstance,
    canonical_AB,
    cfrac_value,
    gap_coeffs,
    iterate,
    normalize,
    parse_word,
    values,
    word_string,
)
from .scalar import QuadraticNumber, quad, sqrt_scalar
from .ultsign import (
    Budget,
    BudgetExhausted,
    Halted,
    Hint,
    NoUltimateSign,
    ZeroSequence,
    certificate_spot_check,
    hyperbolic_start_index,
    ultimate_sign,
    ultimate_sign_with_hint,
)

__version__ = "0.1.0"
