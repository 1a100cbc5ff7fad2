from .literals import format_scalar, parse_scalar
from .rings import (
    DOMAINS,
    QUATERNION,
    RATFUNC,
    RATIONAL,
    Domain,
    Quaternion,
    RatFunc,
    domain_of,
    inverse,
    scalar_arith,
)
from .twist import (
    Twist,
    apply_delta,
    apply_sigma,
    check_commuting,
    check_leibniz,
    conjugate,
    derivation_twist,
    genpow,
    genpows,
    identity_twist,
    inner_twist,
    interchanges,
    is_stable_upto,
    make_twist,
    shift_difference_twist,
    shift_twist,
)
